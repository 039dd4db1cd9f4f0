"""Single JSON config format shared by all CLI verbs.

Blocks, all optional unless a verb needs them:

    context:   {"g": 2, "n": "2", "label": "X"}
    transform: {"g": 2, "nX": "2", "nY": "2", "r": 1, "dX": "0", "dY": "0",
                "labelX": "X", "labelY": "Y"}
    charge:    {"k": 2, "b": "0", "t": "1"}          t may be "p/q*sqrt3"
    scan:      {"k": 2, "v": "1,0,0", "walls": ["0,0,1/2"],
                "b_range": ["-2", "2"], "t_range": ["1/100", "2"],
                "resolution": [200, 200]}

Every numeric leaf is an exact rational string; nothing in a config is ever
parsed as a float.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lattice import AbelianContext, CohClass
from .literals import parse_class_coeffs, parse_rational, parse_surd
from .scan import ScanRequest
from .stability import ChargeSpec
from .transform import FMTransformSpec


class ConfigError(ValueError):
    """Malformed or incomplete configuration."""


def load_config(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path}: invalid JSON ({exc})") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path}: top level must be an object")
    return raw


def _need(block: dict, key: str, where: str):
    if key not in block:
        raise ConfigError(f"missing key {key!r} in {where} block")
    return block[key]


def _block(cfg: dict, name: str) -> dict:
    block = cfg.get(name)
    if block is None:
        raise ConfigError(f"config has no {name!r} block")
    if not isinstance(block, dict):
        raise ConfigError(f"{name!r} block must be an object")
    return block


def _rat(block: dict, key: str, where: str) -> Fraction:
    val = _need(block, key, where)
    if isinstance(val, int) and not isinstance(val, bool):
        return Fraction(val)
    if isinstance(val, str):
        try:
            return parse_rational(val)
        except ValueError as exc:
            raise ConfigError(f"{where}.{key}: {exc}") from None
    raise ConfigError(f"{where}.{key}: want a rational string, got {val!r}")


def _int(block: dict, key: str, where: str) -> int:
    val = _need(block, key, where)
    if not isinstance(val, int) or isinstance(val, bool):
        raise ConfigError(f"{where}.{key}: want an integer, got {val!r}")
    return val


def context_from(cfg: dict) -> AbelianContext:
    block = _block(cfg, "context")
    label = block.get("label", "")
    try:
        return AbelianContext(_int(block, "g", "context"), _rat(block, "n", "context"), label)
    except ValueError as exc:
        raise ConfigError(f"context: {exc}") from None


def transform_from(cfg: dict) -> FMTransformSpec:
    block = _block(cfg, "transform")
    g = _int(block, "g", "transform")
    try:
        src = AbelianContext(g, _rat(block, "nX", "transform"), block.get("labelX", "X"))
        dst = AbelianContext(g, _rat(block, "nY", "transform"), block.get("labelY", "Y"))
        return FMTransformSpec(
            src=src,
            dst=dst,
            r=_int(block, "r", "transform"),
            d_x=_rat(block, "dX", "transform"),
            d_y=_rat(block, "dY", "transform"),
        )
    except ValueError as exc:
        raise ConfigError(f"transform: {exc}") from None


def charge_from(cfg: dict, ctx: AbelianContext, k_override: int | None = None) -> ChargeSpec:
    block = _block(cfg, "charge")
    k = k_override if k_override is not None else _int(block, "k", "charge")
    t_raw = _need(block, "t", "charge")
    try:
        t = parse_surd(t_raw) if isinstance(t_raw, str) else Fraction(t_raw)
        return ChargeSpec(ctx, k, _rat(block, "b", "charge"), t)
    except ValueError as exc:
        raise ConfigError(f"charge: {exc}") from None


def _class(ctx: AbelianContext, text, where: str) -> CohClass:
    if not isinstance(text, str):
        raise ConfigError(f"{where}: want a class literal string, got {text!r}")
    try:
        return CohClass(ctx, tuple(parse_class_coeffs(text)))
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def class_from(ctx: AbelianContext, text: str) -> CohClass:
    return _class(ctx, text, "class")


def scan_from(cfg: dict, ctx: AbelianContext) -> ScanRequest:
    block = _block(cfg, "scan")
    walls_raw = _need(block, "walls", "scan")
    if not isinstance(walls_raw, list):
        raise ConfigError("scan.walls: want a list of class literals")
    rng = {}
    for key in ("b_range", "t_range"):
        pair = _need(block, key, "scan")
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ConfigError(f"scan.{key}: want a two-element list")
        try:
            rng[key] = (parse_rational(str(pair[0])), parse_rational(str(pair[1])))
        except ValueError as exc:
            raise ConfigError(f"scan.{key}: {exc}") from None
    res = _need(block, "resolution", "scan")
    if not (isinstance(res, list) and len(res) == 2):
        raise ConfigError("scan.resolution: want a two-element list")
    try:
        return ScanRequest(
            ctx=ctx,
            k=_int(block, "k", "scan"),
            v=_class(ctx, _need(block, "v", "scan"), "scan.v"),
            walls=tuple(_class(ctx, w, f"scan.walls[{i}]") for i, w in enumerate(walls_raw)),
            b_range=rng["b_range"],
            t_range=rng["t_range"],
            resolution=(res[0], res[1]),
        )
    except ValueError as exc:
        raise ConfigError(f"scan: {exc}") from None
