"""Command-line front door.

Verbs: transform, charge, zeta, params, walls, verify.  All but verify read
a JSON config file; verb-specific flags supply the remaining inputs.  Exit
statuses: 0 success, 1 verification failure, 2 usage or config error, 3 I/O
error.  The only environment override is ABELFM_OUT_DIR, which redirects
relative --out paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import config, induced, scan, stability, transform, verify
from .lattice import chi_advisory, divided_power_basis, skyscraper
from .literals import format_class, format_rational, parse_polar, parse_rational
from .surd import PolarScalar

__all__ = ["build_parser", "main"]


def _out_path(out: str) -> Path:
    """Resolve --out against ABELFM_OUT_DIR when the path is relative."""
    base = os.environ.get("ABELFM_OUT_DIR")
    p = Path(out)
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def _cmd_transform(args) -> int:
    cfg = config.load_config(args.config)
    spec = config.transform_from(cfg)
    e = config.class_from(spec.src, args.cls)
    img = transform.apply(spec, e)
    print(f"source = {format_class(e.c)}")
    print(f"image  = {format_class(img.c)}")
    rev, shift = transform.quasi_inverse(spec)
    back = transform.apply(rev, img)
    print(f"round trip (shift {shift}) = {format_class(back.c)}")
    return 0


def _warn_chi(ctx) -> None:
    note = chi_advisory(ctx)
    if note:
        print(note, file=sys.stderr)


def _cmd_charge(args) -> int:
    cfg = config.load_config(args.config)
    ctx = config.context_from(cfg)
    _warn_chi(ctx)
    spec = config.charge_from(cfg, ctx, args.k)
    e = config.class_from(ctx, args.cls)
    z = stability.charge(spec, e)
    print(f"k = {spec.k}, b = {format_rational(spec.b)}, t = {spec.t}")
    print(f"Z = {z}")
    s = stability.slope(spec, e)
    print(f"slope = {'infinity' if s is None else s}")
    try:
        p = stability.phase(spec, e)
    except stability.HeartValueError as exc:
        print(f"phase = undefined ({exc})")
    else:
        # the one documented float display; everything above is exact
        print("phase = kernel class (Z = 0)" if p is None else f"phase = {p:.12g}")
    return 0


def _cmd_zeta(args) -> int:
    cfg = config.load_config(args.config)
    spec = config.transform_from(cfg)
    modulus, angle = parse_polar(args.u)
    u = PolarScalar(modulus, angle)
    z = induced.zeta(spec, u)
    print(f"u = {u}")
    print(f"zeta = {z}")
    rect = z.to_exact()
    if rect is not None:
        print(f"rect = {rect}")
    if z.is_real:
        print(f"real: yes, sign {z.real_sign:+d}")
    else:
        print("real: no")
    angles = induced.real_zeta_angles(spec.g)
    print(f"real-zeta angles for g={spec.g}: {', '.join(str(a) for a in angles)}")
    return 0


def _cmd_params(args) -> int:
    cfg = config.load_config(args.config)
    spec = config.transform_from(cfg)
    lam = parse_rational(args.lam)
    omega_src, omega_dst = induced.conjecture_params(spec, args.k, lam)
    print(f"k = {args.k}, lambda = {format_rational(lam)}, g = {spec.g}")
    print(f"omega_src = ({omega_src.re}) + ({omega_src.im})*i  [units of l]")
    print(f"omega_dst = ({omega_dst.re}) + ({omega_dst.im})*i  [units of l]")
    u = PolarScalar(lam, Fraction(args.k, spec.g))
    verdicts = induced.verify_induced_law(spec, u, divided_power_basis(spec.src))
    print(induced.render_verdicts(verdicts))
    shift = induced.phase_shift_check(spec, u, skyscraper(spec.src))
    print(
        f"phase shift: holds={shift.holds}, expected heart shift ="
        f" {shift.expected_shift}, exact={shift.exact}"
    )
    if not (all(v.equal for v in verdicts) and shift.holds):
        print("FAIL: charge transport identity violated", file=sys.stderr)
        return 1
    return 0


def _cmd_walls(args) -> int:
    cfg = config.load_config(args.config)
    ctx = config.context_from(cfg)
    _warn_chi(ctx)
    req = config.scan_from(cfg, ctx)
    ds = scan.scan_walls(req)
    status = 0
    if args.recheck:
        if scan.recheck_walls(ds):
            print(f"recheck: all {len(ds.cells)} cells confirmed", file=sys.stderr)
        else:
            print("recheck: FAIL, emitted cell without sign change", file=sys.stderr)
            status = 1
    if args.out:
        path = _out_path(args.out)
        scan.emit(ds, args.format, path)
        print(
            f"wrote {path}: {len(ds.cells)} cells, "
            f"trivial walls {list(ds.trivial_walls)}, "
            f"degenerate probe {ds.v_degenerate}"
        )
    else:
        sys.stdout.write(scan.render(ds, args.format))
    return status


def _cmd_verify(args) -> int:
    results, ok = verify.run_verify(args.suite)
    for res in results:
        print(res.line())
    fails = sum(1 for r in results if r.status == "FAIL")
    print(f"{'ok' if ok else 'FAILED'}: {len(results)} checks, {fails} failures")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelfm",
        description=(
            "Exact lattice transforms, charges and wall scans on principally "
            "polarized-style abelian contexts."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_config(p):
        p.add_argument("--config", required=True, help="path to the JSON config file")

    p = sub.add_parser("transform", help="apply the configured transform to a class")
    add_config(p)
    p.add_argument("--class", dest="cls", required=True, help='class literal "c0,c1,...,cg"')
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("charge", help="evaluate the level-k charge of a class")
    add_config(p)
    p.add_argument("--class", dest="cls", required=True, help='class literal "c0,c1,...,cg"')
    p.add_argument("--k", type=int, default=None, help="override the config charge level")
    p.set_defaults(func=_cmd_charge)

    p = sub.add_parser("zeta", help="exact polar factor of the induced charge relation")
    add_config(p)
    p.add_argument("--u", required=True, help='polar literal "modulus@angle", angle in units of pi')
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("params", help="matched polarization pair and transport verdicts")
    add_config(p)
    p.add_argument("--k", type=int, required=True, help="angle numerator, angle = k*pi/g")
    p.add_argument("--lambda", dest="lam", required=True, help="polar modulus, rational > 0")
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("walls", help="scan wall loci on the (b, t) grid and emit a file")
    add_config(p)
    p.add_argument("--out", default=None, help="output path (stdout when omitted)")
    p.add_argument("--format", choices=scan.FORMATS, default="csv")
    p.add_argument(
        "--recheck",
        action="store_true",
        help="independently re-verify every emitted cell through the public charge",
    )
    p.set_defaults(func=_cmd_walls)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; normalize others
        return exc.code if exc.code in (0, 2) else 2
    try:
        return args.func(args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except (config.ConfigError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
