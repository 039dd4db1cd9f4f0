"""Truncated central charges and very weak stability data on the rank-one
lattice.

For a class e with coefficients c_i, a level k in 1..g, and a complexified
polarization parameter beta = b + i*t (t > 0), the level-k charge is

    Z = -(i^(g-k)) * n * sum_{i <= k} c_i * (-beta)^(g-i) / (g-i)!

that is, minus the i^(g-k) quarter-turn of the integral of e^{-beta*l}
against the truncation of e to degrees at most k.  At k = g this is the
untruncated charge of the full class.  All values are computed exactly:
beta has components in Q(sqrt 3) and the quarter turn is a component swap
with signs, never a float rotation.

Slopes are -Re/Im with Im = 0 read as slope +infinity (returned as None).
Phases are arg(Z)/pi in (0, 1] plus any explicit homological shift carried
by the class; phase comparisons against rational bounds are decided exactly
whenever the bound has denominator dividing 12, via tangent comparisons in
Q(sqrt 3), and fall back to floats otherwise.  Display helpers that return
floats are accurate to about 1e-12 and say so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import atan2, factorial, pi
from typing import Sequence

from .lattice import AbelianContext, CohClass, twist
from .surd import Q3, SurdComplex, as_fraction, tan_pi
from .transform import ShiftedClass


class HeartValueError(ValueError):
    """A charge value incompatible with a heart: open lower half-plane or
    the positive real axis."""


def _q3(x) -> Q3:
    if isinstance(x, Q3):
        return x
    return Q3(as_fraction(x))


@dataclass(frozen=True)
class ChargeSpec:
    """Level k charge at B = b*l, omega = t*l with exact t > 0; t may be
    rational or carry a sqrt(3) part."""

    ctx: AbelianContext
    k: int
    b: Fraction = Fraction(0)
    t: Q3 = Q3(1)

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise ValueError(f"level k must be an integer, got {self.k!r}")
        if not 1 <= self.k <= self.ctx.g:
            raise ValueError(f"level k must lie in 1..{self.ctx.g}, got {self.k}")
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "t", _q3(self.t))
        if self.t.sign() <= 0:
            raise ValueError(f"omega scale t must be positive, got {self.t}")


def _split(e) -> tuple[CohClass, int]:
    if isinstance(e, ShiftedClass):
        return e.cls, e.shift
    if isinstance(e, CohClass):
        return e, 0
    raise TypeError(f"expected CohClass or ShiftedClass, got {e!r}")


def charge_at(ctx: AbelianContext, beta: SurdComplex, e: CohClass, k: int) -> SurdComplex:
    """Exact level-k charge of e at the complexified parameter beta*l."""
    if not e.ctx.matches(ctx):
        raise ValueError("charge_at: class context does not match")
    g = ctx.g
    total = SurdComplex()
    minus_beta = -beta
    power = SurdComplex(Q3(1))  # (-beta)^0
    powers = [power]
    for _ in range(g):
        power = power * minus_beta
        powers.append(power)
    for i in range(min(k, g) + 1):
        ci = e.c[i]
        if ci != 0:
            total = total + powers[g - i] * Fraction(ci, factorial(g - i))
    total = ctx.n * total
    # -(i^(g-k)): quarter turns then negation, all exact
    for _ in range((g - k) % 4):
        total = total.times_i()
    return -total


def charge_at_float(ctx: AbelianContext, beta: complex, e: CohClass, k: int) -> complex:
    """Float twin of charge_at for the documented inexact fallbacks;
    accurate to roughly 1e-12 relative error."""
    g = ctx.g
    total = 0j
    for i in range(min(k, g) + 1):
        total += float(e.c[i]) * (-beta) ** (g - i) / factorial(g - i)
    return -(1j ** ((g - k) % 4)) * float(ctx.n) * total


def charge(spec: ChargeSpec, e) -> SurdComplex:
    """Exact charge of a class, with the (-1)^shift sign of any explicit
    homological shift folded in."""
    cls, shift = _split(e)
    beta = SurdComplex(Q3(spec.b), spec.t)
    z = charge_at(spec.ctx, beta, cls, spec.k)
    return -z if shift % 2 else z


def slope(spec: ChargeSpec, e) -> Q3 | None:
    """-Re/Im of the charge; None encodes slope +infinity (Im = 0)."""
    z = charge(spec, e)
    if z.im.sign() == 0:
        return None
    return -z.re / z.im


def slope_cmp(a: Q3 | None, b: Q3 | None) -> int:
    """Compare two slopes, None being +infinity."""
    if a is None and b is None:
        return 0
    if a is None:
        return 1
    if b is None:
        return -1
    return (a - b).sign()


def _check_heart_value(z: SurdComplex) -> None:
    imsg = z.im.sign()
    if imsg < 0 or (imsg == 0 and z.re.sign() > 0):
        raise HeartValueError(
            f"charge {z} lies outside the closed upper half-plane union R<=0"
        )


def phase(spec: ChargeSpec, e) -> float | None:
    """arg(Z)/pi + shift as a float display value (about 1e-12 accurate),
    None when Z = 0 (kernel class).  Raises HeartValueError for values in
    the open lower half-plane or on the positive real axis."""
    cls, shift = _split(e)
    z = charge(spec, cls)
    if z.is_zero:
        return None
    _check_heart_value(z)
    base = atan2(float(z.im), float(z.re)) / pi  # in (0, 1] for heart values
    return base + shift


def phase_cmp(spec: ChargeSpec, e, bound: Fraction) -> int:
    """Sign of (phase(e) - bound).  Exact whenever the reduced denominator
    of the bound, after removing the integer shift, divides 12; otherwise a
    float comparison is used.  Raises on undefined phase."""
    cls, shift = _split(e)
    z = charge(spec, cls)
    if z.is_zero:
        raise HeartValueError("phase undefined: charge vanishes (kernel class)")
    _check_heart_value(z)
    y = as_fraction(bound) - shift  # compare base phase in (0, 1] against y
    if y <= 0:
        return 1
    if y > 1:
        return -1
    imsg, resg = z.im.sign(), z.re.sign()
    if y == 1:
        return 0 if imsg == 0 else -1
    if imsg == 0:  # negative real axis: base phase exactly 1 > y
        return 1
    half = Fraction(1, 2)
    if y == half:
        return -resg
    if y < half:
        if resg <= 0:
            return 1
        t_bound = tan_pi(y)
        if t_bound is not None:
            return (z.im / z.re - t_bound).sign()
    else:
        if resg >= 0:
            return -1
        t_bound = tan_pi(y)
        if t_bound is not None:
            return (z.im / z.re - t_bound).sign()
    # documented float fallback for bounds outside the exact family
    base = atan2(float(z.im), float(z.re)) / pi
    diff = base - float(y)
    return 0 if diff == 0 else (1 if diff > 0 else -1)


def in_slice(spec: ChargeSpec, e, window: tuple[Fraction, Fraction]) -> bool:
    """Membership of the phase in the half-open window (a, b], including any
    explicit shift carried by the class."""
    a, b = window
    return phase_cmp(spec, e, as_fraction(a)) > 0 and phase_cmp(spec, e, as_fraction(b)) <= 0


@dataclass(frozen=True)
class HeartLevel:
    """One level of the conjectural tower: the level-k charge, a description
    of the heart it is paired with, and the tilting window producing the
    next heart."""

    k: int
    charge: ChargeSpec
    heart: str
    window: tuple[Fraction, Fraction]

    @property
    def is_top(self) -> bool:
        return self.k == self.charge.ctx.g


def heart_tower(ctx: AbelianContext, b, t) -> list[HeartLevel]:
    """Descriptors for levels k = 1..g: level 1 pairs with coherent sheaves,
    each later heart is the tilt of the previous one across phases in
    (1/2, 3/2].  Only descriptors are produced; no filtration existence
    claim is made."""
    window = (Fraction(1, 2), Fraction(3, 2))
    levels = []
    for k in range(1, ctx.g + 1):
        desc = "Coh" if k == 1 else f"tilt of level {k - 1} heart across (1/2, 3/2]"
        levels.append(HeartLevel(k, ChargeSpec(ctx, k, b, t), desc, window))
    return levels


@dataclass(frozen=True)
class HNPolygon:
    """Polygon of a factor sequence: partial sums of (Im Z, -Re Z) from the
    origin.  The x coordinates never decrease.  The polygon is valid when
    its geometric edges, with collinear steps merged, have strictly
    decreasing slopes, equivalently when the factor slopes never increase.
    sorted_order lists the factor indices in non-increasing slope order."""

    vertices: tuple[tuple[Q3, Q3], ...]
    slopes: tuple[Q3 | None, ...]
    valid: bool
    sorted_order: tuple[int, ...]


def hn_polygon(factors: Sequence, spec: ChargeSpec) -> HNPolygon:
    """Polygon of an ordered factor list, plus the sorted-by-slope order for
    plumbing an unordered multiset.  Factors whose charge lies in the open
    lower half-plane or on the positive real axis are rejected."""
    zs = []
    for idx, f in enumerate(factors):
        z = charge(spec, f)
        try:
            _check_heart_value(z)
        except HeartValueError as exc:
            raise HeartValueError(f"factor {idx}: {exc}") from None
        zs.append(z)
    x = Q3(0)
    y = Q3(0)
    vertices = [(x, y)]
    slopes: list[Q3 | None] = []
    for z in zs:
        x = x + z.im
        y = y - z.re
        vertices.append((x, y))
        slopes.append(None if z.im.sign() == 0 else -z.re / z.im)
    valid = all(
        slope_cmp(slopes[i], slopes[i + 1]) >= 0 for i in range(len(slopes) - 1)
    )
    order = sorted(range(len(slopes)), key=lambda i: _SlopeKey(slopes[i]))
    return HNPolygon(tuple(vertices), tuple(slopes), valid, tuple(order))


class _SlopeKey:
    """Sort key for non-increasing slope order with None as +infinity."""

    __slots__ = ("s",)

    def __init__(self, s: Q3 | None):
        self.s = s

    def __lt__(self, other: "_SlopeKey") -> bool:
        return slope_cmp(self.s, other.s) > 0


@dataclass(frozen=True)
class BGVerdict:
    """Outcome of the threefold degree-three bound.

    precondition_zero_slope records whether the level-2 charge has zero real
    part without vanishing outright, the situation the bound is aimed at;
    kernel classes report False.  inequality_holds compares the integrated
    degree-three twisted coefficient against (t^2/18) times the degree-one
    one.  Both sides are reported."""

    precondition_zero_slope: bool
    inequality_holds: bool
    lhs: Q3
    rhs: Q3
    charge2: SurdComplex


def bg_check(ctx: AbelianContext, b, t, e: CohClass) -> BGVerdict:
    """Exact degree-three bound ch_3^B * n <= (t^2/18) * ch_1^B * n on a
    threefold (g = 3).  Larger t never falsifies a true verdict when the
    twisted degree-one coefficient is nonnegative."""
    if ctx.g != 3:
        raise ValueError(f"bg_check needs g = 3, got g = {ctx.g}")
    if not e.ctx.matches(ctx):
        raise ValueError("bg_check: class context does not match")
    b = as_fraction(b)
    t = _q3(t)
    if t.sign() <= 0:
        raise ValueError(f"omega scale t must be positive, got {t}")
    tw = twist(e, b)
    z2 = charge_at(ctx, SurdComplex(Q3(b), t), e, 2)
    precondition = z2.re.sign() == 0 and not z2.is_zero
    lhs = Q3(tw.c[3] * ctx.n)
    rhs = (t * t) * Fraction(tw.c[1] * ctx.n, 18)
    return BGVerdict(
        precondition_zero_slope=precondition,
        inequality_holds=(rhs - lhs).sign() >= 0,
        lhs=lhs,
        rhs=rhs,
        charge2=z2,
    )
