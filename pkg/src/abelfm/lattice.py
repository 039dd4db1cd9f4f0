"""Exact arithmetic on the rank-one numerical cohomology lattice of a
polarized abelian variety.

A context fixes the dimension g and the top self-intersection number
n = l^g > 0 of a fixed ample generator l.  A class is stored as the
coefficient vector (c_0, ..., c_g) of sum_i c_i l^i, every entry an exact
rational.  The product truncates above degree g, integration reads off the
top coefficient times n, and the remaining operations implement the usual
numerical calculus of Chern characters inside this lattice: divided-power
exponentials, B-field twists, the degree-alternating dual, the pairing
<a, b> = -integral(dual(a) * b), and the factorial-rescaled coordinates
used by the transform module.

All types are frozen dataclasses and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .surd import as_fraction


class ContextMismatchError(ValueError):
    """Operands live on contexts that differ in (g, n)."""


@dataclass(frozen=True)
class AbelianContext:
    """Dimension g >= 1, top intersection number n = l^g > 0, and a label.

    Labels are purely cosmetic; operations only require (g, n) to agree.
    """

    g: int
    n: Fraction
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool) or self.g < 1:
            raise ValueError(f"dimension g must be an integer >= 1, got {self.g!r}")
        object.__setattr__(self, "n", as_fraction(self.n))
        if self.n <= 0:
            raise ValueError(f"top intersection n must be positive, got {self.n}")

    def matches(self, other: "AbelianContext") -> bool:
        return self.g == other.g and self.n == other.n

    @property
    def chi(self) -> Fraction:
        """Holomorphic Euler number n / g! of the ample generator."""
        return self.n / factorial(self.g)


def chi_advisory(ctx: AbelianContext) -> str | None:
    """Non-fatal sanity flag: the Euler number n / g! of an honest ample
    class is an integer.  Fractional n is still accepted everywhere (scaled
    and dual contexts produce it legitimately), so this only returns a
    warning line, never raises."""
    if ctx.chi.denominator == 1:
        return None
    who = f" on {ctx.label}" if ctx.label else ""
    return f"advisory: chi = n/g! = {ctx.chi}{who} is not an integer"


def _require_match(a: AbelianContext, b: AbelianContext, op: str) -> None:
    if not a.matches(b):
        raise ContextMismatchError(
            f"{op}: context mismatch, (g={a.g}, n={a.n}) vs (g={b.g}, n={b.n})"
        )


@dataclass(frozen=True)
class CohClass:
    """Coefficients (c_0, ..., c_g) of a class sum_i c_i l^i."""

    ctx: AbelianContext
    c: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_fraction(x) for x in self.c)
        if len(coeffs) != self.ctx.g + 1:
            raise ValueError(
                f"class needs {self.ctx.g + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "c", coeffs)

    @classmethod
    def zero(cls, ctx: AbelianContext) -> "CohClass":
        return cls(ctx, (Fraction(0),) * (ctx.g + 1))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def scale(self, q) -> "CohClass":
        q = as_fraction(q)
        return CohClass(self.ctx, tuple(q * x for x in self.c))

    def __add__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        _require_match(self.ctx, other.ctx, "add")
        return CohClass(self.ctx, tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        _require_match(self.ctx, other.ctx, "sub")
        return CohClass(self.ctx, tuple(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self) -> "CohClass":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, CohClass):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __str__(self):
        return ",".join(str(x) for x in self.c)


@dataclass(frozen=True)
class VVector:
    """Factorial-rescaled twisted coordinates v_i = i! * n * c_i^B of a class,
    taken with respect to the B-field B = b*l."""

    ctx: AbelianContext
    b: Fraction
    v: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", as_fraction(self.b))
        entries = tuple(as_fraction(x) for x in self.v)
        if len(entries) != self.ctx.g + 1:
            raise ValueError(
                f"v-vector needs {self.ctx.g + 1} entries, got {len(entries)}"
            )
        object.__setattr__(self, "v", entries)


def mul(a: CohClass, b: CohClass) -> CohClass:
    """Cup product, truncated above degree g."""
    _require_match(a.ctx, b.ctx, "mul")
    g = a.ctx.g
    out = [Fraction(0)] * (g + 1)
    for i, ai in enumerate(a.c):
        if ai == 0:
            continue
        for j in range(g + 1 - i):
            bj = b.c[j]
            if bj != 0:
                out[i + j] += ai * bj
    return CohClass(a.ctx, tuple(out))


def integrate(a: CohClass) -> Fraction:
    """Integral over the variety: top coefficient times n."""
    return a.c[a.ctx.g] * a.ctx.n


def exp_div(b, ctx: AbelianContext) -> CohClass:
    """Divided-power exponential e^{b*l} = sum b^i/i! * l^i, truncated."""
    b = as_fraction(b)
    return CohClass(ctx, tuple(b**i / factorial(i) for i in range(ctx.g + 1)))


def twist(a: CohClass, b) -> CohClass:
    """B-field twist ch^B = e^{-b*l} * a for B = b*l."""
    return mul(exp_div(-as_fraction(b), a.ctx), a)


def mukai_dual(a: CohClass) -> CohClass:
    """Degree-alternating dual: c_i goes to (-1)^i c_i."""
    return CohClass(a.ctx, tuple((-1) ** i * x for i, x in enumerate(a.c)))


def mukai_pairing(a: CohClass, b: CohClass) -> Fraction:
    """<a, b> = -integral(dual(a) * b).  Bilinear; on this even lattice it is
    (-1)^g-symmetric, which the verification report measures rather than
    asserts."""
    _require_match(a.ctx, b.ctx, "mukai_pairing")
    return -integrate(mul(mukai_dual(a), b))


def v_vector(a: CohClass, b) -> VVector:
    """Coordinates v_i = i! * n * c_i^B of a after twisting by B = b*l."""
    tw = twist(a, b)
    n = a.ctx.n
    return VVector(
        a.ctx,
        as_fraction(b),
        tuple(factorial(i) * n * tw.c[i] for i in range(a.ctx.g + 1)),
    )


def from_v_vector(vv: VVector) -> CohClass:
    """Inverse of v_vector: rescale back and remove the recorded twist."""
    n = vv.ctx.n
    twisted = CohClass(
        vv.ctx,
        tuple(vv.v[i] / (factorial(i) * n) for i in range(vv.ctx.g + 1)),
    )
    return twist(twisted, -vv.b)


def structure_sheaf(ctx: AbelianContext) -> CohClass:
    """Chern character (1, 0, ..., 0)."""
    return CohClass(ctx, (Fraction(1),) + (Fraction(0),) * ctx.g)


def skyscraper(ctx: AbelianContext) -> CohClass:
    """Point class: integrates to 1, so the top coefficient is 1/n."""
    return CohClass(ctx, (Fraction(0),) * ctx.g + (1 / ctx.n,))


def line_bundle(ctx: AbelianContext, d) -> CohClass:
    """Chern character e^{d*l} of a line bundle of slope d."""
    return exp_div(d, ctx)


def semihomogeneous(ctx: AbelianContext, r: int, d) -> CohClass:
    """Chern character r * e^{d*l} of a slope-d semihomogeneous bundle of
    rank r; the slope d = c_1/r may be any rational."""
    if not isinstance(r, int) or isinstance(r, bool) or r <= 0:
        raise ValueError(f"rank must be a positive integer, got {r!r}")
    return exp_div(d, ctx).scale(r)


def divided_power_basis(ctx: AbelianContext) -> list[CohClass]:
    """The classes l^i / i!, i = 0..g; a convenient exact basis."""
    out = []
    for i in range(ctx.g + 1):
        c = [Fraction(0)] * (ctx.g + 1)
        c[i] = Fraction(1, factorial(i))
        out.append(CohClass(ctx, tuple(c)))
    return out
