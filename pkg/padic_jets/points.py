"""
Points of the reduced curve over finite fields.

A :class:`CurvePointBar` is a point of X(𝔽_{p^k}): a finite point (a, b) with
b ≠ 0, a Weierstrass point (a, 0), or the unique point at infinity.
Coordinates are precision-1 :class:`~padic_jets.padic.PadicNumber` values in
the residue context of degree k.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import polynomials as poly
from .derham import DifferentialModP, HyperellipticCurve
from .errors import InputError
from .padic import PadicContext, PadicNumber, teichmuller

logger = logging.getLogger("padic_jets")

FINITE = "finite"
WEIERSTRASS = "weierstrass"
INFINITY = "infinity"


class UnsupportedDisc(InputError):
    """Raised for residue discs around Weierstrass points or infinity."""

    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"residue discs around {kind} points are not supported")


@dataclass(frozen=True)
class CurvePointBar:
    """A point of the reduced curve over 𝔽_{p^k}."""

    kind: str
    x: Optional[PadicNumber] = None
    y: Optional[PadicNumber] = None

    @classmethod
    def finite(cls, x: PadicNumber, y: PadicNumber) -> "CurvePointBar":
        if y.residue().is_zero():
            raise InputError("finite non-Weierstrass points need y ≠ 0")
        return cls(FINITE, x.residue(), y.residue())

    @classmethod
    def weierstrass(cls, x: PadicNumber) -> "CurvePointBar":
        return cls(WEIERSTRASS, x.residue(), x.residue().context.zero())

    @classmethod
    def infinity(cls) -> "CurvePointBar":
        return cls(INFINITY)

    @property
    def degree(self) -> int:
        """Degree k of the residue field holding the coordinates."""
        return 1 if self.x is None else self.x.context.f

    def lies_on(self, curve: HyperellipticCurve) -> bool:
        if self.kind == INFINITY:
            return True
        fx = poly.evaluate(curve.f_bar(), self.x)
        if self.kind == WEIERSTRASS:
            return fx.is_zero()
        return not self.y.is_zero() and self.y * self.y == fx

    def to_dict(self) -> Dict:
        out: Dict = {"kind": self.kind}
        if self.x is not None:
            out["x"] = self.x.digit_string()
            out["y"] = self.y.digit_string()
        return out

    def __str__(self) -> str:
        if self.kind == INFINITY:
            return "∞"
        return f"({self.x.digit_string()}, {self.y.digit_string()})"


def residue_field(p: int, k: int) -> PadicContext:
    return PadicContext(p, k, 1)


def _square_roots(field: PadicContext) -> Dict[PadicNumber, PadicNumber]:
    roots: Dict[PadicNumber, PadicNumber] = {}
    for z in field.residue_elements():
        roots.setdefault(z * z, z)
    return roots


def rational_points(curve: HyperellipticCurve, k: int = 1) -> List[CurvePointBar]:
    """All points of X(𝔽_{p^k}), finite points in field order, then ∞."""
    field = residue_field(curve.p, k)
    roots = _square_roots(field)
    f_bar = curve.f_bar()
    out: List[CurvePointBar] = []
    for a in field.residue_elements():
        v = poly.evaluate(f_bar, a)
        if v.is_zero():
            out.append(CurvePointBar.weierstrass(a))
            continue
        b = roots.get(v)
        if b is not None:
            pair = sorted([b, -b], key=lambda z: z.coeffs)
            out.extend(CurvePointBar.finite(a, y) for y in pair)
    out.append(CurvePointBar.infinity())
    return out


def _count_chunk(p: int, f_coeffs: Tuple[int, ...], k: int, start: int, stop: int) -> int:
    field = residue_field(p, k)
    exponent = (field.q - 1) // 2
    elements = field.residue_elements()[start:stop]
    f_bar = [c % p for c in f_coeffs]
    total = 0
    for a in elements:
        v = poly.evaluate(f_bar, a)
        if v.is_zero():
            total += 1
        elif (v ** exponent) == 1:
            total += 2
    return total


def count_points(curve: HyperellipticCurve, k: int = 1, jobs: int = 1) -> int:
    """#X(𝔽_{p^k}) by Euler's criterion, including the point at infinity.

    With ``jobs > 1`` the field is split into contiguous chunks counted in
    worker processes; the sum does not depend on the split.
    """
    q = curve.p ** k
    if jobs <= 1 or q < 64:
        affine = _count_chunk(curve.p, curve.f_coeffs, k, 0, q)
    else:
        step = -(-q // jobs)
        bounds = [(s, min(q, s + step)) for s in range(0, q, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_chunk, curve.p, curve.f_coeffs, k, s, e) for s, e in bounds]
            affine = sum(f.result() for f in futures)
    logger.debug(f"#X(F_{curve.p}^{k}) = {affine + 1}")
    return affine + 1


def _root_multiplicity(h: Sequence[PadicNumber], a: PadicNumber) -> int:
    """Multiplicity of the root *a* of *h* by repeated synthetic division."""
    coeffs = list(h)
    mult = 0
    while len(coeffs) > 1:
        quotient = [a.context.zero()] * (len(coeffs) - 1)
        acc = a.context.zero()
        for i in range(len(coeffs) - 1, 0, -1):
            acc = acc * a + coeffs[i]
            quotient[i - 1] = acc
        remainder = acc * a + coeffs[0]
        if not remainder.is_zero():
            break
        mult += 1
        coeffs = quotient
    return mult


def _coerce(h: Sequence[PadicNumber], field: PadicContext) -> List[PadicNumber]:
    out = []
    for c in h:
        if c.context == field:
            out.append(c)
        elif c.context.f == 1:
            out.append(field.element(c.coeffs[0]))
        else:
            raise InputError(f"cannot map 𝔽_{c.context.q} coefficients into 𝔽_{field.q}")
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def ord_at_point(omega_bar: DifferentialModP, zbar: CurvePointBar) -> int:
    """Order of vanishing of h(x)dx/y at *zbar*.

    Finite points: multiplicity of (x − a) in h. Weierstrass points: twice that.
    Infinity: 2g − 2 − 2·deg h.
    """
    if omega_bar.is_zero():
        raise InputError("the zero differential has no order")
    if zbar.kind == INFINITY:
        return 2 * omega_bar.genus - 2 - 2 * omega_bar.degree()
    h = _coerce(omega_bar.h, zbar.x.context)
    mult = _root_multiplicity(h, zbar.x)
    return 2 * mult if zbar.kind == WEIERSTRASS else mult


def leading_coefficient_at(omega_bar: DifferentialModP, zbar: CurvePointBar) -> PadicNumber:
    """First nonzero coefficient of h in the local parameter at *zbar*.

    Finite and Weierstrass points use powers of (x − a); infinity uses the
    leading coefficient of h.
    """
    if zbar.kind == INFINITY:
        return omega_bar.h[omega_bar.degree()]
    h = _coerce(omega_bar.h, zbar.x.context)
    for _ in range(_root_multiplicity(h, zbar.x)):
        a = zbar.x
        quotient = [a.context.zero()] * (len(h) - 1)
        acc = a.context.zero()
        for i in range(len(h) - 1, 0, -1):
            acc = acc * a + h[i]
            quotient[i - 1] = acc
        h = quotient
    return poly.evaluate(h, zbar.x)


def lift_point(curve: HyperellipticCurve, zbar: CurvePointBar,
               precision: Optional[int] = None) -> Tuple[PadicNumber, PadicNumber]:
    """Lift of a finite non-Weierstrass point: Teichmüller x₀, Hensel y₀.

    Raises:
        UnsupportedDisc: for Weierstrass points and infinity.
    """
    if zbar.kind != FINITE:
        raise UnsupportedDisc(zbar.kind)
    N = precision or curve.precision
    ctx = zbar.x.context.with_precision(N)
    x0 = teichmuller(ctx, zbar.x)
    fx = poly.evaluate(list(curve.f_coeffs), x0)
    y0 = ctx.element(zbar.y.coeffs)
    correct = 1
    while correct < N:
        y0 = y0 - (y0 * y0 - fx) / (2 * y0)
        correct *= 2
    return x0, y0
