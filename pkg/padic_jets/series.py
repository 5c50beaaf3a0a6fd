"""
One-variable p-adic power series, Newton polygons and slope lemmas.

Only coefficient valuations matter here. A :class:`PadicSeries` records, for
each index n < M, one of

  * a known valuation (exact rational),
  * an exact zero (from exact rational input), or
  * :class:`~padic_jets.padic.AtPrecisionZero`: the coefficient vanishes at
    working precision and only a lower bound on its valuation is known.

:func:`newton_polygon` builds the lower convex hull of the known points and a
reliability horizon: slopes to the right of the horizon could still be cut by
an unknown coefficient and are not certified.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import PrecisionError
from .padic import AtPrecisionZero, PadicNumber, int_valuation, valuation

logger = logging.getLogger("padic_jets")

Point = Tuple[int, Fraction]


class AllCoefficientsIndistinguishableFromZero(PrecisionError):
    """Raised when no coefficient has a known finite valuation."""


class UncertifiedRegion(PrecisionError):
    """Raised when a query falls outside the certified part of a polygon."""


class ExactZero:
    """Valuation marker for a coefficient known to be exactly zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ExactZero()"

    def __str__(self) -> str:
        return "inf"


EXACT_ZERO = ExactZero()

CoefficientValuation = Union[Fraction, ExactZero, AtPrecisionZero]


# ── series ────────────────────────────────────────────────────────────────────

class PadicSeries:
    """Σ a_n T^n truncated at T^M, with per-coefficient valuation bookkeeping.

    Use :meth:`from_padic` for coefficients known modulo p^N (optionally
    divided by p^shift) and :meth:`from_rationals` for exact input.
    """

    __slots__ = ("p", "coefficients", "valuations")

    def __init__(self, p: int, coefficients: Sequence, valuations: Sequence[CoefficientValuation]):
        if len(coefficients) != len(valuations):
            raise ValueError("coefficient and valuation lists differ in length")
        self.p = p
        self.coefficients = tuple(coefficients)
        self.valuations: Tuple[CoefficientValuation, ...] = tuple(valuations)

    @classmethod
    def from_padic(cls, coefficients: Sequence[PadicNumber],
                   shifts: Optional[Sequence[int]] = None) -> "PadicSeries":
        """Series with a_n = coefficients[n] / p^shifts[n]."""
        if not coefficients:
            raise ValueError("empty series")
        p = coefficients[0].context.p
        shifts = list(shifts) if shifts is not None else [0] * len(coefficients)
        vals: List[CoefficientValuation] = []
        for c, s in zip(coefficients, shifts):
            v = valuation(c)
            if isinstance(v, AtPrecisionZero):
                vals.append(AtPrecisionZero(v.bound - s))
            else:
                vals.append(Fraction(v - s))
        return cls(p, list(zip(coefficients, shifts)), vals)

    @classmethod
    def from_rationals(cls, p: int, coefficients: Sequence[Union[int, Fraction]]) -> "PadicSeries":
        vals: List[CoefficientValuation] = []
        for c in coefficients:
            c = Fraction(c)
            if c == 0:
                vals.append(EXACT_ZERO)
            else:
                vals.append(Fraction(int_valuation(c.numerator, p) - int_valuation(c.denominator, p)))
        return cls(p, [Fraction(c) for c in coefficients], vals)

    @property
    def truncation(self) -> int:
        return len(self.valuations)

    def __len__(self) -> int:
        return len(self.valuations)

    def valuation(self, n: int) -> CoefficientValuation:
        return self.valuations[n]

    def known_points(self) -> List[Point]:
        return [(n, v) for n, v in enumerate(self.valuations) if isinstance(v, Fraction)]

    def unknown_points(self) -> List[Point]:
        return [(n, Fraction(v.bound)) for n, v in enumerate(self.valuations)
                if isinstance(v, AtPrecisionZero)]


# ── polygons ──────────────────────────────────────────────────────────────────

def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> List[Point]:
    """Lower convex hull by the monotone chain, keeping only strict vertices.

    For repeated abscissas the lowest ordinate wins.
    """
    best = {}
    for n, m in points:
        if n not in best or m < best[n]:
            best[n] = Fraction(m)
    hull: List[Point] = []
    for pt in sorted(best.items()):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def _slopes(vertices: Sequence[Point]) -> List[Tuple[Fraction, int]]:
    return [((b[1] - a[1]) / (b[0] - a[0]), b[0] - a[0]) for a, b in zip(vertices, vertices[1:])]


def _agreement_horizon(hi: Sequence[Point], lo: Sequence[Point]) -> Optional[Fraction]:
    i = 0
    while i < min(len(hi), len(lo)) and hi[i] == lo[i]:
        i += 1
    if i == len(hi) == len(lo):
        return None
    if i == 0:
        return Fraction(min(hi[0][0], lo[0][0]))
    anchor = hi[i - 1]
    if i < len(hi) and i < len(lo):
        s_hi = (hi[i][1] - anchor[1]) / (hi[i][0] - anchor[0])
        s_lo = (lo[i][1] - anchor[1]) / (lo[i][0] - anchor[0])
        if s_hi == s_lo:
            return Fraction(min(hi[i][0], lo[i][0]))
    return Fraction(anchor[0])


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points (n, val a_n).

    Attributes:
        vertices: Hull vertices of the known points, increasing in n.
        horizon: Abscissa beyond which the polygon is not certified, or None
            when every coefficient valuation is known.
        points: The known input points.
        unknown: Points (n, bound) whose valuation is only bounded below.
        worst_case: Hull obtained by placing every unknown point at its bound.
    """

    vertices: Tuple[Point, ...]
    horizon: Optional[Fraction] = None
    points: Tuple[Point, ...] = field(default=(), repr=False)
    unknown: Tuple[Point, ...] = field(default=(), repr=False)
    worst_case: Tuple[Point, ...] = field(default=(), repr=False)

    @property
    def slopes(self) -> List[Tuple[Fraction, int]]:
        """(slope, horizontal length) per segment, left to right."""
        return _slopes(self.vertices)

    def ordinate(self, n: Union[int, Fraction]) -> Optional[Fraction]:
        """Height of the polygon at *n* (None outside its abscissa range)."""
        vs = self.vertices
        if not vs or n < vs[0][0] or n > vs[-1][0]:
            return None
        for a, b in zip(vs, vs[1:]):
            if a[0] <= n <= b[0]:
                return a[1] + (b[1] - a[1]) * (Fraction(n) - a[0]) / (b[0] - a[0])
        return vs[0][1]

    def is_certified(self) -> bool:
        return self.horizon is None

    def check_invariants(self) -> bool:
        """Convexity (strictly increasing slopes) and cover of every known point."""
        slopes = [s for s, _ in self.slopes]
        if any(b <= a for a, b in zip(slopes, slopes[1:])):
            return False
        for n, m in self.points:
            y = self.ordinate(n)
            if y is None or m < y:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "vertices": [[n, str(m)] for n, m in self.vertices],
            "slopes": [[str(s), length] for s, length in self.slopes],
            "horizon": None if self.horizon is None else str(self.horizon),
        }


def newton_polygon(s: PadicSeries) -> NewtonPolygon:
    """Newton polygon of *s* with its certification horizon.

    Raises:
        AllCoefficientsIndistinguishableFromZero: if no valuation is known.
    """
    known = s.known_points()
    if not known:
        raise AllCoefficientsIndistinguishableFromZero(
            f"all {len(s)} coefficients vanish at working precision"
        )
    unknown = s.unknown_points()
    hi = lower_hull(known)
    if unknown:
        lo = lower_hull(known + unknown)
        horizon = _agreement_horizon(hi, lo)
    else:
        lo = hi
        horizon = None
    if horizon is not None:
        logger.debug(f"newton polygon certified up to n={horizon} ({len(unknown)} unknown coefficients)")
    return NewtonPolygon(tuple(hi), horizon, tuple(known), tuple(unknown), tuple(lo))


def negative_slopes(P: NewtonPolygon) -> List[Tuple[Fraction, int]]:
    """(λ, multiplicity) for every descending segment, λ = −slope, ascending in λ.

    Raises:
        UncertifiedRegion: if a descending segment could be altered by a
            coefficient of unknown valuation.
    """
    out = []
    for (a, b) in zip(P.vertices, P.vertices[1:]):
        slope = (b[1] - a[1]) / (b[0] - a[0])
        if slope >= 0:
            continue
        if P.horizon is not None and b[0] > P.horizon:
            raise UncertifiedRegion(f"segment ending at n={b[0]} lies beyond horizon {P.horizon}")
        out.append((-slope, b[0] - a[0]))
    if P.horizon is not None:
        for a, b in zip(P.worst_case, P.worst_case[1:]):
            if b[0] > P.horizon and b[1] < a[1]:
                raise UncertifiedRegion(
                    f"an unknown coefficient beyond n={P.horizon} may add a descending segment"
                )
    out.sort()
    return out


@dataclass(frozen=True)
class ExactValuation:
    """val(F(z)) = λ·n + m at the supporting vertex (n, m)."""

    value: Fraction
    vertex: Point

    def is_integral(self) -> bool:
        return self.value.denominator == 1


@dataclass(frozen=True)
class IsASlope:
    """λ is a slope of the polygon: val(F(z)) is not determined by it alone."""

    slope: Fraction


def value_valuation(P: NewtonPolygon, lam: Union[int, Fraction]) -> Union[ExactValuation, IsASlope]:
    """Valuation of F(z) for val(z) = λ, read off the polygon.

    Raises:
        UncertifiedRegion: if an unknown coefficient could reach the minimum.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"λ must be positive, got {lam}")
    for slope, _ in P.slopes:
        if slope == -lam:
            return IsASlope(lam)
    best = min(P.vertices, key=lambda v: lam * v[0] + v[1])
    value = lam * best[0] + best[1]
    for n, bound in P.unknown:
        if lam * n + bound <= value:
            raise UncertifiedRegion(
                f"coefficient {n} (valuation >= {bound}) may reach the minimum {value}"
            )
    return ExactValuation(value, best)


def polygon_tsv(s: PadicSeries) -> str:
    """Rows ``n, val(a_n), on_hull`` for external plotting."""
    P = newton_polygon(s)
    lines = ["n\tvaluation\ton_hull"]
    for n, v in enumerate(s.valuations):
        on = 0
        if isinstance(v, Fraction):
            y = P.ordinate(n)
            on = int(y is not None and y == v)
        lines.append(f"{n}\t{v}\t{on}")
    return "\n".join(lines) + "\n"
