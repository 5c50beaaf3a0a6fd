"""
Explicit counting bounds, finite abelian group lemmas and disc accounting.

Every bound is an exact Python integer wrapped in a :class:`BoundReport`
that records the inputs and which hypotheses hold. Functions with a hard
precondition raise :class:`~padic_jets.errors.HypothesisViolated` instead of
evaluating outside it.

Usage:
    mordell_lang_reduction_bound(2, 0, 5).value      # 6187500
    gamma_quotient_exact(FinAbGroup((3, 9)), 3)      # (9, 9)
    determinantal_condition(n=3, m=5, g=2, d=2)
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from . import linalg
from . import polynomials as poly
from .derham import DifferentialModP, HyperellipticCurve
from .errors import HypothesisViolated, InputError
from .padic import NonPrime
from .points import INFINITY, WEIERSTRASS, ord_at_point, rational_points
from .utils import encode_big_ints

logger = logging.getLogger("padic_jets")

MANIN_MUMFORD = "buium_mm_bound"
ML_REDUCTION = "mordell_lang_reduction_bound"
ML_POINTS = "mordell_lang_point_bound"
CHABAUTY = "coleman_chabauty_bound"
GAMMA_MOD_P = "gamma_mod_p_bound"
DISC_ASSEMBLY = "chabauty_disc_assembly"


class NotIndependent(HypothesisViolated):
    """Raised when a subspace basis is linearly dependent mod p."""

    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__("independent basis", f"rank {rank} < {size} vectors")


class DegenerateRankLocus(HypothesisViolated):
    """Raised when the rank-≤d locus is the whole space (d ≥ min(ng, m))."""

    def __init__(self, d: int, bound: int):
        self.d = d
        self.bound = bound
        super().__init__("d < min(ng, m)", f"d={d}, min(ng, m)={bound}")


# ── reports ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound with its inputs and hypothesis record."""

    formula: str
    inputs: Dict[str, int]
    value: int
    hypotheses: Dict[str, bool] = field(default_factory=dict)
    assumptions: Tuple[str, ...] = ()
    provenance: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return encode_big_ints({
            "formula": self.formula,
            "inputs": dict(self.inputs),
            "value": self.value,
            "hypotheses": dict(self.hypotheses),
            "assumptions": list(self.assumptions),
            "provenance": dict(self.provenance),
        })


def _check_prime(p: int) -> None:
    if not sympy.isprime(p):
        raise NonPrime(p)


def _check_genus(g: int) -> None:
    if g < 2:
        raise InputError(f"genus must be at least 2, got {g}")


def _buium_factor(g: int, p: int) -> int:
    # 3^g·[p(2g−2) + 6g]·g!
    return 3 ** g * (p * (2 * g - 2) + 6 * g) * math.factorial(g)


# ── counting formulas ─────────────────────────────────────────────────────────

def buium_mm_bound(g: int, p: int) -> BoundReport:
    """p^{2g}·3^g·[p(2g−2)+6g]·g!, the torsion-point count in the first jet kernel."""
    _check_genus(g)
    _check_prime(p)
    return BoundReport(MANIN_MUMFORD, {"g": g, "p": p}, p ** (2 * g) * _buium_factor(g, p))


def mordell_lang_reduction_bound(g: int, r: int, p: int) -> BoundReport:
    """p^{3g+r}·3^g·[p(2g−2)+6g]·g!, bounding # red(X(ℚ_p^nr) ∩ Γ)."""
    _check_genus(g)
    _check_prime(p)
    if r < 0:
        raise InputError(f"rank must be non-negative, got {r}")
    return BoundReport(
        ML_REDUCTION, {"g": g, "r": r, "p": p},
        p ** (3 * g + r) * _buium_factor(g, p),
        hypotheses={"p >= 2g": p >= 2 * g, "r < g": r < g},
        assumptions=("basis of Γ defined over ℚ_p^nr",),
    )


def mordell_lang_point_bound(g: int, r: int, p: int) -> BoundReport:
    """Reduction bound plus 2r.

    Raises:
        HypothesisViolated: unless r < g and p ≥ 2g.
    """
    if r >= g:
        raise HypothesisViolated("r < g", f"r={r}, g={g}")
    if p < 2 * g:
        raise HypothesisViolated("p >= 2g", f"p={p}, g={g}")
    red = mordell_lang_reduction_bound(g, r, p)
    return BoundReport(
        ML_POINTS, {"g": g, "r": r, "p": p}, red.value + 2 * r,
        hypotheses={"p >= 2g": True, "r < g": True},
        assumptions=red.assumptions,
        provenance={ML_REDUCTION: red.value, "stoll_total": 2 * r},
    )


def coleman_chabauty_bound(count_residue_points: int, g: int) -> BoundReport:
    """#X(κ) + 2g − 2."""
    _check_genus(g)
    if count_residue_points < 0:
        raise InputError("counts must be non-negative")
    return BoundReport(CHABAUTY, {"residue_points": count_residue_points, "g": g},
                       count_residue_points + 2 * g - 2)


def gamma_mod_p_bound(g: int, r: int, p: int) -> BoundReport:
    """p^{g+r}, bounding #(Γ/pΓ)."""
    if g < 0 or r < 0:
        raise InputError("g and r must be non-negative")
    _check_prime(p)
    return BoundReport(
        GAMMA_MOD_P, {"g": g, "r": r, "p": p}, p ** (g + r),
        assumptions=("torsion p-rank of J(ℚ_p^nr) at most g",),
    )


def chabauty_disc_assembly(red_bound: int, stoll_total: int) -> BoundReport:
    """Reduction bound plus the Stoll excess over occupied discs."""
    if red_bound < 0 or stoll_total < 0:
        raise InputError("inputs must be non-negative")
    return BoundReport(
        DISC_ASSEMBLY, {"red_bound": red_bound, "stoll_total": stoll_total},
        red_bound + stoll_total,
        provenance={ML_REDUCTION: red_bound, "stoll_vanishing_sum": stoll_total},
    )


# ── finite abelian groups ─────────────────────────────────────────────────────

@dataclass(frozen=True)
class FinAbGroup:
    """⊕ ℤ/n_i ⊕ (ℚ_ℓ/ℤ_ℓ)^a, with each n_i a prime power.

    Args:
        cyclic_orders: Orders n_i ≥ 2 of the cyclic summands.
        divisible_rank: Number a of divisible summands.
        divisible_prime: The prime ℓ of the divisible summands.
    """

    cyclic_orders: Tuple[int, ...] = ()
    divisible_rank: int = 0
    divisible_prime: Optional[int] = None

    def __post_init__(self):
        for n in self.cyclic_orders:
            if n < 2 or len(sympy.factorint(n)) != 1:
                raise InputError(f"cyclic order {n} is not a prime power >= 2")
        if self.divisible_rank < 0:
            raise InputError("divisible rank must be non-negative")
        if self.divisible_rank and self.divisible_prime is None:
            raise InputError("divisible summands need a prime")

    @property
    def is_finite(self) -> bool:
        return self.divisible_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Group order, or None when a divisible summand is present."""
        if not self.is_finite:
            return None
        return math.prod(self.cyclic_orders)

    def to_dict(self) -> Dict:
        return {
            "cyclic_orders": list(self.cyclic_orders),
            "divisible_rank": self.divisible_rank,
            "divisible_prime": self.divisible_prime,
        }


def gamma_quotient_exact(G: FinAbGroup, p: int) -> Tuple[int, int]:
    """(#(G/pG), #G[p]) from the structure.

    Each cyclic p-power summand contributes p to both; ℚ_p/ℤ_p contributes p
    to the kernel and nothing to the quotient; everything prime to p
    contributes nothing.
    """
    b = sum(1 for n in G.cyclic_orders if n % p == 0)
    a = G.divisible_rank if G.divisible_prime == p else 0
    return p ** b, p ** (a + b)


def enumerate_group_counts(G: FinAbGroup, p: int) -> Tuple[int, int]:
    """(#(G/pG), #G[p]) by listing every element of a finite G."""
    if not G.is_finite:
        raise InputError("cannot enumerate a group with divisible summands")
    orders = G.cyclic_orders
    kernel = 0
    image = set()
    for x in itertools.product(*(range(n) for n in orders)):
        px = tuple((p * a) % n for a, n in zip(x, orders))
        image.add(px)
        if not any(px):
            kernel += 1
    return G.order // len(image), kernel


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def enumerate_p_groups(p: int, max_exponent: int) -> List[FinAbGroup]:
    """Every abelian p-group of order ≤ p^max_exponent, one per partition."""
    _check_prime(p)
    out = []
    for e in range(max_exponent + 1):
        for parts in _partitions(e):
            out.append(FinAbGroup(tuple(p ** k for k in parts)))
    return out


def torsion_kernel_check(G: FinAbGroup, g: int, p: int) -> Dict[str, bool]:
    """Guards for a torsion part Γ_tor: #Γ[p] ≤ p^{2g} and the sharper ≤ p^g."""
    _, kernel = gamma_quotient_exact(G, p)
    return {"kernel <= p^2g": kernel <= p ** (2 * g), "kernel <= p^g": kernel <= p ** g}


# ── Stoll accounting ──────────────────────────────────────────────────────────

@dataclass(frozen=True)
class StollRow:
    """n(s) on the closed point cut out by *factor* (or infinity)."""

    kind: str
    factor: Tuple[int, ...]
    points: int
    n: int

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "factor": list(self.factor), "points": self.points, "n": self.n}


@dataclass(frozen=True)
class StollReport:
    rows: Tuple[StollRow, ...]
    total: int
    dimension: int
    genus: int

    @property
    def r(self) -> int:
        return self.genus - self.dimension

    def to_dict(self) -> Dict:
        return {
            "rows": [row.to_dict() for row in self.rows],
            "total": self.total,
            "dimension": self.dimension,
            "r": self.r,
            "bound_2r": 2 * self.r,
        }


def _residue_poly(omega: DifferentialModP, p: int) -> List[int]:
    if omega.context.f != 1:
        raise InputError("subspace differentials must be defined over 𝔽_p")
    return poly.trim([c.coeffs[0] % p for c in omega.h])


def _check_subspace(curve: HyperellipticCurve, subspace: Sequence[DifferentialModP]) -> List[List[int]]:
    g, p = curve.g, curve.p
    if not 1 <= len(subspace) <= g:
        raise InputError(f"subspace dimension must be in [1, {g}], got {len(subspace)}")
    polys = [_residue_poly(w, p) for w in subspace]
    rows = [h + [0] * (g - len(h)) for h in polys]
    rank = linalg.rank_mod_p(rows, p)
    if rank < len(rows):
        raise NotIndependent(rank, len(rows))
    return polys


def stoll_vanishing_sum(curve: HyperellipticCurve, subspace: Sequence[DifferentialModP]) -> StollReport:
    """n(s) = min ord_s over the subspace, on every closed point where it is positive.

    Raises:
        NotIndependent: if the basis is dependent mod p.
    """
    g, p = curve.g, curve.p
    polys = _check_subspace(curve, subspace)
    f_bar = curve.f_bar()
    common = poly.gcd_mod_p(polys, p)
    rows: List[StollRow] = []
    if poly.degree(common) > 0:
        for factor, e in poly.factor_mod_p(common, p):
            d = len(factor) - 1
            if not poly.divmod_monic(f_bar, factor, p)[1]:
                rows.append(StollRow(WEIERSTRASS, tuple(factor), d, 2 * e))
            else:
                rows.append(StollRow("finite", tuple(factor), 2 * d, e))
    top = max(len(h) - 1 for h in polys)
    n_inf = 2 * g - 2 - 2 * top
    if n_inf > 0:
        rows.append(StollRow(INFINITY, (), 1, n_inf))
    total = sum(row.points * row.n for row in rows)
    logger.debug(f"stoll sum over {len(rows)} closed points: {total}")
    return StollReport(tuple(rows), total, len(polys), g)


def points_vanishing_scan(curve: HyperellipticCurve, subspace: Sequence[DifferentialModP],
                          k: int = 1) -> int:
    """Σ over X(𝔽_{p^k}) of min ord_s over the basis, by exhaustive scan."""
    _check_subspace(curve, subspace)
    total = 0
    for s in rational_points(curve, k):
        total += min(ord_at_point(w, s) for w in subspace)
    return total


# ── determinantal loci ────────────────────────────────────────────────────────

@dataclass(frozen=True)
class DeterminantalResult:
    codim: int
    satisfied: bool
    minimal_m: Optional[int]

    def to_dict(self) -> Dict:
        return encode_big_ints({"codim": self.codim, "satisfied": self.satisfied,
                                "minimal_m": self.minimal_m})


def determinantal_condition(n: int, m: int, g: int, d: int) -> DeterminantalResult:
    """Codimension (ng−d)(m−d) of the rank-≤d locus and the test mn ≥ codim.

    ``minimal_m`` is the least m′ > d with m′n ≥ (ng−d)(m′−d). The difference
    m′n − (ng−d)(m′−d) is affine in m′ and non-increasing once ng−d > n, so the
    condition either holds at m′ = d+1 or nowhere above d.

    Raises:
        DegenerateRankLocus: if d ≥ min(ng, m).
    """
    if min(n, m, g) < 1 or d < 0:
        raise InputError("n, m, g must be positive and d non-negative")
    if d >= min(n * g, m):
        raise DegenerateRankLocus(d, min(n * g, m))
    codim = (n * g - d) * (m - d)
    start = d + 1
    minimal = start if start * n >= (n * g - d) * (start - d) else None
    return DeterminantalResult(codim, m * n >= codim, minimal)
