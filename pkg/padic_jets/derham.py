"""
Odd-degree hyperelliptic curves and their de Rham cohomology.

For y² = Q(x) with Q monic of degree 2g+1 and good reduction at an odd prime
p, H¹_dR has the basis ω_i = xⁱ dx/y (0 ≤ i < 2g), and ω_0..ω_{g−1} span the
holomorphic differentials. The Frobenius matrix is computed by reduction in
Monsky–Washnitzer cohomology: the lift x ↦ x^p, y ↦ y^σ with
(y^σ)² = Q(x^p) gives

    F(xⁱ dx/y) = Σ_k p·C(−1/2, k)·x^{p(i+1)−1}·E^k dx / y^{(2k+1)p},

with E = Q(x^p) − Q(x)^p. Each term is reduced to pole order 1 with the
relations

    A dx/y^s ≡ (U + 2V′/(s−2)) dx/y^{s−2}    for A = U·Q + V·Q′,
    (j·x^{j−1}·Q + x^j·Q′/2) dx/y ≡ 0,

tracking every division by p in a single denominator exponent.

Matrices use the convention M[r][c] = coefficient of ω_r in M(ω_c).

Usage:
    curve = HyperellipticCurve(7, [0, 4, 0, -5, 0, 1])
    fs = curve.frobenius()
    eta = curve.basis_class(0)
    verschiebung_apply(curve, eta)
"""

import logging
import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import linalg
from . import polynomials as poly
from .cache import frobenius_cache
from .errors import HypothesisViolated, InputError, PrecisionError
from .padic import (
    AtPrecisionZero,
    DivisionNotExact,
    PadicContext,
    PadicNumber,
    frobenius_auto,
    int_valuation,
    valuation,
)

logger = logging.getLogger("padic_jets")

DEFAULT_PRECISION = 10
LATTICE_SAMPLES = 100

Matrix = List[List[int]]


# ── errors ────────────────────────────────────────────────────────────────────

class BadReduction(HypothesisViolated):
    """Raised when disc(f) is divisible by p."""

    def __init__(self, p: int, disc_valuation: int):
        self.p = p
        self.disc_valuation = disc_valuation
        super().__init__("good reduction", f"v_{p}(disc f) = {disc_valuation}")


class LatticeMismatch(HypothesisViolated):
    """Raised when the span of xⁱdx/y fails an integrality check for F or V."""

    def __init__(self, detail: str):
        super().__init__("integral lattice", detail)


class NotInHolomorphicPlusP(HypothesisViolated):
    """Raised by :func:`reduce_bar` when η/p^val(η) ∉ H⁰(Ω) + p·H¹_dR."""

    def __init__(self, index: int):
        self.index = index
        super().__init__("η/p^val(η) ∈ H⁰(Ω) + pH¹", f"coordinate {index} is a unit")


class PrecisionExhausted(PrecisionError):
    """Raised when a computation consumes all available p-adic digits."""


class AtPrecisionZeroError(PrecisionError):
    """Raised when a class is indistinguishable from zero at its precision."""

    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"class is zero modulo p^{bound}")


# ── curves ────────────────────────────────────────────────────────────────────

class HyperellipticCurve:
    """y² = f(x) with f monic of odd degree 2g+1 over ℤ_p.

    Args:
        p: An odd prime of good reduction.
        f_coeffs: Integer coefficients of f, low-to-high.
        precision: Target p-adic precision N for derived structures.
        genus: Optional declared genus, checked against deg f.

    Raises:
        NonPrime, InputError: for malformed parameters.
        BadReduction: if p divides disc(f).
    """

    __slots__ = ("p", "g", "f_coeffs", "precision", "context", "disc_valuation",
                 "p_at_least_2g", "p_above_2g_minus_2")

    def __init__(self, p: int, f_coeffs: Sequence[int], precision: int = DEFAULT_PRECISION,
                 genus: Optional[int] = None):
        coeffs = poly.trim([int(c) for c in f_coeffs])
        if p == 2:
            raise InputError("p = 2 is not supported")
        context = PadicContext(p, 1, precision)
        if not coeffs or coeffs[-1] != 1:
            raise InputError(f"f must be monic, got leading coefficient {coeffs[-1] if coeffs else 0}")
        deg = len(coeffs) - 1
        if deg % 2 == 0:
            raise InputError(f"f must have odd degree, got {deg}")
        g = (deg - 1) // 2
        if g < 2:
            raise InputError(f"genus must be at least 2, got {g}")
        if genus is not None and genus != g:
            raise InputError(f"declared genus {genus} does not match deg f = {deg}")

        disc = poly.discriminant(coeffs)
        v = int_valuation(disc, p)
        if v is None:
            raise InputError("f has a repeated factor (discriminant 0)")
        if v > 0:
            raise BadReduction(p, v)

        self.p = p
        self.g = g
        self.f_coeffs: Tuple[int, ...] = tuple(coeffs)
        self.precision = precision
        self.context = context
        self.disc_valuation = v
        self.p_at_least_2g = p >= 2 * g
        self.p_above_2g_minus_2 = p > 2 * g - 2
        if not self.p_at_least_2g:
            logger.warning(f"p={p} < 2g={2 * g}: slope results need p >= 2g")

    @classmethod
    def from_dict(cls, data: Dict) -> "HyperellipticCurve":
        """Build a curve from the JSON input format {p, genus, f_coeffs, precision}."""
        try:
            p = int(data["p"])
            f_coeffs = [int(c) for c in data["f_coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed curve description: {exc}") from None
        genus = data.get("genus")
        return cls(p, f_coeffs, int(data.get("precision", DEFAULT_PRECISION)),
                   None if genus is None else int(genus))

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "genus": self.g,
            "f_coeffs": list(self.f_coeffs),
            "precision": self.precision,
        }

    @property
    def signature(self) -> Tuple[int, Tuple[int, ...], int]:
        return (self.p, self.f_coeffs, self.precision)

    @property
    def dimension(self) -> int:
        return 2 * self.g

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperellipticCurve) and self.signature == other.signature

    def __hash__(self) -> int:
        return hash(self.signature)

    def __repr__(self) -> str:
        return f"HyperellipticCurve(p={self.p}, g={self.g}, f={list(self.f_coeffs)})"

    def f_bar(self) -> List[int]:
        """f reduced mod p."""
        return poly.trim([c % self.p for c in self.f_coeffs])

    # ── cohomology ───────────────────────────────────────────────────

    def frobenius(self, working_precision: Optional[int] = None) -> "FrobeniusStructure":
        """Memoised :func:`frobenius_structure` of this curve."""
        key = (self.signature, working_precision)
        return frobenius_cache.get_or_compute(
            key, lambda: frobenius_structure(self, working_precision)
        )

    def basis_class(self, i: int, context: Optional[PadicContext] = None) -> "CohomologyClass":
        if not 0 <= i < self.dimension:
            raise InputError(f"basis index {i} outside [0, {self.dimension})")
        ctx = context or self.context
        return CohomologyClass(self, [ctx.one() if j == i else ctx.zero()
                                      for j in range(self.dimension)])

    def class_from(self, coords: Sequence[Union[int, PadicNumber]],
                   context: Optional[PadicContext] = None) -> "CohomologyClass":
        ctx = context or self.context
        return CohomologyClass(self, [c if isinstance(c, PadicNumber) else ctx.element(c)
                                      for c in coords])


class CohomologyClass:
    """A class Σ c_i·xⁱdx/y in H¹_dR, coordinates over ℤ_q / p^N."""

    __slots__ = ("curve", "coords")

    def __init__(self, curve: HyperellipticCurve, coords: Sequence[PadicNumber]):
        if len(coords) != curve.dimension:
            raise InputError(f"expected {curve.dimension} coordinates, got {len(coords)}")
        ctx = coords[0].context
        N = min(c.context.N for c in coords)
        if any(not ctx.same_ring(c.context) for c in coords):
            raise InputError("class coordinates live in different rings")
        self.curve = curve
        self.coords: Tuple[PadicNumber, ...] = tuple(
            c if c.context.N == N else c.reduce(N) for c in coords
        )

    @property
    def context(self) -> PadicContext:
        return self.coords[0].context

    @property
    def precision(self) -> int:
        return self.context.N

    def _check(self, other: "CohomologyClass") -> None:
        if other.curve != self.curve:
            raise InputError("classes belong to different curves")

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check(other)
        return CohomologyClass(self.curve, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check(other)
        return CohomologyClass(self.curve, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.curve, [-a for a in self.coords])

    def __mul__(self, scalar) -> "CohomologyClass":
        return CohomologyClass(self.curve, [a * scalar for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, CohomologyClass) and other.curve == self.curve
                and all(a == b for a, b in zip(self.coords, other.coords)))

    def __hash__(self) -> int:
        return hash((self.curve, tuple(self.coords)))

    def __repr__(self) -> str:
        return f"CohomologyClass({[a.coeffs if a.context.f > 1 else a.coeffs[0] for a in self.coords]})"

    def reduce(self, N: int) -> "CohomologyClass":
        if N >= self.precision:
            return self
        return CohomologyClass(self.curve, [a.reduce(N) for a in self.coords])

    def is_holomorphic(self) -> bool:
        return all(a.is_zero() for a in self.coords[self.curve.g:])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coords)

    def to_dict(self) -> Dict:
        return {
            "coords": [a.digit_string() for a in self.coords],
            "precision": self.precision,
        }


@dataclass(frozen=True)
class DifferentialModP:
    """h(x)·dx/y on the reduced curve, deg h ≤ g−1.

    *h* holds residue-field elements (precision-1 PadicNumbers), low-to-high.
    """

    h: Tuple[PadicNumber, ...]
    genus: int

    @property
    def context(self) -> PadicContext:
        return self.h[0].context

    def degree(self) -> int:
        for i in range(len(self.h) - 1, -1, -1):
            if not self.h[i].is_zero():
                return i
        return -1

    def is_zero(self) -> bool:
        return self.degree() < 0

    def to_dict(self) -> Dict:
        return {"h": [a.digit_string() for a in self.h], "genus": self.genus}


# ── Frobenius ─────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FrobeniusStructure:
    """Frobenius and Verschiebung matrices with their certified precisions.

    Attributes:
        F: Matrix of F, entries modulo p^precision.
        V: Matrix of V = pF⁻¹, entries modulo p^v_precision.
        precision: Absolute precision N_out of F.
        v_precision: Absolute precision of V (N_out − g).
        working_precision: Digits carried by the reduction numerators.
        precision_loss: working_precision − precision.
        series_terms: Number of terms of the y^σ expansion used.
        lattice_samples: Sampled holomorphic classes whose V-image reduced
            to a nonzero differential.
    """

    p: int
    g: int
    F: Matrix
    V: Matrix
    precision: int
    v_precision: int
    working_precision: int
    precision_loss: int
    series_terms: int
    fv_ok: bool = True
    lattice_ok: bool = True
    lattice_samples: int = 0
    denominators: Tuple[int, ...] = field(default=(), repr=False)

    def charpoly(self) -> List[int]:
        """det(T − F) modulo p^precision, low-to-high."""
        return linalg.charpoly(self.F, self.p ** self.precision)

    def to_dict(self) -> Dict:
        ctx = PadicContext(self.p, 1, self.precision)
        vctx = ctx.with_precision(self.v_precision)
        return {
            "p": self.p,
            "genus": self.g,
            "frobenius": [[ctx.element(x).digit_string() for x in row] for row in self.F],
            "verschiebung": [[vctx.element(x).digit_string() for x in row] for row in self.V],
            "precision": self.precision,
            "v_precision": self.v_precision,
            "working_precision": self.working_precision,
            "precision_loss": self.precision_loss,
            "lattice_samples": self.lattice_samples,
        }


def _floor_log(p: int, n: int) -> int:
    e = 0
    while p ** (e + 1) <= n:
        e += 1
    return e


def _term_valuation(k: int, p: int, g: int) -> int:
    # lower bound for the valuation of the reduced k-th term of the y^σ expansion
    return k + 1 - 2 * _floor_log(p, (2 * k + 1) * p * (2 * g + 1))


def _tail_valuation(K: int, p: int, g: int) -> int:
    """Lower bound for the valuation of everything dropped after K terms."""
    return min(_term_valuation(k, p, g) for k in range(K, p * (2 * K + 1) + 1))


def _denominator_bound(K: int, p: int, g: int) -> int:
    """Largest power of p the reduction can divide by with K series terms."""
    s_max = (2 * K - 1) * p
    e = sum(int_valuation(t, p) for t in range(1, s_max - 1, 2))
    top = max(2 * g, ((2 * g - 1) * (p + 1)) // 2)
    e += sum(int_valuation(2 * j + 2 * g + 1, p) for j in range(0, top - 2 * g + 1))
    return e


def default_working_precision(curve: HyperellipticCurve) -> int:
    """N + ⌈log_p(max(20, 4gN))⌉ guard digits."""
    N, p = curve.precision, curve.p
    bound = max(20, 4 * curve.g * N)
    return N + math.ceil(math.log(bound, p) - 1e-12)


def _plan(curve: HyperellipticCurve, working_precision: Optional[int]) -> Tuple[int, int]:
    """(series terms K, numerator digits) for the requested precision."""
    p, g = curve.p, curve.g
    if working_precision is None:
        target = default_working_precision(curve)
        K = 1
        while _tail_valuation(K, p, g) < target:
            K += 1
        return K, target + _denominator_bound(K, p, g)
    if working_precision < 1:
        raise InputError(f"working precision must be positive, got {working_precision}")
    K = 1
    while _tail_valuation(K, p, g) < working_precision - _denominator_bound(K, p, g):
        K += 1
    return K, working_precision


def _reduce_column(i: int, Q: List[int], Qp: List[int], b: List[int], E_powers: List[List[int]],
                   coeffs: List[int], p: int, g: int, digits: int) -> Tuple[List[int], int]:
    """Reduce F(ω_i) to the basis. Returns (numerators, e) with F(ω_i) = numerators / p^e."""
    m = p ** digits
    K = len(E_powers)
    s_max = (2 * K - 1) * p
    A: List[int] = []
    e = 0
    for s in range(s_max, 1, -2):
        if s % p == 0 and (s // p) % 2 == 1:
            k = (s // p - 1) // 2
            term = poly.scale(poly.shift(E_powers[k], p * (i + 1) - 1), coeffs[k] * p ** (e + 1), m)
            A = poly.add(A, term, m)
        q, r = poly.divmod_monic(A, Q, m)
        V = poly.divmod_monic(poly.mul(r, b, m), Q, m)[1]
        U = poly.add(q, poly.exact_divide_monic(poly.sub(r, poly.mul(V, Qp, m), m), Q, m), m)
        t = s - 2
        v = int_valuation(t, p)
        u = t // p ** v
        A = poly.add(poly.scale(U, p ** v, m), poly.scale(poly.derivative(V), 2 * pow(u, -1, m), m), m)
        e += v

    # pole order 1: (2j·x^{j−1}·Q + x^j·Q′) dx/y is exact, leading term (2j+2g+1)·x^{j+2g}
    while poly.degree(A) >= 2 * g:
        D = poly.degree(A)
        j = D - 2 * g
        R = poly.shift(Qp, j)
        if j > 0:
            R = poly.add(R, poly.scale(poly.shift(Q, j - 1), 2 * j))
        lc = 2 * j + 2 * g + 1
        v = int_valuation(lc, p)
        u = lc // p ** v
        c = A[D]
        A = poly.sub(poly.scale(A, p ** v, m), poly.scale(R, c * pow(u, -1, m), m), m)
        e += v
    return [A[r] if r < len(A) else 0 for r in range(2 * g)], e


def frobenius_structure(curve: HyperellipticCurve,
                        working_precision: Optional[int] = None) -> FrobeniusStructure:
    """Compute F and V = pF⁻¹ on H¹_dR with certified precision.

    Raises:
        PrecisionExhausted: if the reduction consumes every working digit.
        LatticeMismatch: if F or V fails an integrality check, or V mod p
            disagrees with the Cartier operator on sampled holomorphic classes.
    """
    p, g = curve.p, curve.g
    K, digits = _plan(curve, working_precision)
    m = p ** digits
    Q = list(curve.f_coeffs)
    Qp = poly.derivative(Q)
    b = poly.invert_mod(Qp, Q, p, digits)

    Q_xp = [0] * (p * (len(Q) - 1) + 1)
    for idx, c in enumerate(Q):
        Q_xp[p * idx] = c
    E = poly.sub(Q_xp, poly.power(Q, p, m), m)
    E_powers = [[1]]
    for _ in range(1, K):
        E_powers.append(poly.mul(E_powers[-1], E, m))
    # C(−1/2, k) = (−1)^k·C(2k, k) / 4^k, a p-adic integer for odd p
    coeffs = [(-1) ** k * math.comb(2 * k, k) * pow(4, -k, m) % m for k in range(K)]

    columns = []
    exponents = []
    for i in range(2 * g):
        numerators, e = _reduce_column(i, Q, Qp, b, E_powers, coeffs, p, g, digits)
        logger.debug(f"column {i}: divided by p^{e} during reduction")
        columns.append(numerators)
        exponents.append(e)

    N_out = min(min(digits - e for e in exponents), _tail_valuation(K, p, g))
    if N_out < g + 1:
        raise PrecisionExhausted(
            f"only {N_out} digits survive reduction (working precision {digits}); need more than g={g}"
        )
    m_out = p ** N_out
    F = [[0] * (2 * g) for _ in range(2 * g)]
    for c, (numerators, e) in enumerate(zip(columns, exponents)):
        pe = p ** e
        for r, a in enumerate(numerators):
            if a % pe:
                raise LatticeMismatch(f"F(ω_{c}) has a non-integral ω_{r} coordinate")
            F[r][c] = (a // pe) % m_out

    V, N_V = _verschiebung_matrix(F, p, g, N_out)
    m_V = p ** N_V
    pI = linalg.scale(linalg.identity(2 * g), p, m_V)
    fv_ok = (linalg.matmul(F, V, m_V) == pI) and (linalg.matmul(V, F, m_V) == pI)
    if any(V[r][c] % p for r in range(g, 2 * g) for c in range(2 * g)):
        raise LatticeMismatch("V(H¹) is not contained in H⁰(Ω) + pH¹")
    live = _sample_lattice(curve, V, m_V)
    logger.info(
        f"frobenius matrix for {curve!r}: precision {N_out}, V precision {N_V}, "
        f"{K} series terms, loss {digits - N_out}"
    )
    return FrobeniusStructure(
        p=p, g=g, F=F, V=V, precision=N_out, v_precision=N_V,
        working_precision=digits, precision_loss=digits - N_out, series_terms=K,
        fv_ok=fv_ok, lattice_ok=True, lattice_samples=live, denominators=tuple(exponents),
    )


def _verschiebung_matrix(F: Matrix, p: int, g: int, N: int) -> Tuple[Matrix, int]:
    """V = adj(F)/p^{g−1} · (det F / p^g)⁻¹, at precision N − g."""
    m = p ** N
    det = linalg.determinant(F) % m
    if int_valuation(det, p) != g:
        raise LatticeMismatch(f"v_p(det F) = {int_valuation(det, p)}, expected {g}")
    adj = linalg.reduce(linalg.adjugate(F), m)
    shift = p ** (g - 1)
    if any(x % shift for row in adj for x in row):
        raise LatticeMismatch(f"adj(F) is not divisible by p^{g - 1}")
    N_V = N - g
    m_V = p ** N_V
    unit_inv = pow((det // p ** g) % m_V, -1, m_V)
    V = [[(x // shift) * unit_inv % m_V for x in row] for row in adj]
    return V, N_V


def _sample_lattice(curve: HyperellipticCurve, V: Matrix, m_V: int,
                    samples: int = LATTICE_SAMPLES) -> int:
    """Check V on seeded random holomorphic classes against the Cartier operator.

    A holomorphic η in the kernel of the Cartier operator has val V(η) = 1 and
    V(η)/p is not in H⁰(Ω) + pH¹ (F of that lattice lies in pH¹, but F(V(η)/p)
    = η). Those samples only need a vanishing image mod p. Every other sample
    must reduce to C·η̄.

    Returns:
        The number of samples with a nonzero Cartier image.

    Raises:
        LatticeMismatch: if V(η) mod p leaves H⁰(Ω) or disagrees with C·η̄.
    """
    p, g = curve.p, curve.g
    C = cartier_matrix(curve)
    rng = random.Random(repr(curve.signature))
    live = 0
    for _ in range(samples):
        eta = [rng.randrange(m_V) for _ in range(g)]
        image = [sum(V[r][c] * eta[c] for c in range(g)) % p for r in range(2 * g)]
        if any(image[g:]):
            raise LatticeMismatch(f"V({eta}) has a unit non-holomorphic coordinate")
        expected = [sum(C[r][c] * eta[c] for c in range(g)) % p for r in range(g)]
        if image[:g] != expected:
            raise LatticeMismatch(f"V({eta}) mod p disagrees with the Cartier operator")
        if any(expected):
            live += 1
    logger.debug(f"lattice check for {curve!r}: {live}/{samples} samples reduce to nonzero differentials")
    return live


def frobenius_matrix(curve: HyperellipticCurve, working_precision: Optional[int] = None) -> Matrix:
    """Matrix of F in the basis {xⁱdx/y}; its precision is ``curve.frobenius().precision``."""
    return curve.frobenius(working_precision).F


def _apply(curve: HyperellipticCurve, M: Matrix, N_mat: int, eta: CohomologyClass,
           twist: int) -> CohomologyClass:
    N = min(eta.precision, N_mat)
    coords = [frobenius_auto(c.reduce(N), twist) for c in eta.coords]
    out = []
    for row in M:
        acc = coords[0].context.zero()
        for a, c in zip(row, coords):
            if a:
                acc = acc + a * c
        out.append(acc)
    return CohomologyClass(curve, out)


def apply_frobenius(curve: HyperellipticCurve, eta: CohomologyClass) -> CohomologyClass:
    """F(η), σ-semilinear in the coordinates."""
    fs = curve.frobenius()
    return _apply(curve, fs.F, fs.precision, eta, 1)


def verschiebung_apply(curve: HyperellipticCurve, eta: CohomologyClass) -> CohomologyClass:
    """V(η) = p·F⁻¹(η), σ⁻¹-semilinear in the coordinates."""
    fs = curve.frobenius()
    if fs.v_precision < 1:
        raise PrecisionExhausted("no digits of V survive")
    return _apply(curve, fs.V, fs.v_precision, eta, -1)


# ── valuations and reduction mod p ────────────────────────────────────────────

def class_valuation(eta: CohomologyClass) -> int:
    """Largest n with η ∈ pⁿ·H¹_dR.

    Raises:
        AtPrecisionZeroError: if η ≡ 0 at its precision.
    """
    vals = [valuation(c) for c in eta.coords]
    finite = [v for v in vals if not isinstance(v, AtPrecisionZero)]
    if not finite:
        raise AtPrecisionZeroError(eta.precision)
    return min(finite)


def reduce_bar(eta: CohomologyClass) -> DifferentialModP:
    """The differential h(x)dx/y ≡ η/p^val(η) mod p.

    Raises:
        NotInHolomorphicPlusP: if a non-holomorphic coordinate of η/p^val(η)
            is a unit.
    """
    g = eta.curve.g
    n = class_valuation(eta)
    if n >= eta.precision:
        raise PrecisionExhausted(f"valuation {n} leaves no digits at precision {eta.precision}")
    residues = [c.reduce(n + 1) for c in eta.coords]
    scaled = [r.divide_by_p(n) if n else r for r in residues]
    for i in range(g, 2 * g):
        if not scaled[i].is_zero():
            raise NotInHolomorphicPlusP(i)
    return DifferentialModP(tuple(scaled[:g]), g)


# ── mod p oracles ─────────────────────────────────────────────────────────────

def cartier_matrix(curve: HyperellipticCurve) -> Matrix:
    """Cartier operator on {xⁱdx/y : i < g} over 𝔽_p.

    Entry (r, j) is the coefficient of x^{p(r+1)−1} in x^j·f̄^{(p−1)/2}.
    """
    p, g = curve.p, curve.g
    h = poly.power(curve.f_bar(), (p - 1) // 2, p)
    C = [[0] * g for _ in range(g)]
    for j in range(g):
        for r in range(g):
            idx = p * (r + 1) - 1 - j
            C[r][j] = h[idx] % p if 0 <= idx < len(h) else 0
    return C


def is_ordinary(curve: HyperellipticCurve) -> bool:
    """True when the Cartier operator is invertible mod p."""
    return linalg.rank_mod_p(cartier_matrix(curve), curve.p) == curve.g


def zeta_numerator_bruteforce(curve: HyperellipticCurve, jobs: int = 1) -> List[int]:
    """L(T) of the reduced curve from point counts over 𝔽_{p^k}, k ≤ g, low-to-high."""
    from .points import count_points

    p, g = curve.p, curve.g
    sums = [p ** k + 1 - count_points(curve, k, jobs=jobs) for k in range(1, g + 1)]
    c = [1] + [0] * (2 * g)
    for j in range(1, g + 1):
        acc = -sum(sums[i - 1] * c[j - i] for i in range(1, j + 1))
        if acc % j:
            raise DivisionNotExact(f"Newton identity produced a non-integer at degree {j}")
        c[j] = acc // j
    for k in range(g):
        c[2 * g - k] = p ** (g - k) * c[k]
    logger.debug(f"zeta numerator for {curve!r}: {c}")
    return c


def weil_bound_ok(L: Sequence[int], p: int, tol: float = 1e-6) -> bool:
    """Every root of T^{2g}·L(1/T) has absolute value √p."""
    roots = np.roots([float(c) for c in L])
    return bool(np.all(np.abs(np.abs(roots) - math.sqrt(p)) < tol * max(1.0, math.sqrt(p))))
