"""
Coleman-expansion skeleton of abelian integrals on hyperelliptic curves.

For a holomorphic differential ω, nonzero mod p, and a residue point z̄:

  * n_i is the i-th m ≥ 1 with val(V^m ω) = val(V^{m−1} ω), and n_0 = 0;
  * k_i = ord_z̄ of the reduction of V^{n_i} ω, plus one;
  * the Newton polygon of ∫ω on the disc around z̄ has vertices among
    (p^{n_i}·k_i, −i), so its slopes are 1/(p^{n_{i+1}}k_{i+1} − p^{n_i}k_i).

From these, :func:`integral_valuation` reads off val(∫ω) at a point of
valuation λ and :func:`unramified_test` decides whether λ is compatible with
an unramified point.

Usage:
    engine = ColemanEngine(curve, length=5)
    seq = engine.sequence(curve.basis_class(0), zbar)
    candidate_slopes(seq)
    engine.unramified_test(zbar, Fraction(2, 9))
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .derham import (
    AtPrecisionZeroError,
    CohomologyClass,
    HyperellipticCurve,
    PrecisionExhausted,
    class_valuation,
    reduce_bar,
    verschiebung_apply,
)
from .errors import HypothesisViolated, InputError, PrecisionError
from .padic import PadicContext, PadicNumber, int_valuation, teichmuller
from .points import (
    FINITE,
    INFINITY,
    CurvePointBar,
    UnsupportedDisc,
    leading_coefficient_at,
    lift_point,
    ord_at_point,
)
from . import polynomials as poly
from .series import (
    EXACT_ZERO,
    ExactValuation,
    IsASlope,
    NewtonPolygon,
    PadicSeries,
    newton_polygon,
)

logger = logging.getLogger("padic_jets")

DEFAULT_SEQUENCE_LENGTH = 5
DEFAULT_SERIES_TERMS = 40
MAX_COMBINATIONS = 400


class RangeNotCertified(PrecisionError):
    """Raised when λ lies below the range the computed sequence controls."""

    def __init__(self, lam: Fraction, threshold: Fraction):
        self.lam = lam
        self.threshold = threshold
        super().__init__(f"λ = {lam} is not above the certified threshold {threshold}; lengthen the sequence")


# ── sequences ─────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class NSequence:
    """n_0 = 0 < n_1 < … with the valuation trace val(V^m ω), m = 0..last n."""

    n_list: Tuple[int, ...]
    valuations: Tuple[int, ...]
    lemma_ok: bool
    certified_precision: int

    def lemma_values(self) -> List[int]:
        """m − #{i ≥ 1 : n_i ≤ m}, the predicted valuation of V^m ω."""
        out = []
        for m in range(len(self.valuations)):
            out.append(m - sum(1 for n in self.n_list[1:] if n <= m))
        return out


@dataclass(frozen=True)
class ColemanSequence:
    """The pairs (n_i, k_i) for one differential and one residue point."""

    omega: CohomologyClass
    zbar: CurvePointBar
    n_list: Tuple[int, ...]
    k_list: Tuple[int, ...]
    valuations: Tuple[int, ...]
    certified_precision: int
    literal_k0: bool = False

    @property
    def p(self) -> int:
        return self.omega.curve.p

    @property
    def g(self) -> int:
        return self.omega.curve.g

    def __len__(self) -> int:
        return len(self.n_list)

    def abscissas(self) -> List[int]:
        """p^{n_i}·k_i."""
        return [self.p ** n * k for n, k in zip(self.n_list, self.k_list)]

    def vertices(self) -> List[Tuple[int, int]]:
        return [(x, -i) for i, x in enumerate(self.abscissas())]

    def to_dict(self) -> Dict:
        return {
            "n": list(self.n_list),
            "k": list(self.k_list),
            "valuations": list(self.valuations),
            "slopes": [_slope_string(lam) for lam in candidate_slopes(self)],
            "precision": self.certified_precision,
        }


def _slope_string(lam: Fraction) -> str:
    return f"1/({lam.denominator})" if lam.numerator == 1 else f"{lam.numerator}/{lam.denominator}"


@dataclass(frozen=True)
class SlopeForm:
    """λ = 1/(k·p^b − ℓ·p^a) with a < b and 1 ≤ k, ℓ < p."""

    k: int
    l: int
    b: int
    a: int
    p: int

    def value(self) -> Fraction:
        return Fraction(1, self.k * self.p ** self.b - self.l * self.p ** self.a)


def slope_form(lam: Fraction, p: int) -> Optional[SlopeForm]:
    """The unique representation of *lam* as 1/(k·p^b − ℓ·p^a), or None."""
    lam = Fraction(lam)
    if lam <= 0 or lam.numerator != 1:
        return None
    m = lam.denominator
    a = int_valuation(m, p)
    unit = m // p ** a
    l = (-unit) % p
    b_minus_a = int_valuation(unit + l, p)
    k = (unit + l) // p ** b_minus_a
    if not 1 <= k < p:
        return None
    return SlopeForm(k=k, l=l, b=a + b_minus_a, a=a, p=p)


def candidate_slopes(seq: ColemanSequence) -> List[Fraction]:
    """1/(p^{n_{i+1}}k_{i+1} − p^{n_i}k_i) that lie in (0, 1/(2g−2)), in index order."""
    xs = seq.abscissas()
    bound = Fraction(1, 2 * seq.g - 2)
    out: List[Fraction] = []
    for x0, x1 in zip(xs, xs[1:]):
        if x1 <= x0:
            continue
        lam = Fraction(1, x1 - x0)
        if lam < bound and lam not in out:
            out.append(lam)
    return out


def integral_valuation(seq: ColemanSequence, lam: Union[Fraction, int]) -> Union[ExactValuation, IsASlope]:
    """val ∫ω at a point of valuation λ in the disc, from the Coleman polygon.

    Raises:
        InputError: unless 0 < λ < 1/(2g−2).
        RangeNotCertified: if later, uncomputed vertices could still matter.
    """
    lam = Fraction(lam)
    g, p = seq.g, seq.p
    if not 0 < lam < Fraction(1, 2 * g - 2):
        raise InputError(f"λ = {lam} outside (0, 1/{2 * g - 2})")
    last = len(seq) - 1
    threshold = Fraction(1, p ** seq.n_list[last] * (p - seq.k_list[last]))
    if lam <= threshold:
        raise RangeNotCertified(lam, threshold)
    values = [lam * x - i for i, x in enumerate(seq.abscissas())]
    best = min(values)
    hits = [i for i, v in enumerate(values) if v == best]
    if len(hits) > 1:
        return IsASlope(lam)
    i = hits[0]
    return ExactValuation(best, (seq.abscissas()[i], Fraction(-i)))


# ── verdicts ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`unramified_test`."""

    excluded: bool
    reason: str
    certificate: Tuple[Dict, ...] = ()
    witness: Dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return "Excluded" if self.excluded else "NotExcluded"

    def to_dict(self) -> Dict:
        return {
            "verdict": self.label,
            "reason": self.reason,
            "certificate": list(self.certificate),
            "witness": self.witness,
        }


# ── disc expansions ───────────────────────────────────────────────────────────

@dataclass(frozen=True)
class DiscExpansion:
    """∫_{z₀} ω on the residue disc of z₀, in the parameter T = x − x₀.

    ``series`` holds a_m = numerators[m] / p^shifts[m]; ``local`` is the
    expansion of ω = c(T)·dT and ``y_local`` that of y.
    """

    curve: HyperellipticCurve
    base: CurvePointBar
    x0: PadicNumber
    y0: PadicNumber
    local: Tuple[PadicNumber, ...]
    y_local: Tuple[PadicNumber, ...]
    numerators: Tuple[PadicNumber, ...]
    shifts: Tuple[int, ...]
    series: PadicSeries
    omega_coords: Tuple[PadicNumber, ...]

    @property
    def truncation(self) -> int:
        return len(self.numerators)

    def derivative_matches(self) -> bool:
        """dS/dT · y(T) equals h(x₀ + T) through the truncation order."""
        p = self.curve.p
        ctx = self.x0.context
        M = self.truncation
        deriv = []
        for m in range(1, M):
            v = self.shifts[m]
            deriv.append(self.numerators[m] * (m // p ** v))
        h = _holomorphic_poly(self.curve, ctx, self.omega_coords)
        target = poly.compose_shift(h, self.x0, ctx.zero())
        product = _mul_series(deriv, list(self.y_local), M - 1, ctx)
        for n in range(M - 1):
            want = target[n] if n < len(target) else ctx.zero()
            if product[n] != want:
                return False
        squared = _mul_series(list(self.y_local), list(self.y_local), M, ctx)
        fx = poly.compose_shift(list(self.curve.f_coeffs), self.x0, ctx.zero())
        return all(squared[n] == (fx[n] if n < len(fx) else ctx.zero()) for n in range(M))

    def support_violations(self, seq: ColemanSequence) -> List[Tuple[int, int]]:
        """Pairs (m, i) with val(a_m) ≤ −i but m ∉ p^{n_i}·ℤ_{≥k_i}.

        Raises:
            PrecisionExhausted: if the truncation exceeds p^{n_J} for the last
                computed index J of *seq*.
        """
        p = self.curve.p
        depth = p ** seq.n_list[-1]
        if self.truncation > depth:
            raise PrecisionExhausted(
                f"truncation {self.truncation} exceeds p^{seq.n_list[-1]} = {depth}; "
                f"extend the sequence beyond {len(seq)} terms"
            )
        out = []
        for m, v in enumerate(self.series.valuations):
            if not isinstance(v, Fraction):
                continue
            for i, (n, k) in enumerate(zip(seq.n_list, seq.k_list)):
                if v <= -i and (m % p ** n or m < p ** n * k):
                    out.append((m, i))
        return out

    def newton_polygon(self) -> NewtonPolygon:
        return newton_polygon(self.series)

    def to_dict(self) -> Dict:
        return {
            "base": self.base.to_dict(),
            "truncation": self.truncation,
            "valuations": [str(v) for v in self.series.valuations],
        }


def _mul_series(a: Sequence[PadicNumber], b: Sequence[PadicNumber], M: int,
                ctx: PadicContext) -> List[PadicNumber]:
    out = [ctx.zero() for _ in range(M)]
    for i, x in enumerate(a[:M]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[:M - i]):
            out[i + j] = out[i + j] + x * y
    return out


def _holomorphic_poly(curve: HyperellipticCurve, ctx: PadicContext,
                      coords: Sequence[PadicNumber]) -> List[PadicNumber]:
    out = []
    for c in coords[:curve.g]:
        if c.context.f == ctx.f:
            out.append(PadicNumber(ctx, c.coeffs) if c.context.N >= ctx.N else c)
        else:
            out.append(ctx.element(c.coeffs[0]))
    return out


def _local_expansion(curve: HyperellipticCurve, x0: PadicNumber, y0: PadicNumber,
                     coords: Sequence[PadicNumber], M: int) -> Tuple[List[PadicNumber], List[PadicNumber]]:
    """(c, y) with ω = c(T)dT and y = y(T) near (x₀, y₀)."""
    ctx = x0.context
    fx = poly.compose_shift(list(curve.f_coeffs), x0, ctx.zero())
    fx = fx + [ctx.zero()] * max(0, M - len(fx))
    two_y0_inv = (2 * y0).invert()
    y = [y0]
    for n in range(1, M):
        acc = fx[n]
        for i in range(1, n):
            acc = acc - y[i] * y[n - i]
        y.append(acc * two_y0_inv)
    y0_inv = y0.invert()
    w = [y0_inv]
    for n in range(1, M):
        acc = ctx.zero()
        for i in range(1, n + 1):
            acc = acc + y[i] * w[n - i]
        w.append(-acc * y0_inv)
    h = poly.compose_shift(_holomorphic_poly(curve, ctx, coords), x0, ctx.zero())
    c = _mul_series(h, w, M, ctx)
    return c, y


# ── engine ────────────────────────────────────────────────────────────────────

class ColemanEngine:
    """Per-curve Coleman computations with cached V-iterations.

    Args:
        curve: The curve; p ≥ 2g is required by :meth:`unramified_test`.
        length: Default sequence length L.
        literal_k0: Use k_0 = ord_z̄(ω̄) instead of ord_z̄(ω̄) + 1.
    """

    def __init__(self, curve: HyperellipticCurve, length: int = DEFAULT_SEQUENCE_LENGTH,
                 literal_k0: bool = False):
        if length < 1:
            raise InputError(f"sequence length must be positive, got {length}")
        self.curve = curve
        self.length = length
        self.literal_k0 = literal_k0
        self._iterates: Dict[Tuple, List[CohomologyClass]] = {}
        self._n_sequences: Dict[Tuple, NSequence] = {}

    # ── n-sequences ──────────────────────────────────────────────────

    def _check_omega(self, omega: CohomologyClass) -> None:
        if omega.curve != self.curve:
            raise InputError("differential belongs to a different curve")
        if not omega.is_holomorphic():
            raise InputError("ω must be holomorphic (coordinates ≥ g vanish)")
        if omega.is_zero() or class_valuation(omega) != 0:
            raise InputError("ω must be nonzero mod p")

    def _iterate(self, omega: CohomologyClass, m: int) -> CohomologyClass:
        key = (omega.coords, omega.context.f)
        chain = self._iterates.setdefault(key, [omega])
        while len(chain) <= m:
            chain.append(verschiebung_apply(self.curve, chain[-1]))
        return chain[m]

    def n_sequence(self, omega: CohomologyClass, length: Optional[int] = None) -> NSequence:
        """First *length* terms of n_i with the valuation trace.

        Raises:
            PrecisionExhausted: if V^m ω vanishes at the certified precision
                before *length* terms are found.
        """
        L = length or self.length
        self._check_omega(omega)
        key = (omega.coords, omega.context.f, L)
        cached = self._n_sequences.get(key)
        if cached is not None:
            return cached

        fs = self.curve.frobenius()
        limit = fs.v_precision
        n_list = [0]
        trace = [0]
        lemma_ok = True
        m = 0
        while len(n_list) < L:
            m += 1
            try:
                val = class_valuation(self._iterate(omega, m))
            except AtPrecisionZeroError:
                raise PrecisionExhausted(
                    f"V^{m}(ω) vanishes modulo p^{limit} after {len(n_list)} terms"
                ) from None
            if val >= limit - 1:
                raise PrecisionExhausted(f"val V^{m}(ω) = {val} reaches precision {limit}")
            step = val - trace[-1]
            if step not in (0, 1):
                lemma_ok = False
                logger.warning(f"valuation step {step} at m={m} for {omega!r}")
            trace.append(val)
            if step == 0:
                n_list.append(m)
        seq = NSequence(tuple(n_list), tuple(trace), lemma_ok, limit)
        if seq.lemma_values() != list(trace):
            seq = NSequence(seq.n_list, seq.valuations, False, limit)
        logger.debug(f"n-sequence {seq.n_list} with valuations {seq.valuations}")
        self._n_sequences[key] = seq
        return seq

    def k_sequence(self, omega: CohomologyClass, zbar: CurvePointBar,
                   length: Optional[int] = None) -> List[int]:
        ns = self.n_sequence(omega, length)
        out = []
        for i, n in enumerate(ns.n_list):
            order = ord_at_point(reduce_bar(self._iterate(omega, n)), zbar)
            out.append(order if (i == 0 and self.literal_k0) else order + 1)
        return out

    def sequence(self, omega: CohomologyClass, zbar: CurvePointBar,
                 length: Optional[int] = None) -> ColemanSequence:
        ns = self.n_sequence(omega, length)
        ks = self.k_sequence(omega, zbar, length)
        seq = ColemanSequence(omega, zbar, ns.n_list, tuple(ks), ns.valuations,
                              ns.certified_precision, self.literal_k0)
        logger.info(f"coleman sequence at {zbar}: n={list(seq.n_list)} k={list(seq.k_list)}")
        return seq

    # ── unramified test ──────────────────────────────────────────────

    def _holomorphic_basis(self, zbar: CurvePointBar) -> List[CohomologyClass]:
        ctx = self.curve.context
        if zbar.degree > 1:
            ctx = PadicContext(self.curve.p, zbar.degree, self.curve.precision)
        return [self.curve.basis_class(i, ctx) for i in range(self.curve.g)]

    def unramified_test(self, zbar: CurvePointBar, lam: Union[Fraction, int],
                        length: Optional[int] = None) -> Verdict:
        """Decide whether a point of valuation λ in the disc of z̄ can be unramified.

        Raises:
            HypothesisViolated: if p < 2g.
            RangeNotCertified: if λ is too small for the sequence length.
        """
        curve = self.curve
        g = curve.g
        if not curve.p_at_least_2g:
            raise HypothesisViolated("p >= 2g", f"p={curve.p}, g={g}")
        lam = Fraction(lam)
        if lam <= 0:
            raise InputError(f"λ must be positive, got {lam}")
        if lam.denominator == 1:
            return Verdict(False, "integer valuation", witness={"lambda": str(lam)})

        basis = self._holomorphic_basis(zbar)
        if lam >= Fraction(1, 2 * g - 2):
            index = g - 1 if zbar.kind == INFINITY else 0
            certificate = ({"differential": index, "valuation": str(lam)},)
            return Verdict(True, "non-vanishing differential", certificate)

        results = []
        for i, omega in enumerate(basis):
            seq = self.sequence(omega, zbar, length)
            results.append((i, seq, integral_valuation(seq, lam)))
        certificate = tuple(
            {"differential": i, "valuation": str(r.value), "vertex": [r.vertex[0], str(r.vertex[1])]}
            for i, _, r in results
            if isinstance(r, ExactValuation) and not r.is_integral()
        )
        if certificate:
            return Verdict(True, "non-integral valuation", certificate)

        witness = {
            "lambda": str(lam),
            "sequences": [{"differential": i, "n": list(s.n_list), "k": list(s.k_list),
                           "valuation": "slope" if isinstance(r, IsASlope) else str(r.value)}
                          for i, s, r in results],
        }
        found = self._search_combinations(zbar, lam, basis, length)
        if found is not None:
            return Verdict(True, "non-integral valuation of a combination", (found,), witness)
        combination = self._refute(zbar, lam, results, length)
        if combination is not None:
            witness["combination"] = combination
            if combination["fires"]:
                return Verdict(True, f"combination: {combination['fires']}",
                               (combination,), witness)
        return Verdict(False, "all basis valuations integral", witness=witness)

    def _search_combinations(self, zbar: CurvePointBar, lam: Fraction,
                             basis: List[CohomologyClass], length) -> Optional[Dict]:
        """Scan Σ [t_i]·ω_i over projective t ∈ 𝔽_q^g for a non-integral valuation.

        Skipped when the projective space has more than MAX_COMBINATIONS points.
        """
        ctx = basis[0].context
        q, g = ctx.q, len(basis)
        if (q ** g - 1) // (q - 1) > MAX_COMBINATIONS:
            logger.debug(f"combination scan skipped: {q}^{g} residue vectors")
            return None
        lifts = [teichmuller(ctx, t) for t in ctx.residue_elements()]
        for index in range(1, q ** g):
            digits = []
            rest = index
            for _ in range(g):
                rest, d = divmod(rest, q)
                digits.append(d)
            lead = next(d for d in reversed(digits) if d)
            if lead != 1 or sum(1 for d in digits if d) == 1:
                continue
            eta = basis[0] * lifts[digits[0]]
            for d, omega in zip(digits[1:], basis[1:]):
                eta = eta + omega * lifts[d]
            try:
                res = integral_valuation(self.sequence(eta, zbar, length), lam)
            except (InputError, PrecisionError) as exc:
                logger.debug(f"combination {digits} skipped: {exc}")
                continue
            if isinstance(res, ExactValuation) and not res.is_integral():
                return {"combination": digits, "valuation": str(res.value),
                        "vertex": [res.vertex[0], str(res.vertex[1])]}
        return None

    def _refute(self, zbar: CurvePointBar, lam: Fraction, results, length) -> Optional[Dict]:
        """Try η = p^{j−i}·ω₁ − α·ω₂ for two differentials with integral valuations."""
        exact = [(i, s, r) for i, s, r in results if isinstance(r, ExactValuation)]
        if len(exact) < 2:
            return None
        (a, s1, r1), (b, s2, r2) = exact[0], exact[1]
        i1, i2 = int(-r1.vertex[1]), int(-r2.vertex[1])
        if i1 > i2:
            (a, s1, r1, i1), (b, s2, r2, i2) = (b, s2, r2, i2), (a, s1, r1, i1)
        if s1.k_list[i1] != s2.k_list[i2] or s1.n_list[i1] != s2.n_list[i2]:
            return {"differentials": [a, b], "fires": None, "note": "vertex data differ"}
        lead1 = leading_coefficient_at(reduce_bar(self._iterate(s1.omega, s1.n_list[i1])), zbar)
        lead2 = leading_coefficient_at(reduce_bar(self._iterate(s2.omega, s2.n_list[i2])), zbar)
        ctx = s1.omega.context
        alpha = teichmuller(ctx, lead1 * lead2.invert())
        eta = s1.omega * ctx.p ** (i2 - i1) - s2.omega * alpha
        out: Dict = {"differentials": [a, b], "shift": i2 - i1, "fires": None}
        try:
            val = class_valuation(eta)
            if val:
                eta = CohomologyClass(self.curve, [c.divide_by_p(val) for c in eta.coords])
            seq = self.sequence(eta, zbar, length)
            res = integral_valuation(seq, lam)
        except (InputError, PrecisionError) as exc:
            out["note"] = str(exc)
            return out
        k = s2.k_list[i2]
        order = ord_at_point(reduce_bar(self._iterate(eta, seq.n_list[i2])), zbar) \
            if i2 < len(seq) else None
        out["order"] = order
        if isinstance(res, ExactValuation):
            out["valuation"] = str(res.value)
            if not res.is_integral():
                out["fires"] = "non-integral valuation"
                return out
        if order is not None and order > k - 1:
            out["fires"] = "order exceeds k-1"
        return out

    # ── disc expansion ───────────────────────────────────────────────

    def disc_expansion(self, z0: CurvePointBar, omega: CohomologyClass,
                       terms: int = DEFAULT_SERIES_TERMS) -> DiscExpansion:
        """Expansion of ∫_{z₀} ω to T-precision *terms*.

        Raises:
            UnsupportedDisc: for Weierstrass points and infinity.
            PrecisionExhausted: if some a_m with m < terms is divided by p^N.
        """
        if z0.kind != FINITE:
            raise UnsupportedDisc(z0.kind)
        if not omega.is_holomorphic():
            raise InputError("ω must be holomorphic")
        if terms < 2:
            raise InputError(f"need at least 2 terms, got {terms}")
        p = self.curve.p
        N = min(self.curve.precision, omega.precision)
        if terms > p ** N:
            raise PrecisionExhausted(f"a_{p ** N} = c/{p ** N} has no digits at precision {N}")
        x0, y0 = lift_point(self.curve, z0, N)
        ctx = x0.context
        c, y = _local_expansion(self.curve, x0, y0, omega.coords, terms)
        numerators = [ctx.zero()]
        shifts = [0]
        for m in range(1, terms):
            v = int_valuation(m, p)
            numerators.append(c[m - 1] * pow(m // p ** v, -1, ctx.modulus))
            shifts.append(v)
        series = PadicSeries.from_padic(numerators, shifts)
        series = PadicSeries(p, series.coefficients, (EXACT_ZERO,) + series.valuations[1:])
        return DiscExpansion(self.curve, z0, x0, y0, tuple(c), tuple(y), tuple(numerators),
                             tuple(shifts), series, tuple(omega.coords))


# ── module-level operations ───────────────────────────────────────────────────

def n_sequence(curve: HyperellipticCurve, omega: CohomologyClass,
               length: int = DEFAULT_SEQUENCE_LENGTH) -> NSequence:
    return ColemanEngine(curve, length).n_sequence(omega)


def k_sequence(curve: HyperellipticCurve, omega: CohomologyClass, zbar: CurvePointBar,
               length: int = DEFAULT_SEQUENCE_LENGTH, literal_k0: bool = False) -> List[int]:
    return ColemanEngine(curve, length, literal_k0).k_sequence(omega, zbar)


def unramified_test(curve: HyperellipticCurve, zbar: CurvePointBar, lam: Union[Fraction, int],
                    length: int = DEFAULT_SEQUENCE_LENGTH) -> Verdict:
    return ColemanEngine(curve, length).unramified_test(zbar, lam)


def disc_expansion(curve: HyperellipticCurve, z0: CurvePointBar, omega: CohomologyClass,
                   terms: int = DEFAULT_SERIES_TERMS) -> DiscExpansion:
    return ColemanEngine(curve).disc_expansion(z0, omega, terms)
