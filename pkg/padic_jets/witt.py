"""
Length-2 Witt vectors, p-derivations and first arithmetic jets.

The standard p-derivation on ℤ_q is δ(x) = (σ(x) − x^p)/p. A pair
(x, δx) is a Witt vector of length 2, and x ↦ (x, δx) is a ring
homomorphism into W₁. This makes δ-prolongation of polynomial systems
well defined.

Usage:
    ctx = PadicContext(5, N=8)
    x = ctx.element(7)
    delta_std(x)                       # precision drops to 7
    prolong(IntPolynomial.parse("x*y - 1", ["x", "y"]), 5)
    nabla((x, x.invert()), [IntPolynomial.parse("x*y - 1", ["x", "y"])])
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import sympy

from .errors import HypothesisViolated, PadicJetsError, PrecisionError
from .padic import (
    ContextMismatch,
    DivisionNotExact,
    NonPrime,
    PadicNumber,
    frobenius_auto,
)

logger = logging.getLogger("padic_jets")

Scalar = Union[int, PadicNumber]


class InsufficientPrecision(PrecisionError):
    """Raised when an operation needs more p-adic digits than are available."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(f"need precision >= {needed}, have {available}")


class NotOnVariety(HypothesisViolated):
    """Raised when a point does not satisfy a polynomial system."""

    def __init__(self, index: int, value):
        self.index = index
        self.value = value
        super().__init__("point on variety", f"equation {index} evaluates to {value!r}")


# ── integer polynomials ───────────────────────────────────────────────────────

class IntPolynomial:
    """Sparse multivariate polynomial with exact integer coefficients.

    Args:
        variables: Ordered variable names.
        terms: Mapping from exponent tuples to integer coefficients. Zero
            coefficients are dropped.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Tuple[int, ...], int] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        clean: Dict[Tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent vector {exps} does not match {self.variables}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        self.terms: Dict[Tuple[int, ...], int] = {e: c for e, c in clean.items() if c}

    # ── construction ─────────────────────────────────────────────────

    @classmethod
    def constant(cls, c: int, variables: Sequence[str]) -> "IntPolynomial":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "IntPolynomial":
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} is not one of {tuple(variables)}")
        return cls(variables, {exps: 1})

    @classmethod
    def from_sympy(cls, expr, variables: Sequence[str]) -> "IntPolynomial":
        gens = [sympy.Symbol(v) for v in variables]
        poly = sympy.Poly(sympy.expand(expr), *gens)
        terms = {}
        for monom, coeff in poly.terms():
            if not coeff.is_integer:
                raise ValueError(f"non-integer coefficient {coeff}")
            terms[tuple(monom)] = int(coeff)
        return cls(variables, terms)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "IntPolynomial":
        """Build from an expression string such as ``"x**2*y - 3"``."""
        symbols = {v: sympy.Symbol(v) for v in variables}
        return cls.from_sympy(sympy.sympify(text, locals=symbols), variables)

    def to_sympy(self):
        gens = [sympy.Symbol(v) for v in self.variables]
        expr = sympy.Integer(0)
        for exps, c in self.terms.items():
            term = sympy.Integer(c)
            for g, e in zip(gens, exps):
                term *= g ** e
            expr += term
        return expr

    def extend(self, variables: Sequence[str]) -> "IntPolynomial":
        """Re-embed into a larger ordered variable list."""
        index = [list(variables).index(v) for v in self.variables]
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for i, e in zip(index, exps):
                new[i] = e
            terms[tuple(new)] = c
        return IntPolynomial(variables, terms)

    # ── arithmetic ───────────────────────────────────────────────────

    def _check(self, other: "IntPolynomial") -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.variables)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return IntPolynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.variables)
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self.variables, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: Dict[Tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return IntPolynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        result = IntPolynomial.constant(1, self.variables)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, IntPolynomial)
                and self.variables == other.variables and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_sympy()}, {list(self.variables)})"

    # ── queries ──────────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        """Evaluate at ring elements (ints or PadicNumbers), one per variable."""
        if len(values) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} values, got {len(values)}")
        total: Scalar = 0
        for exps, c in self.terms.items():
            term: Scalar = c
            for v, e in zip(values, exps):
                if e:
                    term = term * (v ** e)
            total = total + term
        return total


@lru_cache(maxsize=32)
def cp_polynomial(p: int) -> IntPolynomial:
    """C_p(X, Y) = (X^p + Y^p − (X + Y)^p)/p as an exact integer polynomial."""
    if not sympy.isprime(p):
        raise NonPrime(p)
    terms = {(j, p - j): -(comb(p, j) // p) for j in range(1, p)}
    return IntPolynomial(("X", "Y"), terms)


# ── Witt vectors of length 2 ──────────────────────────────────────────────────

class WittPair:
    """The Witt vector (a0, a1) ∈ W₁(B) for the prime p.

    Components are PadicNumbers of one ring, or plain integers when working
    symbolically over ℤ.
    """

    __slots__ = ("p", "a0", "a1")

    def __init__(self, p: int, a0: Scalar, a1: Scalar):
        self.p = p
        self.a0 = a0
        self.a1 = a1

    def _check(self, other: "WittPair") -> None:
        if self.p != other.p:
            raise ContextMismatch(f"Witt vectors for p={self.p} and p={other.p}")
        for a, b in ((self.a0, other.a0), (self.a1, other.a1)):
            if isinstance(a, PadicNumber) and isinstance(b, PadicNumber):
                if not a.context.same_ring(b.context):
                    raise ContextMismatch(f"{a.context!r} vs {b.context!r}")

    def __add__(self, other: "WittPair") -> "WittPair":
        return witt_add(self, other)

    def __mul__(self, other: "WittPair") -> "WittPair":
        return witt_mul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, WittPair) and self.p == other.p
                and self.a0 == other.a0 and self.a1 == other.a1)

    def __hash__(self) -> int:
        return hash((self.p, self.a0, self.a1))

    def __repr__(self) -> str:
        return f"WittPair(p={self.p}, a0={self.a0!r}, a1={self.a1!r})"

    def ghost(self) -> Tuple[Scalar, Scalar]:
        return ghost(self)


def _cp_value(p: int, x: Scalar, y: Scalar) -> Scalar:
    return cp_polynomial(p).evaluate([x, y])


def witt_add(u: WittPair, v: WittPair) -> WittPair:
    """(a0 + b0, a1 + b1 + C_p(a0, b0))."""
    u._check(v)
    return WittPair(u.p, u.a0 + v.a0, u.a1 + v.a1 + _cp_value(u.p, u.a0, v.a0))


def witt_mul(u: WittPair, v: WittPair) -> WittPair:
    """(a0·b0, a0^p·b1 + b0^p·a1 + p·a1·b1)."""
    u._check(v)
    p = u.p
    return WittPair(p, u.a0 * v.a0, (u.a0 ** p) * v.a1 + (v.a0 ** p) * u.a1 + p * u.a1 * v.a1)


def ghost(w: WittPair) -> Tuple[Scalar, Scalar]:
    """Ghost components (a0, a0^p + p·a1)."""
    return (w.a0, w.a0 ** w.p + w.p * w.a1)


# ── p-derivations ─────────────────────────────────────────────────────────────

def delta_std(x: PadicNumber) -> PadicNumber:
    """The standard p-derivation δ(x) = (σ(x) − x^p)/p, at precision N − 1."""
    N = x.context.N
    if N < 2:
        raise InsufficientPrecision(2, N)
    return (frobenius_auto(x) - x ** x.context.p).divide_by_p(1)


def frobenius_lift(x: PadicNumber) -> PadicNumber:
    """φ(x) = x^p + p·δ(x), at precision N − 1."""
    N = x.context.N
    if N < 2:
        raise InsufficientPrecision(2, N)
    p = x.context.p
    return x.reduce(N - 1) ** p + p * delta_std(x)


def witt_of(x: PadicNumber) -> WittPair:
    """The ring homomorphism x ↦ (x, δx) into W₁."""
    return WittPair(x.context.p, x, delta_std(x))


# ── prolongation and jets ─────────────────────────────────────────────────────

def prime_name(name: str) -> str:
    return f"{name}'"


def prolong(f: IntPolynomial, p: int) -> IntPolynomial:
    """δf(x, x′) = [f(x^p + p·x′) − f(x)^p]/p in the variables x, x′.

    The division by p is exact for every integer polynomial; a remainder
    signals a bug and raises :class:`DivisionNotExact`.
    """
    if not sympy.isprime(p):
        raise NonPrime(p)
    names = list(f.variables)
    primed = [prime_name(v) for v in names]
    gens = [sympy.Symbol(v) for v in names]
    dgens = [sympy.Symbol(v) for v in primed]
    expr = f.to_sympy()
    lifted = expr.xreplace({g: g ** p + p * d for g, d in zip(gens, dgens)})
    numerator = sympy.Poly(sympy.expand(lifted - expr ** p), *gens, *dgens)
    terms = {}
    for monom, coeff in numerator.terms():
        c = int(coeff)
        if c % p:
            raise DivisionNotExact(f"coefficient {c} of {monom} in prolongation not divisible by {p}")
        terms[tuple(monom)] = c // p
    return IntPolynomial(names + primed, terms)


@dataclass(frozen=True)
class JetPoint:
    """A point of the first jet space mod p: base point and derivative coordinates."""

    base: Tuple[PadicNumber, ...]
    derivative: Tuple[PadicNumber, ...]

    def satisfies(self, system: Iterable[IntPolynomial], p: int) -> bool:
        """True if {f mod p, δf mod p} vanish here for every f in *system*."""
        values = list(self.base) + list(self.derivative)
        for f in system:
            if _residue_nonzero(f.evaluate(list(self.base))):
                return False
            if _residue_nonzero(prolong(f, p).evaluate(values)):
                return False
        return True

    def to_dict(self) -> Dict[str, List[List[int]]]:
        return {
            "base": [list(c.coeffs) for c in self.base],
            "derivative": [list(c.coeffs) for c in self.derivative],
        }


def _residue_nonzero(value: Scalar) -> bool:
    if isinstance(value, PadicNumber):
        return not value.residue().is_zero()
    return value != 0


def nabla(point: Sequence[PadicNumber], system: Sequence[IntPolynomial]) -> JetPoint:
    """∇¹₀: send a point of Y(R) to its jet (a mod p, δa mod p).

    Raises:
        NotOnVariety: if some equation does not vanish at full precision.
        InsufficientPrecision: if the coordinates carry fewer than 2 digits.
    """
    if not point:
        raise ValueError("point must have at least one coordinate")
    p = point[0].context.p
    for i, f in enumerate(system):
        value = f.evaluate(list(point))
        if isinstance(value, PadicNumber) and not value.is_zero():
            raise NotOnVariety(i, value)
        if isinstance(value, int) and value != 0:
            raise NotOnVariety(i, value)
    jet = JetPoint(
        base=tuple(c.residue() for c in point),
        derivative=tuple(delta_std(c).residue() for c in point),
    )
    if not jet.satisfies(system, p):
        raise PadicJetsError(f"jet {jet.to_dict()} fails the prolonged system")
    logger.debug(f"nabla: {len(point)} coordinates, {len(system)} equations, p={p}")
    return jet
