"""
Fixed-precision arithmetic in unramified p-adic rings.

A :class:`PadicContext` fixes a prime p, a residue degree f and an absolute
precision N; elements of ℤ_q / p^N (q = p^f) are :class:`PadicNumber`
instances holding f integer coefficients in the power basis of a root θ of
the context's defining polynomial.

Precision policy: absolute precision only. Binary operations between elements
of different precision happen at the smaller N; nothing raises precision
silently. Division by p is an explicit, precision-lowering call
(:meth:`PadicNumber.divide_by_p`).

Usage:
    ctx = PadicContext(5, f=2, N=10)
    x = ctx.element([3, 1])
    y = teichmuller(ctx, [2, 0])
    frobenius_auto(x * y) == frobenius_auto(x) * frobenius_auto(y)
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from .conway import get_defining_poly
from .errors import InputError, PadicJetsError

logger = logging.getLogger("padic_jets")

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


# ── errors ────────────────────────────────────────────────────────────────────

class NonPrime(InputError):
    """Raised when a modulus that must be prime is not."""

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class NotIrreducible(InputError):
    """Raised when a defining polynomial is reducible over 𝔽_p."""

    def __init__(self, p: int, poly: Sequence[int]):
        self.p = p
        self.poly = list(poly)
        super().__init__(f"defining polynomial {self.poly} is not irreducible mod {p}")


class ContextMismatch(InputError):
    """Raised when operands live in incompatible p-adic rings."""


class NonUnit(PadicJetsError, ZeroDivisionError):
    """Raised when inverting an element of positive valuation."""

    def __init__(self, value: "PadicNumber"):
        self.value = value
        super().__init__(f"{value!r} is not a unit")


class DivisionNotExact(PadicJetsError, ArithmeticError):
    """Raised when an exact division by p fails. Indicates a bug, not bad input."""


# ── valuation results ─────────────────────────────────────────────────────────

@dataclass(frozen=True)
class AtPrecisionZero:
    """Valuation of an element indistinguishable from 0: only ``≥ bound`` is known."""

    bound: int

    def __str__(self) -> str:
        return f">={self.bound}"


Valuation = Union[int, AtPrecisionZero]


def int_valuation(n: int, p: int) -> Optional[int]:
    """Exact p-adic valuation of a Python integer (``None`` for 0)."""
    if n == 0:
        return None
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ── contexts ──────────────────────────────────────────────────────────────────

@lru_cache(maxsize=256)
def _validated(p: int, f: int, poly: Tuple[int, ...]) -> Tuple[int, ...]:
    if not sympy.isprime(p):
        raise NonPrime(p)
    if len(poly) != f + 1 or poly[-1] != 1:
        raise InputError(f"defining polynomial must be monic of degree {f}, got {list(poly)}")
    if f > 1:
        x = sympy.Symbol("x")
        if not sympy.Poly(list(reversed(poly)), x, modulus=p).is_irreducible:
            raise NotIrreducible(p, poly)
    return poly


class PadicContext:
    """The ring ℤ_q / p^N for q = p^f, with a fixed defining polynomial.

    Contexts are immutable and compare equal when (p, f, N, defining_poly)
    agree, so they can be shared freely between threads and used as keys.

    Args:
        p: The prime.
        f: Residue degree (default 1).
        N: Absolute precision in p-adic digits.
        defining_poly: Monic integer polynomial of degree f, low-to-high.
            Defaults to the shipped Conway polynomial.
    """

    __slots__ = ("p", "f", "N", "defining_poly", "modulus")

    def __init__(self, p: int, f: int = 1, N: int = 10,
                 defining_poly: Optional[Sequence[int]] = None):
        if f < 1:
            raise InputError(f"residue degree must be >= 1, got {f}")
        if N < 1:
            raise InputError(f"precision must be >= 1, got {N}")
        try:
            poly = tuple(get_defining_poly(p, f, defining_poly))
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        _validated(p, f, poly)
        self.p = p
        self.f = f
        self.N = N
        self.defining_poly = poly
        self.modulus = p ** N

    # ── identity ─────────────────────────────────────────────────────

    @property
    def key(self) -> Tuple[int, int, int, Tuple[int, ...]]:
        return (self.p, self.f, self.N, self.defining_poly)

    @property
    def q(self) -> int:
        return self.p ** self.f

    def same_ring(self, other: "PadicContext") -> bool:
        """True if *other* differs from this context at most in precision."""
        return (self.p, self.f, self.defining_poly) == (other.p, other.f, other.defining_poly)

    def __eq__(self, other) -> bool:
        return isinstance(other, PadicContext) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"PadicContext(p={self.p}, f={self.f}, N={self.N})"

    # ── derived contexts ─────────────────────────────────────────────

    def with_precision(self, N: int) -> "PadicContext":
        if N == self.N:
            return self
        return PadicContext(self.p, self.f, N, self.defining_poly)

    def residue(self) -> "PadicContext":
        """The residue field 𝔽_q, as the same ring at precision 1."""
        return self.with_precision(1)

    # ── element construction ─────────────────────────────────────────

    def element(self, coeffs: Union[int, Iterable[int]]) -> "PadicNumber":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        return PadicNumber(self, coeffs)

    def zero(self) -> "PadicNumber":
        return PadicNumber(self, [0])

    def one(self) -> "PadicNumber":
        return PadicNumber(self, [1])

    def generator(self) -> "PadicNumber":
        """The root θ of the defining polynomial (θ = −c₀ when f = 1)."""
        if self.f == 1:
            return PadicNumber(self, [-self.defining_poly[0]])
        return PadicNumber(self, [0, 1])

    def random_element(self, rng: random.Random, unit: bool = False) -> "PadicNumber":
        while True:
            x = PadicNumber(self, [rng.randrange(self.modulus) for _ in range(self.f)])
            if not unit or x.is_unit():
                return x

    def residue_elements(self) -> List["PadicNumber"]:
        """All q elements of the residue field, in lexicographic coefficient order."""
        res = self.residue()
        out = []
        for index in range(self.q):
            digits = []
            for _ in range(self.f):
                index, d = divmod(index, self.p)
                digits.append(d)
            out.append(PadicNumber(res, digits))
        return out

    def sigma_root(self) -> "PadicNumber":
        """σ(θ): the root of the defining polynomial congruent to θ^p mod p."""
        return PadicNumber(self, _sigma_root_coeffs(self.key))


@lru_cache(maxsize=256)
def _sigma_root_coeffs(key) -> Tuple[int, ...]:
    p, f, N, poly = key
    ctx = PadicContext(p, f, N, poly)
    if f == 1:
        return (ctx.generator().coeffs[0],)
    r = ctx.generator() ** p
    deriv = [i * poly[i] for i in range(1, len(poly))]
    steps = max(1, N.bit_length() + 1)
    for _ in range(steps):
        value = _horner(poly, r)
        slope = _horner(deriv, r)
        r = r - value * slope.invert()
    logger.debug(f"sigma root for p={p} f={f} N={N} lifted in {steps} Newton steps")
    return r.coeffs


def _horner(coeffs: Sequence[int], x: "PadicNumber") -> "PadicNumber":
    acc = x.context.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ── elements ──────────────────────────────────────────────────────────────────

class PadicNumber:
    """An element of ℤ_q / p^N.

    Coefficients are reduced into ``[0, p^N)`` on construction. Instances are
    immutable; all operations return new objects.
    """

    __slots__ = ("context", "coeffs")

    def __init__(self, context: PadicContext, coeffs: Iterable[int]):
        m = context.modulus
        values = [int(c) % m for c in coeffs]
        if len(values) > context.f:
            values = _reduce_poly(values, context.defining_poly, m)
        values.extend([0] * (context.f - len(values)))
        self.context = context
        self.coeffs: Tuple[int, ...] = tuple(values)

    # ── coercion ─────────────────────────────────────────────────────

    def _coerce(self, other) -> Tuple[PadicContext, Tuple[int, ...], Tuple[int, ...]]:
        if isinstance(other, PadicNumber):
            if not self.context.same_ring(other.context):
                raise ContextMismatch(f"{self.context!r} vs {other.context!r}")
            if other.context.N < self.context.N:
                ctx = other.context
                return ctx, self.reduce(ctx.N).coeffs, other.coeffs
            if other.context.N > self.context.N:
                return self.context, self.coeffs, other.reduce(self.context.N).coeffs
            return self.context, self.coeffs, other.coeffs
        if isinstance(other, int):
            return self.context, self.coeffs, PadicNumber(self.context, [other]).coeffs
        return NotImplemented  # type: ignore[return-value]

    # ── ring operations ──────────────────────────────────────────────

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        ctx, a, b = coerced
        return PadicNumber(ctx, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PadicNumber(self.context, [-c for c in self.coeffs])

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        ctx, a, b = coerced
        return PadicNumber(ctx, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented
        ctx, a, b = coerced
        if ctx.f == 1:
            return PadicNumber(ctx, [a[0] * b[0]])
        prod = [0] * (2 * ctx.f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return PadicNumber(ctx, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            other = PadicNumber(self.context, [other])
        if not isinstance(other, PadicNumber):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def invert(self) -> "PadicNumber":
        """Multiplicative inverse mod p^N.

        Raises:
            NonUnit: if the element has positive valuation.
        """
        if not self.is_unit():
            raise NonUnit(self)
        ctx = self.context
        if ctx.f == 1:
            return PadicNumber(ctx, [pow(self.coeffs[0], -1, ctx.modulus)])
        res = self.reduce(1)
        y = PadicNumber(ctx, (res ** (ctx.q - 2)).coeffs)
        correct = 1
        while correct < ctx.N:
            y = y * (2 - self * y)
            correct *= 2
        return y

    # ── comparisons ──────────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = PadicNumber(self.context, [other])
        if not isinstance(other, PadicNumber) or not self.context.same_ring(other.context):
            return False
        _, a, b = self._coerce(other)
        return a == b

    def __hash__(self) -> int:
        p = self.context.p
        return hash((p, self.context.f, tuple(c % p for c in self.coeffs)))

    def __repr__(self) -> str:
        ctx = self.context
        if ctx.f == 1:
            return f"PadicNumber({self.coeffs[0]} mod {ctx.p}^{ctx.N})"
        return f"PadicNumber({list(self.coeffs)} mod {ctx.p}^{ctx.N}, f={ctx.f})"

    # ── precision ────────────────────────────────────────────────────

    def reduce(self, N: int) -> "PadicNumber":
        """This element at the lower precision *N*."""
        if N > self.context.N:
            raise InputError(f"cannot raise precision from {self.context.N} to {N}")
        return PadicNumber(self.context.with_precision(N), self.coeffs)

    def residue(self) -> "PadicNumber":
        return self.reduce(1)

    def divide_by_p(self, k: int = 1) -> "PadicNumber":
        """Exact division by p^k, lowering absolute precision by k.

        Raises:
            DivisionNotExact: if some coefficient is not divisible by p^k.
        """
        ctx = self.context
        if k >= ctx.N:
            raise DivisionNotExact(f"division by {ctx.p}^{k} exhausts precision {ctx.N}")
        pk = ctx.p ** k
        if any(c % pk for c in self.coeffs):
            raise DivisionNotExact(f"{self!r} is not divisible by {ctx.p}^{k}")
        return PadicNumber(ctx.with_precision(ctx.N - k), [c // pk for c in self.coeffs])

    # ── queries ──────────────────────────────────────────────────────

    def valuation(self) -> Valuation:
        return valuation(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        p = self.context.p
        return any(c % p for c in self.coeffs)

    def to_int(self) -> int:
        """The representative in [0, p^N) of an element of ℤ_p."""
        if self.context.f != 1:
            raise InputError("to_int requires residue degree 1")
        return self.coeffs[0]

    def __int__(self) -> int:
        return self.to_int()

    def digit_string(self) -> str:
        """Base-p digits, most significant first, fixed width N.

        Coefficients are joined with ``,`` when f > 1.
        """
        ctx = self.context
        parts = []
        for c in self.coeffs:
            digits = []
            for _ in range(ctx.N):
                c, d = divmod(c, ctx.p)
                digits.append(_DIGITS[d])
            parts.append("".join(reversed(digits)))
        return ",".join(parts)


def _reduce_poly(values: List[int], poly: Sequence[int], modulus: int) -> List[int]:
    f = len(poly) - 1
    values = list(values)
    for k in range(len(values) - 1, f - 1, -1):
        c = values[k]
        if c:
            for i in range(f):
                values[k - f + i] -= c * poly[i]
        values[k] = 0
    return [v % modulus for v in values[:f]]


# ── public operations ─────────────────────────────────────────────────────────

def valuation(x: PadicNumber) -> Valuation:
    """Minimum p-adic valuation over the coefficients of *x*.

    Returns :class:`AtPrecisionZero` when x ≡ 0 mod p^N.
    """
    ctx = x.context
    if x.is_zero():
        return AtPrecisionZero(ctx.N)
    return min(int_valuation(c, ctx.p) for c in x.coeffs if c)


def teichmuller(context: PadicContext, t: Union[int, Sequence[int], PadicNumber]) -> PadicNumber:
    """Teichmüller lift of a residue-field element.

    Iterates w ↦ w^q starting from any lift of *t*; each iteration fixes one
    more p-adic digit, so N iterations reach the fixed point mod p^N.
    """
    if isinstance(t, PadicNumber):
        coeffs: Sequence[int] = t.coeffs
    elif isinstance(t, int):
        coeffs = [t]
    else:
        coeffs = t
    p = context.p
    w = PadicNumber(context, [c % p for c in coeffs])
    q = context.q
    for _ in range(context.N):
        w = w ** q
    return w


def frobenius_auto(x: PadicNumber, power: int = 1) -> PadicNumber:
    """Apply σ^power, where σ is the Frobenius automorphism of ℤ_q.

    Negative powers are reduced mod f, so ``power=-1`` gives σ⁻¹ = σ^{f−1}.
    """
    ctx = x.context
    power %= ctx.f
    if power == 0 or ctx.f == 1:
        return x
    root = ctx.sigma_root()
    for _ in range(power):
        acc = ctx.zero()
        for c in reversed(x.coeffs):
            acc = acc * root + c
        x = acc
    return x
