"""
Dense univariate polynomial helpers.

Polynomials are plain Python lists of integers, low-to-high. Functions that
take a modulus *m* reduce every coefficient into ``[0, m)``; pass ``m=None``
for exact integer arithmetic. Factorisation, gcd and inversion over 𝔽_p go
through :mod:`sympy`.
"""

from typing import List, Optional, Sequence, Tuple

import sympy

from .padic import DivisionNotExact

IntPoly = List[int]

_X = sympy.Symbol("x")


def trim(a: Sequence[int]) -> IntPoly:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(a: Sequence[int]) -> int:
    """Degree of *a* (−1 for the zero polynomial)."""
    return len(trim(a)) - 1


def _mod(a: Sequence[int], m: Optional[int]) -> IntPoly:
    if m is None:
        return trim(a)
    return trim([c % m for c in a])


def add(a: Sequence[int], b: Sequence[int], m: Optional[int] = None) -> IntPoly:
    n = max(len(a), len(b))
    return _mod([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], m)


def sub(a: Sequence[int], b: Sequence[int], m: Optional[int] = None) -> IntPoly:
    n = max(len(a), len(b))
    return _mod([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], m)


def scale(a: Sequence[int], c: int, m: Optional[int] = None) -> IntPoly:
    return _mod([c * x for x in a], m)


def shift(a: Sequence[int], k: int) -> IntPoly:
    """Multiply by x^k."""
    if not a:
        return []
    return [0] * k + list(a)


def mul(a: Sequence[int], b: Sequence[int], m: Optional[int] = None) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, m)


def power(a: Sequence[int], n: int, m: Optional[int] = None) -> IntPoly:
    result: IntPoly = [1]
    base = list(a)
    while n:
        if n & 1:
            result = mul(result, base, m)
        n >>= 1
        if n:
            base = mul(base, base, m)
    return result


def derivative(a: Sequence[int], m: Optional[int] = None) -> IntPoly:
    return _mod([i * a[i] for i in range(1, len(a))], m)


def divmod_monic(a: Sequence[int], b: Sequence[int], m: Optional[int] = None) -> Tuple[IntPoly, IntPoly]:
    """Quotient and remainder of *a* by the monic polynomial *b*."""
    b = trim(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    db = len(b) - 1
    rem = list(a)
    if len(rem) <= db:
        return [], _mod(rem, m)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] if m is None else rem[k] % m
        if c:
            quot[k - db] = c
            for i in range(db + 1):
                rem[k - db + i] -= c * b[i]
        rem[k] = 0
    return _mod(quot, m), _mod(rem[:db], m)


def exact_divide_monic(a: Sequence[int], b: Sequence[int], m: Optional[int] = None) -> IntPoly:
    quot, rem = divmod_monic(a, b, m)
    if rem:
        raise DivisionNotExact(f"remainder {rem} in exact polynomial division")
    return quot


def evaluate(a: Sequence[int], x):
    """Horner evaluation at *x* (an int or a PadicNumber)."""
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose_shift(a: Sequence[int], x0, zero):
    """Coefficients of a(x0 + T) as a list in T, with ring elements from *x0*."""
    out = [zero]
    for c in reversed(a):
        # out ← out·(x0 + T) + c
        nxt = [zero] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i] = nxt[i] + v * x0
            nxt[i + 1] = nxt[i + 1] + v
        nxt[0] = nxt[0] + c
        out = nxt
    return out


# ── 𝔽_p helpers via sympy ───────────────────────────────────────────────────────

def _to_sympy(a: Sequence[int], p: int) -> sympy.Poly:
    coeffs = list(reversed(trim([c % p for c in a]))) or [0]
    return sympy.Poly(coeffs, _X, modulus=p)


def _from_sympy(poly: sympy.Poly, p: int) -> IntPoly:
    return trim([int(c) % p for c in reversed(poly.all_coeffs())])


def monic(a: Sequence[int], p: int) -> IntPoly:
    a = trim([c % p for c in a])
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def factor_mod_p(a: Sequence[int], p: int) -> List[Tuple[IntPoly, int]]:
    """Monic irreducible factors of *a* over 𝔽_p with multiplicities.

    Factors are returned sorted by (degree, coefficients) so output order is
    reproducible.
    """
    if not trim([c % p for c in a]):
        raise ValueError("cannot factor the zero polynomial")
    _, factors = _to_sympy(a, p).factor_list()
    out = [(monic(_from_sympy(fac, p), p), int(mult)) for fac, mult in factors]
    out.sort(key=lambda item: (len(item[0]), item[0]))
    return out


def gcd_mod_p(polys: Sequence[Sequence[int]], p: int) -> IntPoly:
    """Monic gcd over 𝔽_p of a list of polynomials (zero polynomials ignored)."""
    acc: Optional[sympy.Poly] = None
    for a in polys:
        if not trim([c % p for c in a]):
            continue
        poly = _to_sympy(a, p)
        acc = poly if acc is None else acc.gcd(poly)
    if acc is None:
        return []
    return monic(_from_sympy(acc, p), p)


def invert_mod(a: Sequence[int], modulus_poly: Sequence[int], p: int, N: int) -> IntPoly:
    """Inverse of *a* modulo the monic *modulus_poly* over ℤ/p^N.

    Inverts over 𝔽_p with sympy, then lifts by Newton iteration
    b ← b·(2 − a·b), which doubles the number of correct p-adic digits.
    """
    base = _to_sympy(a, p).invert(_to_sympy(modulus_poly, p))
    b = _from_sympy(base, p)
    m = p ** N
    a_red = divmod_monic(a, modulus_poly, m)[1]
    correct = 1
    while correct < N:
        ab = divmod_monic(mul(a_red, b, m), modulus_poly, m)[1]
        two_minus = sub([2], ab, m)
        b = divmod_monic(mul(b, two_minus, m), modulus_poly, m)[1]
        correct *= 2
    return b


def discriminant(a: Sequence[int]) -> int:
    """Exact integer discriminant of *a*."""
    return int(sympy.Poly(list(reversed(trim(a))), _X).discriminant())
