"""
Defining polynomials for the unramified extensions shipped with padic-jets.

Conway polynomials for p ≤ 11 and residue degree f ≤ 4, stored low-to-high
as monic integer coefficient lists. Fixing one polynomial per (p, f) keeps
element representations identical across runs and machines.
"""

from typing import Dict, List, Optional, Sequence, Tuple

# ── shipped table ─────────────────────────────────────────────────────────────

CONWAY_POLYNOMIALS: Dict[Tuple[int, int], List[int]] = {
    (2, 1): [1, 1],
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (3, 1): [1, 1],
    (3, 2): [2, 2, 1],
    (3, 3): [1, 2, 0, 1],
    (3, 4): [2, 0, 0, 2, 1],
    (5, 1): [3, 1],
    (5, 2): [2, 4, 1],
    (5, 3): [3, 3, 0, 1],
    (5, 4): [2, 4, 4, 0, 1],
    (7, 1): [4, 1],
    (7, 2): [3, 6, 1],
    (7, 3): [4, 0, 6, 1],
    (7, 4): [3, 4, 5, 0, 1],
    (11, 1): [9, 1],
    (11, 2): [2, 7, 1],
    (11, 3): [9, 2, 0, 1],
    (11, 4): [2, 10, 8, 0, 1],
}

SUPPORTED_PRIMES = (2, 3, 5, 7, 11)
MAX_DEGREE = 4


def get_defining_poly(p: int, f: int, override: Optional[Sequence[int]] = None) -> List[int]:
    """Return the monic defining polynomial (low-to-high) for (p, f).

    An explicit *override* wins over the table. For f = 1 any prime is
    accepted and the linear polynomial ``x`` is used when the table has no
    entry, since the representation of ℤ_p does not depend on it.

    Raises:
        KeyError: if (p, f) with f > 1 is outside the shipped table and no
            override was supplied.
    """
    if override is not None:
        return [int(c) for c in override]
    if (p, f) in CONWAY_POLYNOMIALS:
        return list(CONWAY_POLYNOMIALS[(p, f)])
    if f == 1:
        return [0, 1]
    raise KeyError(f"no shipped defining polynomial for p={p}, f={f}")
