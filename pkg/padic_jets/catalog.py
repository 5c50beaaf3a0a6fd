"""
Stored test curves.

Each entry is a curve in the JSON input format plus a label. All stored
curves have good reduction and p ≥ 2g + 1, so their holomorphic lattice is
Frobenius-stable. ``BAD_REDUCTION_EXAMPLE`` is kept separately: y² = x⁵+x+1
has v₇(disc) = 2 and is rejected at p = 7.
"""

from typing import Dict, List

from .derham import DEFAULT_PRECISION, HyperellipticCurve
from .errors import InputError

STORED_CURVES: Dict[str, Dict] = {
    "g2p5a": {
        "p": 5, "genus": 2, "f_coeffs": [1, 1, 0, 0, 0, 1],
        "label": "y^2 = x^5 + x + 1 over Z_5",
    },
    "g2p5b": {
        "p": 5, "genus": 2, "f_coeffs": [1, 2, 0, 0, 0, 1],
        "label": "y^2 = x^5 + 2x + 1 over Z_5",
    },
    "g2p5c": {
        "p": 5, "genus": 2, "f_coeffs": [0, 3, 0, 0, 0, 1],
        "label": "y^2 = x^5 + 3x over Z_5",
    },
    "g2p5d": {
        "p": 5, "genus": 2, "f_coeffs": [2, 4, 0, 0, 0, 1],
        "label": "y^2 = x^5 + 4x + 2 over Z_5",
    },
    "g2p7a": {
        "p": 7, "genus": 2, "f_coeffs": [0, 4, 0, -5, 0, 1],
        "label": "y^2 = x(x^2 - 1)(x^2 - 4) over Z_7",
    },
    "g2p7b": {
        "p": 7, "genus": 2, "f_coeffs": [-6, 3, 8, -4, -2, 1],
        "label": "y^2 = (x - 2)(x^2 - 1)(x^2 - 3) over Z_7",
    },
    "g2p7c": {
        "p": 7, "genus": 2, "f_coeffs": [0, -9, 0, -8, 0, 1],
        "label": "y^2 = x(x^2 - 9)(x^2 + 1) over Z_7",
    },
    "g3p7a": {
        "p": 7, "genus": 3, "f_coeffs": [1, 1, 0, 0, 0, 0, 0, 1],
        "label": "y^2 = x^7 + x + 1 over Z_7",
    },
    "g3p7b": {
        "p": 7, "genus": 3, "f_coeffs": [3, 2, 0, 0, 0, 0, 0, 1],
        "label": "y^2 = x^7 + 2x + 3 over Z_7",
    },
}

BAD_REDUCTION_EXAMPLE: Dict = {
    "p": 7, "genus": 2, "f_coeffs": [1, 1, 0, 0, 0, 1],
    "label": "y^2 = x^5 + x + 1 over Z_7 (7^2 divides the discriminant)",
}


def curve_names() -> List[str]:
    return sorted(STORED_CURVES)


def get_curve(name: str, precision: int = DEFAULT_PRECISION) -> HyperellipticCurve:
    """Build the stored curve *name* at *precision*.

    Raises:
        InputError: for an unknown name.
    """
    entry = STORED_CURVES.get(name)
    if entry is None:
        raise InputError(f"unknown curve {name!r}; known curves: {', '.join(curve_names())}")
    return HyperellipticCurve(entry["p"], entry["f_coeffs"], precision, entry["genus"])
