"""Tests for residue-field points, counting, orders of vanishing and lifts."""

import unittest

from padic_jets.catalog import STORED_CURVES, get_curve
from padic_jets.derham import DifferentialModP
from padic_jets.errors import InputError
from padic_jets.padic import PadicContext
from padic_jets import polynomials as poly
from padic_jets.points import (
    FINITE,
    INFINITY,
    WEIERSTRASS,
    CurvePointBar,
    UnsupportedDisc,
    count_points,
    leading_coefficient_at,
    lift_point,
    ord_at_point,
    rational_points,
    residue_field,
)


def _differential(curve, coeffs):
    fld = residue_field(curve.p, 1)
    coeffs = list(coeffs) + [0] * (curve.g - len(coeffs))
    return DifferentialModP(tuple(fld.element(c) for c in coeffs), curve.g)


class TestEnumeration(unittest.TestCase):
    def setUp(self):
        self.curve = get_curve("g2p7a")

    def test_points_lie_on_curve(self):
        for k in (1, 2):
            for pt in rational_points(self.curve, k):
                self.assertTrue(pt.lies_on(self.curve))

    def test_weierstrass_points(self):
        # x(x^2 - 1)(x^2 - 4) splits over F_7
        ws = [pt for pt in rational_points(self.curve) if pt.kind == WEIERSTRASS]
        self.assertEqual(sorted(pt.x.coeffs[0] for pt in ws), [0, 1, 2, 5, 6])

    def test_count_matches_enumeration(self):
        for k in (1, 2):
            self.assertEqual(count_points(self.curve, k), len(rational_points(self.curve, k)))

    def test_parallel_count_matches_serial(self):
        curve = get_curve("g2p5a")
        self.assertEqual(count_points(curve, 3, jobs=2), count_points(curve, 3, jobs=1))

    def test_enumeration_is_deterministic(self):
        first = [pt.to_dict() for pt in rational_points(self.curve)]
        second = [pt.to_dict() for pt in rational_points(self.curve)]
        self.assertEqual(first, second)
        self.assertEqual(first[-1], {"kind": INFINITY})

    def test_finite_point_needs_nonzero_y(self):
        fld = residue_field(7, 1)
        with self.assertRaises(InputError):
            CurvePointBar.finite(fld.element(3), fld.zero())


class TestOrders(unittest.TestCase):
    def setUp(self):
        self.curve = get_curve("g2p7a")
        self.fld = residue_field(7, 1)

    def test_order_at_infinity(self):
        # g = 2: dx/y vanishes to order 2 at infinity, x dx/y to order 0
        inf = CurvePointBar.infinity()
        self.assertEqual(ord_at_point(_differential(self.curve, [1]), inf), 2)
        self.assertEqual(ord_at_point(_differential(self.curve, [0, 1]), inf), 0)

    def test_order_at_weierstrass_point_doubles(self):
        w = CurvePointBar.weierstrass(self.fld.element(0))
        self.assertEqual(ord_at_point(_differential(self.curve, [0, 1]), w), 2)
        self.assertEqual(ord_at_point(_differential(self.curve, [1]), w), 0)

    def test_order_at_finite_point(self):
        pt = next(p for p in rational_points(self.curve) if p.kind == FINITE)
        a = pt.x.coeffs[0]
        self.assertEqual(ord_at_point(_differential(self.curve, [-a, 1]), pt), 1)
        self.assertEqual(ord_at_point(_differential(self.curve, [1]), pt), 0)

    def test_zero_differential_has_no_order(self):
        with self.assertRaises(InputError):
            ord_at_point(_differential(self.curve, [0]), CurvePointBar.infinity())

    def test_leading_coefficient(self):
        pt = next(p for p in rational_points(self.curve) if p.kind == FINITE)
        a = pt.x.coeffs[0]
        omega = _differential(self.curve, [-3 * a, 3])
        self.assertEqual(leading_coefficient_at(omega, pt), 3)
        self.assertEqual(leading_coefficient_at(omega, CurvePointBar.infinity()), 3)

    def test_extension_point_with_base_coefficients(self):
        curve = get_curve("g2p7b")
        pts = [p for p in rational_points(curve, 2) if p.kind == WEIERSTRASS]
        # x^2 - 3 has its roots in F_49 only
        self.assertEqual(len(pts), 5)
        for pt in pts:
            self.assertEqual(ord_at_point(_differential(curve, [1]), pt), 0)

class TestCanonicalDegree(unittest.TestCase):
    """Orders of h(x)dx/y summed over every zero add up to 2g − 2."""

    def _total(self, curve, coeffs, k=1):
        omega = _differential(curve, coeffs)
        return sum(ord_at_point(omega, s) for s in rational_points(curve, k))

    def test_rational_zeros(self):
        for name in sorted(STORED_CURVES):
            curve = get_curve(name)
            g, p = curve.g, curve.p
            xs = sorted({s.x.coeffs[0] for s in rational_points(curve) if s.kind != INFINITY})
            choices = [[]] + [[a] for a in xs[:3]]
            if g >= 3 and xs:
                choices += [[xs[0], xs[0]], xs[:2]]
            for roots in choices:
                coeffs = [1]
                for a in roots:
                    coeffs = poly.mul(coeffs, [-a, 1], p)
                with self.subTest(curve=name, roots=roots):
                    self.assertEqual(self._total(curve, coeffs), 2 * g - 2)

    def test_zeros_over_an_extension(self):
        # f(1) = 3 is not a square mod 7, so the points over x = 1 live over 𝔽_49
        curve = get_curve("g3p7a")
        self.assertFalse(any(s.kind == FINITE and s.x.coeffs[0] == 1 for s in rational_points(curve)))
        self.assertEqual(self._total(curve, [-1, 1], k=2), 2 * curve.g - 2)



class TestLift(unittest.TestCase):
    def test_lift_satisfies_equation(self):
        curve = get_curve("g2p5a")
        for pt in rational_points(curve):
            if pt.kind != FINITE:
                continue
            x0, y0 = lift_point(curve, pt)
            self.assertEqual(y0 * y0, poly.evaluate(list(curve.f_coeffs), x0))
            self.assertEqual(x0 ** curve.p, x0)
            self.assertEqual(y0.residue(), pt.y)

    def test_lift_in_extension(self):
        curve = get_curve("g2p5a")
        pt = next(p for p in rational_points(curve, 2) if p.kind == FINITE and p.x.coeffs[1])
        x0, y0 = lift_point(curve, pt, 6)
        self.assertEqual(x0.context, PadicContext(5, 2, 6))
        self.assertEqual(y0 * y0, poly.evaluate(list(curve.f_coeffs), x0))

    def test_unsupported_discs(self):
        curve = get_curve("g2p7a")
        w = next(p for p in rational_points(curve) if p.kind == WEIERSTRASS)
        with self.assertRaises(UnsupportedDisc):
            lift_point(curve, w)
        with self.assertRaises(UnsupportedDisc):
            lift_point(curve, CurvePointBar.infinity())


if __name__ == "__main__":
    unittest.main()
