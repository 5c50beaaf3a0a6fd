"""Tests for fixed-precision arithmetic in unramified p-adic rings."""

import random
import unittest

from padic_jets.errors import InputError
from padic_jets.padic import (
    AtPrecisionZero,
    ContextMismatch,
    DivisionNotExact,
    NonPrime,
    NonUnit,
    NotIrreducible,
    PadicContext,
    frobenius_auto,
    int_valuation,
    teichmuller,
    valuation,
)


class TestContext(unittest.TestCase):
    def test_rejects_composite_modulus(self):
        with self.assertRaises(NonPrime):
            PadicContext(6, 1, 5)

    def test_rejects_reducible_defining_polynomial(self):
        # x^2 - 1 = (x - 1)(x + 1) over F_5
        with self.assertRaises(NotIrreducible):
            PadicContext(5, 2, 4, defining_poly=[-1, 0, 1])

    def test_rejects_unsupported_degree(self):
        with self.assertRaises(InputError):
            PadicContext(13, 2, 4)

    def test_contexts_compare_by_key(self):
        self.assertEqual(PadicContext(5, 2, 6), PadicContext(5, 2, 6))
        self.assertNotEqual(PadicContext(5, 2, 6), PadicContext(5, 2, 7))
        self.assertTrue(PadicContext(5, 2, 6).same_ring(PadicContext(5, 2, 3)))

    def test_residue_elements_cover_field(self):
        ctx = PadicContext(3, 2, 4)
        elems = ctx.residue_elements()
        self.assertEqual(len(elems), 9)
        self.assertEqual(len({e.coeffs for e in elems}), 9)
        self.assertTrue(all(e.context.N == 1 for e in elems))


class TestArithmetic(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20240501)

    def test_invert_two_mod_125(self):
        ctx = PadicContext(5, 1, 3)
        self.assertEqual(ctx.element(2).invert().to_int(), 63)

    def test_valuation_of_75(self):
        ctx = PadicContext(5, 1, 6)
        self.assertEqual(valuation(ctx.element(75)), 2)
        self.assertEqual(int_valuation(75, 5), 2)
        self.assertIsNone(int_valuation(0, 5))

    def test_zero_has_only_a_lower_bound(self):
        ctx = PadicContext(5, 1, 4)
        self.assertEqual(valuation(ctx.element(625)), AtPrecisionZero(4))
        self.assertEqual(str(AtPrecisionZero(4)), ">=4")

    def test_non_unit_inversion_raises(self):
        ctx = PadicContext(7, 1, 5)
        with self.assertRaises(NonUnit):
            ctx.element(14).invert()
        with self.assertRaises(ZeroDivisionError):
            ctx.element(0).invert()

    def test_ring_axioms_in_extension(self):
        ctx = PadicContext(3, 3, 6)
        for _ in range(20):
            a, b, c = (ctx.random_element(self.rng) for _ in range(3))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a - a, 0)

    def test_inverse_in_extension(self):
        ctx = PadicContext(5, 2, 8)
        for _ in range(20):
            u = ctx.random_element(self.rng, unit=True)
            self.assertEqual(u * u.invert(), 1)
            self.assertEqual(u / u, 1)

    def test_mixed_precision_uses_smaller(self):
        hi = PadicContext(5, 1, 8).element(1 + 5 ** 6)
        lo = PadicContext(5, 1, 4).element(1)
        self.assertEqual((hi + lo).context.N, 4)
        self.assertEqual(hi, lo)

    def test_mixing_rings_raises(self):
        with self.assertRaises(ContextMismatch):
            PadicContext(5, 1, 4).element(1) + PadicContext(5, 2, 4).element(1)

    def test_divide_by_p_lowers_precision(self):
        ctx = PadicContext(5, 1, 6)
        x = ctx.element(50).divide_by_p()
        self.assertEqual(x.context.N, 5)
        self.assertEqual(x.to_int(), 10)
        with self.assertRaises(DivisionNotExact):
            ctx.element(51).divide_by_p()

    def test_reduce_cannot_raise_precision(self):
        x = PadicContext(5, 1, 3).element(7)
        with self.assertRaises(InputError):
            x.reduce(4)

    def test_digit_string_is_fixed_width(self):
        x = PadicContext(5, 1, 4).element(7)
        self.assertEqual(x.digit_string(), "0012")


class TestTeichmuller(unittest.TestCase):
    def test_lift_of_two_mod_25(self):
        ctx = PadicContext(5, 1, 2)
        self.assertEqual(teichmuller(ctx, 2).to_int(), 7)

    def test_lift_is_root_of_unity(self):
        for p, f in ((5, 1), (3, 2), (7, 2), (2, 3)):
            ctx = PadicContext(p, f, 8)
            for t in ctx.residue_elements():
                w = teichmuller(ctx, t)
                self.assertEqual(w ** ctx.q, w)
                self.assertEqual(w.residue(), t)

    def test_lift_is_multiplicative(self):
        ctx = PadicContext(3, 2, 6)
        elems = ctx.residue_elements()
        for a in elems[:5]:
            for b in elems[3:8]:
                self.assertEqual(teichmuller(ctx, a) * teichmuller(ctx, b),
                                 teichmuller(ctx, a * b))


class TestFrobeniusAutomorphism(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(7)

    def test_is_a_ring_homomorphism(self):
        ctx = PadicContext(5, 3, 6)
        for _ in range(10):
            x, y = ctx.random_element(self.rng), ctx.random_element(self.rng)
            self.assertEqual(frobenius_auto(x * y), frobenius_auto(x) * frobenius_auto(y))
            self.assertEqual(frobenius_auto(x + y), frobenius_auto(x) + frobenius_auto(y))

    def test_lifts_pth_power_mod_p(self):
        ctx = PadicContext(7, 2, 5)
        for _ in range(10):
            x = ctx.random_element(self.rng)
            self.assertEqual(frobenius_auto(x).residue(), (x ** 7).residue())

    def test_order_f(self):
        ctx = PadicContext(3, 4, 5)
        x = ctx.random_element(self.rng)
        self.assertEqual(frobenius_auto(x, 4), x)
        self.assertEqual(frobenius_auto(frobenius_auto(x), -1), x)

    def test_fixes_teichmuller_up_to_power(self):
        ctx = PadicContext(5, 2, 6)
        t = ctx.residue_elements()[7]
        w = teichmuller(ctx, t)
        self.assertEqual(frobenius_auto(w), w ** 5)

    def test_identity_on_zp(self):
        x = PadicContext(5, 1, 6).element(1234)
        self.assertEqual(frobenius_auto(x), x)


if __name__ == "__main__":
    unittest.main()
