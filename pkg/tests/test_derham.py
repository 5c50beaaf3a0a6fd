"""Tests for hyperelliptic curves, Frobenius and Verschiebung on H¹_dR.

Every Frobenius matrix is checked against oracles computed independently:
point counts over 𝔽_{p^k} (zeta numerator), the Cartier matrix mod p, and
the relation FV = VF = p.
"""

import random
import unittest
from unittest import mock

from padic_jets.catalog import BAD_REDUCTION_EXAMPLE, STORED_CURVES, get_curve
from padic_jets.derham import (
    AtPrecisionZeroError,
    BadReduction,
    HyperellipticCurve,
    NotInHolomorphicPlusP,
    PrecisionExhausted,
    apply_frobenius,
    cartier_matrix,
    class_valuation,
    frobenius_matrix,
    is_ordinary,
    reduce_bar,
    verschiebung_apply,
    weil_bound_ok,
    zeta_numerator_bruteforce,
)
from padic_jets.errors import InputError
from padic_jets import linalg
from padic_jets.padic import DivisionNotExact, NonPrime, PadicContext, int_valuation
from padic_jets.points import count_points

ORACLE_CURVES = tuple(sorted(STORED_CURVES))


class TestCurveValidation(unittest.TestCase):
    def test_rejects_p_two(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(2, [1, 1, 0, 0, 0, 1])

    def test_rejects_composite_p(self):
        with self.assertRaises(NonPrime):
            HyperellipticCurve(9, [1, 1, 0, 0, 0, 1])

    def test_rejects_non_monic(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(5, [1, 1, 0, 0, 0, 2])

    def test_rejects_even_degree(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(5, [1, 1, 0, 0, 0, 0, 1])

    def test_rejects_genus_one(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(5, [1, 1, 0, 1])

    def test_rejects_genus_mismatch(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(5, [1, 1, 0, 0, 0, 1], genus=3)

    def test_rejects_repeated_factor(self):
        with self.assertRaises(InputError):
            HyperellipticCurve(5, [0, 0, 0, 0, 0, 1])

    def test_bad_reduction_names_valuation(self):
        with self.assertRaises(BadReduction) as cm:
            HyperellipticCurve.from_dict(BAD_REDUCTION_EXAMPLE)
        self.assertEqual(cm.exception.disc_valuation, 2)
        self.assertIn("v_7(disc f) = 2", str(cm.exception))
        self.assertEqual(cm.exception.exit_code, 2)

    def test_dict_round_trip(self):
        curve = get_curve("g2p7a")
        self.assertEqual(HyperellipticCurve.from_dict(curve.to_dict()), curve)

    def test_malformed_dict(self):
        with self.assertRaises(InputError):
            HyperellipticCurve.from_dict({"p": 5})


class TestFrobeniusOracles(unittest.TestCase):
    def test_fv_and_lattice(self):
        for name in ORACLE_CURVES:
            with self.subTest(curve=name):
                fs = get_curve(name).frobenius()
                self.assertTrue(fs.fv_ok)
                self.assertTrue(fs.lattice_ok)
                self.assertGreaterEqual(fs.precision, max(4, fs.g + 1))
                self.assertEqual(fs.precision_loss, fs.working_precision - fs.precision)
                self.assertEqual(int_valuation(linalg.determinant(fs.F) % fs.p ** fs.precision, fs.p), fs.g)

    def test_charpoly_matches_zeta(self):
        for name in ORACLE_CURVES:
            with self.subTest(curve=name):
                curve = get_curve(name)
                fs = curve.frobenius()
                L = zeta_numerator_bruteforce(curve)
                m = curve.p ** fs.precision
                self.assertEqual(fs.charpoly(), [c % m for c in reversed(L)])
                self.assertTrue(weil_bound_ok(L, curve.p))

    def test_zeta_first_coefficient_counts_points(self):
        for name in ORACLE_CURVES:
            curve = get_curve(name)
            L = zeta_numerator_bruteforce(curve)
            self.assertEqual(count_points(curve), curve.p + 1 + L[1])
            self.assertEqual(L[0], 1)
            self.assertEqual(L[-1], curve.p ** curve.g)

    def test_inconsistent_counts_raise_division_not_exact(self):
        curve = get_curve("g2p7a")
        p = curve.p

        def counts(curve, k, jobs=1):
            return p + 1 if k == 1 else p ** k

        with mock.patch("padic_jets.points.count_points", side_effect=counts):
            with self.assertRaises(DivisionNotExact):
                zeta_numerator_bruteforce(curve)

    def test_verschiebung_reduces_to_cartier(self):
        for name in ORACLE_CURVES:
            with self.subTest(curve=name):
                curve = get_curve(name)
                g, p = curve.g, curve.p
                V = curve.frobenius().V
                block = [[V[r][c] % p for c in range(g)] for r in range(g)]
                self.assertEqual(block, cartier_matrix(curve))

    def test_ordinary_flag_matches_cartier_rank(self):
        for name in ORACLE_CURVES:
            curve = get_curve(name)
            self.assertEqual(is_ordinary(curve),
                             linalg.rank_mod_p(cartier_matrix(curve), curve.p) == curve.g)

    def test_frobenius_matrix_is_cached(self):
        curve = get_curve("g2p5a")
        self.assertIs(curve.frobenius(), curve.frobenius())
        self.assertEqual(frobenius_matrix(curve), curve.frobenius().F)

    def test_low_working_precision_exhausts(self):
        curve = get_curve("g2p5b")
        with self.assertRaises(PrecisionExhausted):
            curve.frobenius(working_precision=2)


class TestSemilinearMaps(unittest.TestCase):
    def setUp(self):
        self.curve = get_curve("g2p7a")

    def test_v_of_f_is_p(self):
        p = self.curve.p
        ctx = PadicContext(p, 2, self.curve.precision)
        theta = ctx.generator()
        eta = self.curve.class_from([theta, 1, 0, theta * theta], ctx)
        out = verschiebung_apply(self.curve, apply_frobenius(self.curve, eta))
        self.assertEqual(out, eta * p)

    def test_reduce_bar_of_v_matches_cartier_columns(self):
        C = cartier_matrix(self.curve)
        g = self.curve.g
        for i in range(g):
            column = [C[r][i] for r in range(g)]
            if not any(column):
                continue
            omega_bar = reduce_bar(verschiebung_apply(self.curve, self.curve.basis_class(i)))
            self.assertEqual([c.coeffs[0] for c in omega_bar.h], column)

    def test_reduce_bar_rejects_non_holomorphic_unit(self):
        with self.assertRaises(NotInHolomorphicPlusP):
            reduce_bar(self.curve.basis_class(self.curve.g))

    def test_class_valuation(self):
        p = self.curve.p
        eta = self.curve.basis_class(0) * (p * p)
        self.assertEqual(class_valuation(eta), 2)
        omega_bar = reduce_bar(eta)
        self.assertEqual(omega_bar.degree(), 0)

    def test_zero_class(self):
        zero = self.curve.class_from([0] * self.curve.dimension)
        with self.assertRaises(AtPrecisionZeroError):
            class_valuation(zero)

    def test_class_arithmetic(self):
        a, b = self.curve.basis_class(0), self.curve.basis_class(1)
        self.assertEqual((a + b) - b, a)
        self.assertEqual(-(-a), a)
        self.assertTrue((a + b).is_holomorphic())
        self.assertFalse(self.curve.basis_class(3).is_holomorphic())
        with self.assertRaises(InputError):
            self.curve.basis_class(4)

class TestLatticeSanity(unittest.TestCase):
    """V on random holomorphic classes, checked against the Cartier operator."""

    SAMPLES = 100

    def _random_holomorphic(self, curve, rng):
        m = curve.p ** curve.precision
        coords = [rng.randrange(m) for _ in range(curve.g)] + [0] * curve.g
        return coords, curve.class_from(coords)

    def test_reduce_bar_of_v_is_cartier_image(self):
        for name in ORACLE_CURVES:
            curve = get_curve(name)
            g, p = curve.g, curve.p
            C = cartier_matrix(curve)
            rng = random.Random(name)
            for _ in range(self.SAMPLES):
                coords, eta = self._random_holomorphic(curve, rng)
                expected = [sum(C[r][c] * coords[c] for c in range(g)) % p for r in range(g)]
                if not any(expected):
                    continue
                with self.subTest(curve=name, eta=coords[:g]):
                    omega_bar = reduce_bar(verschiebung_apply(curve, eta))
                    self.assertEqual([c.coeffs[0] for c in omega_bar.h], expected)

    def test_cartier_kernel_leaves_holomorphic_plus_p(self):
        # F(V(η)/p) = η is a unit, while F(H⁰(Ω) + pH¹) lies in pH¹
        for name in ORACLE_CURVES:
            curve = get_curve(name)
            g, p = curve.g, curve.p
            C = cartier_matrix(curve)
            rng = random.Random(name)
            for _ in range(self.SAMPLES):
                coords, eta = self._random_holomorphic(curve, rng)
                if not any(c % p for c in coords):
                    continue
                if any(sum(C[r][c] * coords[c] for c in range(g)) % p for r in range(g)):
                    continue
                with self.subTest(curve=name, eta=coords[:g]):
                    image = verschiebung_apply(curve, eta)
                    self.assertEqual(class_valuation(image), 1)
                    with self.assertRaises(NotInHolomorphicPlusP):
                        reduce_bar(image)

    def test_superspecial_curves_have_no_live_samples(self):
        for name in ("g2p5a", "g3p7a"):
            curve = get_curve(name)
            self.assertFalse(any(any(row) for row in cartier_matrix(curve)))
            self.assertEqual(curve.frobenius().lattice_samples, 0)

    def test_ordinary_curves_have_live_samples(self):
        for name in ORACLE_CURVES:
            curve = get_curve(name)
            if is_ordinary(curve):
                self.assertGreaterEqual(curve.frobenius().lattice_samples, 80)

    def test_class_valuation_is_basis_independent(self):
        curve = get_curve("g2p7a")
        n, p = curve.dimension, curve.p
        rng = random.Random(7)
        for _ in range(20):
            basis = [[rng.randrange(p ** 3) for _ in range(n)] for _ in range(n)]
            if linalg.rank_mod_p(basis, p) < n:
                continue
            coords = [rng.randrange(p ** curve.precision) * p ** rng.randrange(3) for _ in range(n)]
            if not any(coords):
                continue
            image = verschiebung_apply(curve, curve.class_from(coords))
            vector = [c.to_int() for c in image.coords]
            self.assertEqual(
                linalg.lattice_valuation(basis, vector, p, image.precision),
                class_valuation(image),
            )



if __name__ == "__main__":
    unittest.main()
