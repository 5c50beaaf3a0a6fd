"""Tests for Witt vectors of length 2, p-derivations and first jets."""

import itertools
import random
import unittest

from padic_jets.padic import NonPrime, PadicContext, frobenius_auto
from padic_jets.witt import (
    InsufficientPrecision,
    IntPolynomial,
    NotOnVariety,
    WittPair,
    cp_polynomial,
    delta_std,
    frobenius_lift,
    ghost,
    nabla,
    prolong,
    witt_add,
    witt_mul,
    witt_of,
)


class TestCpPolynomial(unittest.TestCase):
    def test_c2(self):
        self.assertEqual(cp_polynomial(2), IntPolynomial(("X", "Y"), {(1, 1): -1}))

    def test_c3(self):
        expected = IntPolynomial(("X", "Y"), {(2, 1): -1, (1, 2): -1})
        self.assertEqual(cp_polynomial(3), expected)

    def test_defining_identity(self):
        for p in (2, 3, 5, 7):
            C = cp_polynomial(p)
            for x, y in itertools.product(range(-4, 5), repeat=2):
                self.assertEqual(p * C.evaluate([x, y]), x ** p + y ** p - (x + y) ** p)

    def test_rejects_composite(self):
        with self.assertRaises(NonPrime):
            cp_polynomial(4)


class TestGhostMap(unittest.TestCase):
    def test_sum_at_two(self):
        u, v = WittPair(2, 3, 1), WittPair(2, 5, 2)
        s = witt_add(u, v)
        self.assertEqual(ghost(s), (8, 40))
        gu, gv = ghost(u), ghost(v)
        self.assertEqual((gu[0] + gv[0], gu[1] + gv[1]), (8, 40))

    def test_ghost_is_additive_and_multiplicative(self):
        rng = random.Random(11)
        for p in (2, 3, 5):
            for _ in range(30):
                u = WittPair(p, rng.randint(-50, 50), rng.randint(-50, 50))
                v = WittPair(p, rng.randint(-50, 50), rng.randint(-50, 50))
                gu, gv = ghost(u), ghost(v)
                self.assertEqual(ghost(u + v), (gu[0] + gv[0], gu[1] + gv[1]))
                self.assertEqual(ghost(witt_mul(u, v)), (gu[0] * gv[0], gu[1] * gv[1]))


class TestDelta(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(3)

    def test_delta_of_three_at_two(self):
        ctx = PadicContext(2, 1, 8)
        d = delta_std(ctx.element(3))
        self.assertEqual(d, -3)
        self.assertEqual(d.context.N, 7)

    def test_precision_floor(self):
        with self.assertRaises(InsufficientPrecision):
            delta_std(PadicContext(5, 1, 1).element(2))

    def test_witt_of_is_a_ring_homomorphism(self):
        for p, f in ((2, 2), (3, 2), (5, 1)):
            ctx = PadicContext(p, f, 8)
            for _ in range(10):
                x, y = ctx.random_element(self.rng), ctx.random_element(self.rng)
                self.assertEqual(witt_of(x + y), witt_of(x) + witt_of(y))
                self.assertEqual(witt_of(x * y), witt_of(x) * witt_of(y))

    def test_frobenius_lift_matches_automorphism(self):
        ctx = PadicContext(3, 3, 7)
        for _ in range(10):
            x = ctx.random_element(self.rng)
            self.assertEqual(frobenius_lift(x), frobenius_auto(x))

    def test_delta_kills_teichmuller_on_zp(self):
        # δ(ζ) = (ζ − ζ^p)/p = 0 for a Teichmüller ζ in Z_p
        from padic_jets.padic import teichmuller

        ctx = PadicContext(7, 1, 6)
        for t in range(1, 7):
            self.assertEqual(delta_std(teichmuller(ctx, t)), 0)


class TestDeltaAxioms(unittest.TestCase):
    """δ(1) = 0, additivity up to C_p and the product rule, on random pairs."""

    PAIRS = 1000
    N = 12

    def _pairs(self, p, seed):
        ctx = PadicContext(p, 1, self.N)
        rng = random.Random(seed)
        return ctx, [(ctx.random_element(rng), ctx.random_element(rng)) for _ in range(self.PAIRS)]

    def test_axioms(self):
        for p in (2, 3, 5, 7):
            ctx, pairs = self._pairs(p, p)
            self.assertEqual(delta_std(ctx.one()), 0)
            for a, b in pairs:
                da, db = delta_std(a), delta_std(b)
                self.assertEqual(delta_std(a + b), da + db + cp_polynomial(p).evaluate([a, b]))
                self.assertEqual(delta_std(a * b), a ** p * db + b ** p * da + p * da * db)

    def test_frobenius_lift_is_a_ring_homomorphism(self):
        for p in (2, 3, 5, 7):
            ctx, pairs = self._pairs(p, 100 + p)
            self.assertEqual(frobenius_lift(ctx.one()), 1)
            for a, b in pairs:
                self.assertEqual(frobenius_lift(a + b), frobenius_lift(a) + frobenius_lift(b))
                self.assertEqual(frobenius_lift(a * b), frobenius_lift(a) * frobenius_lift(b))

    def test_witt_correspondence(self):
        for p in (2, 3, 5, 7):
            _, pairs = self._pairs(p, 200 + p)
            for a, b in pairs:
                self.assertEqual(witt_of(a + b), witt_of(a) + witt_of(b))
                self.assertEqual(witt_of(a * b), witt_of(a) * witt_of(b))
                self.assertEqual(ghost(witt_of(a)), (a, frobenius_lift(a)))

    def test_ghost_over_the_integers(self):
        for p in (2, 3, 5, 7):
            rng = random.Random(300 + p)
            for _ in range(self.PAIRS):
                u = WittPair(p, rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6))
                v = WittPair(p, rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6))
                gu, gv = ghost(u), ghost(v)
                self.assertEqual(ghost(u + v), (gu[0] + gv[0], gu[1] + gv[1]))
                self.assertEqual(ghost(u * v), (gu[0] * gv[0], gu[1] * gv[1]))


class TestProlongation(unittest.TestCase):
    def test_square_at_two(self):
        f = IntPolynomial.parse("x**2", ["x"])
        expected = IntPolynomial(("x", "x'"), {(2, 1): 2, (0, 2): 2})
        self.assertEqual(prolong(f, 2), expected)

    def test_prolongation_commutes_with_delta(self):
        # δ(f(a)) = (δf)(a, δa) for f with integer coefficients
        rng = random.Random(5)
        f = IntPolynomial.parse("x**3*y - 2*x + y**2 + 1", ["x", "y"])
        for p in (2, 3, 5):
            df = prolong(f, p)
            ctx = PadicContext(p, 1, 9)
            for _ in range(10):
                a = [ctx.random_element(rng) for _ in range(2)]
                lhs = delta_std(f.evaluate(a))
                rhs = df.evaluate([x.reduce(8) for x in a] + [delta_std(x) for x in a])
                self.assertEqual(lhs, rhs)


class TestNabla(unittest.TestCase):
    def test_single_point(self):
        ctx = PadicContext(2, 1, 6)
        f = IntPolynomial.parse("x - 3", ["x"])
        jet = nabla((ctx.element(3),), [f])
        self.assertEqual([c.coeffs for c in jet.base], [(1,)])
        self.assertEqual([c.coeffs for c in jet.derivative], [(1,)])
        self.assertTrue(jet.satisfies([f], 2))

    def test_point_off_variety(self):
        ctx = PadicContext(2, 1, 6)
        f = IntPolynomial.parse("x - 3", ["x"])
        with self.assertRaises(NotOnVariety):
            nabla((ctx.element(5),), [f])

    def test_hyperbola(self):
        ctx = PadicContext(5, 1, 8)
        f = IntPolynomial.parse("x*y - 1", ["x", "y"])
        x = ctx.element(7)
        jet = nabla((x, x.invert()), [f])
        self.assertTrue(jet.satisfies([f], 5))
        self.assertEqual(jet.to_dict()["base"], [[2], [3]])

    def test_random_systems_with_planted_solutions(self):
        rng = random.Random(17)
        for trial in range(50):
            p = rng.choice((2, 3, 5, 7))
            n = rng.randint(1, 3)
            names = ["x", "y", "z"][:n]
            ctx = PadicContext(p, 1, 8)
            solution = [rng.randint(-10 ** 4, 10 ** 4) for _ in range(n)]
            system = []
            for _ in range(rng.randint(1, 2)):
                terms = {}
                for _ in range(rng.randint(1, 4)):
                    exps = [0] * n
                    for _ in range(rng.randint(1, 4)):
                        exps[rng.randrange(n)] += 1
                    terms[tuple(exps)] = rng.randint(-9, 9) or 1
                g = IntPolynomial(names, terms)
                system.append(g - IntPolynomial.constant(g.evaluate(solution), names))
            point = tuple(ctx.element(a) for a in solution)
            with self.subTest(trial=trial, p=p, system=system):
                jet = nabla(point, system)
                self.assertTrue(jet.satisfies(system, p))
                self.assertEqual(list(jet.derivative), [delta_std(a).residue() for a in point])


if __name__ == "__main__":
    unittest.main()
