from fractions import Fraction
import random
from unittest import TestCase

from quasimin.error import PreconditionError
from quasimin.oracle import root_count_bruteforce
from quasimin.poly import UniPoly, to_sympy
from quasimin.realroots import (
    AlgebraicNumber,
    gap_points,
    isolate_roots,
    multiplicity_in,
    real_root_count,
    sign_at_root,
    simplest_between,
    squarefree,
    univariate_nonnegative,
)

ROOT_POOL = [Fraction(n, 2) for n in range(-4, 5)]


def linear(root: Fraction) -> UniPoly:
    return UniPoly({1: 1, 0: -root})


def planted(rng: random.Random):
    """A random polynomial with known rational roots and multiplicities."""
    roots = rng.sample(ROOT_POOL, rng.randint(1, 3))
    multiplicities = {}
    g = UniPoly.constant(rng.choice([1, -1, 2, Fraction(-1, 3)]))
    degree = 0
    for root in roots:
        m = rng.randint(1, 3)
        if degree + m > 8:
            break
        multiplicities[root] = m
        degree += m
        g = g * linear(root) ** m
    if degree <= 6 and rng.random() < 0.5:
        g = g * UniPoly.from_list([1, 0, 1])
    return g, multiplicities


class TestRealRoots(TestCase):
    def test_squarefree(self) -> None:
        """Square-free factors should carry their multiplicities."""
        g = linear(Fraction(1)) ** 2 * linear(Fraction(-2)) * 3
        self.assertEqual(
            squarefree(g), [(linear(Fraction(-2)), 1), (linear(Fraction(1)), 2)]
        )

    def test_planted_roots(self) -> None:
        """Planted roots and multiplicities should be recovered exactly."""
        rng = random.Random(1234)
        for _ in range(60):
            g, multiplicities = planted(rng)
            found = isolate_roots(g)
            self.assertEqual(
                {r.value: k for r, k in found}, multiplicities, f"roots of {g}"
            )
            self.assertEqual(
                [r.value for r, _ in found], sorted(multiplicities), "sorted"
            )
            self.assertEqual(real_root_count(g), len(multiplicities))

    def test_planted_nonnegative(self) -> None:
        """Nonnegativity should match the planted construction."""
        rng = random.Random(99)
        for _ in range(60):
            g, multiplicities = planted(rng)
            even = all(m % 2 == 0 for m in multiplicities.values())
            expected = g.leading > 0 and even
            self.assertEqual(univariate_nonnegative(g), expected, f"{g}")

    def test_counts_match_bruteforce(self) -> None:
        """Real root counts should agree with grid sign changes."""
        rng = random.Random(7)
        for _ in range(30):
            g, _ = planted(rng)
            self.assertEqual(real_root_count(g), root_count_bruteforce(g, -3, 3, 1200))

    def test_irrational_roots(self) -> None:
        """Irrational roots should be isolated by disjoint intervals."""
        g = UniPoly.from_list([-2, 0, 1]) ** 2
        roots = isolate_roots(g)
        self.assertEqual(len(roots), 2)
        self.assertEqual([k for _, k in roots], [2, 2])
        low, high = roots[0][0], roots[1][0]
        self.assertFalse(low.is_rational)
        self.assertEqual(low.sign(), -1)
        self.assertEqual(high.sign(), 1)
        self.assertEqual(low.compare(high), -1)
        self.assertEqual(multiplicity_in(g, high), 2)

    def test_agrees_with_sympy_isolation(self) -> None:
        """Roots and multiplicities should match sympy's interval isolation."""
        rng = random.Random(5)
        for _ in range(30):
            g, _ = planted(rng)
            g = g * UniPoly.from_list([-2, 0, 1]) ** rng.randint(1, 2)
            expected = sorted(to_sympy(g).intervals(), key=lambda item: item[0][0])
            found = isolate_roots(g)
            self.assertEqual(len(found), len(expected), str(g))
            for (root, k), ((s, t), m) in zip(found, expected):
                self.assertEqual(k, m, str(g))
                lo = AlgebraicNumber.rational(Fraction(int(s.p), int(s.q)))
                hi = AlgebraicNumber.rational(Fraction(int(t.p), int(t.q)))
                self.assertTrue(root.compare(lo) >= 0 and root.compare(hi) <= 0)

    def test_refine_across_zero(self) -> None:
        """An isolating interval around zero should still refine."""
        golden = AlgebraicNumber(UniPoly.from_list([-1, 1, 1]), -1, 1)
        narrow = golden.refine_to(Fraction(1, 100))
        lo, hi = narrow.interval
        self.assertTrue(Fraction(6, 10) < lo < hi < Fraction(63, 100))
        self.assertEqual(golden.sign(), 1)
        self.assertEqual(multiplicity_in(UniPoly.from_list([-1, 1, 1]) ** 3, golden), 3)

    def test_sign_at_root(self) -> None:
        """Signs at algebraic numbers should be exact."""
        sqrt2 = isolate_roots(UniPoly.from_list([-2, 0, 1]))[1][0]
        self.assertEqual(sign_at_root(UniPoly.from_list([-2, 0, 1]), sqrt2), 0)
        below = UniPoly.from_list([Fraction(-141, 100), 1])
        self.assertEqual(sign_at_root(below, sqrt2), 1)
        above = UniPoly.from_list([Fraction(-142, 100), 1])
        self.assertEqual(sign_at_root(above, sqrt2), -1)
        self.assertEqual(sign_at_root(UniPoly(), sqrt2), 0)

    def test_odd_root(self) -> None:
        """Odd roots should stay rational when they can."""
        cube = AlgebraicNumber.rational(Fraction(-8, 27)).odd_root(3)
        self.assertTrue(cube.is_rational)
        self.assertEqual(cube.value, Fraction(-2, 3))
        irrational = AlgebraicNumber.rational(2).odd_root(3)
        self.assertFalse(irrational.is_rational)
        self.assertEqual(sign_at_root(UniPoly.from_list([-2, 0, 0, 1]), irrational), 0)
        self.assertRaises(PreconditionError, AlgebraicNumber.rational(2).odd_root, 2)

    def test_reciprocal_and_negate(self) -> None:
        """Reciprocal and negation should keep exact roots."""
        sqrt2 = isolate_roots(UniPoly.from_list([-2, 0, 1]))[1][0]
        half = sqrt2.reciprocal()
        self.assertEqual(sign_at_root(UniPoly.from_list([-1, 0, 2]), half), 0)
        self.assertEqual(half.sign(), 1)
        self.assertEqual(sqrt2.negate().sign(), -1)
        self.assertEqual(AlgebraicNumber.rational(4).reciprocal().value, Fraction(1, 4))

    def test_simplest_between(self) -> None:
        """The simplest rational in an interval should have a small denominator."""
        self.assertEqual(simplest_between(Fraction(1), Fraction(2)), Fraction(3, 2))
        self.assertEqual(simplest_between(Fraction(-1), Fraction(1)), 0)
        self.assertEqual(simplest_between(None, Fraction(-1)), -2)
        simplest = simplest_between(Fraction(1, 3), Fraction(1, 2))
        self.assertEqual(simplest, Fraction(2, 5))

    def test_gap_points(self) -> None:
        """Gap points should fall strictly between consecutive roots."""
        g = linear(Fraction(1)) * linear(Fraction(2))
        points = list(gap_points(g))
        self.assertEqual(len(points), 3)
        self.assertTrue(points[0] < 1 < points[1] < 2 < points[2])

    def test_zero_polynomial(self) -> None:
        """The zero polynomial has no isolated roots."""
        self.assertRaises(PreconditionError, isolate_roots, UniPoly())
