import json
from fractions import Fraction
from os.path import dirname, join
from unittest import TestCase

from quasimin.config import DecisionConfig
from quasimin.const import LEADING_CASE_1, LEADING_CASE_2, LEADING_CASE_3
from quasimin.parser import parse
from quasimin.poly import BivariatePoly, UniPoly
from quasimin.realroots import AlgebraicNumber
from quasimin.substitution import (
    CurveTemplate,
    expand_template,
    leading_pair_candidates,
    search_descent,
)
from quasimin.types import NormalVector

with open(join(dirname(__file__), "polynomials.json")) as f:
    polynomials = json.loads(f.read())

ONE = AlgebraicNumber.rational(1)


def pairs(candidates):
    return [(pair.x0, pair.y0) for pair in candidates.pairs]


class TestLeadingPairs(TestCase):
    def test_first_coordinate_fixed(self) -> None:
        """With A2 even the first coordinate is a sign."""
        u0 = AlgebraicNumber.rational(-1)
        found = leading_pair_candidates(NormalVector(1, 2), u0)
        self.assertEqual(found.case, LEADING_CASE_1)
        self.assertEqual(pairs(found), [(1, -1), (-1, -1)])

    def test_second_coordinate_fixed(self) -> None:
        """With A1 even the second coordinate is a sign."""
        found = leading_pair_candidates(NormalVector(2, 1), AlgebraicNumber.rational(4))
        self.assertEqual(found.case, LEADING_CASE_2)
        self.assertEqual(pairs(found), [(Fraction(1, 4), 1), (Fraction(1, 4), -1)])

    def test_signs_move_together(self) -> None:
        """With both components odd the signs flip together."""
        found = leading_pair_candidates(NormalVector(1, 1), ONE)
        self.assertEqual(found.case, LEADING_CASE_3)
        self.assertEqual(pairs(found), [(1, 1), (-1, -1)])

    def test_rescaling(self) -> None:
        """Any rational point on the level curve rescales to a candidate."""
        normal = NormalVector(1, 2)
        u0 = Fraction(-3)
        found = leading_pair_candidates(normal, AlgebraicNumber.rational(u0))
        candidates = pairs(found)
        for c0 in (Fraction(2), Fraction(-1, 3), Fraction(5, 2)):
            d0 = u0 * c0 ** 2
            k = abs(c0)
            scaled = (c0 / k ** normal.a1, d0 / k ** normal.a2)
            self.assertIn(scaled, candidates)


class TestTemplate(TestCase):
    def setUp(self) -> None:
        self.p = parse(polynomials["search"])
        self.pair = leading_pair_candidates(NormalVector(1, 1), ONE).pairs[0]

    def test_first_order(self) -> None:
        """With nu = 1 the lowest surviving power is the constant t^8 term."""
        tpl = CurveTemplate(NormalVector(1, 1), 1, self.pair, 3, 12)
        order, value = expand_template(self.p, tpl)[0]
        self.assertEqual(order, 8)
        self.assertEqual(value, tpl.ring.one)

    def test_second_order(self) -> None:
        """With nu = 2 the lowest coefficient involves the first unknowns."""
        tpl = CurveTemplate(NormalVector(1, 1), 2, self.pair, 3, 20)
        c1, d1 = tpl.unknowns[:2]
        order, value = expand_template(self.p, tpl)[0]
        self.assertEqual(order, 16)
        self.assertEqual(value, tpl.ring.one - (c1 - d1) ** 2)

    def test_every_leading_pair(self) -> None:
        """Each leading pair starts at t^8; only one can turn negative at nu = 2."""
        normal = NormalVector(1, 1)
        found = leading_pair_candidates(normal, ONE).pairs
        self.assertEqual(len(found), 2)
        for pair in found:
            tpl = CurveTemplate(normal, 1, pair, 3, 12)
            order, value = expand_template(self.p, tpl)[0]
            self.assertEqual(order, 8, str(tpl))
            self.assertEqual(value, tpl.ring.one, str(tpl))
        for pair, sign in zip(found, (-1, 1)):
            tpl = CurveTemplate(normal, 2, pair, 3, 20)
            c1, d1 = tpl.unknowns[:2]
            order, value = expand_template(self.p, tpl)[0]
            self.assertEqual(order, 16, str(tpl))
            self.assertEqual(value, tpl.ring.one + sign * (c1 - d1) ** 2, str(tpl))

    def test_zero_polynomial(self) -> None:
        """The zero polynomial expands to nothing."""
        tpl = CurveTemplate(NormalVector(1, 1), 1, self.pair, 1, 10)
        self.assertEqual(expand_template(BivariatePoly(), tpl), [])

    def test_curve(self) -> None:
        """Values for the unknowns should give a concrete curve."""
        tpl = CurveTemplate(NormalVector(1, 1), 2, self.pair, 1, 20)
        c1, d1 = tpl.unknowns
        curve = tpl.curve({c1: tpl.ring.zero, d1: tpl.ring(2)})
        self.assertEqual(curve.at(1), (1, 3))
        y_terms = {2: UniPoly.constant(1), 3: UniPoly.constant(2)}
        self.assertEqual(dict(curve.y_terms), y_terms)

    def test_bounds(self) -> None:
        """Templates need positive bounds."""
        normal = NormalVector(1, 1)
        self.assertRaises(ValueError, CurveTemplate, normal, 0, self.pair, 1, 10)
        self.assertRaises(ValueError, CurveTemplate, normal, 1, self.pair, 0, 10)


class TestSearch(TestCase):
    def setUp(self) -> None:
        self.p = parse(polynomials["search"])
        self.faces = [(NormalVector(1, 1), [ONE])]

    def test_found(self) -> None:
        """The second multiple of the normal should find a descent."""
        result = search_descent(self.p, self.faces, DecisionConfig(max_nu=2))
        certificate = result.certificate
        self.assertIsNotNone(certificate)
        self.assertEqual(certificate.sigma, 16)
        self.assertEqual(certificate.leading, UniPoly.constant(-3))
        self.assertEqual(result.budget["nu"], 2)
        self.assertEqual(result.budget["case"], LEADING_CASE_3)
        self.assertLess(self.p.evaluate(*certificate.sample_point), 0)

    def test_exhausted(self) -> None:
        """Too small a multiple finds nothing and counts its templates."""
        result = search_descent(self.p, self.faces, DecisionConfig(max_nu=1))
        self.assertIsNone(result.certificate)
        self.assertEqual(result.budget["templates"], 2)
        self.assertEqual(result.budget["max_order"], 16)

    def test_no_faces(self) -> None:
        """Nothing to search gives an empty budget."""
        result = search_descent(self.p, [])
        self.assertEqual(result, (None, {"templates": 0, "nodes": 0}))
