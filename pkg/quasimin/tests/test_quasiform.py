import json
from fractions import Fraction
from os.path import dirname, join
from unittest import TestCase

from quasimin.const import RULE_MAIN_TERM, RULE_SINGLE_FORM
from quasimin.error import PreconditionError, ZeroPolynomial
from quasimin.parser import parse
from quasimin.poly import BivariatePoly, UniPoly
from quasimin.quasiform import (
    QuasiForm,
    decompose,
    factor_out_root,
    form_from_characteristic,
    form_nonnegative,
    form_weakly_nondegenerate,
    negativity_witness,
    root_factor,
    single_form_case,
    solution_points,
)
from quasimin.realroots import AlgebraicNumber
from quasimin.types import NormalVector

with open(join(dirname(__file__), "polynomials.json")) as f:
    polynomials = json.loads(f.read())

x = BivariatePoly.x()
y = BivariatePoly.y()


class TestDecompose(TestCase):
    def test_three_forms(self) -> None:
        """Forms should come by increasing level with their polynomials in u."""
        dec = decompose(parse(polynomials["three_forms"]["equal"]), NormalVector(1, 2))
        self.assertEqual(dec.levels, [8, 10, 14])
        g1, g2, g3 = (form.characteristic().g for form in dec)
        self.assertEqual(g1, UniPoly.from_list([1, 1]) ** 2)
        self.assertEqual(g2, UniPoly.from_list([3, 3]))
        self.assertEqual(g3, UniPoly.constant(Fraction(1, 100)))
        self.assertEqual(dec[0].main, (4, 2))
        self.assertEqual(dec[0].trailing, (0, 4))

    def test_characteristic_polynomials(self) -> None:
        """The search polynomial has a sixfold root in its main form."""
        dec = decompose(parse(polynomials["search"]), NormalVector(1, 1))
        self.assertEqual(dec.levels, [6, 7, 8])
        one_minus_u = UniPoly.from_list([1, -1])
        self.assertEqual(dec[0].characteristic().g, one_minus_u ** 6)
        self.assertEqual(dec[1].characteristic().g, -(one_minus_u ** 2))
        self.assertEqual(dec[2].characteristic().g, UniPoly.constant(1))

    def test_forms_sum_to_p(self) -> None:
        """The partial sum of every form should give back p."""
        p = parse(polynomials["interior_root"]["double"])
        dec = decompose(p, NormalVector(1, 2))
        self.assertEqual(dec.partial_sum(len(dec)), p)

    def test_characteristic_round_trip(self) -> None:
        """A form should be rebuilt from its main exponent and polynomial in u."""
        form = decompose(parse(polynomials["single_form"]), NormalVector(1, 2))[0]
        char = form.characteristic()
        self.assertEqual(char.g, UniPoly.from_list([2, 3, 2]))
        rebuilt = form_from_characteristic(form.normal, char.main, char.g)
        self.assertEqual(rebuilt.poly, form.poly)

    def test_zero_polynomial(self) -> None:
        """The zero polynomial has no decomposition."""
        self.assertRaises(
            ZeroPolynomial, decompose, BivariatePoly(), NormalVector(1, 1)
        )

    def test_not_quasi_homogeneous(self) -> None:
        """Terms on different levels cannot make one form."""
        self.assertRaises(
            PreconditionError, QuasiForm, NormalVector(1, 1), x ** 2 + y ** 3
        )


class TestFormSigns(TestCase):
    def test_nonnegative(self) -> None:
        """A square of a binomial is nonnegative but degenerate."""
        p = parse(polynomials["three_forms"]["equal"])
        form = decompose(p, NormalVector(1, 2))[0]
        self.assertTrue(form_nonnegative(form))
        self.assertFalse(form_weakly_nondegenerate(form))

    def test_weakly_nondegenerate(self) -> None:
        """A positive definite form vanishes only at the origin."""
        form = QuasiForm(NormalVector(1, 1), x ** 2 + y ** 2)
        self.assertTrue(form_weakly_nondegenerate(form))
        odd = QuasiForm(NormalVector(1, 1), x * y)
        self.assertRaises(PreconditionError, form_weakly_nondegenerate, odd)

    def test_odd_endpoint(self) -> None:
        """An odd endpoint exponent makes a form take both signs."""
        form = QuasiForm(NormalVector(2, 3), x ** 3 + y ** 2)
        self.assertFalse(form_nonnegative(form))

    def test_witness_between_roots(self) -> None:
        """A witness should be found between the roots of the restriction."""
        form = QuasiForm(NormalVector(1, 2), (y - x ** 2) * (y - 2 * x ** 2))
        witness = negativity_witness(form)
        self.assertEqual(witness.point, (1, Fraction(3, 2)))
        self.assertEqual(witness.value, Fraction(-1, 4))
        self.assertEqual(witness.curve.at(2), (2, 6))

    def test_witness_on_sign_pairs(self) -> None:
        """Sign pairs of ones are tried before anything else."""
        witness = negativity_witness(QuasiForm(NormalVector(1, 1), x ** 2 - y ** 2))
        self.assertEqual(witness.point, (1, -2))
        self.assertEqual(witness.value, -3)

    def test_no_witness(self) -> None:
        """A nonnegative form has no witness."""
        form = QuasiForm(NormalVector(1, 1), x ** 2 + y ** 2)
        self.assertRaises(PreconditionError, negativity_witness, form)


class TestRoots(TestCase):
    def test_factor_out_root(self) -> None:
        """Dividing out the double root should leave y^2."""
        p = parse(polynomials["three_forms"]["equal"])
        form = decompose(p, NormalVector(1, 2))[0]
        reduced = factor_out_root(form, AlgebraicNumber.rational(-1), 2)
        self.assertEqual(reduced.poly, y ** 2)
        self.assertEqual(
            root_factor(NormalVector(1, 2), -1, 2) * reduced.poly, form.poly
        )
        self.assertRaises(
            PreconditionError, factor_out_root, form, AlgebraicNumber.rational(-1), 3
        )

    def test_solution_points(self) -> None:
        """Every solution point should lie on the level curve of u0."""
        for a1, a2 in [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]:
            normal = NormalVector(a1, a2)
            for u0 in (Fraction(-1), Fraction(1), Fraction(-8), Fraction(1, 8)):
                for point in solution_points(normal, AlgebraicNumber.rational(u0)):
                    if point.generator is not None:
                        continue
                    value = Fraction(point.y0) ** a1 / Fraction(point.x0) ** a2
                    self.assertEqual(value, u0, f"{point} for {normal}")

    def test_solution_point_generator(self) -> None:
        """An irrational coordinate should be carried by the generator."""
        points = solution_points(NormalVector(1, 2), AlgebraicNumber.rational(2))
        self.assertEqual([point.x0 for point in points], [1, -1])
        generated = solution_points(NormalVector(2, 3), AlgebraicNumber.rational(2))
        self.assertIsNotNone(generated[0].generator)
        self.assertEqual(generated[0].x0, UniPoly.monomial(1))

    def test_zero_root(self) -> None:
        """The level curve of zero is an axis."""
        self.assertRaises(
            PreconditionError,
            solution_points,
            NormalVector(1, 1),
            AlgebraicNumber.rational(0),
        )


class TestSingleForm(TestCase):
    def test_local_min(self) -> None:
        """A nonnegative segment form with no real roots is a minimum."""
        verdict = single_form_case(parse(polynomials["single_form"]))
        self.assertTrue(verdict.is_local_min)
        self.assertEqual(verdict.trace[0].rule, RULE_SINGLE_FORM)

    def test_main_term(self) -> None:
        """An odd main term gives a descent along its sign pair."""
        for text in polynomials["main_term"]:
            verdict = single_form_case(parse(text))
            self.assertTrue(verdict.is_not_local_min, text)
            self.assertEqual(verdict.trace[0].rule, RULE_MAIN_TERM)
            self.assertEqual(verdict.certificate.curve.at(1), (-1, 1))
            self.assertEqual(verdict.certificate.sigma, 3)

    def test_point(self) -> None:
        """A single monomial decides by its own signs."""
        self.assertTrue(single_form_case(parse("x^2*y^4")).is_local_min)
        verdict = single_form_case(parse("x*y"))
        self.assertEqual(verdict.certificate.curve.at(1), (-1, 1))

    def test_two_dimensional(self) -> None:
        """A two-dimensional Newton polygon is out of reach."""
        p = parse("x^2 + x*y^2 + y^2")
        self.assertRaises(PreconditionError, single_form_case, p)
