from fractions import Fraction
import json
from unittest import TestCase

from quasimin.config import DecisionConfig, RunConfig
from quasimin.const import KIND_CURVE_DESCENT, RULE_LEVEL_JOINT, RULE_REFERENCES
from quasimin.error import InvalidConfig, InvalidNormal
from quasimin.poly import UniPoly
from quasimin.realroots import AlgebraicNumber
from quasimin.types import Certificate, Curve, NormalVector, TraceEntry, Verdict


class TestNormalVector(TestCase):
    def test_properties(self) -> None:
        """A normal should know its direction and levels."""
        normal = NormalVector(1, 2)
        self.assertEqual(normal.direction, (-2, 1))
        self.assertEqual(normal.level((2, 3)), 8)
        self.assertEqual(normal.slope, Fraction(1, 2))
        self.assertEqual(f"{normal}", "(1, 2)")

    def test_invalid(self) -> None:
        """Components must be positive coprime integers."""
        for a1, a2 in ((0, 1), (2, 4), (-1, 2), (True, 1), (1.0, 2), (None, None)):
            self.assertRaises(InvalidNormal, NormalVector, a1, a2)


class TestCurve(TestCase):
    def test_text(self) -> None:
        """Series should print by increasing power of t."""
        curve = Curve({2: 1, 3: Fraction(-1, 2)}, {1: -1})
        self.assertEqual(curve.x_text, "t^2 - 1/2*t^3")
        self.assertEqual(curve.y_text, "-t")
        self.assertEqual(curve.at(2), (0, -2))

    def test_generator(self) -> None:
        """Coefficients in the generator should print in r."""
        sqrt2 = AlgebraicNumber(UniPoly.from_list([-2, 0, 1]), 1, 2)
        curve = Curve({1: UniPoly.monomial(1)}, {2: 1}, sqrt2)
        self.assertEqual(curve.x_text, "(r)*t")
        self.assertEqual(curve.at(1, 3), (3, 1))
        self.assertEqual(dict(curve)["generator"]["interval"], ["1", "2"])

    def test_positive_exponents(self) -> None:
        """Curves must pass through the origin."""
        self.assertRaises(ValueError, Curve, {0: 1}, {1: 1})


class TestVerdict(TestCase):
    def test_local_min(self) -> None:
        """A minimum serializes without a certificate."""
        self.assertEqual(
            dict(Verdict.local_min()),
            {"status": "LocalMin", "certificate": None, "trace": [], "unresolved": []},
        )

    def test_certificate(self) -> None:
        """Certificates should serialize with exact rationals as strings."""
        curve = Curve({1: 1}, {2: 1})
        certificate = Certificate(
            KIND_CURVE_DESCENT,
            curve,
            16,
            UniPoly.constant(Fraction(-1, 10)),
            Fraction(1, 2),
            (Fraction(1, 2), Fraction(1, 4)),
            Fraction(-1, 655360),
        )
        data = {"level": 2, "g": Fraction(-1, 10)}
        entry = TraceEntry(RULE_LEVEL_JOINT, NormalVector(1, 2), data)
        verdict = Verdict.not_local_min(certificate, [entry])
        data = json.loads(json.dumps(dict(verdict)))
        self.assertEqual(data["certificate"]["x_t"], "t")
        self.assertEqual(data["certificate"]["leading"], "-1/10")
        self.assertEqual(data["certificate"]["sample_point"], ["1/2", "1/4"])
        self.assertEqual(
            data["trace"],
            [
                {
                    "rule": RULE_LEVEL_JOINT,
                    "paper_ref": RULE_REFERENCES[RULE_LEVEL_JOINT],
                    "face": [1, 2],
                    "data": {"level": 2, "g": "-1/10"},
                }
            ],
        )
        self.assertEqual(
            f"{certificate}",
            '<Certificate kind="curve-descent" x(t)="t" y(t)="t^2" sigma=16>',
        )

    def test_trace_reference(self) -> None:
        """Every rule reports the criterion it applies."""
        self.assertEqual(
            TraceEntry(RULE_LEVEL_JOINT).reference, RULE_REFERENCES[RULE_LEVEL_JOINT]
        )
        self.assertEqual(TraceEntry("custom").reference, "")
        entry = TraceEntry("custom", reference="hand check")
        self.assertEqual(dict(entry)["paper_ref"], "hand check")

    def test_with_trace(self) -> None:
        """Earlier trace entries go first."""
        verdict = Verdict.local_min([TraceEntry("b")]).with_trace([TraceEntry("a")])
        self.assertEqual([entry.rule for entry in verdict.trace], ["a", "b"])


class TestConfig(TestCase):
    def test_defaults(self) -> None:
        """Grid values should become fractions."""
        config = DecisionConfig(grid=(0, 1, "1/2"))
        self.assertEqual(config.grid, (0, 1, Fraction(1, 2)))
        self.assertEqual(dict(config)["grid"], ["0", "1", "1/2"])

    def test_invalid(self) -> None:
        """Out of range bounds should be rejected."""
        for field, value in (
            ("depth", 0),
            ("max_nu", -1),
            ("node_limit", True),
            ("max_order", 0),
            ("grid", ()),
        ):
            self.assertRaises(InvalidConfig, DecisionConfig, **{field: value})
        self.assertRaises(InvalidConfig, RunConfig, output="xml")
        self.assertRaises(InvalidConfig, RunConfig, trace=3)
