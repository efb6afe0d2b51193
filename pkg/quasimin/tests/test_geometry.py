import json
from os.path import dirname, join
import random
from unittest import TestCase

from quasimin.const import (
    KIND_AXIS_DESCENT,
    KIND_SCALED_POINT_DESCENT,
    RULE_AXIS_CONDITION,
)
from quasimin.error import PreconditionError
from quasimin.geometry import (
    _cross,
    check_corner_condition,
    corner_direction,
    hull,
    newton_model,
    omega,
    pareto,
    southwest_chain,
    southwest_edges,
)
from quasimin.parser import parse
from quasimin.poly import BivariatePoly
from quasimin.types import NormalVector

with open(join(dirname(__file__), "polynomials.json")) as f:
    polynomials = json.loads(f.read())


def dominated(point, points) -> bool:
    return any(
        other != point and other[0] <= point[0] and other[1] <= point[1]
        for other in points
    )


class TestNewtonPolygon(TestCase):
    def setUp(self) -> None:
        self.p = parse(polynomials["interior_root"]["negative"])

    def test_omega(self) -> None:
        """Omega should be the corners of the southwestern chain."""
        self.assertEqual(omega(self.p), {(0, 10), (2, 6), (6, 4)})

    def test_southwest_edges(self) -> None:
        """Edges should come by increasing slope, followed by the corners."""
        faces = southwest_edges(self.p)
        self.assertEqual(
            [face.normal for face in faces],
            [NormalVector(1, 2), NormalVector(2, 1), None, None, None],
        )
        self.assertEqual(faces[0].points, ((6, 4), (4, 5), (2, 6)))
        self.assertEqual(faces[0].group, 3)
        self.assertEqual(faces[0].level, 14)
        self.assertEqual(faces[1].group, 2)
        self.assertEqual(faces[1].level, 10)
        corners = [face.points for face in faces[2:]]
        self.assertEqual(corners, [((6, 4),), ((2, 6),), ((0, 10),)])

    def test_no_group_three(self) -> None:
        """Faces with only their two endpoints should be group 2."""
        faces = southwest_edges(parse("x^2*y^2 + x^6 + y^6"))
        self.assertEqual([face.group for face in faces[:2]], [2, 2])
        normals = {face.normal for face in faces[:2]}
        self.assertEqual(normals, {NormalVector(1, 2), NormalVector(2, 1)})

    def test_hull_matches_bruteforce(self) -> None:
        """Every point should lie on the inner side of every hull edge."""
        rng = random.Random(2021)
        for _ in range(200):
            points = {(rng.randint(0, 12), rng.randint(0, 12)) for _ in range(20)}
            polytope = hull(points)
            if polytope.dimension < 2:
                continue
            vertices = polytope.vertices
            self.assertTrue(set(vertices) <= points)
            n = len(vertices)
            for i in range(n):
                a, b = vertices[i], vertices[(i + 1) % n]
                self.assertGreater(_cross(vertices[i - 1], a, b), 0)
                for point in points:
                    message = f"{point} outside {vertices}"
                    self.assertGreaterEqual(_cross(a, b, point), 0, message)

    def test_pareto_matches_bruteforce(self) -> None:
        """Pareto points should be exactly the undominated ones."""
        rng = random.Random(7)
        for _ in range(200):
            points = {(rng.randint(0, 9), rng.randint(0, 9)) for _ in range(20)}
            expected = {point for point in points if not dominated(point, points)}
            self.assertEqual(pareto(points), expected)
            self.assertTrue(set(southwest_chain(points)) <= expected)

    def test_degenerate_hulls(self) -> None:
        """Single points and segments should have lower dimension."""
        self.assertEqual(hull([(1, 1)]).dimension, 0)
        self.assertEqual(hull([(0, 2), (1, 1), (2, 0)]).dimension, 1)
        self.assertRaises(PreconditionError, hull, [])
        self.assertRaises(PreconditionError, omega, BivariatePoly())

    def test_corner_direction(self) -> None:
        """The mediant of neighbouring normals should select the corner."""
        chain = [(0, 4), (2, 1), (4, 0)]
        self.assertEqual(corner_direction(chain, (2, 1)), NormalVector(1, 1))
        self.assertEqual(corner_direction(chain, (0, 4)), NormalVector(2, 1))

    def test_newton_model(self) -> None:
        """The face model should be JSON ready."""
        model = newton_model(parse("x^2 + y^2"))
        self.assertEqual(model["points"], [[0, 2], [2, 0]])
        self.assertEqual(model["hull"]["dimension"], 1)
        self.assertEqual(model["omega"], [[0, 2], [2, 0]])
        face = {"points": [[2, 0], [0, 2]], "normal": [1, 1], "group": 2}
        self.assertEqual(model["faces"][0], face)
        json.dumps(model)


class TestCornerCondition(TestCase):
    def test_holds(self) -> None:
        """Positive even corners should pass."""
        for text in polynomials["local_min"]:
            self.assertTrue(check_corner_condition(parse(text)), text)

    def test_axis_corner(self) -> None:
        """An odd corner on an axis should give an axis curve."""
        check = check_corner_condition(parse(polynomials["axis"]["y"]))
        self.assertFalse(check)
        self.assertEqual(check.corner, (0, 5))
        self.assertEqual(check.signs, (1, -1))
        self.assertEqual(check.kind, KIND_AXIS_DESCENT)
        self.assertEqual(check.rule, RULE_AXIS_CONDITION)
        self.assertEqual(check.curve.at(1), (0, -1))

    def test_interior_corner(self) -> None:
        """An interior corner should give a scaled point along its direction."""
        check = check_corner_condition(parse("x^4 - x^2*y + y^4"))
        self.assertEqual(check.corner, (2, 1))
        self.assertEqual(check.signs, (1, 1))
        self.assertEqual(check.kind, KIND_SCALED_POINT_DESCENT)
        self.assertEqual(check.curve.at(2), (2, 2))
        self.assertEqual(dict(check)["coefficient"], "-1")
