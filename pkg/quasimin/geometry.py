"""Newton polygon geometry on integer exponent pairs."""
from logging import getLogger
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .const import (
    KIND_AXIS_DESCENT,
    KIND_SCALED_POINT_DESCENT,
    RULE_AXIS_CONDITION,
    RULE_CORNER_CONDITION,
)
from .error import PreconditionError
from .poly import BivariatePoly, Exponent, format_rational
from .types import Curve, NormalVector

_LOGGER = getLogger(__name__)

# sign choices for witnesses, in the order they are tried
SIGN_ORDER = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def _cross(o: Exponent, a: Exponent, b: Exponent) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _half_hull(points: Sequence[Exponent]) -> List[Exponent]:
    chain: List[Exponent] = []
    for point in points:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], point) <= 0:
            chain.pop()
        chain.append(point)
    return chain


class Polytope:
    """The convex hull of a finite set of exponent pairs.

    Vertices are listed counterclockwise and are exactly the corner points.
    """

    def __init__(self, vertices: Sequence[Exponent], dimension: int):
        self._vertices = tuple(vertices)
        self._dimension = dimension

    @property
    def vertices(self) -> Tuple[Exponent, ...]:
        return self._vertices

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def corners(self) -> Set[Exponent]:
        return set(self._vertices)

    def __iter__(self):
        yield "vertices", [list(v) for v in self._vertices]
        yield "dimension", self._dimension

    def __str__(self) -> str:
        return f"<Polytope dimension={self._dimension} vertices={list(self._vertices)}>"


def hull(points: Iterable[Exponent]) -> Polytope:
    """Monotone chain hull with collinear points dropped."""
    ordered = sorted(set(points))
    if not ordered:
        raise PreconditionError("Hull of an empty point set")
    if len(ordered) == 1:
        return Polytope(ordered, 0)
    lower = _half_hull(ordered)
    upper = _half_hull(list(reversed(ordered)))
    vertices = lower[:-1] + upper[:-1]
    if len(vertices) == 2:
        return Polytope(vertices, 1)
    return Polytope(vertices, 2)


def pareto(points: Iterable[Exponent]) -> Set[Exponent]:
    """Points not dominated componentwise by another point."""
    best: Set[Exponent] = set()
    lowest_beta: Optional[int] = None
    # scanning by alpha, a point survives when it is strictly lower than all before
    for alpha, beta in sorted(set(points)):
        if lowest_beta is None or beta < lowest_beta:
            best.add((alpha, beta))
            lowest_beta = beta
    return best


def southwest_chain(points: Iterable[Exponent]) -> List[Exponent]:
    """Hull vertices from the leftmost-lowest to the lowest-leftmost point."""
    ordered = sorted(set(points))
    if not ordered:
        raise PreconditionError("Chain of an empty point set")
    lower = _half_hull(ordered)
    end = min(ordered, key=lambda k: (k[1], k[0]))
    return lower[: lower.index(end) + 1]


def omega(p: BivariatePoly) -> Set[Exponent]:
    """Pareto-minimal corner points of the Newton polygon of p.

    Computed as the vertices of the southwestern chain, so a Pareto-minimal
    vertex on the north-eastern side of the hull is never included.
    """
    if p.is_zero:
        raise PreconditionError("omega of the zero polynomial")
    return set(southwest_chain(p.support()))


def edge_normal(left: Exponent, right: Exponent) -> NormalVector:
    """Reduced normal of the edge from ``left`` (smaller alpha) to ``right``."""
    a1 = left[1] - right[1]
    a2 = right[0] - left[0]
    divisor = gcd(a1, a2)
    return NormalVector(a1 // divisor, a2 // divisor)


class FaceRecord:
    """A southwestern face: an edge with its normal, or a single corner point."""

    def __init__(self, points: Iterable[Exponent], normal: Optional[NormalVector]):
        self._points = tuple(sorted(points, key=lambda k: -k[0]))
        self._normal = normal

    @property
    def points(self) -> Tuple[Exponent, ...]:
        """Face points by decreasing alpha."""
        return self._points

    @property
    def normal(self) -> Optional[NormalVector]:
        return self._normal

    @property
    def group(self) -> int:
        return min(len(self._points), 3)

    @property
    def level(self) -> Optional[int]:
        if self._normal is None:
            return None
        return self._normal.level(self._points[0])

    def __iter__(self):
        yield "points", [list(k) for k in self._points]
        yield "normal", None if self._normal is None else [
            self._normal.a1,
            self._normal.a2,
        ]
        yield "group", self.group

    def __str__(self) -> str:
        points = list(self._points)
        return f"<FaceRecord group={self.group} normal={self._normal} points={points}>"


def southwest_edges(p: BivariatePoly) -> List[FaceRecord]:
    """Southwestern edges by increasing A1/A2, then the corner points.

    Edge normals have both components positive.
    """
    if p.is_zero:
        raise PreconditionError("Faces of the zero polynomial")
    support = p.support()
    chain = southwest_chain(support)
    edges: List[FaceRecord] = []
    for left, right in zip(chain, chain[1:]):
        normal = edge_normal(left, right)
        level = normal.level(left)
        on_face = [k for k in support if normal.level(k) == level]
        edges.append(FaceRecord(on_face, normal))
    edges.sort(key=lambda face: face.normal.slope)
    corners = [FaceRecord([k], None) for k in sorted(chain, key=lambda k: -k[0])]
    return edges + corners


def corner_direction(chain: Sequence[Exponent], corner: Exponent) -> NormalVector:
    """A positive direction whose unique minimiser on the support is ``corner``."""
    index = list(chain).index(corner)
    before = (1, 0)
    if index > 0:
        before = tuple(edge_normal(chain[index - 1], corner))
    after = (0, 1)
    if index < len(chain) - 1:
        after = tuple(edge_normal(corner, chain[index + 1]))
    a1, a2 = before[0] + after[0], before[1] + after[1]
    divisor = gcd(a1, a2)
    return NormalVector(a1 // divisor, a2 // divisor)


class CornerCheck:
    """Result of the corner sign test; truthy when every corner passes."""

    def __init__(
        self,
        corner: Optional[Exponent] = None,
        coefficient=None,
        signs: Optional[Tuple[int, int]] = None,
        curve: Optional[Curve] = None,
        kind: Optional[str] = None,
    ):
        self._corner = corner
        self._coefficient = coefficient
        self._signs = signs
        self._curve = curve
        self._kind = kind

    @property
    def holds(self) -> bool:
        return self._corner is None

    @property
    def corner(self) -> Optional[Exponent]:
        return self._corner

    @property
    def coefficient(self):
        return self._coefficient

    @property
    def signs(self) -> Optional[Tuple[int, int]]:
        return self._signs

    @property
    def curve(self) -> Optional[Curve]:
        return self._curve

    @property
    def kind(self) -> Optional[str]:
        return self._kind

    @property
    def rule(self) -> str:
        if self._kind == KIND_AXIS_DESCENT:
            return RULE_AXIS_CONDITION
        return RULE_CORNER_CONDITION

    def __bool__(self) -> bool:
        return self.holds

    def __iter__(self):
        yield "holds", self.holds
        if self._corner is not None:
            yield "corner", list(self._corner)
            yield "coefficient", format_rational(self._coefficient)
            yield "signs", list(self._signs)


def witness_signs(coefficient, exponent: Exponent) -> Tuple[int, int]:
    """The first sign pair making ``coefficient * C1^alpha * C2^beta`` negative."""
    for c1, c2 in SIGN_ORDER:
        if coefficient * c1 ** exponent[0] * c2 ** exponent[1] < 0:
            return c1, c2
    raise PreconditionError(f"Term at {exponent} is nonnegative")


def check_corner_condition(p: BivariatePoly) -> CornerCheck:
    """Every southwestern corner term must be positive with even exponents."""
    if p.is_zero:
        raise PreconditionError("Corner condition of the zero polynomial")
    chain = southwest_chain(p.support())
    for corner in chain:
        coefficient = p.coeff(*corner)
        if coefficient > 0 and corner[0] % 2 == 0 and corner[1] % 2 == 0:
            continue
        c1, c2 = witness_signs(coefficient, corner)
        if corner[1] == 0:
            curve = Curve({1: c1}, {})
            kind = KIND_AXIS_DESCENT
        elif corner[0] == 0:
            curve = Curve({}, {1: c2})
            kind = KIND_AXIS_DESCENT
        else:
            direction = corner_direction(chain, corner)
            curve = Curve.scaled_point(c1, c2, direction)
            kind = KIND_SCALED_POINT_DESCENT
        _LOGGER.debug("Corner %s of %s fails with signs (%d, %d)", corner, p, c1, c2)
        return CornerCheck(corner, coefficient, (c1, c2), curve, kind)
    return CornerCheck()


def newton_model(p: BivariatePoly) -> Dict:
    """The JSON face model of the Newton polygon of p."""
    if p.is_zero:
        raise PreconditionError("Newton polygon of the zero polynomial")
    support = p.support()
    polytope = hull(support)
    chain = southwest_chain(support)
    return {
        "points": [list(k) for k in sorted(support)],
        "hull": dict(polytope),
        "omega": [list(k) for k in chain],
        "pareto": [list(k) for k in sorted(pareto(support))],
        "faces": [dict(face) for face in southwest_edges(p)],
    }
