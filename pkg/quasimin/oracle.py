"""Brute-force checks that share no sign logic with the decision pipeline."""
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .error import PreconditionError
from .geometry import SIGN_ORDER, southwest_edges
from .poly import BivariatePoly, Rational, UniPoly
from .realroots import squarefree_part

_LOGGER = getLogger(__name__)

Point = Tuple[Fraction, Fraction]


class SampleReport(NamedTuple):
    """The smallest exact value seen while sampling."""

    minimum: Fraction
    point: Point
    samples: int


def _ray_points(p: BivariatePoly, radius: Fraction, n: int) -> Iterator[Point]:
    normals = [face.normal for face in southwest_edges(p) if face.normal is not None]
    for k in range(n):
        q = radius / 2 ** k
        for a1, a2 in normals + [(1, 1)]:
            for c1, c2 in SIGN_ORDER:
                yield c1 * q ** a1, c2 * q ** a2
        for sign in (1, -1):
            yield sign * q, Fraction(0)
            yield Fraction(0), sign * q


def _grid_points(radius: Fraction, side: int) -> Iterator[Point]:
    step = radius / side
    for i, j in product(range(-side, side + 1), repeat=2):
        if i or j:
            yield i * step, j * step


def sample_minimum(
    p: BivariatePoly, radius: Rational, n: int = 32, side: int = 8
) -> SampleReport:
    """Evaluate p exactly on face rays and a uniform grid inside the radius."""
    radius = Fraction(radius)
    if radius <= 0:
        raise PreconditionError(f"Sampling radius must be positive, got {radius}")
    best: Optional[Tuple[Fraction, Point]] = None
    count = 0
    points: List[Iterator[Point]] = [_grid_points(radius, side)]
    if not p.is_zero:
        points.insert(0, _ray_points(p, radius, n))
    for source in points:
        for point in source:
            value = p.evaluate(*point)
            count += 1
            if best is None or value < best[0]:
                best = (value, point)
    assert best is not None
    return SampleReport(best[0], best[1], count)


def falsify_local_min(
    p: BivariatePoly, radius: Rational, n: int = 32
) -> Optional[Tuple[Point, Fraction]]:
    """A point near the origin where p is negative, if sampling finds one."""
    report = sample_minimum(p, radius, n)
    if report.minimum < 0:
        _LOGGER.debug("Sampling found %s at %s", report.minimum, report.point)
        return report.point, report.minimum
    return None


def root_count_bruteforce(
    g: UniPoly, lo: Rational, hi: Rational, steps: int = 1000
) -> int:
    """Sign changes of the square-free part of g over a uniform grid on [lo, hi].

    Never more than the number of distinct roots in the interval.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise PreconditionError(f"Empty interval [{lo}, {hi}]")
    if g.is_zero:
        raise PreconditionError("Roots of the zero polynomial")
    if g.degree == 0:
        return 0
    f = squarefree_part(g)
    step = (hi - lo) / steps
    count = 0
    last = 0
    for i in range(steps + 1):
        value = f(lo + i * step)
        if value == 0:
            count += 1
            last = 0
            continue
        sign = 1 if value > 0 else -1
        if last and sign != last:
            count += 1
        last = sign
    return count
