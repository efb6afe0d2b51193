"""Exact real roots of univariate rational polynomials."""
from fractions import Fraction
from functools import cmp_to_key
from logging import getLogger
from math import ceil, floor
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import Rational as SympyRational, integer_nthroot
from sympy.polys.polyerrors import RefinementFailed

from .error import PreconditionError
from .poly import Rational, UniPoly, format_rational, from_sympy, poly_gcd, to_sympy

_LOGGER = getLogger(__name__)

# refinement guard; isolating intervals of distinct roots separate long before this
_MAX_REFINEMENTS = 100000


def _sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def _qq(value: Rational) -> SympyRational:
    value = Fraction(value)
    return SympyRational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def squarefree(g: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Decompose g into monic square-free, pairwise coprime factors.

    Returns a list of ``(factor, multiplicity)`` such that g equals its leading
    coefficient times the product of ``factor ** multiplicity``.
    """
    if g.is_zero:
        raise PreconditionError("Square-free decomposition of the zero polynomial")
    _, factors = to_sympy(g).sqf_list()
    return [(from_sympy(f).monic(), k) for f, k in factors]


def squarefree_part(g: UniPoly) -> UniPoly:
    if g.degree <= 0:
        return g
    return from_sympy(to_sympy(g).sqf_part()).monic()


def count_roots(f: UniPoly, lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of f in the closed interval [lo, hi]."""
    if f.degree <= 0:
        return 0
    return int(to_sympy(squarefree_part(f)).count_roots(_qq(lo), _qq(hi)))


def real_root_count(f: UniPoly) -> int:
    """Number of distinct real roots of f."""
    if f.degree <= 0:
        return 0
    return int(to_sympy(squarefree_part(f)).count_roots())


class AlgebraicNumber:
    """A real algebraic number.

    Given by a square-free defining polynomial with exactly one root in the open
    interval (lo, hi); the polynomial does not vanish at either endpoint. Rational
    numbers use the degenerate interval lo == hi.
    """

    __slots__ = ("_defining", "_lo", "_hi")

    def __init__(self, defining: UniPoly, lo: Rational, hi: Rational):
        self._defining = defining.primitive()
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)

    @classmethod
    def rational(cls, value: Rational) -> "AlgebraicNumber":
        value = Fraction(value)
        return cls(UniPoly({1: 1, 0: -value}), value, value)

    @property
    def defining(self) -> UniPoly:
        return self._defining

    @property
    def interval(self) -> Tuple[Fraction, Fraction]:
        return self._lo, self._hi

    @property
    def is_rational(self) -> bool:
        return self._lo == self._hi

    @property
    def value(self) -> Fraction:
        if not self.is_rational:
            raise PreconditionError(f"{self} is not rational")
        return self._lo

    @property
    def midpoint(self) -> Fraction:
        return (self._lo + self._hi) / 2

    def refine(self) -> "AlgebraicNumber":
        """Shrink the isolating interval below half its width."""
        if self.is_rational:
            return self
        return self.refine_to((self._hi - self._lo) / 2)

    def refine_to(self, width: Rational) -> "AlgebraicNumber":
        if self.is_rational or self._hi - self._lo < width:
            return self
        lo, hi = _refine_interval(self._defining, self._lo, self._hi, width)
        if lo == hi:
            return AlgebraicNumber.rational(lo)
        return AlgebraicNumber(self._defining, lo, hi)

    def _away_from_zero(self) -> "AlgebraicNumber":
        current = self
        for _ in range(_MAX_REFINEMENTS):
            if current.is_rational or current._lo > 0 or current._hi < 0:
                return current
            if not current._defining(0):
                return AlgebraicNumber.rational(0)
            current = current.refine()
        raise RuntimeError(f"Could not separate {self} from zero")

    def sign(self) -> int:
        current = self._away_from_zero()
        if current.is_rational:
            return _sign(current._lo)
        return 1 if current._lo > 0 else -1

    def negate(self) -> "AlgebraicNumber":
        if self.is_rational:
            return AlgebraicNumber.rational(-self._lo)
        defining = self._defining.compose_power(1, -1)
        return AlgebraicNumber(defining, -self._hi, -self._lo)

    def reciprocal(self) -> "AlgebraicNumber":
        current = self._away_from_zero()
        if current.is_rational:
            if not current._lo:
                raise ZeroDivisionError("Reciprocal of zero")
            return AlgebraicNumber.rational(1 / current._lo)
        return AlgebraicNumber(
            current._defining.reversed(), 1 / current._hi, 1 / current._lo
        )

    def odd_root(self, n: int) -> "AlgebraicNumber":
        """The real n-th root for odd n."""
        if n % 2 == 0 or n < 1:
            raise PreconditionError(f"odd_root needs an odd positive index, got {n}")
        if n == 1:
            return self
        if self.is_rational:
            value = self._lo
            num, num_exact = integer_nthroot(abs(value.numerator), n)
            den, den_exact = integer_nthroot(value.denominator, n)
            if num_exact and den_exact:
                root = Fraction(int(num), int(den))
                return AlgebraicNumber.rational(_sign(value) * root)
            roots = isolate_roots(UniPoly({n: 1, 0: -value}))
            return roots[0][0]
        candidates = isolate_roots(self._defining.compose_power(n))
        for candidate, _ in candidates:
            if _power_lands_in(candidate, n, self):
                return candidate
        raise RuntimeError(f"No real {n}-th root found for {self}")

    def compare(self, other: "AlgebraicNumber") -> int:
        """Order two numbers known to be distinct, or equal rationals."""
        a, b = self, other
        for _ in range(_MAX_REFINEMENTS):
            if a.is_rational and b.is_rational:
                return _sign(a._lo - b._lo)
            touching = not (a.is_rational and b.is_rational)
            if a._hi < b._lo or (a._hi == b._lo and touching):
                return -1
            if b._hi < a._lo or (b._hi == a._lo and touching):
                return 1
            a, b = a.refine(), b.refine()
        raise RuntimeError(f"Could not separate {self} and {other}")

    def __iter__(self):
        yield "defining", self._defining.format()
        yield "interval", [format_rational(self._lo), format_rational(self._hi)]

    def __str__(self) -> str:
        if self.is_rational:
            return format_rational(self._lo)
        return (
            f"root of {self._defining} in "
            f"({format_rational(self._lo)}, {format_rational(self._hi)})"
        )

    def __repr__(self) -> str:
        return f"<AlgebraicNumber {self}>"


def _power_lands_in(
    candidate: AlgebraicNumber, n: int, target: AlgebraicNumber
) -> bool:
    """Whether candidate^n is the number isolated by ``target`` (n odd)."""
    current = candidate
    for _ in range(_MAX_REFINEMENTS):
        lo, hi = current.interval
        low, high = lo ** n, hi ** n
        t_lo, t_hi = target.interval
        if t_lo < low and high < t_hi:
            return True
        if high <= t_lo or low >= t_hi:
            return False
        current = current.refine()
    raise RuntimeError("Interval refinement did not converge")


def _refine_interval(
    f: UniPoly, lo: Fraction, hi: Fraction, width: Rational
) -> Tuple[Fraction, Fraction]:
    """Isolating interval of width below ``width`` for the root of f in (lo, hi)."""
    poly = to_sympy(f)
    try:
        ends = poly.refine_root(_qq(lo), _qq(hi), eps=_qq(width))
    except (RefinementFailed, ValueError):
        # refine_root rejects intervals straddling zero; isolate afresh instead
        (ends,) = poly.intervals(eps=_qq(width), inf=_qq(lo), sup=_qq(hi), sqf=True)
    s, t = sorted(_fraction(v) for v in ends)
    return s, t


def _rational_roots(f: UniPoly) -> List[Fraction]:
    return sorted(_fraction(r) for r in to_sympy(f).ground_roots())


def _isolate_irrational(f: UniPoly) -> List[Tuple[Fraction, Fraction]]:
    # f has no rational roots, so no interval endpoint is a root
    if f.degree <= 0:
        return []
    return [
        (_fraction(s), _fraction(t)) for s, t in to_sympy(f).intervals(sqf=True)
    ]


def isolate_roots(g: UniPoly) -> List[Tuple[AlgebraicNumber, int]]:
    """All real roots of g with multiplicities, in increasing order."""
    if g.is_zero:
        raise PreconditionError("Roots of the zero polynomial")
    roots: List[Tuple[AlgebraicNumber, int]] = []
    for factor, multiplicity in squarefree(g):
        rest = factor
        for value in _rational_roots(factor):
            roots.append((AlgebraicNumber.rational(value), multiplicity))
            rest = rest.exact_div(UniPoly({1: 1, 0: -value}))
        for lo, hi in _isolate_irrational(rest):
            roots.append((AlgebraicNumber(rest, lo, hi), multiplicity))
    roots.sort(key=cmp_to_key(lambda a, b: a[0].compare(b[0])))
    _LOGGER.debug("Isolated %d real roots of %s", len(roots), g)
    return roots


def univariate_nonnegative(g: UniPoly) -> bool:
    """Whether g(u) >= 0 for every real u."""
    if g.is_zero:
        return True
    if g.leading < 0 or g.degree % 2:
        return False
    return all(
        multiplicity % 2 == 0 or real_root_count(factor) == 0
        for factor, multiplicity in squarefree(g)
    )


def _has_root_in(d: UniPoly, r: AlgebraicNumber) -> bool:
    lo, hi = r.interval
    return d.degree > 0 and count_roots(d, lo, hi) > 0


def _open_count(h: UniPoly, lo: Fraction, hi: Fraction) -> int:
    return count_roots(h, lo, hi) - (h(lo) == 0) - (h(hi) == 0)


def sign_at_root(h: UniPoly, r: AlgebraicNumber) -> int:
    """The exact sign (-1, 0 or 1) of h at the algebraic number r."""
    if h.is_zero:
        return 0
    if r.is_rational:
        return _sign(h(r.value))
    if _has_root_in(poly_gcd(h, r.defining), r):
        return 0
    current = r
    for _ in range(_MAX_REFINEMENTS):
        if current.is_rational:
            return _sign(h(current.value))
        lo, hi = current.interval
        if _open_count(h, lo, hi) == 0:
            return _sign(h(current.midpoint))
        current = current.refine()
    raise RuntimeError(f"Could not decide the sign of {h} at {r}")


def multiplicity_in(g: UniPoly, r: AlgebraicNumber) -> int:
    """The multiplicity of r as a root of g (0 when it is not a root)."""
    if g.is_zero:
        raise PreconditionError("Multiplicity in the zero polynomial")
    for factor, multiplicity in squarefree(g):
        if sign_at_root(factor, r) == 0:
            return multiplicity
    return 0


def simplest_between(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    """The rational with the smallest denominator in the open interval (lo, hi).

    ``None`` stands for an unbounded end.
    """
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(0) if hi > 0 else Fraction(ceil(hi) - 1)
    if hi is None:
        return Fraction(0) if lo < 0 else Fraction(floor(lo) + 1)
    if lo >= hi:
        raise PreconditionError(f"Empty interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    whole = floor(lo) + 1
    if whole < hi:
        return Fraction(whole)
    k = floor(lo)
    upper = None if lo == k else 1 / (lo - k)
    return k + 1 / simplest_between(1 / (hi - k), upper)


def separated(roots: Sequence[AlgebraicNumber]) -> List[AlgebraicNumber]:
    """Refine sorted distinct roots until their intervals are pairwise disjoint."""
    out = list(roots)
    for i in range(len(out) - 1):
        for _ in range(_MAX_REFINEMENTS):
            if out[i].interval[1] < out[i + 1].interval[0]:
                break
            out[i] = out[i].refine()
            out[i + 1] = out[i + 1].refine()
    return out


def gap_points(g: UniPoly) -> Iterator[Fraction]:
    """One simple rational inside every open gap between real roots of g."""
    roots = separated([r for r, _ in isolate_roots(g)]) if g.degree > 0 else []
    edges: List[Optional[Fraction]] = [None]
    for root in roots:
        lo, hi = root.interval
        edges.extend([lo, hi])
    edges.append(None)
    for i in range(0, len(edges), 2):
        yield simplest_between(edges[i], edges[i + 1])
