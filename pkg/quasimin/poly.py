"""Exact polynomial arithmetic over the rationals."""
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from sympy import QQ, Poly, Rational as SympyRational, Symbol
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from .const import AXIS_X, AXIS_Y
from .error import PreconditionError

Rational = Union[int, Fraction]
Exponent = Tuple[int, int]
Series = Dict[int, PolyElement]

_U = Symbol("u")

# coefficients of curves live in QQ[r], r the algebraic generator
GENERATOR_RING, GENERATOR = ring("r", QQ, lex)


def _clean(items: Iterable[Tuple[object, Rational]]) -> Dict:
    out: Dict = {}
    for key, coef in items:
        value = out.get(key, Fraction(0)) + Fraction(coef)
        if value:
            out[key] = value
        else:
            out.pop(key, None)
    return out


def format_rational(value: Rational) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_terms(parts, format_monomial) -> str:
    if not parts:
        return "0"
    out = ""
    for key, coef in parts:
        mono = format_monomial(key)
        magnitude = abs(coef)
        if mono and magnitude == 1:
            body = mono
        elif mono:
            body = f"{format_rational(magnitude)}*{mono}"
        else:
            body = format_rational(magnitude)
        if not out:
            out = f"-{body}" if coef < 0 else body
        else:
            out += f" - {body}" if coef < 0 else f" + {body}"
    return out


class UniPoly:
    """A polynomial in one variable with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, Rational]] = None):
        coeffs = coeffs or {}
        for degree in coeffs:
            if degree < 0:
                raise ValueError(f"Negative degree {degree}")
        self._coeffs: Dict[int, Fraction] = _clean(coeffs.items())

    @classmethod
    def from_list(cls, coeffs: Iterable[Rational]) -> "UniPoly":
        """Build a polynomial from coefficients listed by ascending degree."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def constant(cls, value: Rational) -> "UniPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, coef: Rational = 1) -> "UniPoly":
        return cls({degree: coef})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """The degree; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    @property
    def low_degree(self) -> int:
        return min(self._coeffs) if self._coeffs else -1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[self.degree] if self._coeffs else Fraction(0)

    def coeff(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def __call__(self, value: Rational) -> Fraction:
        result = Fraction(0)
        for degree in range(self.degree, -1, -1):
            result = result * value + self._coeffs.get(degree, 0)
        return result

    def __add__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return UniPoly(_clean(list(self._coeffs.items()) + list(other._coeffs.items())))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "UniPoly":
        return UniPoly.constant(other) - self

    def __mul__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly({d: c * other for d, c in self._coeffs.items()})
        return UniPoly(
            _clean(
                (d1 + d2, c1 * c2)
                for d1, c1 in self._coeffs.items()
                for d2, c2 in other._coeffs.items()
            )
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("Negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        quotient, remainder = to_sympy(self).div(to_sympy(divisor))
        return from_sympy(quotient), from_sympy(remainder)

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        if divisor.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        try:
            return from_sympy(to_sympy(self).exquo(to_sympy(divisor)))
        except ExactQuotientFailed:
            raise PreconditionError(f"{divisor} does not divide {self}")

    def derivative(self, times: int = 1) -> "UniPoly":
        result = self
        for _ in range(times):
            result = UniPoly({d - 1: c * d for d, c in result._coeffs.items() if d})
        return result

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def primitive(self) -> "UniPoly":
        """Scale to coprime integer coefficients with a positive leading one."""
        if self.is_zero:
            return self
        lcm = 1
        for c in self._coeffs.values():
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self._coeffs.values()]
        content = 0
        for value in ints:
            content = gcd(content, value)
        scale = Fraction(lcm, content)
        if self.leading < 0:
            scale = -scale
        return self * scale

    def compose_power(self, power: int, scale: Rational = 1) -> "UniPoly":
        """Return f(scale * u^power)."""
        scale = Fraction(scale)
        return UniPoly(
            {d * power: c * scale ** d for d, c in self._coeffs.items()}
        )

    def reversed(self) -> "UniPoly":
        """Return u^n * f(1/u) where n is the degree."""
        n = self.degree
        return UniPoly({n - d: c for d, c in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __iter__(self):
        for degree in sorted(self._coeffs):
            yield degree, self._coeffs[degree]

    def format(self, var: str = "u") -> str:
        def mono(degree: int) -> str:
            if degree == 0:
                return ""
            return var if degree == 1 else f"{var}^{degree}"

        return _format_terms([(d, self._coeffs[d]) for d in sorted(self._coeffs)], mono)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"<UniPoly {self}>"


def to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_sympy(g: UniPoly) -> Poly:
    """g as a sympy Poly in u over QQ."""
    rep = {(d,): SympyRational(c.numerator, c.denominator) for d, c in g}
    return Poly.from_dict(rep, _U, domain=QQ)


def from_sympy(f: Poly) -> UniPoly:
    return UniPoly(
        {degree: Fraction(int(c.p), int(c.q)) for (degree,), c in f.terms()}
    )


def lift_generator(g: UniPoly) -> PolyElement:
    """g(r) as an element of QQ[r]."""
    out = GENERATOR_RING.zero
    for degree, coef in g:
        out += GENERATOR ** degree * to_qq(coef)
    return out


def lower_generator(value: PolyElement) -> UniPoly:
    return UniPoly({monom[0]: from_qq(coef) for monom, coef in value.terms()})


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero if both are zero)."""
    return from_sympy(to_sympy(a).gcd(to_sympy(b))).monic()


class BivariatePoly:
    """A polynomial in x and y with rational coefficients.

    The keys of ``terms`` are the support of the polynomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponent, Rational]] = None):
        terms = terms or {}
        for alpha, beta in terms:
            if alpha < 0 or beta < 0:
                raise ValueError(f"Negative exponent in ({alpha}, {beta})")
        self._terms: Dict[Exponent, Fraction] = _clean(terms.items())

    @classmethod
    def constant(cls, value: Rational) -> "BivariatePoly":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def coeff(self, alpha: int, beta: int) -> Fraction:
        return self._terms.get((alpha, beta), Fraction(0))

    def support(self) -> Set[Exponent]:
        return set(self._terms)

    def evaluate(self, x: Rational, y: Rational) -> Fraction:
        x = Fraction(x)
        y = Fraction(y)
        return sum(
            (c * x ** a * y ** b for (a, b), c in self._terms.items()), Fraction(0)
        )

    def shortening(self, exponents: Iterable[Exponent]) -> "BivariatePoly":
        """The sum of the terms whose exponent pairs lie in ``exponents``."""
        keep = set(exponents)
        return BivariatePoly({k: c for k, c in self._terms.items() if k in keep})

    def is_stationary_origin(self) -> bool:
        return all(a + b > 1 for a, b in self._terms)

    def axis_restriction(self, axis: str) -> UniPoly:
        """p(x, 0) for the x-axis, p(0, y) for the y-axis."""
        if axis == AXIS_X:
            return UniPoly({a: c for (a, b), c in self._terms.items() if b == 0})
        if axis == AXIS_Y:
            return UniPoly({b: c for (a, b), c in self._terms.items() if a == 0})
        raise ValueError(f"Unknown axis '{axis}'")

    def swap(self) -> "BivariatePoly":
        """p(y, x)."""
        return BivariatePoly({(b, a): c for (a, b), c in self._terms.items()})

    def __add__(self, other: Union["BivariatePoly", Rational]) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        return BivariatePoly(
            _clean(list(self._terms.items()) + list(other._terms.items()))
        )

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Union["BivariatePoly", Rational]) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: Rational) -> "BivariatePoly":
        return BivariatePoly.constant(other) - self

    def __mul__(self, other: Union["BivariatePoly", Rational]) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            return BivariatePoly({k: c * other for k, c in self._terms.items()})
        return BivariatePoly(
            _clean(
                ((a1 + a2, b1 + b2), c1 * c2)
                for (a1, b1), c1 in self._terms.items()
                for (a2, b2), c2 in other._terms.items()
            )
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePoly":
        if exponent < 0:
            raise ValueError("Negative power of a polynomial")
        result = BivariatePoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __iter__(self):
        for key in sorted(self._terms, key=_canonical_key):
            yield key, self._terms[key]

    def format(self, xvar: str = "x", yvar: str = "y") -> str:
        def mono(key: Exponent) -> str:
            parts = []
            for var, exp in ((xvar, key[0]), (yvar, key[1])):
                if exp == 1:
                    parts.append(var)
                elif exp:
                    parts.append(f"{var}^{exp}")
            return "*".join(parts)

        return _format_terms(list(self), mono)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"<BivariatePoly {self}>"


def _canonical_key(key: Exponent) -> Tuple[int, int]:
    # graded, x before y
    return key[0] + key[1], -key[0]


def series_multiply(
    a: Series, b: Series, zero: PolyElement, order: Optional[int] = None
) -> Series:
    """Product of two series in t, dropping powers above ``order``."""
    out: Series = {}
    for i, u in a.items():
        for j, v in b.items():
            if order is not None and i + j > order:
                continue
            out[i + j] = out.get(i + j, zero) + u * v
    return {k: v for k, v in out.items() if v}


def series_powers(
    base: Series, top: int, one: PolyElement, order: Optional[int] = None
) -> List[Series]:
    powers = [{0: one}]
    for _ in range(top):
        powers.append(series_multiply(powers[-1], base, one.ring.zero, order))
    return powers


def expand_series(
    p: BivariatePoly,
    x: Series,
    y: Series,
    one: PolyElement,
    order: Optional[int] = None,
) -> Series:
    """p(x(t), y(t)) by power of t, for series with coefficients in ``one.ring``.

    Every substitution of a curve into a polynomial goes through here.
    """
    zero = one.ring.zero
    if p.is_zero:
        return {}
    x_powers = series_powers(x, max(a for a, _ in p.terms), one, order)
    y_powers = series_powers(y, max(b for _, b in p.terms), one, order)
    total: Series = {}
    for (alpha, beta), coef in p.terms.items():
        term = series_multiply(x_powers[alpha], y_powers[beta], zero, order)
        for k, v in term.items():
            total[k] = total.get(k, zero) + v * to_qq(coef)
    return {k: v for k, v in total.items() if v}


def substitute_curve(p: BivariatePoly, xt: UniPoly, yt: UniPoly) -> UniPoly:
    """Expand p(x(t), y(t)) exactly."""
    if xt.coeff(0) or yt.coeff(0):
        raise PreconditionError("Curve must pass through the origin")
    one = GENERATOR_RING.one
    x = {e: one * to_qq(c) for e, c in xt}
    y = {e: one * to_qq(c) for e, c in yt}
    expanded = expand_series(p, x, y, one)
    return UniPoly({k: from_qq(v.coeff(1)) for k, v in expanded.items()})
