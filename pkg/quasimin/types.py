from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .const import (
    RULE_REFERENCES,
    STATUS_LOCAL_MIN,
    STATUS_NOT_LOCAL_MIN,
    STATUS_UNRESOLVED,
)
from .error import InvalidNormal
from .poly import BivariatePoly, Rational, UniPoly, format_rational
from .realroots import AlgebraicNumber

Coefficient = Union[UniPoly, Rational]


class NormalVector(tuple):
    """A direction A = (A1, A2) with positive coprime components."""

    def __new__(cls, a1: int, a2: int):
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in (a1, a2)):
            raise InvalidNormal(a1, a2)
        if a1 < 1 or a2 < 1 or gcd(a1, a2) != 1:
            raise InvalidNormal(a1, a2)
        return super().__new__(cls, (a1, a2))

    @property
    def a1(self) -> int:
        return self[0]

    @property
    def a2(self) -> int:
        return self[1]

    @property
    def direction(self) -> Tuple[int, int]:
        """e = (-A2, A1), so that u = x^e1 * y^e2."""
        return -self[1], self[0]

    @property
    def slope(self) -> Fraction:
        return Fraction(self[0], self[1])

    def level(self, exponent: Tuple[int, int]) -> int:
        return self[0] * exponent[0] + self[1] * exponent[1]

    def __str__(self) -> str:
        return f"({self[0]}, {self[1]})"


def _as_coefficient(value: Coefficient) -> UniPoly:
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def _format_series(terms: Mapping[int, UniPoly], var: str = "t") -> str:
    if not terms:
        return "0"
    out = ""
    for exp in sorted(terms):
        coef = terms[exp]
        mono = var if exp == 1 else f"{var}^{exp}"
        if coef.degree == 0:
            value = coef.coeff(0)
            body = mono if abs(value) == 1 else f"{format_rational(abs(value))}*{mono}"
            negative = value < 0
        else:
            body = f"({coef.format('r')})*{mono}"
            negative = False
        if not out:
            out = f"-{body}" if negative else body
        else:
            out += f" - {body}" if negative else f" + {body}"
    return out


class Curve:
    """A parametric curve x(t), y(t) through the origin.

    Coefficients are polynomials in a single real algebraic generator ``r``; when
    there is no generator every coefficient is a rational constant.
    """

    def __init__(
        self,
        x: Mapping[int, Coefficient],
        y: Mapping[int, Coefficient],
        generator: Optional[AlgebraicNumber] = None,
    ):
        self._x = {e: _as_coefficient(c) for e, c in x.items()}
        self._y = {e: _as_coefficient(c) for e, c in y.items()}
        self._x = {e: c for e, c in self._x.items() if not c.is_zero}
        self._y = {e: c for e, c in self._y.items() if not c.is_zero}
        if any(e < 1 for e in list(self._x) + list(self._y)):
            raise ValueError("Curve terms need positive exponents of t")
        self._generator = generator

    @classmethod
    def scaled_point(
        cls,
        x0: Coefficient,
        y0: Coefficient,
        normal: Sequence[int],
        generator: Optional[AlgebraicNumber] = None,
    ) -> "Curve":
        """The curve (x0 t^A1, y0 t^A2)."""
        return cls({normal[0]: x0}, {normal[1]: y0}, generator)

    @property
    def x_terms(self) -> Mapping[int, UniPoly]:
        return MappingProxyType(self._x)

    @property
    def y_terms(self) -> Mapping[int, UniPoly]:
        return MappingProxyType(self._y)

    @property
    def generator(self) -> Optional[AlgebraicNumber]:
        return self._generator

    def at(
        self, t: Rational, r: Optional[Rational] = None
    ) -> Tuple[Fraction, Fraction]:
        """The point of the curve at t, with r standing in for the generator."""
        r = Fraction(0) if r is None else Fraction(r)
        t = Fraction(t)
        x = sum((c(r) * t ** e for e, c in self._x.items()), Fraction(0))
        y = sum((c(r) * t ** e for e, c in self._y.items()), Fraction(0))
        return x, y

    @property
    def x_text(self) -> str:
        return _format_series(self._x)

    @property
    def y_text(self) -> str:
        return _format_series(self._y)

    def __iter__(self):
        yield "x_t", self.x_text
        yield "y_t", self.y_text
        yield "generator", None if self._generator is None else dict(self._generator)

    def __str__(self) -> str:
        return f"<Curve x(t)={self.x_text} y(t)={self.y_text}>"


class Certificate:
    """A verified descent curve: p(x(t), y(t)) = g0 t^sigma + ..., g0 < 0."""

    def __init__(
        self,
        kind: str,
        curve: Curve,
        sigma: int,
        leading: UniPoly,
        sample_t: Fraction,
        sample_point: Tuple[Fraction, Fraction],
        value: Fraction,
    ):
        self._kind = kind
        self._curve = curve
        self._sigma = sigma
        self._leading = leading
        self._sample_t = sample_t
        self._sample_point = sample_point
        self._value = value

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def curve(self) -> Curve:
        return self._curve

    @property
    def sigma(self) -> int:
        return self._sigma

    @property
    def leading(self) -> UniPoly:
        """The coefficient of t^sigma as a polynomial in the generator."""
        return self._leading

    @property
    def sample_t(self) -> Fraction:
        return self._sample_t

    @property
    def sample_point(self) -> Tuple[Fraction, Fraction]:
        return self._sample_point

    @property
    def value(self) -> Fraction:
        return self._value

    def __iter__(self):
        yield "kind", self.kind
        for key, value in self.curve:
            yield key, value
        yield "sigma", self.sigma
        yield "leading", self.leading.format("r")
        yield "sample_t", format_rational(self.sample_t)
        yield "sample_point", [format_rational(v) for v in self.sample_point]
        yield "value", format_rational(self.value)

    def __str__(self) -> str:
        return (
            f'<Certificate kind="{self.kind}" x(t)="{self.curve.x_text}" '
            f'y(t)="{self.curve.y_text}" sigma={self.sigma}>'
        )


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (UniPoly, BivariatePoly, AlgebraicNumber)):
        return str(value)
    if isinstance(value, NormalVector):
        return [value.a1, value.a2]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class TraceEntry:
    """One applied rule and the face it concerns."""

    def __init__(
        self,
        rule: str,
        face: Optional[NormalVector] = None,
        data: Optional[Dict] = None,
        reference: Optional[str] = None,
    ):
        self._rule = rule
        self._face = face
        self._data = data or {}
        if reference is None:
            reference = RULE_REFERENCES.get(rule, "")
        self._reference = reference

    @property
    def rule(self) -> str:
        return self._rule

    @property
    def reference(self) -> str:
        return self._reference

    @property
    def face(self) -> Optional[NormalVector]:
        return self._face

    @property
    def data(self) -> Mapping[str, Any]:
        return MappingProxyType(self._data)

    def __iter__(self):
        yield "rule", self.rule
        yield "paper_ref", self.reference
        yield "face", None if self.face is None else [self.face.a1, self.face.a2]
        yield "data", _jsonable(self._data)

    def __str__(self) -> str:
        face = "" if self.face is None else f" face={self.face}"
        return f"<TraceEntry rule={self.rule}{face}>"


class Verdict:
    """Outcome of a local-minimum decision."""

    def __init__(
        self,
        status: str,
        certificate: Optional[Certificate] = None,
        trace: Iterable[TraceEntry] = (),
        unresolved: Iterable[NormalVector] = (),
        budget: Optional[Dict[str, Any]] = None,
    ):
        self._status = status
        self._certificate = certificate
        self._trace: List[TraceEntry] = list(trace)
        self._unresolved: Tuple[NormalVector, ...] = tuple(unresolved)
        self._budget = budget

    @classmethod
    def local_min(cls, trace: Iterable[TraceEntry] = ()) -> "Verdict":
        return cls(STATUS_LOCAL_MIN, trace=trace)

    @classmethod
    def not_local_min(
        cls, certificate: Certificate, trace: Iterable[TraceEntry] = ()
    ) -> "Verdict":
        return cls(STATUS_NOT_LOCAL_MIN, certificate=certificate, trace=trace)

    @property
    def status(self) -> str:
        return self._status

    @property
    def certificate(self) -> Optional[Certificate]:
        return self._certificate

    @property
    def trace(self) -> Sequence[TraceEntry]:
        return tuple(self._trace)

    @property
    def unresolved(self) -> Tuple[NormalVector, ...]:
        return self._unresolved

    @property
    def budget(self) -> Optional[Dict[str, Any]]:
        return self._budget

    @property
    def is_local_min(self) -> bool:
        return self._status == STATUS_LOCAL_MIN

    @property
    def is_not_local_min(self) -> bool:
        return self._status == STATUS_NOT_LOCAL_MIN

    @property
    def is_unresolved(self) -> bool:
        return self._status == STATUS_UNRESOLVED

    def with_trace(self, before: Iterable[TraceEntry]) -> "Verdict":
        """A copy with ``before`` prepended to the trace."""
        return Verdict(
            self._status,
            self._certificate,
            list(before) + self._trace,
            self._unresolved,
            self._budget,
        )

    def __iter__(self):
        yield "status", self.status
        certificate = self.certificate
        yield "certificate", None if certificate is None else dict(certificate)
        yield "trace", [dict(entry) for entry in self._trace]
        yield "unresolved", [[a.a1, a.a2] for a in self._unresolved]
        if self._budget is not None:
            yield "budget", _jsonable(self._budget)

    def __str__(self) -> str:
        return f'<Verdict status="{self.status}">'
