"""Quasi-homogeneous forms and their characteristic polynomials."""
from fractions import Fraction
from logging import getLogger
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .const import (
    KIND_AXIS_DESCENT,
    KIND_SCALED_POINT_DESCENT,
    RULE_MAIN_TERM,
    RULE_SINGLE_FORM,
)
from .certificate import require_certificate
from .error import PreconditionError, ZeroPolynomial
from .geometry import SIGN_ORDER, edge_normal, hull, pareto, witness_signs
from .poly import BivariatePoly, Exponent, Rational, UniPoly
from .realroots import (
    AlgebraicNumber,
    gap_points,
    multiplicity_in,
    real_root_count,
    univariate_nonnegative,
)
from .types import Coefficient, Curve, NormalVector, TraceEntry, Verdict

_LOGGER = getLogger(__name__)


def _even(*values: int) -> bool:
    return all(v % 2 == 0 for v in values)


class CharPoly:
    """The characteristic polynomial g of a form.

    The form equals x^alpha1 * y^beta1 * g(x^e1 * y^e2) with e = (-A2, A1).
    """

    def __init__(
        self, g: UniPoly, main: Exponent, trailing: Exponent, direction: Tuple[int, int]
    ):
        self._g = g
        self._main = main
        self._trailing = trailing
        self._direction = direction

    @property
    def g(self) -> UniPoly:
        return self._g

    @property
    def main(self) -> Exponent:
        """(chi, eta): the exponents of the main term."""
        return self._main

    @property
    def trailing(self) -> Exponent:
        return self._trailing

    @property
    def direction(self) -> Tuple[int, int]:
        return self._direction

    def __iter__(self):
        yield "g", self._g.format()
        yield "main", list(self._main)
        yield "trailing", list(self._trailing)
        yield "direction", list(self._direction)

    def __str__(self) -> str:
        return f"<CharPoly g={self._g} main={self._main}>"


class QuasiForm:
    """A polynomial whose support lies on the line A1*alpha + A2*beta = level."""

    def __init__(self, normal: NormalVector, poly: BivariatePoly):
        if poly.is_zero:
            raise PreconditionError("A quasi-homogeneous form cannot be zero")
        levels = {normal.level(k) for k in poly.terms}
        if len(levels) != 1:
            raise PreconditionError(f"{poly} is not {normal}-quasi-homogeneous")
        self._normal = normal
        self._poly = poly
        self._level = levels.pop()
        self._terms = tuple(sorted(poly.terms.items(), key=lambda item: -item[0][0]))

    @property
    def normal(self) -> NormalVector:
        return self._normal

    @property
    def level(self) -> int:
        return self._level

    @property
    def poly(self) -> BivariatePoly:
        return self._poly

    @property
    def terms(self) -> Tuple[Tuple[Exponent, Fraction], ...]:
        """Terms by strictly decreasing alpha."""
        return self._terms

    @property
    def main(self) -> Exponent:
        return self._terms[0][0]

    @property
    def main_coefficient(self) -> Fraction:
        return self._terms[0][1]

    @property
    def trailing(self) -> Exponent:
        return self._terms[-1][0]

    @property
    def trailing_coefficient(self) -> Fraction:
        return self._terms[-1][1]

    @property
    def is_constant(self) -> bool:
        return self._level == 0

    def characteristic(self) -> CharPoly:
        return characteristic(self)

    def __iter__(self):
        yield "level", self._level
        yield "form", str(self._poly)
        yield "g", self.characteristic().g.format()

    def __str__(self) -> str:
        return f"<QuasiForm level={self._level} form={self._poly}>"


class Decomposition:
    """The forms of p for one normal, by increasing level."""

    def __init__(self, normal: NormalVector, forms: Sequence[QuasiForm]):
        self._normal = normal
        self._forms = tuple(forms)

    @property
    def normal(self) -> NormalVector:
        return self._normal

    @property
    def forms(self) -> Tuple[QuasiForm, ...]:
        return self._forms

    @property
    def levels(self) -> List[int]:
        return [form.level for form in self._forms]

    def partial_sum(self, count: int) -> BivariatePoly:
        """The sum of the first ``count`` forms."""
        total = BivariatePoly()
        for form in self._forms[:count]:
            total = total + form.poly
        return total

    def __len__(self) -> int:
        return len(self._forms)

    def __getitem__(self, index: int) -> QuasiForm:
        return self._forms[index]

    def __iter__(self):
        yield "normal", [self._normal.a1, self._normal.a2]
        yield "forms", [dict(form) for form in self._forms]

    def __str__(self) -> str:
        return f"<Decomposition normal={self._normal} levels={self.levels}>"


def decompose(p: BivariatePoly, normal: NormalVector) -> Decomposition:
    """Group the terms of p by the value of A1*alpha + A2*beta."""
    if p.is_zero:
        raise ZeroPolynomial("Cannot decompose the zero polynomial")
    grouped: Dict[int, Dict[Exponent, Fraction]] = {}
    for key, coef in p.terms.items():
        grouped.setdefault(normal.level(key), {})[key] = coef
    forms = [
        QuasiForm(normal, BivariatePoly(grouped[level])) for level in sorted(grouped)
    ]
    _LOGGER.debug("Decomposed %s along %s into levels %s", p, normal, sorted(grouped))
    return Decomposition(normal, forms)


def characteristic(form: QuasiForm) -> CharPoly:
    a1, a2 = form.normal
    chi, eta = form.main
    coeffs: Dict[int, Fraction] = {}
    for (alpha, beta), coef in form.terms:
        shift, rest = divmod(chi - alpha, a2)
        if rest or (beta - eta) != a1 * shift:
            raise PreconditionError(f"Term ({alpha}, {beta}) breaks the form {form}")
        coeffs[shift] = coef
    return CharPoly(UniPoly(coeffs), form.main, form.trailing, form.normal.direction)


def form_from_characteristic(
    normal: NormalVector, main: Exponent, g: UniPoly
) -> QuasiForm:
    """Rebuild x^chi * y^eta * g(x^-A2 * y^A1) as a form."""
    a1, a2 = normal
    chi, eta = main
    terms: Dict[Exponent, Fraction] = {}
    for degree, coef in g:
        alpha = chi - a2 * degree
        if alpha < 0:
            raise PreconditionError(f"{g} does not fit under main exponent {main}")
        terms[(alpha, eta + a1 * degree)] = coef
    return QuasiForm(normal, BivariatePoly(terms))


def _endpoints_positive(form: QuasiForm) -> bool:
    return (
        form.main_coefficient > 0
        and form.trailing_coefficient > 0
        and _even(*form.main, *form.trailing)
    )


def form_nonnegative(form: QuasiForm) -> bool:
    """Whether the form is nonnegative on the whole plane."""
    if not _endpoints_positive(form):
        return False
    return univariate_nonnegative(form.characteristic().g)


def form_weakly_nondegenerate(form: QuasiForm) -> bool:
    """Whether the form vanishes nowhere off the coordinate axes."""
    if not _endpoints_positive(form):
        raise PreconditionError(f"Endpoint terms of {form} are not positive and even")
    return real_root_count(form.characteristic().g) == 0


class Witness(NamedTuple):
    point: Tuple[Fraction, Fraction]
    value: Fraction
    curve: Curve


def _witness(form: QuasiForm, x: Rational, y: Rational) -> Optional[Witness]:
    value = form.poly.evaluate(x, y)
    if value >= 0:
        return None
    x, y = Fraction(x), Fraction(y)
    return Witness((x, y), value, Curve.scaled_point(x, y, form.normal))


def negativity_witness(form: QuasiForm) -> Witness:
    """A rational point where the form is negative, and its scaled curve."""
    for c1, c2 in SIGN_ORDER:
        found = _witness(form, c1, c2)
        if found:
            return found
    for c1 in (1, -1):
        # the form on the vertical line x = c1
        h = UniPoly({beta: coef * c1 ** alpha for (alpha, beta), coef in form.terms})
        for value in gap_points(h):
            found = _witness(form, c1, value)
            if found:
                return found
    for c2 in (1, -1):
        found = _witness(form, 0, c2)
        if found:
            return found
    raise PreconditionError(f"{form} is nonnegative")


def _term_curve(exponent: Exponent, signs: Tuple[int, int]) -> Tuple[Curve, str]:
    c1, c2 = signs
    if exponent[1] == 0:
        return Curve({1: c1}, {}), KIND_AXIS_DESCENT
    if exponent[0] == 0:
        return Curve({}, {1: c2}), KIND_AXIS_DESCENT
    return Curve({1: c1}, {1: c2}), KIND_SCALED_POINT_DESCENT


def single_form_case(p: BivariatePoly) -> Verdict:
    """Decide a polynomial whose Newton polygon is a point or a segment."""
    if p.is_zero:
        raise ZeroPolynomial("Cannot decide the zero polynomial")
    polytope = hull(p.support())
    if polytope.dimension == 2:
        raise PreconditionError(f"{p} has a two-dimensional Newton polygon")
    if polytope.dimension == 1:
        left, right = sorted(polytope.vertices)
        if right[1] < left[1]:
            return _form_verdict(p, edge_normal(left, right))
    term = min(pareto(p.support()))
    coef = p.coeff(*term)
    data = {"term": list(term), "coefficient": coef}
    if coef > 0 and _even(*term):
        return Verdict.local_min([TraceEntry(RULE_MAIN_TERM, None, data)])
    curve, kind = _term_curve(term, witness_signs(coef, term))
    certificate = require_certificate(p, curve, kind)
    return Verdict.not_local_min(certificate, [TraceEntry(RULE_MAIN_TERM, None, data)])


def _form_verdict(p: BivariatePoly, normal: NormalVector) -> Verdict:
    form = QuasiForm(normal, p)
    g = form.characteristic().g
    if form_nonnegative(form):
        data = {"g": g, "real_roots": real_root_count(g)}
        return Verdict.local_min([TraceEntry(RULE_SINGLE_FORM, normal, data)])
    witness = negativity_witness(form)
    data = {"g": g, "point": list(witness.point), "value": witness.value}
    certificate = require_certificate(p, witness.curve, KIND_SCALED_POINT_DESCENT)
    return Verdict.not_local_min(
        certificate, [TraceEntry(RULE_SINGLE_FORM, normal, data)]
    )


def factor_out_root(form: QuasiForm, u0: AlgebraicNumber, m: int) -> QuasiForm:
    """Divide the form by (y^A1 - u0 * x^A2)^m for a rational root u0."""
    if not u0.is_rational:
        raise PreconditionError("Only rational roots can be factored out of a form")
    if m < 1:
        raise PreconditionError(f"Multiplicity must be positive, got {m}")
    char = form.characteristic()
    if multiplicity_in(char.g, u0) < m:
        raise PreconditionError(f"{u0} is not a root of {char.g} of multiplicity {m}")
    factor = UniPoly({1: 1, 0: -u0.value}) ** m
    reduced = char.g.exact_div(factor)
    chi, eta = char.main
    main = (chi - m * form.normal.a2, eta)
    return form_from_characteristic(form.normal, main, reduced)


def root_factor(normal: NormalVector, u0: Rational, m: int) -> BivariatePoly:
    """(y^A1 - u0 * x^A2)^m."""
    base = BivariatePoly({(0, normal.a1): 1, (normal.a2, 0): -Fraction(u0)})
    return base ** m


class SolutionPoint(NamedTuple):
    """A point with x^-A2 * y^A1 = u0; one coordinate may be the generator r."""

    x0: Coefficient
    y0: Coefficient
    generator: Optional[AlgebraicNumber]
    signs: Tuple[int, int]

    def curve(self, normal: NormalVector, kappa: int = 0, sign: int = 1) -> Curve:
        """(x0 t^A1, y0 t^A2 (1 + sign t^kappa)), unperturbed when kappa is 0."""
        y = {normal.a2: self.y0}
        if kappa:
            y[normal.a2 + kappa] = self.y0 * sign
        return Curve({normal.a1: self.x0}, y, self.generator)

    def __str__(self) -> str:
        if self.generator is None:
            return f"({self.x0}, {self.y0})"
        return f"({self.x0}, {self.y0}) with r = {self.generator}"


def point_signs(normal: NormalVector, u_sign: int, s: int) -> Tuple[int, int]:
    if normal.a1 % 2:
        return s, u_sign * s ** normal.a2
    return u_sign, s


def solution_point(normal: NormalVector, u0: AlgebraicNumber, s: int) -> SolutionPoint:
    u_sign = u0.sign()
    signs = point_signs(normal, u_sign, s)
    if normal.a1 % 2:
        target = u0 if s ** normal.a2 > 0 else u0.negate()
        root = target.odd_root(normal.a1)
    else:
        root = u0.reciprocal().odd_root(normal.a2)
    generator = None
    coordinate: Coefficient
    if root.is_rational:
        coordinate = root.value
    else:
        coordinate = UniPoly.monomial(1)
        generator = root
    if normal.a1 % 2:
        return SolutionPoint(Fraction(s), coordinate, generator, signs)
    return SolutionPoint(coordinate, Fraction(s), generator, signs)


def solution_points(normal: NormalVector, u0: AlgebraicNumber) -> List[SolutionPoint]:
    """Representatives, up to positive scaling, of the curve x^-A2 * y^A1 = u0."""
    if u0.sign() == 0:
        raise PreconditionError("The level curve of u0 = 0 lies on an axis")
    return [solution_point(normal, u0, s) for s in (1, -1)]
