"""Bounded search for descent curves with undetermined coefficients.

A template curve has the shape

    x(t) = c0 t^(nu A1) + c1 t^(nu A1 + 1) + ... + cn t^(nu A1 + n)
    y(t) = d0 t^(nu A2) + d1 t^(nu A2 + 1) + ... + dn t^(nu A2 + n)

with (c0, d0) on the level curve of a root u0 of the main characteristic
polynomial. The expansion of p along the template is computed exactly in a
sympy polynomial ring over QQ and walked order by order, assigning the
unknowns until the lowest surviving coefficient is a negative constant.
"""
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, ring

from .certificate import descent_certificate
from .config import DecisionConfig
from .const import KIND_CURVE_DESCENT, LEADING_CASE_1, LEADING_CASE_2, LEADING_CASE_3
from .poly import BivariatePoly, Series, UniPoly, expand_series, from_qq, to_qq
from .quasiform import SolutionPoint, decompose, solution_points
from .realroots import AlgebraicNumber, sign_at_root
from .types import Certificate, Coefficient, Curve, NormalVector

_LOGGER = getLogger(__name__)


class LeadingPairSet(NamedTuple):
    """The two candidate leading pairs (c0, d0) for one root."""

    case: str
    pairs: Tuple[SolutionPoint, ...]


def leading_pair_candidates(
    normal: NormalVector, u0: AlgebraicNumber
) -> LeadingPairSet:
    """Leading pairs to which any solution of c0^-A2 * d0^A1 = u0 rescales.

    With A2 even the first coordinate is +-1; with A1 even the second one is;
    when both are odd the pair signs move together.
    """
    pairs = tuple(solution_points(normal, u0))
    if normal.a2 % 2 == 0:
        return LeadingPairSet(LEADING_CASE_1, pairs)
    if normal.a1 % 2 == 0:
        return LeadingPairSet(LEADING_CASE_2, pairs)
    return LeadingPairSet(LEADING_CASE_3, pairs)


class CurveTemplate:
    """A descent curve shape with ``unknowns`` undetermined coefficients per axis."""

    def __init__(
        self,
        normal: NormalVector,
        nu: int,
        pair: SolutionPoint,
        unknowns: int,
        order: int,
    ):
        if nu < 1 or unknowns < 1 or order < 1:
            raise ValueError(
                f"Bad template bounds nu={nu} unknowns={unknowns} order={order}"
            )
        self._normal = normal
        self._nu = nu
        self._pair = pair
        self._order = order
        names = []
        for index in range(1, unknowns + 1):
            names += [f"c{index}", f"d{index}"]
        if pair.generator is not None:
            names.append("r")
        self._ring, *gens = ring(",".join(names), QQ, lex)
        self._generator_symbol = gens.pop() if pair.generator is not None else None
        self._c = gens[0::2]
        self._d = gens[1::2]

    @property
    def normal(self) -> NormalVector:
        return self._normal

    @property
    def nu(self) -> int:
        return self._nu

    @property
    def pair(self) -> SolutionPoint:
        return self._pair

    @property
    def order(self) -> int:
        """The highest power of t kept in expansions."""
        return self._order

    @property
    def generator(self) -> Optional[AlgebraicNumber]:
        return self._pair.generator

    @property
    def ring(self):
        return self._ring

    @property
    def unknowns(self) -> List[PolyElement]:
        """c1, d1, c2, d2, ... in ring order."""
        return [gen for pair in zip(self._c, self._d) for gen in pair]

    def lift(self, value: Coefficient) -> PolyElement:
        """A rational or a polynomial in the generator as a ring element."""
        if isinstance(value, UniPoly):
            out = self._ring.zero
            for degree, coef in value:
                out += self._generator_symbol ** degree * to_qq(coef)
            return out
        return self._ring(to_qq(value))

    def lower(self, value: PolyElement) -> Coefficient:
        """A ring element free of unknowns back as a rational or a polynomial in r."""
        if self._generator_symbol is None:
            return from_qq(value.coeff(1)) if value else Fraction(0)
        index = self._ring.gens.index(self._generator_symbol)
        coeffs: Dict[int, Fraction] = {}
        for monom, coef in value.terms():
            coeffs[monom[index]] = from_qq(coef)
        return UniPoly(coeffs)

    def reduce(self, value: PolyElement) -> PolyElement:
        """Reduce powers of the generator modulo its defining polynomial."""
        generator = self.generator
        if generator is None or not value:
            return value
        defining = self.lift(generator.defining)
        if value.degree(self._generator_symbol) < generator.defining.degree:
            return value
        return value.rem([defining])

    def series(self) -> Tuple[Series, Series]:
        a1, a2 = self._normal
        x = {self._nu * a1: self.lift(self._pair.x0)}
        y = {self._nu * a2: self.lift(self._pair.y0)}
        for index, (c, d) in enumerate(zip(self._c, self._d), 1):
            x[self._nu * a1 + index] = c
            y[self._nu * a2 + index] = d
        return x, y

    def curve(self, values: Dict[PolyElement, PolyElement]) -> Curve:
        """The concrete curve for values of every unknown."""
        a1, a2 = self._normal
        x: Dict[int, Coefficient] = {self._nu * a1: self._pair.x0}
        y: Dict[int, Coefficient] = {self._nu * a2: self._pair.y0}
        for index, (c, d) in enumerate(zip(self._c, self._d), 1):
            x[self._nu * a1 + index] = self.lower(self.reduce(values[c]))
            y[self._nu * a2 + index] = self.lower(self.reduce(values[d]))
        return Curve(x, y, self.generator)

    def __str__(self) -> str:
        return (
            f"<CurveTemplate normal={self._normal} nu={self._nu} "
            f"pair={self._pair} order={self._order}>"
        )


def expand_template(
    p: BivariatePoly, tpl: CurveTemplate
) -> List[Tuple[int, PolyElement]]:
    """Nonzero coefficients of p(x(t), y(t)) up to the template order, by power of t."""
    x, y = tpl.series()
    total = expand_series(p, x, y, tpl.ring.one, tpl.order)
    out = []
    for k in sorted(total):
        value = tpl.reduce(total[k])
        if value:
            out.append((k, value))
    return out


class SearchResult(NamedTuple):
    certificate: Optional[Certificate]
    budget: Dict[str, Any]


class _Walk:
    """Order-by-order assignment of the unknowns of one template."""

    def __init__(
        self,
        p: BivariatePoly,
        tpl: CurveTemplate,
        grid: Sequence[Fraction],
        node_limit: int,
    ):
        self._p = p
        self._tpl = tpl
        self._grid = [to_qq(v) for v in grid]
        self._node_limit = node_limit
        self.nodes = 0

    def run(self) -> Optional[Certificate]:
        coefficients = expand_template(self._p, self._tpl)
        return self._walk(coefficients, [])

    def _sign(self, value: PolyElement) -> int:
        """Sign of an element free of unknowns."""
        lowered = self._tpl.lower(value)
        if isinstance(lowered, UniPoly):
            return sign_at_root(lowered, self._tpl.generator)
        return (lowered > 0) - (lowered < 0)

    def _free(self, value: PolyElement) -> List[PolyElement]:
        return [gen for gen in self._tpl.unknowns if value.degree(gen) > 0]

    def _walk(
        self,
        coefficients: List[Tuple[int, PolyElement]],
        assigned: List[Tuple[PolyElement, PolyElement]],
    ) -> Optional[Certificate]:
        self.nodes += 1
        if self.nodes > self._node_limit:
            return None
        for order, value in coefficients:
            if not value:
                continue
            free = self._free(value)
            if free:
                return self._branch(order, value, free, coefficients, assigned)
            sign = self._sign(value)
            if sign < 0:
                return self._finish(assigned)
            if sign > 0:
                return None
        return None

    def _substitute(
        self,
        coefficients: List[Tuple[int, PolyElement]],
        substitution: List[Tuple[PolyElement, PolyElement]],
    ) -> List[Tuple[int, PolyElement]]:
        out = []
        for order, value in coefficients:
            value = self._tpl.reduce(value.compose(substitution))
            if value:
                out.append((order, value))
        return out

    def _branch(
        self,
        order: int,
        value: PolyElement,
        free: List[PolyElement],
        coefficients: List[Tuple[int, PolyElement]],
        assigned: List[Tuple[PolyElement, PolyElement]],
    ) -> Optional[Certificate]:
        ring_ = self._tpl.ring
        chosen, extra = free[:3], free[3:]
        zeros = []
        for values in product(self._grid, repeat=len(chosen)):
            substitution = [(gen, ring_(v)) for gen, v in zip(chosen, values)]
            substitution += [(gen, ring_.zero) for gen in extra]
            reduced = self._tpl.reduce(value.compose(substitution))
            sign = self._sign(reduced)
            if sign < 0:
                _LOGGER.debug("Grid point %s makes order %d negative", values, order)
                found = self._finish(assigned + substitution)
                if found:
                    return found
            elif sign == 0:
                zeros.append(substitution)
        for substitution in self._solved(value, free):
            remaining = self._substitute(coefficients, substitution)
            found = self._walk(remaining, assigned + substitution)
            if found or self.nodes > self._node_limit:
                return found
        for substitution in zeros:
            remaining = self._substitute(coefficients, substitution)
            found = self._walk(remaining, assigned + substitution)
            if found or self.nodes > self._node_limit:
                return found
        return None

    def _solved(
        self, value: PolyElement, free: List[PolyElement]
    ) -> List[List[Tuple[PolyElement, PolyElement]]]:
        """Substitutions zeroing a linear factor of ``value``."""
        out = []
        _, factors = value.factor_list()
        for factor, _ in factors:
            for gen in free:
                if factor.degree(gen) != 1:
                    continue
                lead = factor.diff(gen)
                if not lead.is_ground:
                    continue
                rest = factor - lead * gen
                out.append([(gen, rest.mul_ground(-1 / lead.LC))])
                break
        return out

    def _finish(
        self, assigned: List[Tuple[PolyElement, PolyElement]]
    ) -> Optional[Certificate]:
        ring_ = self._tpl.ring
        values: Dict[PolyElement, PolyElement] = {}
        for gen in self._tpl.unknowns:
            if all(gen != done for done, _ in assigned):
                values[gen] = ring_.zero
        for gen, expression in reversed(assigned):
            values[gen] = expression.compose(list(values.items()))
        curve = self._tpl.curve(values)
        certificate = descent_certificate(self._p, curve, KIND_CURVE_DESCENT)
        if certificate is None:
            _LOGGER.debug("Assignment for %s does not descend on %s", self._tpl, curve)
        return certificate


def _order_bound(p: BivariatePoly, faces: Sequence[Tuple[NormalVector, object]]) -> int:
    return 2 * max(max(decompose(p, normal).levels) for normal, _ in faces)


def search_descent(
    p: BivariatePoly,
    faces: Sequence[Tuple[NormalVector, Sequence[AlgebraicNumber]]],
    config: Optional[DecisionConfig] = None,
) -> SearchResult:
    """Try template curves for every face, root, multiple nu and leading pair.

    Sound but incomplete: a returned certificate is verified, an empty result
    proves nothing.
    """
    config = config or DecisionConfig()
    if not faces:
        return SearchResult(None, {"templates": 0, "nodes": 0})
    per_nu = config.max_order or _order_bound(p, faces)
    budget: Dict[str, Any] = {
        "templates": 0,
        "nodes": 0,
        "max_nu": config.max_nu,
        "max_order": per_nu,
        "grid": len(config.grid),
        "unknowns": config.unknowns,
    }
    for normal, roots in faces:
        for u0 in roots:
            if u0.sign() == 0:
                continue
            candidates = leading_pair_candidates(normal, u0)
            for nu in range(1, config.max_nu + 1):
                for pair in candidates.pairs:
                    tpl = CurveTemplate(normal, nu, pair, config.unknowns, nu * per_nu)
                    walk = _Walk(p, tpl, config.grid, config.node_limit)
                    certificate = walk.run()
                    budget["templates"] += 1
                    budget["nodes"] += walk.nodes
                    if certificate:
                        _LOGGER.info("Template %s yields %s", tpl, certificate)
                        budget["nu"] = nu
                        budget["case"] = candidates.case
                        return SearchResult(certificate, budget)
                    _LOGGER.debug("Template %s found nothing", tpl)
    return SearchResult(None, budget)
