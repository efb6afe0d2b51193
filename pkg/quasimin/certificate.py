"""Exact expansion of a polynomial along a curve and descent certificates."""
from fractions import Fraction
from logging import getLogger
from typing import Dict, Optional, Tuple

from .error import CertificateError
from .poly import (
    GENERATOR_RING,
    BivariatePoly,
    UniPoly,
    expand_series,
    lift_generator,
    lower_generator,
)
from .realroots import sign_at_root
from .types import Certificate, Curve

_LOGGER = getLogger(__name__)

_MAX_SAMPLE_HALVINGS = 400


def expand_along(p: BivariatePoly, curve: Curve) -> Dict[int, UniPoly]:
    """p(x(t), y(t)) as a map from powers of t to coefficients in the generator."""
    one = GENERATOR_RING.one
    x = {e: lift_generator(c) for e, c in curve.x_terms.items()}
    y = {e: lift_generator(c) for e, c in curve.y_terms.items()}
    generator = curve.generator
    defining = None
    if generator is not None and not generator.is_rational:
        defining = lift_generator(generator.defining)
    out: Dict[int, UniPoly] = {}
    for order, value in expand_series(p, x, y, one).items():
        if defining is not None:
            value = value.rem([defining])
        coef = lower_generator(value)
        if generator is not None and generator.is_rational:
            coef = UniPoly.constant(coef(generator.value))
        if not coef.is_zero:
            out[order] = coef
    return out


def _sign(coef: UniPoly, curve: Curve) -> int:
    if curve.generator is None or coef.degree <= 0:
        value = coef.coeff(0)
        return (value > 0) - (value < 0)
    return sign_at_root(coef, curve.generator)


def leading_order(p: BivariatePoly, curve: Curve) -> Optional[Tuple[int, UniPoly, int]]:
    """The first power of t with a nonvanishing coefficient.

    Returns ``(sigma, coefficient, sign)``, or None when p vanishes on the curve.
    """
    expansion = expand_along(p, curve)
    for order in sorted(expansion):
        coef = expansion[order]
        sign = _sign(coef, curve)
        if sign:
            return order, coef, sign
    return None


def sample(
    p: BivariatePoly, curve: Curve, sigma: int
) -> Tuple[Fraction, Tuple[Fraction, Fraction], Fraction]:
    """A rational t = 2^-k and curve point where p is negative."""
    generator = curve.generator
    for k in range(1, _MAX_SAMPLE_HALVINGS):
        t = Fraction(1, 2 ** k)
        r = None
        if generator is not None:
            if generator.is_rational:
                r = generator.value
            else:
                r = generator.refine_to(t ** (sigma + 1)).midpoint
        point = curve.at(t, r)
        value = p.evaluate(*point)
        if value < 0:
            return t, point, value
    raise CertificateError(f"No negative sample of {p} along {curve}")


def descent_certificate(
    p: BivariatePoly, curve: Curve, kind: str
) -> Optional[Certificate]:
    """A certificate when p is negative at the lowest order along the curve."""
    found = leading_order(p, curve)
    if found is None or found[2] > 0:
        return None
    sigma, coef, _ = found
    t, point, value = sample(p, curve, sigma)
    certificate = Certificate(kind, curve, sigma, coef, t, point, value)
    _LOGGER.debug("Built %s for %s", certificate, p)
    return certificate


def require_certificate(p: BivariatePoly, curve: Curve, kind: str) -> Certificate:
    certificate = descent_certificate(p, curve, kind)
    if certificate is None:
        raise CertificateError(f"{curve} is not a descent curve of {p}")
    return certificate


def verify_certificate(p: BivariatePoly, certificate: Certificate) -> bool:
    """Re-check a certificate by exact substitution and the sample point."""
    found = leading_order(p, certificate.curve)
    if found is None:
        return False
    sigma, _, sign = found
    if sigma != certificate.sigma or sign >= 0:
        return False
    value = p.evaluate(*certificate.sample_point)
    return value == certificate.value and value < 0
