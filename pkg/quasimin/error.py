from typing import Optional


class QuasiminError(Exception):
    """Base class for quasimin errors."""


class ParseError(QuasiminError):
    """Error indicating that an expression could not be parsed."""

    def __init__(self, text: str, position: Optional[int], message: str, **kwargs):
        self.text = text
        self.position = position
        self.message = message
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")


class NegativeExponent(ParseError):
    """Error for a negative exponent in an expression."""

    def __init__(self, text: str, position: int, **kwargs):
        super().__init__(text, position, "Negative exponents are not allowed")


class NotStationary(QuasiminError):
    """Error when the origin is not a stationary point."""

    def __init__(self, poly: object, **kwargs):
        super().__init__(f"The origin is not a stationary point of {poly}")


class ZeroPolynomial(QuasiminError):
    """Error when a decision is requested for the zero polynomial."""


class InvalidNormal(QuasiminError):
    """Error indicating that a normal vector is invalid."""

    def __init__(self, a1: int, a2: int, **kwargs):
        super().__init__(f"Invalid normal vector ({a1}, {a2})")


class InvalidConfig(QuasiminError):
    """Error indicating invalid configuration data."""

    def __init__(self, field: str, value: object, **kwargs):
        super().__init__(f"Invalid value for {field}: {value!r}")


class PreconditionError(QuasiminError):
    """An operation was called outside its domain."""


class CertificateError(QuasiminError):
    """A constructed certificate failed exact verification."""
