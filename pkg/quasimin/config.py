"""Decision and run configuration."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .const import (
    DEFAULT_DEPTH,
    DEFAULT_GRID,
    DEFAULT_MAX_KAPPA,
    DEFAULT_MAX_NU,
    DEFAULT_NODE_LIMIT,
    DEFAULT_UNKNOWNS,
    OUTPUT_HUMAN,
    OUTPUT_JSON,
)
from .error import InvalidConfig


@dataclass(frozen=True)
class DecisionConfig:
    """Bounds for the decision pipeline.

    depth:
      The number of quasi-homogeneous forms examined per face
    max_nu:
      The largest multiple of a face normal tried by the descent search
    max_order:
      The highest power of t expanded per search template for nu = 1 (scaled
      by nu); None picks twice the largest decomposition level
    grid:
      Rational values tried for undetermined coefficients, in order
    unknowns:
      Undetermined coefficients per coordinate in a search template
    node_limit:
      Search tree nodes visited per template
    max_kappa:
      Largest perturbation exponent tried by the two-form descent
    """

    depth: int = DEFAULT_DEPTH
    max_nu: int = DEFAULT_MAX_NU
    max_order: Optional[int] = None
    grid: Tuple[Fraction, ...] = field(default=DEFAULT_GRID)
    unknowns: int = DEFAULT_UNKNOWNS
    node_limit: int = DEFAULT_NODE_LIMIT
    max_kappa: int = DEFAULT_MAX_KAPPA

    def __post_init__(self):
        for name in ("depth", "max_nu", "unknowns", "node_limit", "max_kappa"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidConfig(name, value)
        if self.max_order is not None and (
            not isinstance(self.max_order, int) or self.max_order < 1
        ):
            raise InvalidConfig("max_order", self.max_order)
        if not self.grid:
            raise InvalidConfig("grid", self.grid)
        object.__setattr__(self, "grid", tuple(Fraction(v) for v in self.grid))

    def __iter__(self):
        yield "depth", self.depth
        yield "max_nu", self.max_nu
        yield "max_order", self.max_order
        yield "grid", [str(v) for v in self.grid]
        yield "unknowns", self.unknowns
        yield "node_limit", self.node_limit
        yield "max_kappa", self.max_kappa


@dataclass(frozen=True)
class RunConfig:
    """Options of a command line run."""

    decision: DecisionConfig = field(default_factory=DecisionConfig)
    output: str = OUTPUT_HUMAN
    svg_path: Optional[str] = None
    trace: int = 0

    def __post_init__(self):
        if self.output not in (OUTPUT_HUMAN, OUTPUT_JSON):
            raise InvalidConfig("output", self.output)
        if self.trace not in (0, 1, 2):
            raise InvalidConfig("trace", self.trace)
