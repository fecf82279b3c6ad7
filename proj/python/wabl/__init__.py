"""WABL defuzzification of trapezoidal and discrete fuzzy numbers."""

from ._core import (
    DiscreteFN,
    DomainError,
    EmptyCutError,
    Interval,
    LevelTerm,
    NormalizationError,
    TrapezoidalFN,
    WablError,
    WablResult,
    closed_form_constant,
    closed_form_linear,
    closed_form_quadratic,
    continuous_density,
    discretize,
    normalize,
    pattern_weights,
    rank_alternatives,
    sum_means,
    wabl_continuous_closed,
    wabl_continuous_quadrature,
    wabl_discrete,
    wabl_trapezoid_pattern,
    weighted_sum_means,
)

__all__ = [name for name in dir() if not name.startswith("_")]
