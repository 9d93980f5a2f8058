"""Special functions and orthogonal polynomials with an identity checker."""

from .errors import (
    DepthExceeded,
    DivergenceError,
    DomainError,
    InsufficientSamples,
    NonConvergence,
    PoleError,
    SingularEndpoint,
    SpecfunError,
    UnknownFigure,
    UnknownIdentity,
)
from .numkernel import (
    DEFAULT_TOL,
    ComplexValue,
    EvalResult,
    ToleranceSpec,
    integrate_finite,
    integrate_semi_infinite,
    richardson_limit,
    sum_series,
)

__version__ = "0.1.0"

from . import bessel, gamma, hypergeom, integral_fns, orthopoly  # noqa: E402
