"""Exception hierarchy shared by every module of the library."""


class SpecfunError(Exception):
    """Base class for library errors."""


class NonConvergence(SpecfunError):
    """A series or iteration hit its term budget before meeting tolerance.

    Parameters
    ----------
    message : str
        Human readable diagnostic.
    partial : EvalResult, optional
        The partial result reached when the budget ran out.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DepthExceeded(SpecfunError):
    """Adaptive quadrature needed more subdivision than allowed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SingularEndpoint(SpecfunError):
    """Integrand is not finite at an endpoint and no substitution was given."""


class InsufficientSamples(SpecfunError, ValueError):
    """Extrapolation was asked for with too few or badly ordered samples."""


class DomainError(SpecfunError, ValueError):
    """Argument lies outside the domain of the function."""


class PoleError(DomainError):
    """Argument sits on a pole of the function."""


class DivergenceError(SpecfunError, ValueError):
    """A series is evaluated outside its radius of convergence."""


class UnknownIdentity(SpecfunError, KeyError):
    """No identity case is registered under the requested id."""

    def __str__(self):
        return Exception.__str__(self)


class UnknownFigure(SpecfunError, KeyError):
    """No figure is registered under the requested key."""

    def __str__(self):
        return Exception.__str__(self)
