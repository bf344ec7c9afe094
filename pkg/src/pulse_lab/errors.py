"""Exception types shared across the package."""


class PulseLabError(Exception):
    """Base class for all pulse-lab errors."""


class ShapeMismatch(PulseLabError):
    """A field, metric, or operator does not match the grid it is used with."""


class NonPositiveRadius(PulseLabError):
    """A radius family evaluated to a non-positive radius somewhere on the grid."""


class NoConvergence(PulseLabError):
    """An iterative solver exhausted its iteration budget."""


class CollapsedToZero(PulseLabError):
    """Newton iteration fell into the trivial zero solution."""


class BoundaryContamination(PulseLabError):
    """Profile tails at the domain ends are too large; the domain is too short."""


class FactorizationSingular(PulseLabError):
    """A shifted factorization hit the spectrum; retry with a nudged shift."""


class DegenerateNormalization(PulseLabError):
    """Pairing of the zero mode with its adjoint mode is numerically degenerate."""


class NearSingular(PulseLabError):
    """Resolvent evaluation requested too close to the spectrum."""


class Blowup(PulseLabError):
    """Time integration produced unbounded values (instability or bad step size)."""


class ObserverFailure(PulseLabError):
    """An observer callback raised; integration treats this as non-fatal."""


class OutsideTube(PulseLabError):
    """State is outside the configured tubular neighborhood of the pulse manifold."""


class NewtonStall(PulseLabError):
    """Scalar Newton iteration for the modulation shift failed to converge."""


class UnreliableFit(PulseLabError):
    """A decay fit did not meet the reliability threshold."""


class ConfigError(PulseLabError):
    """Experiment configuration is malformed or contains unknown keys."""
