"""Exception hierarchy shared by all masslab modules."""


class MasslabError(Exception):
    """Base class for all masslab errors."""


class InvalidParameter(MasslabError):
    """A constructor or operation received an out-of-range parameter."""


class SelfIntersectingBoundary(MasslabError):
    """Sampled boundary curve intersects itself."""


class OriginOutsideDomain(MasslabError):
    """Winding number of the boundary around the origin is not 1."""


class MapSolverDiverged(MasslabError):
    """Boundary integral equation for the disk map failed to resolve."""


class DomainTooDistorted(MasslabError):
    """Conformal factor under/overflow; carries a condition estimate."""

    def __init__(self, message, condition_estimate=None):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class PointOutsideDomain(MasslabError):
    """Point handed to a map evaluation lies outside its domain of definition."""


class NonPositivePotential(MasslabError):
    """A potential that must be strictly positive is not."""


class SingularityMismatch(MasslabError):
    """Singularity exponent outside the admissible range (alpha <= -1)."""


class NonFiniteValue(MasslabError):
    """NaN or infinity encountered where finite data is required."""


class NewtonDiverged(MasslabError):
    """Newton iteration failed; carries the last iterate and residual history."""

    def __init__(self, message, last_iterate=None, residual_history=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual_history = residual_history or []


class PositivityLost(MasslabError):
    """A solution required to be positive has non-positive interior values."""


class SingularMatrix(MasslabError):
    """Coupling matrix is singular."""


class NotPositiveDefinite(MasslabError):
    """Coupling matrix is not symmetric positive definite."""


class NotConverged(MasslabError):
    """Operation requires a converged solution."""


class UnsupportedProblem(MasslabError):
    """Problem variant not handled by this operation."""


class ConditionsViolated(MasslabError):
    """Structural conditions on the potential/nonlinearity fail on samples."""


class ConfigError(MasslabError):
    """Experiment configuration is malformed."""
