"""Exception types shared across the package."""


class HGError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(HGError):
    """Evaluation requested at, or too close to, a pole."""


class ParameterError(HGError):
    """Arguments outside the documented domain of an operation."""


class SlitError(HGError):
    """Argument lies on the branch cut [1, +inf)."""


class ConvergenceError(HGError):
    """An iterative scheme failed to reach its stopping criterion."""


class QuadratureError(HGError):
    """Quadrature refinement did not stabilize within the level budget."""


class NotInTError(HGError):
    """The function is not a moment generating function, so no
    probability measure on [0, 1] represents it."""


class InconsistentSequenceError(HGError):
    """Sequence contradicts the structure implied by its own degeneracy
    (it cannot be a moment sequence)."""
