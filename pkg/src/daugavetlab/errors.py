"""Exception types shared across the package."""


class ModelError(Exception):
    """Invalid use of the finite-atom model (bad index, bad value, ...)."""


class SpaceMismatchError(ModelError):
    """Two values built over different measure spaces were combined."""


class EmptySetError(ModelError):
    """An operation that needs positive mass received the empty set."""


class ParameterError(ModelError):
    """A numeric parameter is outside its admissible range."""


class CapacityExceededError(ModelError):
    """The requested computation exceeds the configured size limits."""


class SpecError(ModelError):
    """An operator description is malformed."""


class NotNearDaugavetError(ModelError):
    """Refinement was asked for a set that carries no near-extremal pair.

    Carries the two mixed norms ||u+v||, ||u-v|| and the threshold they
    were tested against, so callers can report diagnostics.
    """

    def __init__(self, norm_plus: float, norm_minus: float, threshold: float):
        self.norm_plus = norm_plus
        self.norm_minus = norm_minus
        self.threshold = threshold
        super().__init__(
            f"need ||u+v|| and ||u-v|| above {threshold:.6g}, "
            f"got {norm_plus:.6g} and {norm_minus:.6g}"
        )


class DegenerateSplitError(ModelError):
    """Refinement removed every atom (eps too large for this model)."""


class PostconditionFailure(ModelError):
    """A runtime-checked bound failed; this indicates an implementation bug."""
