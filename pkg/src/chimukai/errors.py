"""Exception types shared across the package."""


class ChimukaiError(Exception):
    """Base class for all package errors."""


class RingMismatchError(ChimukaiError):
    """Operands belong to different rings."""


class CoefficientKindError(ChimukaiError):
    """Operation not defined for this coefficient kind (e.g. floats in Buchberger)."""


class NotHomogeneousError(ChimukaiError):
    """Graded input required; suggest homogenizing (possibly with weights)."""


class InadmissiblePairError(ChimukaiError):
    """Tensor product does not have finite length."""


class ResolutionLengthError(ChimukaiError):
    """Free resolution exceeded the requested maximum length."""


class UnsupportedDescriptorError(ChimukaiError):
    """Sheaf descriptor outside the supported fragment."""


class SceneValidationError(ChimukaiError):
    """Scene payload failed schema validation."""


class CancelledError(ChimukaiError):
    """Cooperative cancellation was requested."""
