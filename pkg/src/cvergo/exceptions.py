"""Exception hierarchy for cvergo."""


class CVErgoError(Exception):
    """Base class for all errors raised by cvergo."""


class NonPhysicalError(CVErgoError, ValueError):
    """Covariance matrix violates the uncertainty relation or is not a valid CM."""


class DegenerateBlockError(CVErgoError, ValueError):
    pass


class InvalidParamsError(CVErgoError, ValueError):
    pass


class NotSymplecticError(CVErgoError, ValueError):
    pass


class DomainError(CVErgoError, ValueError):
    pass


class DegenerateInputError(CVErgoError, ValueError):
    pass


class DegeneratePurityError(CVErgoError, ZeroDivisionError):
    """Global passive energy vanishes, so the relative gap is undefined."""


class SubtractionFromVacuumError(CVErgoError, ValueError):
    """Photon subtraction requested on a mode with no photons to remove."""


class EmptyRegionError(CVErgoError, ValueError):
    pass


class InsufficientLevelsError(CVErgoError, ValueError):
    pass


class NonGaussianInputError(CVErgoError, ValueError):
    """A Gaussian-only criterion was applied to a state flagged non-Gaussian."""
