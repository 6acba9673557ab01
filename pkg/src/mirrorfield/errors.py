"""Exception types shared across the package."""


class MirrorFieldError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(MirrorFieldError, ValueError):
    """An amplitude or parameter lies outside its allowed interval."""


class EnergyViolation(MirrorFieldError, ValueError):
    """Reflection, transmission and loss amplitudes do not conserve energy."""


class DegenerateTransparency(MirrorFieldError, ValueError):
    """A normalisation denominator 1 + r^2 - t^2 is numerically zero."""


class DomainError(MirrorFieldError, ValueError):
    """A physical argument (distance, alignment, side label) is out of domain."""


class QuadratureBudgetExceeded(MirrorFieldError, RuntimeError):
    """The two finest quadrature refinement levels disagree beyond tolerance."""


class ConfigError(MirrorFieldError, ValueError):
    """A sweep configuration or config file entry is invalid."""
