class AffHeckeError(Exception):
    pass


class ConfigurationError(AffHeckeError, ValueError):
    """Unknown Cartan type, bad weight function, malformed CLI input."""


class DomainError(AffHeckeError, ValueError):
    """An argument lies outside the domain of an operation."""


class UnsupportedConfiguration(AffHeckeError):
    """The configuration is valid but not handled (e.g. 0 is not a special point)."""


class ConventionError(AffHeckeError, AssertionError):
    """Two independent computations that must agree did not."""
