"""Exception types shared across the package."""


class DivGraphError(Exception):
    """Base class for all package errors."""


class ElementForeignToModel(DivGraphError):
    """An element built by one model was passed to a different model."""


class UndecidableWithoutBound(DivGraphError):
    """The question cannot be decided analytically and no search bound was given."""


class DegreeCapExceeded(UndecidableWithoutBound):
    """Irreducibility of a polynomial above the configured degree cap is unknown."""


class EmptyWindow(DivGraphError):
    """The window bounds exclude every element."""


class WindowTooLarge(DivGraphError):
    """The window exceeds the exhaustive-search guard."""


class NotT0(DivGraphError):
    """Two points of the space share a minimal open set."""


class ModelMismatch(DivGraphError):
    """An operation specific to one model kind was invoked on another."""


class ConfigError(DivGraphError):
    """Problem in a run configuration."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParseError(ConfigError):
    """Malformed configuration text."""


class UnknownModelKind(ConfigError):
    """The config names a model kind this package does not ship."""


class InvalidBounds(ConfigError):
    """A window or search bound is non-positive or missing."""
