"""Exception types shared across the package."""

from __future__ import annotations


class FormatError(ValueError):
    """Malformed graph or path-system text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class PathError(ValueError):
    """A vertex sequence that is not a simple path of the host graph."""


class DecodeError(ValueError):
    """A probe outcome that matches no edge signature."""


class CatalogOverflow(RuntimeError):
    """Simple-path enumeration exceeded the configured cap."""


class DecompositionError(RuntimeError):
    """A decomposition bound enforced at runtime could not be met."""


class StrategyFailed(RuntimeError):
    """A construction strategy could not complete; ``stage`` names the step."""

    def __init__(self, stage: str, message: str = ""):
        self.stage = stage
        super().__init__(f"{stage}: {message}" if message else stage)
