"""Exception hierarchy shared across the package.

Every error the library raises derives from :class:`FtopError`, so callers
(notably the CLI) can map failures to exit codes without inspecting
messages.
"""

from __future__ import annotations

__all__ = [
    "FtopError",
    "DegreeRangeError",
    "UniverseMismatchError",
    "BackendMismatchError",
    "ResourceCapError",
    "OffGridError",
    "HierarchyInvariantError",
    "DocumentError",
]


class FtopError(Exception):
    """Base class for all errors raised by this package."""


class DegreeRangeError(FtopError, ValueError):
    """A membership degree fell outside the closed unit interval."""


class UniverseMismatchError(FtopError, ValueError):
    """Two finite fuzzy sets over different universes were combined."""


class BackendMismatchError(FtopError, TypeError):
    """Finite and piecewise-linear values were mixed in one operation."""


class ResourceCapError(FtopError, RuntimeError):
    """A generation cap or enumeration budget would be exceeded.

    Raised instead of silently truncating: a partial family would corrupt
    every downstream verdict.
    """


class OffGridError(FtopError, ValueError):
    """Degrees do not all lie on the requested enumeration grid.

    ``required_k`` is the smallest denominator whose grid contains every
    offending degree; retry with that grid (or any multiple of it).
    """

    def __init__(self, message: str, required_k: int | None = None):
        super().__init__(message)
        self.required_k = required_k


class HierarchyInvariantError(FtopError, AssertionError):
    """A classification violated the openness implication chain.

    The chain is a proved property of the operators, valid in every
    space, so this firing always indicates a bug in the operators,
    never bad input.
    """


class DocumentError(FtopError, ValueError):
    """A space or function document failed to parse or validate.

    ``code`` is a stable machine-readable identifier; ``where`` is a
    dot-path into the document pointing at the offending node.
    """

    def __init__(self, code: str, message: str, where: str = "$"):
        super().__init__(f"{where}: {message}")
        self.code = code
        self.where = where
