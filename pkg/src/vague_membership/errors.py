"""Exception hierarchy for vague membership computations."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from vague_membership.partition import ValidationReport


class VagueError(Exception):
    """Base class for every error raised by this package."""


class DomainError(VagueError, ValueError):
    """A degree outside [0, 1] or an object outside the partition domain."""


class ConstructionError(VagueError, ValueError):
    """A malformed value: degenerate breakpoints, duplicate names, bad domain."""


class PreconditionError(VagueError, ValueError):
    """An operation was called with arguments violating its precondition."""


class UnsupportedError(VagueError, ValueError):
    """The requested combination is outside what is implemented."""


class BindingError(VagueError, KeyError):
    """An atom or target names a block the partition does not have."""

    def __init__(self, names: list[str] | set[str], known: list[str] | None = None):
        self.names = sorted(names)
        self.known = list(known or [])
        super().__init__(self._message())

    def _message(self) -> str:
        listed = ", ".join(repr(n) for n in self.names)
        if self.known:
            return f"unbound name(s) {listed}; known blocks: {', '.join(self.known)}"
        return f"unbound name(s) {listed}"

    def __str__(self) -> str:
        return self._message()


class CrossPartitionError(VagueError, ValueError):
    """Fuzzy sets over different partitions (or triples) cannot be combined."""


class ExprSyntaxError(VagueError, ValueError):
    """Lexing or parsing of a vague expression failed."""

    def __init__(self, text: str, position: int, expected: list[str], found: str):
        self.text = text
        self.position = position
        self.expected = sorted(expected)
        self.found = found
        if position >= len(text):
            message = "unexpected end of input"
        else:
            message = f"unexpected {found} at position {position}"
        if self.expected:
            message += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(message)


class GenerationError(VagueError, ValueError):
    """A random partition cannot be generated with the requested geometry."""


class DocumentError(VagueError, ValueError):
    """Base class for partition document problems."""


class DocumentSyntaxError(DocumentError):
    """The document is not well-formed JSON."""

    def __init__(self, message: str, byte_offset: int):
        self.byte_offset = byte_offset
        super().__init__(f"{message} (byte offset {byte_offset})")


class SchemaError(DocumentError):
    """The document is JSON but does not follow the partition schema."""

    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class PartitionValidationError(DocumentError):
    """The candidate is not a vague partition; carries the report."""

    def __init__(self, report: ValidationReport):
        self.report = report
        failed = ", ".join(str(c) for c in report.failed_conditions())
        super().__init__(f"not a vague partition: condition(s) {failed} fail")
