"""Exception types shared across the package."""

from __future__ import annotations


class CistError(Exception):
    """Base class for every error raised by hypercist."""


class DomainError(CistError, ValueError):
    """An argument lies outside the domain of an operation."""


class TreeValidationError(CistError, ValueError):
    """An edge list does not describe a spanning tree of the hypercube.

    ``problems`` holds every violation found, not only the first.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        lines = "; ".join(str(p) for p in self.problems)
        super().__init__(f"invalid spanning tree: {lines}")


class TranscriptionError(CistError):
    """The embedded Q7 data failed validation."""


class InapplicableError(CistError, ValueError):
    """The precondition of a lemma does not hold for the given arguments."""


class CostGuardError(CistError):
    """A request exceeds the size limit of an exhaustive check."""


class UnverifiedFamilyError(CistError):
    """A family was required to satisfy the CIST criterion but does not."""


class FormatError(CistError, ValueError):
    """A serialized document could not be parsed."""
