"""Exception hierarchy shared across the package.

``InputError`` subclasses signal bad user data (CLI exit code 1);
``InternalCheckError`` signals a violated internal invariant, e.g. a
proven containment failing on concrete data (CLI exit code 2).
"""

from __future__ import annotations


class InputError(Exception):
    """Invalid input data or arguments."""


class ParseError(InputError):
    """Malformed structure file; carries a location string."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{message} (at {location})" if location else message)


class EmptyCellError(InputError):
    def __init__(self, row: int, col: int):
        self.row, self.col = row, col
        super().__init__(f"cell ({row}, {col}) is empty; every product must be a non-empty set")


class UnknownElementError(InputError):
    def __init__(self, label: str, row: int | None = None, col: int | None = None):
        self.label, self.row, self.col = label, row, col
        where = f" in cell ({row}, {col})" if row is not None else ""
        super().__init__(f"unknown element {label!r}{where}")


class DuplicateNameError(InputError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"duplicate carrier name {label!r}")


class NotDivisibleError(InputError):
    """Reproduction fails, so no division tables exist."""

    def __init__(self, side: str, index: int, missing: int, names: tuple[str, ...]):
        self.side, self.index, self.missing = side, index, missing
        labels = [names[i] for i in range(len(names)) if (missing >> i) & 1]
        super().__init__(
            f"{side} {names[index]!r} does not reproduce the carrier; missing {{{', '.join(labels)}}}"
        )


class NotClassicalError(InputError):
    def __init__(self, row: int, col: int):
        self.row, self.col = row, col
        super().__init__(f"cell ({row}, {col}) has more than one element; table is not a classical groupoid")


class NoInverseError(InputError):
    def __init__(self, x: int, label: str):
        self.x = x
        super().__init__(f"no inverse candidate for element {label!r}")


class AmbiguousInverseError(InputError):
    def __init__(self, x: int, label: str, candidates: tuple[int, ...]):
        self.x, self.candidates = x, candidates
        super().__init__(f"multiple inverse candidates for element {label!r}: indices {list(candidates)}")


class InvalidGroupError(InputError):
    def __init__(self, reason: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(f"not a group: {reason}" + (f" (witness {witness})" if witness else ""))


class NotSubgroupError(InputError):
    def __init__(self, reason: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(f"not a subgroup: {reason}" + (f" (witness {witness})" if witness else ""))


class BudgetExceededError(InputError):
    def __init__(self, message: str):
        super().__init__(message)


class DuplicateMemberWarning(UserWarning):
    """A cell listed the same element twice; duplicates were collapsed."""


class InternalCheckError(Exception):
    """An invariant that can only fail through an implementation defect."""
