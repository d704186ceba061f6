"""Exception types raised by the reduction engine."""

from __future__ import annotations


class ReductForgeError(Exception):
    """Base class for all engine errors."""


class MalformedTable(ReductForgeError):
    def __init__(self, row: int, detail: str = ""):
        self.row = row
        msg = f"malformed table at row {row}"
        super().__init__(msg + (f": {detail}" if detail else ""))


class DuplicateAttribute(ReductForgeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate attribute name: {name!r}")


class UnknownDecision(ReductForgeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"decision column {name!r} not found in table")


class EmptyTable(ReductForgeError):
    def __init__(self) -> None:
        super().__init__("table has no objects or no attributes")


class UnknownAttribute(ReductForgeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown conditional attribute: {name!r}")


class UniverseMismatch(ReductForgeError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"operands live on different universes ({left} vs {right} objects)")


class EmptyAttributeSet(ReductForgeError):
    def __init__(self) -> None:
        super().__init__("attribute set must be nonempty")


class NotACover(ReductForgeError):
    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"family does not cover the universe: object {witness} is in no member")


class NotInRemaining(ReductForgeError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"attribute {name!r} is not in the remaining set under test")


class TooManyAttributes(ReductForgeError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"exhaustive search refused: {count} attributes exceeds cap {cap}")
