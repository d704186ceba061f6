"""Decision tables: the categorical information systems everything else consumes.

A table is a rectangle of opaque categorical symbols, one row per object and
one column per attribute, with an optional designated decision column.  When
no decision column is named the table uses the ``identity`` policy: every
object is its own decision class, so preserving discernibility means keeping
all objects apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Union

from .errors import (
    DuplicateAttribute,
    EmptyTable,
    MalformedTable,
    ReductForgeError,
    UnknownAttribute,
    UnknownDecision,
)

IDENTITY = "identity"

CsvSource = Union[bytes, str, IO[bytes], IO[str]]


@dataclass(frozen=True)
class InformationSystem:
    """Immutable decision table over categorical values.

    ``decision`` is either the name of an attribute (excluded from the
    conditional set) or ``None`` for the identity policy.
    """

    object_ids: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    decision: str | None = None

    def __post_init__(self) -> None:
        if not self.object_ids or not self.attributes:
            raise EmptyTable()
        seen: set[str] = set()
        for name in self.attributes:
            if name in seen:
                raise DuplicateAttribute(name)
            seen.add(name)
        width = len(self.attributes)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise MalformedTable(i + 1, f"expected {width} cells, got {len(row)}")
        if len(self.rows) != len(self.object_ids):
            raise MalformedTable(len(self.rows), "object id count differs from row count")
        if self.decision is not None and self.decision not in self.attributes:
            raise UnknownDecision(self.decision)

    @property
    def object_count(self) -> int:
        return len(self.rows)

    def column_index(self, attribute: str) -> int:
        try:
            return self.attributes.index(attribute)
        except ValueError:
            raise UnknownAttribute(attribute) from None

    def value(self, obj: int, attribute: str) -> str:
        return self.rows[obj][self.column_index(attribute)]

    def column(self, attribute: str) -> tuple[str, ...]:
        idx = self.column_index(attribute)
        return tuple(row[idx] for row in self.rows)


def conditional_attributes(table: InformationSystem) -> tuple[str, ...]:
    """Attributes minus the decision column, in table order."""
    if table.decision is None:
        return table.attributes
    return tuple(a for a in table.attributes if a != table.decision)


def _read_text(source: CsvSource) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def load_csv(
    source: CsvSource,
    *,
    has_header: bool = True,
    decision: str | None = None,
) -> InformationSystem:
    """Parse a comma-separated table into an :class:`InformationSystem`.

    Cells are split on bare commas (no quoting in v1, so a cell containing a
    comma shows up as a ragged row) and stored as trimmed strings.  With a
    header, a column literally named ``id`` is consumed as object labels
    rather than as an attribute; without one, attributes are auto-named
    ``c1..cn`` and labels are row ordinals.  ``decision`` may be an attribute
    name or the string ``"identity"`` (same as ``None``).
    """
    text = _read_text(source)
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(n, line) for n, line in lines if line]
    if not lines:
        raise EmptyTable()

    if has_header:
        names = [cell.strip() for cell in lines[0][1].split(",")]
        body = lines[1:]
    else:
        names = [f"c{i + 1}" for i in range(len(lines[0][1].split(",")))]
        body = lines

    if not body:
        raise EmptyTable()

    width = len(names)
    parsed: list[tuple[int, list[str]]] = []
    for line_no, line in body:
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != width:
            raise MalformedTable(line_no, f"expected {width} cells, got {len(cells)}")
        parsed.append((line_no, cells))

    id_col = names.index("id") if "id" in names else None
    if id_col is not None:
        attributes = tuple(n for i, n in enumerate(names) if i != id_col)
        object_ids = tuple(cells[id_col] for _, cells in parsed)
        rows = tuple(
            tuple(c for i, c in enumerate(cells) if i != id_col) for _, cells in parsed
        )
    else:
        attributes = tuple(names)
        object_ids = tuple(str(i) for i in range(len(parsed)))
        rows = tuple(tuple(cells) for _, cells in parsed)

    if decision == IDENTITY:
        decision = None
    if decision is not None and decision not in attributes:
        raise UnknownDecision(decision)

    return InformationSystem(
        object_ids=object_ids, attributes=attributes, rows=rows, decision=decision
    )


# Ten digits of a seven-segment display; segment names a..g are the
# conditional attributes and each digit is its own decision class.
SEVEN_SEGMENT_CSV = """\
id,a,b,c,d,e,f,g
0,1,1,1,1,1,1,0
1,0,1,1,0,0,0,0
2,1,1,0,1,1,0,1
3,1,1,1,1,0,0,1
4,0,1,1,0,0,1,1
5,1,0,1,1,0,1,1
6,1,0,1,1,1,1,1
7,1,1,1,0,0,0,0
8,1,1,1,1,1,1,1
9,1,1,1,1,0,1,1
"""


def builtin_seven_segment() -> InformationSystem:
    """The bundled ten-digit seven-segment table (identity decision)."""
    return load_csv(SEVEN_SEGMENT_CSV.encode("utf-8"), has_header=True, decision=None)


_BUILTINS = {"seven-segment": builtin_seven_segment}


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILTINS))


def load_builtin(name: str) -> InformationSystem:
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ReductForgeError(f"unknown builtin dataset: {name!r}") from None
    return factory()
