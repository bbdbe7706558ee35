"""Matrix form of fuzzy soft sets.

Rows follow the universe order and columns the parameter order, so entry
``(i, j)`` is the grade of element ``i`` in the image of parameter ``j``.
A column is a plain tuple of grades.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DuplicateLabel, EntryOutOfRange, LengthMismatch, OutOfRange, RowMismatch
from .fuzzy import ONE, ZERO, FuzzySet, Universe, as_grade, display_grade
from .softset import FuzzySoftSet, ParamLabel, check_label, format_label

Column = tuple


@dataclass(frozen=True)
class SoftMatrix:
    row_labels: tuple
    col_labels: tuple
    rows: tuple  # n tuples of m grades

    def __post_init__(self):
        if not self.row_labels:
            raise RowMismatch("a soft matrix needs at least one row")
        if len(set(self.row_labels)) != len(self.row_labels):
            raise DuplicateLabel("duplicate row label")
        for c in self.col_labels:
            check_label(c)
        if len(set(self.col_labels)) != len(self.col_labels):
            raise DuplicateLabel("duplicate column label")
        if len(self.rows) != len(self.row_labels):
            raise RowMismatch(f"{len(self.row_labels)} row labels but {len(self.rows)} rows")
        for row in self.rows:
            if len(row) != len(self.col_labels):
                raise LengthMismatch(
                    f"row has {len(row)} entries, expected {len(self.col_labels)}"
                )

    @classmethod
    def build(cls, row_labels: Sequence[str], col_labels: Sequence[ParamLabel],
              rows: Iterable[Sequence]) -> "SoftMatrix":
        """Construct from arbitrary grade-like entries, validating each one."""
        checked = []
        for row in rows:
            out = []
            for v in row:
                try:
                    out.append(as_grade(v))
                except OutOfRange as exc:
                    raise EntryOutOfRange(str(exc)) from None
            checked.append(tuple(out))
        return cls(tuple(row_labels), tuple(col_labels), tuple(checked))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def column(self, j: int) -> Column:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> Iterator[Column]:
        return (self.column(j) for j in range(len(self.col_labels)))

    def __str__(self) -> str:
        head = [""] + [format_label(c) for c in self.col_labels]
        body = [[r] + [display_grade(g) for g in row] for r, row in zip(self.row_labels, self.rows)]
        widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in [head] + body
        )


def _from_columns(row_labels: tuple, col_labels: Sequence, cols: Sequence[Column]) -> SoftMatrix:
    rows = tuple(tuple(c[i] for c in cols) for i in range(len(row_labels)))
    return SoftMatrix(row_labels, tuple(col_labels), rows)


def to_matrix(f: FuzzySoftSet) -> SoftMatrix:
    return _from_columns(f.universe.elements, f.params, [img.grades for img in f.images])


def from_matrix(m: SoftMatrix) -> FuzzySoftSet:
    universe = Universe(m.row_labels)
    images = {}
    for label, col in zip(m.col_labels, m.columns()):
        for g in col:
            if g < ZERO or g > ONE:
                raise EntryOutOfRange(f"entry {g} outside [0, 1]")
        images[label] = FuzzySet._trusted(universe, col)
    return FuzzySoftSet(universe, m.col_labels, images)


class ColumnSet:
    """Distinct columns of a matrix, in first-occurrence order."""

    __slots__ = ("members", "_set")

    def __init__(self, columns: Iterable[Column] = ()):
        self.members = tuple(dict.fromkeys(tuple(c) for c in columns))
        self._set = frozenset(self.members)

    def __iter__(self) -> Iterator[Column]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, col: object) -> bool:
        return col in self._set

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ColumnSet):
            return self._set == other._set
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        cols = ", ".join("(" + ",".join(display_grade(g) for g in c) + ")" for c in self.members)
        return f"ColumnSet({{{cols}}})"


def column_set(m: SoftMatrix) -> ColumnSet:
    return ColumnSet(m.columns())


class Ordering(enum.Enum):
    EQ = "EQ"
    LT = "LT"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def _check_lengths(c: Column, d: Column) -> None:
    if len(c) != len(d):
        raise LengthMismatch(f"columns of length {len(c)} and {len(d)}")


def col_compare(c: Column, d: Column) -> Ordering:
    _check_lengths(c, d)
    le = all(x <= y for x, y in zip(c, d))
    ge = all(x >= y for x, y in zip(c, d))
    if le and ge:
        return Ordering.EQ
    if le:
        return Ordering.LT
    if ge:
        return Ordering.GT
    return Ordering.INCOMPARABLE


def col_le(c: Column, d: Column) -> bool:
    return col_compare(c, d) in (Ordering.LT, Ordering.EQ)


def col_ge(c: Column, d: Column) -> bool:
    return col_compare(c, d) in (Ordering.GT, Ordering.EQ)


def col_max(c: Column, d: Column) -> Column:
    _check_lengths(c, d)
    return tuple(max(x, y) for x, y in zip(c, d))


def col_min(c: Column, d: Column) -> Column:
    _check_lengths(c, d)
    return tuple(min(x, y) for x, y in zip(c, d))


def _is_zero(c: Column) -> bool:
    return all(x == ZERO for x in c)


def _is_unit(c: Column) -> bool:
    return all(x == ONE for x in c)


def _check_rows(m: SoftMatrix, n: SoftMatrix) -> None:
    if m.row_labels != n.row_labels:
        raise RowMismatch("matrices have different row labels or row order")


def m_complement(m: SoftMatrix) -> SoftMatrix:
    rows = tuple(tuple(ONE - x for x in row) for row in m.rows)
    return SoftMatrix(m.row_labels, m.col_labels, rows)


def _combine(m: SoftMatrix, n: SoftMatrix, op) -> SoftMatrix:
    _check_rows(m, n)
    ncols = list(n.columns())
    labels, cols = [], []
    for a, c in zip(m.col_labels, m.columns()):
        for b, d in zip(n.col_labels, ncols):
            labels.append((a, b))
            cols.append(op(c, d))
    return _from_columns(m.row_labels, labels, cols)


def m_intersection(m: SoftMatrix, n: SoftMatrix) -> SoftMatrix:
    return _combine(m, n, col_min)


def m_union(m: SoftMatrix, n: SoftMatrix) -> SoftMatrix:
    return _combine(m, n, col_max)


def m_equal_soft(m: SoftMatrix, n: SoftMatrix, labels_equal: Optional[bool] = None) -> bool:
    """Matrix-level equality of the represented soft sets.

    ``labels_equal`` asserts (or denies) that the two parameter sets are the
    same; when omitted it is read off the column labels.
    """
    if labels_equal is None:
        labels_equal = set(m.col_labels) == set(n.col_labels)
    return labels_equal and m.row_labels == n.row_labels and m.rows == n.rows


def m_equivalent(m: SoftMatrix, n: SoftMatrix) -> bool:
    _check_rows(m, n)
    return column_set(m) == column_set(n)


def m_min_columns(m: SoftMatrix) -> ColumnSet:
    cols = [c for c in column_set(m) if not _is_zero(c)]
    return ColumnSet(
        c for c in cols if not any(col_compare(d, c) is Ordering.LT for d in cols)
    )


def m_max_columns(m: SoftMatrix) -> ColumnSet:
    cols = [c for c in column_set(m) if not _is_unit(c)]
    return ColumnSet(
        c for c in cols if not any(col_compare(d, c) is Ordering.GT for d in cols)
    )


def m_approx_internal(m: SoftMatrix, n: SoftMatrix) -> bool:
    _check_rows(m, n)
    mine = [c for c in column_set(m) if not _is_zero(c)]
    return all(
        any(col_le(c, d) for c in mine) for d in column_set(n) if not _is_zero(d)
    )


def m_approx_external(m: SoftMatrix, n: SoftMatrix) -> bool:
    _check_rows(m, n)
    mine = [c for c in column_set(m) if not _is_unit(c)]
    return all(
        any(col_ge(c, d) for c in mine) for d in column_set(n) if not _is_unit(d)
    )
