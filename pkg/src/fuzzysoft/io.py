"""JSON soft-set documents and the CSV matrix format.

A soft-set document is a JSON object::

    {
      "universe": ["a", "b", "c"],
      "parameters": ["x", "y", ["x", "p"]],
      "grades": [
        ["0", "0", "0.5"],
        ["0.3", "0", "0"],
        ["0.7", "0.1", "0"]
      ]
    }

``grades`` has one row per universe element and one column per parameter.
Cells are decimal strings so no value ever passes through a binary float.
Composite parameter labels are nested two-element arrays.

The CSV form has a header row whose first cell is empty and whose other
cells are parameter labels (composites written ``(a,b)``), followed by one
row per universe element: the element label, then decimal grades.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from .errors import (
    DuplicateLabel,
    DuplicateParam,
    GradeOutOfRange,
    Malformed,
    NotDecimal,
    OutOfRange,
    ShapeMismatch,
)
from .fuzzy import FuzzySet, Universe, format_grade, parse_grade
from .matrix import SoftMatrix
from .softset import Family, FuzzySoftSet, ParamLabel, format_label


def _label_from_json(obj: Any) -> ParamLabel:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, list) and len(obj) >= 2:
        return tuple(_label_from_json(x) for x in obj)
    raise Malformed(f"bad parameter label {obj!r}")


def _label_to_json(label: ParamLabel) -> Any:
    if isinstance(label, str):
        return label
    return [_label_to_json(x) for x in label]


def _cell(text: Any) -> Any:
    if not isinstance(text, str):
        raise Malformed(f"grades must be decimal strings, got {text!r}")
    try:
        return parse_grade(text)
    except OutOfRange as exc:
        raise GradeOutOfRange(str(exc)) from None
    except NotDecimal as exc:
        raise Malformed(str(exc)) from None


def soft_set_from_data(data: Any) -> FuzzySoftSet:
    if not isinstance(data, dict):
        raise Malformed("document must be a JSON object")
    missing = {"universe", "parameters", "grades"} - data.keys()
    if missing:
        raise Malformed(f"document lacks {', '.join(sorted(missing))}")
    elems, params, grid = data["universe"], data["parameters"], data["grades"]
    if not isinstance(elems, list) or not all(isinstance(e, str) for e in elems):
        raise Malformed("universe must be a list of strings")
    if not isinstance(params, list) or not isinstance(grid, list):
        raise Malformed("parameters and grades must be lists")
    if len(set(elems)) != len(elems):
        raise DuplicateLabel("duplicate universe element")
    universe = Universe(elems)
    labels = [_label_from_json(p) for p in params]
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("duplicate parameter label")
    if len(grid) != len(elems):
        raise ShapeMismatch(f"{len(elems)} universe elements but {len(grid)} grade rows")
    for row in grid:
        if not isinstance(row, list) or len(row) != len(labels):
            raise ShapeMismatch(f"each grade row needs {len(labels)} cells")
    cells = [[_cell(c) for c in row] for row in grid]
    images = {
        p: FuzzySet._trusted(universe, tuple(row[j] for row in cells))
        for j, p in enumerate(labels)
    }
    try:
        return FuzzySoftSet(universe, labels, images)
    except DuplicateParam as exc:
        raise DuplicateLabel(str(exc)) from None


def parse_document(text: str) -> FuzzySoftSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise Malformed(f"not valid JSON: {exc}") from None
    return soft_set_from_data(data)


def _dump(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _grid_lines(rows: list[list[str]]) -> str:
    if not rows:
        return "[]"
    return "[\n" + ",\n".join("    " + _dump(r) for r in rows) + "\n  ]"


def serialize_document(f: FuzzySoftSet) -> str:
    """Canonical text of a soft-set document (ends with a newline)."""
    rows = [
        [format_grade(img.grades[i]) for img in f.images]
        for i in range(len(f.universe))
    ]
    return (
        "{\n"
        f'  "universe": {_dump(list(f.universe.elements))},\n'
        f'  "parameters": {_dump([_label_to_json(p) for p in f.params])},\n'
        f'  "grades": {_grid_lines(rows)}\n'
        "}\n"
    )


def serialize_family(family: Family, universe: Universe, kind: str) -> str:
    """A family as a JSON fragment: one grade column per member."""
    members = [[format_grade(g) for g in FuzzySet.empty(universe).aligned(m)] for m in family]
    return (
        "{\n"
        f'  "family": {_dump(kind)},\n'
        f'  "universe": {_dump(list(universe.elements))},\n'
        f'  "members": {_grid_lines(members)}\n'
        "}\n"
    )


# --- CSV -----------------------------------------------------------------------

def parse_label_text(text: str) -> ParamLabel:
    """Inverse of :func:`format_label`; atoms must not contain ``(),``."""
    text = text.strip()
    pos = 0

    def parse():
        nonlocal pos
        if pos < len(text) and text[pos] == "(":
            pos += 1
            parts = [parse()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                parts.append(parse())
            if pos >= len(text) or text[pos] != ")" or len(parts) < 2:
                raise Malformed(f"bad composite label {text!r}")
            pos += 1
            return tuple(parts)
        start = pos
        while pos < len(text) and text[pos] not in "(),":
            pos += 1
        if start == pos:
            raise Malformed(f"empty label in {text!r}")
        return text[start:pos]

    label = parse()
    if pos != len(text):
        raise Malformed(f"trailing characters in label {text!r}")
    return label


def matrix_to_csv(m: SoftMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [format_label(c) for c in m.col_labels])
    for label, row in zip(m.row_labels, m.rows):
        w.writerow([label] + [format_grade(g) for g in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> SoftMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise Malformed("empty CSV")
    header, body = rows[0], rows[1:]
    cols = [parse_label_text(c) for c in header[1:]]
    grid, labels = [], []
    for r in body:
        if len(r) != len(header):
            raise ShapeMismatch(f"row {r[0]!r} has {len(r) - 1} cells, expected {len(cols)}")
        labels.append(r[0])
        grid.append([_cell(c.strip()) for c in r[1:]])
    if not labels:
        raise ShapeMismatch("matrix has no rows")
    return SoftMatrix.build(labels, cols, grid)
