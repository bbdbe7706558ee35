"""Exact membership grades and pointwise operations on fuzzy sets.

Grades are :class:`fractions.Fraction` values in ``[0, 1]``.  Decimal input
such as ``"0.3"`` is converted exactly; no binary float is ever involved.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    GradeOutOfRange,
    NonTerminating,
    NotDecimal,
    UniverseMismatch,
    DuplicateLabel,
)

Grade = Fraction
GradeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_DECIMAL = re.compile(r"^(?:\d+(?:\.\d*)?|\.\d+)$")


def parse_grade(text: str) -> Fraction:
    """Parse a decimal numeral into an exact grade.

    >>> parse_grade("0.3")
    Fraction(3, 10)
    """
    if not isinstance(text, str):
        raise NotDecimal(f"expected a decimal string, got {type(text).__name__}")
    s = text.strip()
    if not _DECIMAL.match(s):
        raise NotDecimal(f"not a decimal numeral: {text!r}")
    value = Fraction(s)
    if value > ONE:
        raise GradeOutOfRange(f"grade {text} outside [0, 1]")
    return value


def as_grade(value: GradeLike) -> Fraction:
    """Coerce an int, Fraction or decimal string to a checked grade.

    Floats are rejected on purpose: their binary value is rarely the
    decimal the caller meant.
    """
    if isinstance(value, str):
        return parse_grade(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise NotDecimal(f"cannot use {value!r} as an exact grade")
    g = Fraction(value)
    if g < ZERO or g > ONE:
        raise GradeOutOfRange(f"grade {g} outside [0, 1]")
    return g


def format_grade(g: Fraction) -> str:
    """Shortest terminating decimal for ``g``.

    Raises NonTerminating when the denominator has a prime factor other
    than 2 or 5.
    """
    g = Fraction(g)
    den = g.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise NonTerminating(f"{g} has no terminating decimal expansion")
    places = max(twos, fives)
    scaled = g.numerator * 10**places // g.denominator
    if places == 0:
        return str(scaled)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:].rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def display_grade(g: Fraction) -> str:
    """Decimal when possible, otherwise ``(p/q)``; for human-readable output only."""
    try:
        return format_grade(g)
    except NonTerminating:
        return f"({g.numerator}/{g.denominator})"


class Universe:
    """A non-empty, ordered collection of distinct element labels."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        elems = tuple(elements)
        if not elems:
            raise UniverseMismatch("a universe needs at least one element")
        index = {}
        for i, e in enumerate(elems):
            if not isinstance(e, str):
                raise DuplicateLabel(f"element labels must be strings, got {e!r}")
            if e in index:
                raise DuplicateLabel(f"duplicate universe element {e!r}")
            index[e] = i
        self.elements = elems
        self._index = index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UniverseMismatch(f"{label!r} is not an element of the universe") from None

    def same_elements(self, other: "Universe") -> bool:
        return self is other or (
            len(self.elements) == len(other.elements) and self._index.keys() == other._index.keys()
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"


class FuzzySet:
    """A total map from a universe to grades.

    Equality is extensional: two fuzzy sets are equal when they range over
    the same elements and agree on every grade, whatever order the
    universes list their elements in.
    """

    __slots__ = ("universe", "grades", "_hash")

    def __init__(self, universe: Universe, grades: Sequence[GradeLike]):
        grades = tuple(as_grade(g) for g in grades)
        if len(grades) != len(universe):
            raise UniverseMismatch(
                f"expected {len(universe)} grades, got {len(grades)}"
            )
        self.universe = universe
        self.grades = grades
        self._hash = None

    @classmethod
    def _trusted(cls, universe: Universe, grades: tuple) -> "FuzzySet":
        obj = cls.__new__(cls)
        obj.universe = universe
        obj.grades = grades
        obj._hash = None
        return obj

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping[str, GradeLike]) -> "FuzzySet":
        """Build from sparse ``{element: grade}``; absent elements get 0."""
        grades = [ZERO] * len(universe)
        for label, g in mapping.items():
            grades[universe.index(label)] = as_grade(g)
        return cls._trusted(universe, tuple(grades))

    @classmethod
    def parse(cls, universe: Universe, text: str) -> "FuzzySet":
        """Parse the sparse notation ``{b/0.3, c/0.7}``."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        mapping = {}
        for item in filter(None, (p.strip() for p in body.split(","))):
            label, sep, value = item.rpartition("/")
            if not sep:
                raise NotDecimal(f"expected element/grade, got {item!r}")
            label = label.strip()
            if label in mapping:
                raise DuplicateLabel(f"element {label!r} listed twice")
            mapping[label] = value.strip()
        return cls.from_mapping(universe, mapping)

    @classmethod
    def empty(cls, universe: Universe) -> "FuzzySet":
        return cls._trusted(universe, (ZERO,) * len(universe))

    @classmethod
    def full(cls, universe: Universe) -> "FuzzySet":
        return cls._trusted(universe, (ONE,) * len(universe))

    def grade(self, element: str) -> Fraction:
        return self.grades[self.universe.index(element)]

    def items(self) -> Iterator[tuple[str, Fraction]]:
        return zip(self.universe.elements, self.grades)

    def aligned(self, other: "FuzzySet") -> tuple:
        """Grades of ``other`` listed in this set's universe order."""
        if other.universe is self.universe or other.universe.elements == self.universe.elements:
            return other.grades
        if not self.universe.same_elements(other.universe):
            raise UniverseMismatch("fuzzy sets are defined over different universes")
        idx = other.universe._index
        return tuple(other.grades[idx[e]] for e in self.universe.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzySet):
            return NotImplemented
        if not self.universe.same_elements(other.universe):
            return False
        return self.grades == self.aligned(other)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(zip(self.universe.elements, self.grades)))
        return self._hash

    # subset order, as for Python sets
    def __le__(self, other: "FuzzySet") -> bool:
        return fs_subset(self, other)

    def __lt__(self, other: "FuzzySet") -> bool:
        return fs_proper_subset(self, other)

    def __ge__(self, other: "FuzzySet") -> bool:
        return fs_subset(other, self)

    def __gt__(self, other: "FuzzySet") -> bool:
        return fs_proper_subset(other, self)

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        return fs_union(self, other)

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        return fs_intersection(self, other)

    def __invert__(self) -> "FuzzySet":
        return fs_complement(self)

    def __str__(self) -> str:
        parts = [f"{e}/{display_grade(g)}" for e, g in self.items() if g]
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"FuzzySet({self})"


def _pointwise(a: FuzzySet, b: FuzzySet, op: Callable[[Fraction, Fraction], Fraction]) -> FuzzySet:
    other = a.aligned(b)
    return FuzzySet._trusted(a.universe, tuple(op(x, y) for x, y in zip(a.grades, other)))


def fs_complement(a: FuzzySet) -> FuzzySet:
    return FuzzySet._trusted(a.universe, tuple(ONE - g for g in a.grades))


def fs_union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _pointwise(a, b, max)


def fs_intersection(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _pointwise(a, b, min)


def fs_product(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _pointwise(a, b, lambda x, y: x * y)


def fs_algebraic_sum(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    return _pointwise(a, b, lambda x, y: x + y - x * y)


def fs_subset(a: FuzzySet, b: FuzzySet) -> bool:
    return all(x <= y for x, y in zip(a.grades, a.aligned(b)))


def fs_proper_subset(a: FuzzySet, b: FuzzySet) -> bool:
    other = a.aligned(b)
    return all(x <= y for x, y in zip(a.grades, other)) and a.grades != other


def fs_is_empty(a: FuzzySet) -> bool:
    return all(g == ZERO for g in a.grades)


def fs_is_universal(a: FuzzySet) -> bool:
    return all(g == ONE for g in a.grades)
