"""Fuzzy soft sets, their image families, relations and operations.

A fuzzy soft set pairs an ordered parameter list with one fuzzy set per
parameter.  What matters is the family of images ``tau(f)``;
parameters are only names.  Binary operations therefore range
over the Cartesian product of the two parameter lists, and the resulting
labels are pairs ``(a, b)``.

Parameter labels are strings, or tuples of labels for composite
parameters.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    DuplicateParam,
    EmptyParams,
    FlattenCollision,
    MissingImage,
    UniverseMismatch,
)
from .fuzzy import (
    FuzzySet,
    Universe,
    fs_algebraic_sum,
    fs_complement,
    fs_intersection,
    fs_is_empty,
    fs_is_universal,
    fs_product,
    fs_proper_subset,
    fs_subset,
    fs_union,
)

ParamLabel = Union[str, tuple]


def check_label(label) -> None:
    if isinstance(label, str):
        return
    if isinstance(label, tuple) and len(label) >= 2:
        for part in label:
            check_label(part)
        return
    raise DuplicateParam(f"invalid parameter label {label!r}")


def format_label(label: ParamLabel) -> str:
    """Canonical text form: atoms as-is, composites as ``(left,right)``."""
    if isinstance(label, str):
        return label
    return "(" + ",".join(format_label(part) for part in label) + ")"


def flatten_label(label: ParamLabel) -> ParamLabel:
    if isinstance(label, str):
        return label
    atoms: list[str] = []

    def walk(lab):
        if isinstance(lab, str):
            atoms.append(lab)
        else:
            for part in lab:
                walk(part)

    walk(label)
    return tuple(atoms)


class Family:
    """A set of fuzzy sets that remembers first-occurrence order.

    Comparison with ``==`` is set equality; iteration order is stable so
    output is deterministic.
    """

    __slots__ = ("members", "_set")

    def __init__(self, members: Iterable[FuzzySet] = ()):
        seen: dict[FuzzySet, None] = {}
        for m in members:
            seen.setdefault(m, None)
        self.members = tuple(seen)
        self._set = frozenset(self.members)

    def __iter__(self) -> Iterator[FuzzySet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self._set

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Family):
            return self._set == other._set
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def as_set(self) -> frozenset:
        return self._set

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members) + "}"

    def __repr__(self) -> str:
        return f"Family({self})"


class FuzzySoftSet:
    """A parameterised family of fuzzy sets over one universe."""

    __slots__ = ("universe", "params", "images", "_by_label")

    def __init__(
        self,
        universe: Universe,
        params: Sequence[ParamLabel],
        images: Mapping[ParamLabel, FuzzySet],
    ):
        params = tuple(params)
        by_label: dict = {}
        for p in params:
            check_label(p)
            if p in by_label:
                raise DuplicateParam(f"parameter {format_label(p)} listed twice")
            by_label[p] = None
        for key in images:
            if key not in by_label:
                raise MissingImage(f"image given for unknown parameter {format_label(key)}")
        ordered = []
        for p in params:
            try:
                img = images[p]
            except KeyError:
                raise MissingImage(f"no image for parameter {format_label(p)}") from None
            if img.universe is not universe and img.universe.elements != universe.elements:
                if not universe.same_elements(img.universe):
                    raise UniverseMismatch(
                        f"image of {format_label(p)} is over a different universe"
                    )
                img = FuzzySet._trusted(universe, FuzzySet.empty(universe).aligned(img))
            ordered.append(img)
            by_label[p] = img
        self.universe = universe
        self.params = params
        self.images = tuple(ordered)
        self._by_label = by_label

    @classmethod
    def _trusted(cls, universe: Universe, params: tuple, images: tuple) -> "FuzzySoftSet":
        obj = cls.__new__(cls)
        obj.universe = universe
        obj.params = params
        obj.images = images
        obj._by_label = dict(zip(params, images))
        return obj

    @classmethod
    def from_sparse(cls, universe: Universe | Iterable[str], images: Mapping[ParamLabel, str]) -> "FuzzySoftSet":
        """Build from sparse notation, e.g. ``{"x": "{b/0.3, c/0.7}"}``."""
        if not isinstance(universe, Universe):
            universe = Universe(universe)
        return cls(
            universe,
            list(images),
            {p: FuzzySet.parse(universe, text) for p, text in images.items()},
        )

    def __getitem__(self, label: ParamLabel) -> FuzzySet:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"no parameter {format_label(label)}") from None

    def __len__(self) -> int:
        return len(self.params)

    def items(self) -> Iterator[tuple[ParamLabel, FuzzySet]]:
        return zip(self.params, self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzySoftSet):
            return NotImplemented
        return ss_equal(self, other)

    def __hash__(self) -> int:
        return hash(frozenset(self._by_label.items()))

    def __str__(self) -> str:
        return "{" + ", ".join(f"({format_label(p)}, {img})" for p, img in self.items()) + "}"

    def __repr__(self) -> str:
        return f"FuzzySoftSet({self})"


def make(universe: Universe, params: Sequence[ParamLabel], images: Mapping[ParamLabel, FuzzySet]) -> FuzzySoftSet:
    return FuzzySoftSet(universe, params, images)


def make_null(universe: Universe, params: Sequence[ParamLabel]) -> FuzzySoftSet:
    params = tuple(params)
    if not params:
        raise EmptyParams("a null soft set needs at least one parameter")
    empty = FuzzySet.empty(universe)
    return FuzzySoftSet(universe, params, {p: empty for p in params})


def make_absolute(universe: Universe, params: Sequence[ParamLabel]) -> FuzzySoftSet:
    params = tuple(params)
    if not params:
        raise EmptyParams("an absolute soft set needs at least one parameter")
    full = FuzzySet.full(universe)
    return FuzzySoftSet(universe, params, {p: full for p in params})


def make_empty(universe: Universe) -> FuzzySoftSet:
    return FuzzySoftSet._trusted(universe, (), ())


def tau(f: FuzzySoftSet) -> Family:
    return Family(f.images)


def is_empty_soft(f: FuzzySoftSet) -> bool:
    return not f.params


def is_null_soft(f: FuzzySoftSet) -> bool:
    return bool(f.params) and all(fs_is_empty(img) for img in f.images)


def is_absolute_soft(f: FuzzySoftSet) -> bool:
    return bool(f.params) and all(fs_is_universal(img) for img in f.images)


def _same_universe(f: FuzzySoftSet, g: FuzzySoftSet) -> None:
    if not f.universe.same_elements(g.universe):
        raise UniverseMismatch("soft sets are defined over different universes")


# --- relations -------------------------------------------------------------

def ss_equal(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    if not f.universe.same_elements(g.universe):
        return False
    if f._by_label.keys() != g._by_label.keys():
        return False
    return all(img == g._by_label[p] for p, img in f.items())


def ss_equivalent(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    _same_universe(f, g)
    return tau(f) == tau(g)


def approx_internal(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    """Every non-empty image of ``g`` contains some non-empty image of ``f``."""
    _same_universe(f, g)
    candidates = [s for s in tau(f) if not fs_is_empty(s)]
    return all(
        any(fs_subset(s, t) for s in candidates)
        for t in tau(g)
        if not fs_is_empty(t)
    )


def approx_external(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    """Every non-universal image of ``g`` lies inside some non-universal image of ``f``."""
    _same_universe(f, g)
    candidates = [s for s in tau(f) if not fs_is_universal(s)]
    return all(
        any(fs_subset(t, s) for s in candidates)
        for t in tau(g)
        if not fs_is_universal(t)
    )


def approx_internal_strict(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    return approx_internal(f, g) and not approx_internal(g, f)


def approx_external_strict(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    return approx_external(f, g) and not approx_external(g, f)


def equiv_internal(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    return approx_internal(f, g) and approx_internal(g, f)


def equiv_external(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    return approx_external(f, g) and approx_external(g, f)


def equiv_weak(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    return equiv_internal(f, g) and equiv_external(f, g)


def ss_isomorphic(f: FuzzySoftSet, g: FuzzySoftSet) -> bool:
    """True when some relabelling of parameters turns ``f`` into ``g``."""
    _same_universe(f, g)
    return Counter(f.images) == Counter(g.images)


# --- MIN / MAX ---------------------------------------------------------------

def minimal_members(family: Iterable[FuzzySet]) -> Family:
    members = [c for c in Family(family) if not fs_is_empty(c)]
    return Family(
        c for c in members if not any(fs_proper_subset(d, c) for d in members)
    )


def maximal_members(family: Iterable[FuzzySet]) -> Family:
    members = [c for c in Family(family) if not fs_is_universal(c)]
    return Family(
        c for c in members if not any(fs_proper_subset(c, d) for d in members)
    )


def min_family(f: FuzzySoftSet) -> Family:
    return minimal_members(f.images)


def max_family(f: FuzzySoftSet) -> Family:
    return maximal_members(f.images)


# --- operations --------------------------------------------------------------

def ss_complement(f: FuzzySoftSet) -> FuzzySoftSet:
    return FuzzySoftSet._trusted(f.universe, f.params, tuple(fs_complement(s) for s in f.images))


def _combine(f: FuzzySoftSet, g: FuzzySoftSet, op: Callable[[FuzzySet, FuzzySet], FuzzySet]) -> FuzzySoftSet:
    _same_universe(f, g)
    params = []
    images = []
    for a, s in f.items():
        for b, t in g.items():
            params.append((a, b))
            images.append(op(s, t))
    return FuzzySoftSet._trusted(f.universe, tuple(params), tuple(images))


def ss_union(f: FuzzySoftSet, g: FuzzySoftSet) -> FuzzySoftSet:
    return _combine(f, g, fs_union)


def ss_intersection(f: FuzzySoftSet, g: FuzzySoftSet) -> FuzzySoftSet:
    return _combine(f, g, fs_intersection)


def ss_product(f: FuzzySoftSet, g: FuzzySoftSet) -> FuzzySoftSet:
    return _combine(f, g, fs_product)


def ss_sum(f: FuzzySoftSet, g: FuzzySoftSet) -> FuzzySoftSet:
    return _combine(f, g, fs_algebraic_sum)


BINARY_OPS = {
    "union": ss_union,
    "intersection": ss_intersection,
    "product": ss_product,
    "sum": ss_sum,
}


def flatten_params(f: FuzzySoftSet) -> FuzzySoftSet:
    """Rewrite nested composite labels such as ``((a,b),c)`` to ``(a,b,c)``."""
    flat = tuple(flatten_label(p) for p in f.params)
    seen: dict = {}
    for orig, new in zip(f.params, flat):
        if new in seen:
            raise FlattenCollision(
                f"{format_label(seen[new])} and {format_label(orig)} both flatten to {format_label(new)}"
            )
        seen[new] = orig
    return FuzzySoftSet._trusted(f.universe, flat, f.images)


def relabel(f: FuzzySoftSet, mapping: Mapping[ParamLabel, ParamLabel]) -> FuzzySoftSet:
    """Rename parameters; labels missing from ``mapping`` are kept."""
    params = [mapping.get(p, p) for p in f.params]
    return FuzzySoftSet(f.universe, params, dict(zip(params, f.images)))
