"""Panel decisions by intersecting evaluators' fuzzy soft sets.

Each evaluator grades the same candidates (parameters) on the same
criteria (universe).  The panel's soft sets are intersected, and only the
diagonal entries ``H(c, c, ..., c)`` are kept: the grades every evaluator
gave candidate ``c``, combined by ``min``.  The candidate whose diagonal
set contains all the others wins.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Mapping, Optional

from .errors import (
    EmptyDiagonal,
    NotAProductSoftSet,
    PanelTooSmall,
    ParamSetMismatch,
    UniverseMismatch,
)
from .fuzzy import FuzzySet, fs_proper_subset, fs_subset
from .softset import FuzzySoftSet, ParamLabel, flatten_params, ss_intersection


class Method(enum.Enum):
    DOMINANCE = "Dominance"
    SCORE_FALLBACK = "ScoreFallback"


class Flag(enum.Enum):
    NO_DOMINANT_CANDIDATE = "NoDominantCandidate"
    SCORE_TIE = "ScoreTie"


@dataclass(frozen=True)
class Panel:
    evaluators: tuple  # of (name, FuzzySoftSet)

    def __post_init__(self):
        evals = tuple(self.evaluators)
        object.__setattr__(self, "evaluators", evals)
        if len(evals) < 2:
            raise PanelTooSmall(f"a panel needs at least 2 evaluators, got {len(evals)}")
        _, first = evals[0]
        labels = set(first.params)
        for name, f in evals[1:]:
            if not f.universe.same_elements(first.universe):
                raise UniverseMismatch(f"evaluator {name!r} grades different criteria")
            if set(f.params) != labels:
                raise ParamSetMismatch(f"evaluator {name!r} grades different candidates")

    @property
    def candidates(self) -> tuple:
        return self.evaluators[0][1].params


@dataclass(frozen=True)
class DecisionReport:
    diagonal: Mapping[ParamLabel, FuzzySet]
    dominance: frozenset  # (winner, loser) pairs
    winner: Optional[ParamLabel]
    method: Method
    scores: Mapping[ParamLabel, Fraction]
    flags: tuple = ()
    tied: tuple = field(default=())


def aggregate_panel(panel: Panel) -> FuzzySoftSet:
    """Intersect the evaluators' soft sets left to right.

    The result's parameters are flat k-tuples of candidate labels.
    """
    # align everyone to the first evaluator's candidate order
    order = panel.candidates
    sets = [
        FuzzySoftSet(f.universe, order, {c: f[c] for c in order})
        for _, f in panel.evaluators
    ]
    h = reduce(ss_intersection, sets)
    return flatten_params(h) if len(sets) > 2 else h


def diagonal(h: FuzzySoftSet, k: int) -> dict:
    """Entries of ``h`` whose ``k`` coordinates coincide, keyed by candidate."""
    if k < 1:
        raise NotAProductSoftSet("k must be positive")
    if k == 1:
        return dict(h.items())
    coords: list[dict] = [dict() for _ in range(k)]
    for p in h.params:
        if not isinstance(p, tuple) or len(p) != k:
            raise NotAProductSoftSet(f"parameter {p!r} is not a {k}-tuple")
        for pos, lab in enumerate(p):
            coords[pos].setdefault(lab, None)
    base = list(coords[0])
    if any(set(c) != set(base) for c in coords[1:]) or len(h.params) != len(base) ** k:
        raise NotAProductSoftSet("parameters do not form a k-fold product of one label set")
    out = {}
    for c in base:
        key = (c,) * k
        try:
            out[c] = h[key]
        except KeyError:
            raise NotAProductSoftSet(f"missing diagonal entry {key!r}") from None
    return out


def rank_candidates(diag: Mapping[ParamLabel, FuzzySet]) -> DecisionReport:
    if not diag:
        raise EmptyDiagonal("no candidates to rank")
    cands = list(diag)
    dominance = frozenset(
        (w, c)
        for w in cands
        for c in cands
        if w != c and fs_proper_subset(diag[c], diag[w])
    )
    scores = {c: sum(diag[c].grades, Fraction(0)) for c in cands}
    tops = [w for w in cands if all(fs_subset(diag[c], diag[w]) for c in cands)]
    if len(tops) == 1:
        return DecisionReport(dict(diag), dominance, tops[0], Method.DOMINANCE, scores)

    best = max(scores.values())
    leaders = tuple(c for c in cands if scores[c] == best)
    flags = [Flag.NO_DOMINANT_CANDIDATE]
    if len(leaders) > 1:
        flags.append(Flag.SCORE_TIE)
        winner = None
    else:
        winner = leaders[0]
    return DecisionReport(
        dict(diag), dominance, winner, Method.SCORE_FALLBACK, scores, tuple(flags),
        leaders if len(leaders) > 1 else (),
    )


def decide(panel: Panel) -> DecisionReport:
    h = aggregate_panel(panel)
    return rank_candidates(diagonal(h, len(panel.evaluators)))
