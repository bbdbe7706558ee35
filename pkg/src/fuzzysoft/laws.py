"""Checking the algebraic laws and MIN/MAX theorems on concrete soft sets.

``check_law`` evaluates one law on given operands and returns a
:class:`LawReport`; when the law fails the report carries a witness.
``gen_random`` and friends produce seeded random operands, and
``search_counterexample`` drives the two together.

Laws about binary operations are checked pointwise under the canonical
parameter bijections: swap ``(a,b) -> (b,a)`` for commutativity,
reassociation ``((a,b),c) -> (a,(b,c))``, and the diagonal embedding
``(a,(b,c)) -> ((a,b),(a,c))`` for distributivity.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ArityMismatch, PreconditionUnmet, UniverseMismatch
from .fuzzy import FuzzySet, Universe, fs_intersection, fs_is_empty, fs_is_universal, display_grade
from .softset import (
    BINARY_OPS,
    Family,
    FuzzySoftSet,
    equiv_weak,
    format_label,
    is_absolute_soft,
    is_empty_soft,
    is_null_soft,
    max_family,
    min_family,
    ss_complement,
    ss_intersection,
    ss_union,
    tau,
)


class LawId(enum.Enum):
    INVOLUTION = "involution"
    COMMUTATIVE_UNION = "commutative-union"
    COMMUTATIVE_INTERSECTION = "commutative-intersection"
    COMMUTATIVE_PRODUCT = "commutative-product"
    COMMUTATIVE_SUM = "commutative-sum"
    ASSOCIATIVE_UNION = "associative-union"
    ASSOCIATIVE_INTERSECTION = "associative-intersection"
    ASSOCIATIVE_PRODUCT = "associative-product"
    ASSOCIATIVE_SUM = "associative-sum"
    DE_MORGAN_INTERSECTION = "de-morgan-intersection"
    DE_MORGAN_UNION = "de-morgan-union"
    DISTRIBUTIVE_UNION_OVER_INTERSECTION = "distributive-union-over-intersection"
    DISTRIBUTIVE_INTERSECTION_OVER_UNION = "distributive-intersection-over-union"
    IDENTITY_COMPLEMENT_NULL = "identity-complement-null"
    IDENTITY_COMPLEMENT_ABSOLUTE = "identity-complement-absolute"
    IDENTITY_INTERSECTION_NULL = "identity-intersection-null"
    IDENTITY_UNION_NULL = "identity-union-null"
    IDENTITY_PRODUCT_NULL = "identity-product-null"
    IDENTITY_SUM_NULL = "identity-sum-null"
    IDENTITY_INTERSECTION_ABSOLUTE = "identity-intersection-absolute"
    IDENTITY_UNION_ABSOLUTE = "identity-union-absolute"
    IDENTITY_PRODUCT_ABSOLUTE = "identity-product-absolute"
    IDENTITY_SUM_ABSOLUTE = "identity-sum-absolute"
    WEAK_EQUIV_MIN_MAX = "weak-equiv-min-max"
    COMPLEMENT_DUALITY = "complement-duality"
    MIN_MAX_UNION_MAX = "min-max-union-max"
    MIN_MAX_INTERSECTION_MAX = "min-max-intersection-max"
    MIN_MAX_INTERSECTION_MIN = "min-max-intersection-min"
    MIN_MAX_UNION_MIN = "min-max-union-min"
    DISJOINT_MIN_MAX = "disjoint-min-max"


class ConverseId(enum.Enum):
    """Converses of the four MIN/MAX implications; these are not theorems."""

    UNION_MAX = "converse-union-max"
    INTERSECTION_MAX = "converse-intersection-max"
    INTERSECTION_MIN = "converse-intersection-min"
    UNION_MIN = "converse-union-min"


def parse_target(name: str):
    """Look up a LawId or ConverseId by its string value."""
    for enum_cls in (LawId, ConverseId):
        try:
            return enum_cls(name)
        except ValueError:
            pass
    raise ValueError(f"unknown law {name!r}")


@dataclass(frozen=True)
class Witness:
    """Where a law failed.

    ``params`` are the parameter labels involved (one per side of the law
    for pointwise identities); ``element``, ``left`` and ``right`` locate
    the first unequal grade when there is one.
    """

    params: tuple = ()
    element: Optional[str] = None
    left: Optional[Fraction] = None
    right: Optional[Fraction] = None
    note: str = ""

    def as_dict(self) -> dict:
        out = {"params": [format_label(p) for p in self.params]}
        if self.element is not None:
            out["element"] = self.element
            out["left"] = display_grade(self.left)
            out["right"] = display_grade(self.right)
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class LawReport:
    law: object  # LawId or ConverseId
    holds: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a report has a witness exactly when the law fails")

    def as_dict(self) -> dict:
        out = {"law": self.law.value, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


_OK = None


def _report(law, witness: Optional[Witness]) -> LawReport:
    return LawReport(law, witness is None, witness)


def _first_difference(s: FuzzySet, t: FuzzySet, params: tuple) -> Optional[Witness]:
    other = s.aligned(t)
    for e, x, y in zip(s.universe.elements, s.grades, other):
        if x != y:
            return Witness(params, e, x, y)
    return None


def _compare_points(pairs, params_of) -> Optional[Witness]:
    """Compare (left image, right image) pairs; witness on first mismatch."""
    for i, (s, t) in enumerate(pairs):
        w = _first_difference(s, t, params_of(i))
        if w is not None:
            return w
    return None


def _shared_universe(*fs: FuzzySoftSet) -> None:
    first = fs[0].universe
    for f in fs[1:]:
        if not first.same_elements(f.universe):
            raise UniverseMismatch("operands are defined over different universes")


def _non_degenerate(f: FuzzySoftSet) -> bool:
    return not (is_empty_soft(f) or is_null_soft(f) or is_absolute_soft(f))


# --- individual checks ---------------------------------------------------------

def _involution(f):
    back = ss_complement(ss_complement(f))
    return _compare_points(zip(back.images, f.images), lambda i: (f.params[i], f.params[i]))


def _commutative(op):
    def check(f, g):
        left, right = op(f, g), op(g, f)
        for a, s in f.items():
            for b, t in g.items():
                w = _first_difference(left[(a, b)], right[(b, a)], ((a, b), (b, a)))
                if w is not None:
                    return w
        return None
    return check


def _associative(op):
    def check(f, g, h):
        left, right = op(op(f, g), h), op(f, op(g, h))
        for a in f.params:
            for b in g.params:
                for c in h.params:
                    lp, rp = ((a, b), c), (a, (b, c))
                    w = _first_difference(left[lp], right[rp], (lp, rp))
                    if w is not None:
                        return w
        return None
    return check


def _de_morgan(inner, outer):
    def check(f, g):
        left = ss_complement(inner(f, g))
        right = outer(ss_complement(f), ss_complement(g))
        return _compare_points(zip(left.images, right.images), lambda i: (left.params[i], right.params[i]))
    return check


def _distributive(outer, inner):
    # f outer (g inner h) at (a,(b,c))  vs  (f outer g) inner (f outer h) at ((a,b),(a,c))
    def check(f, g, h):
        left = outer(f, inner(g, h))
        right = inner(outer(f, g), outer(f, h))
        for a in f.params:
            for b in g.params:
                for c in h.params:
                    lp, rp = (a, (b, c)), ((a, b), (a, c))
                    w = _first_difference(left[lp], right[rp], (lp, rp))
                    if w is not None:
                        return w
        return None
    return check


def _family_mismatch(got: FuzzySoftSet, expected: Family) -> Optional[Witness]:
    fam = tau(got)
    if fam == expected:
        return None
    for p, img in got.items():
        if img not in expected:
            return Witness((p,), note=f"image {img} is not in the expected family {expected}")
    missing = next(m for m in expected if m not in fam)
    return Witness((), note=f"expected member {missing} never occurs")


def _identity(op_name: Optional[str], special: str, expect: str):
    """One of the ten identities; ``special`` is "null" or "absolute"."""
    is_special = is_null_soft if special == "null" else is_absolute_soft

    if op_name is None:
        # C(null) ~ absolute, C(absolute) ~ null
        def check_unary(n):
            if not is_special(n):
                raise PreconditionUnmet(f"operand is not a {special} soft set")
            target = FuzzySet.full(n.universe) if special == "null" else FuzzySet.empty(n.universe)
            return _family_mismatch(ss_complement(n), Family([target]))
        return check_unary

    op = BINARY_OPS[op_name]

    def check(f, n):
        if not _non_degenerate(f):
            raise PreconditionUnmet("first operand is empty, null or absolute")
        if not is_special(n):
            raise PreconditionUnmet(f"second operand is not a {special} soft set")
        expected = tau(f) if expect == "self" else tau(n)
        return _family_mismatch(op(f, n), expected)
    return check


def _weak_equiv_min_max(f, g):
    if not equiv_weak(f, g):
        raise PreconditionUnmet("operands are not weakly equivalent")
    mf, mg = min_family(f), min_family(g)
    if mf != mg:
        return Witness((), note=f"MIN families differ: {mf} vs {mg}")
    xf, xg = max_family(f), max_family(g)
    if xf != xg:
        return Witness((), note=f"MAX families differ: {xf} vs {xg}")
    return None


def _complement_duality(f):
    c = ss_complement(f)
    mins, maxs = min_family(f), max_family(f)
    cmins, cmaxs = min_family(c), max_family(c)
    for a, s in f.items():
        cs = c[a]
        if (s in maxs) != (cs in cmins):
            return Witness((a,), note="MAX membership of S(a) disagrees with MIN membership of its complement")
        if (s in mins) != (cs in cmaxs):
            return Witness((a,), note="MIN membership of S(a) disagrees with MAX membership of its complement")
    return None


_MINMAX_SPECS = {
    # law: (operation, which family)
    LawId.MIN_MAX_UNION_MAX: (ss_union, "max"),
    LawId.MIN_MAX_INTERSECTION_MAX: (ss_intersection, "max"),
    LawId.MIN_MAX_INTERSECTION_MIN: (ss_intersection, "min"),
    LawId.MIN_MAX_UNION_MIN: (ss_union, "min"),
    ConverseId.UNION_MAX: (ss_union, "max"),
    ConverseId.INTERSECTION_MAX: (ss_intersection, "max"),
    ConverseId.INTERSECTION_MIN: (ss_intersection, "min"),
    ConverseId.UNION_MIN: (ss_union, "min"),
}


def _families(op, which, f, g):
    pick = max_family if which == "max" else min_family
    return op(f, g), pick(op(f, g)), pick(f), pick(g)


def _min_max_implication(law):
    op, which = _MINMAX_SPECS[law]
    name = which.upper()

    def check(f, g):
        if not (_non_degenerate(f) and _non_degenerate(g)):
            raise PreconditionUnmet("operands must not be empty, null or absolute soft sets")
        result, fam, ff, fg = _families(op, which, f, g)
        for a, s in f.items():
            for b, t in g.items():
                if result[(a, b)] in fam and not (s in ff or t in fg):
                    return Witness(
                        ((a, b),),
                        note=f"image at ({format_label(a)},{format_label(b)}) is in {name} of the result "
                        f"but neither factor is in its own {name}",
                    )
        return None
    return check


def _disjoint_min_max(f):
    if not f.params:
        raise PreconditionUnmet("soft set has no parameters")
    for s in f.images:
        if fs_is_empty(s) or fs_is_universal(s):
            raise PreconditionUnmet("an image is the empty or the universal fuzzy set")
    for i in range(len(f.images)):
        for j in range(i + 1, len(f.images)):
            if not fs_is_empty(fs_intersection(f.images[i], f.images[j])):
                raise PreconditionUnmet("images are not pairwise disjoint")
    mins, maxs = min_family(f), max_family(f)
    for a, s in f.items():
        if s not in mins or s not in maxs:
            return Witness((a,), note="image is not both minimal and maximal")
    return None


_CHECKS = {
    LawId.INVOLUTION: (1, _involution),
    LawId.COMMUTATIVE_UNION: (2, _commutative(BINARY_OPS["union"])),
    LawId.COMMUTATIVE_INTERSECTION: (2, _commutative(BINARY_OPS["intersection"])),
    LawId.COMMUTATIVE_PRODUCT: (2, _commutative(BINARY_OPS["product"])),
    LawId.COMMUTATIVE_SUM: (2, _commutative(BINARY_OPS["sum"])),
    LawId.ASSOCIATIVE_UNION: (3, _associative(BINARY_OPS["union"])),
    LawId.ASSOCIATIVE_INTERSECTION: (3, _associative(BINARY_OPS["intersection"])),
    LawId.ASSOCIATIVE_PRODUCT: (3, _associative(BINARY_OPS["product"])),
    LawId.ASSOCIATIVE_SUM: (3, _associative(BINARY_OPS["sum"])),
    LawId.DE_MORGAN_INTERSECTION: (2, _de_morgan(ss_intersection, ss_union)),
    LawId.DE_MORGAN_UNION: (2, _de_morgan(ss_union, ss_intersection)),
    LawId.DISTRIBUTIVE_UNION_OVER_INTERSECTION: (3, _distributive(ss_union, ss_intersection)),
    LawId.DISTRIBUTIVE_INTERSECTION_OVER_UNION: (3, _distributive(ss_intersection, ss_union)),
    LawId.IDENTITY_COMPLEMENT_NULL: (1, _identity(None, "null", "other")),
    LawId.IDENTITY_COMPLEMENT_ABSOLUTE: (1, _identity(None, "absolute", "other")),
    LawId.IDENTITY_INTERSECTION_NULL: (2, _identity("intersection", "null", "other")),
    LawId.IDENTITY_UNION_NULL: (2, _identity("union", "null", "self")),
    LawId.IDENTITY_PRODUCT_NULL: (2, _identity("product", "null", "other")),
    LawId.IDENTITY_SUM_NULL: (2, _identity("sum", "null", "self")),
    LawId.IDENTITY_INTERSECTION_ABSOLUTE: (2, _identity("intersection", "absolute", "self")),
    LawId.IDENTITY_UNION_ABSOLUTE: (2, _identity("union", "absolute", "other")),
    LawId.IDENTITY_PRODUCT_ABSOLUTE: (2, _identity("product", "absolute", "self")),
    LawId.IDENTITY_SUM_ABSOLUTE: (2, _identity("sum", "absolute", "other")),
    LawId.WEAK_EQUIV_MIN_MAX: (2, _weak_equiv_min_max),
    LawId.COMPLEMENT_DUALITY: (1, _complement_duality),
    LawId.MIN_MAX_UNION_MAX: (2, _min_max_implication(LawId.MIN_MAX_UNION_MAX)),
    LawId.MIN_MAX_INTERSECTION_MAX: (2, _min_max_implication(LawId.MIN_MAX_INTERSECTION_MAX)),
    LawId.MIN_MAX_INTERSECTION_MIN: (2, _min_max_implication(LawId.MIN_MAX_INTERSECTION_MIN)),
    LawId.MIN_MAX_UNION_MIN: (2, _min_max_implication(LawId.MIN_MAX_UNION_MIN)),
    LawId.DISJOINT_MIN_MAX: (1, _disjoint_min_max),
}


def arity(law) -> int:
    if isinstance(law, ConverseId):
        return 2
    return _CHECKS[law][0]


def check_law(law: LawId, *operands: FuzzySoftSet) -> LawReport:
    """Evaluate ``law`` on the operands.

    Raises ArityMismatch for the wrong number of operands and
    PreconditionUnmet when the law's hypothesis does not apply.
    """
    if isinstance(law, ConverseId):
        return check_converse_minmax(law, *operands)
    n, fn = _CHECKS[law]
    if len(operands) != n:
        raise ArityMismatch(f"{law.value} takes {n} operand(s), got {len(operands)}")
    _shared_universe(*operands)
    return _report(law, fn(*operands))


def check_converse_minmax(which: ConverseId, *operands: FuzzySoftSet) -> LawReport:
    """Test the converse of a MIN/MAX implication on one pair.

    The converse claims: if ``S(a)`` is in the family of ``f`` and ``G(b)``
    is in the family of ``g``, then the combined image at ``(a, b)`` is in
    the family of the result.  The first pair (row-major) where this fails
    is the witness.
    """
    if len(operands) != 2:
        raise ArityMismatch(f"{which.value} takes 2 operands, got {len(operands)}")
    f, g = operands
    _shared_universe(f, g)
    op, kind = _MINMAX_SPECS[which]
    result, fam, ff, fg = _families(op, kind, f, g)
    for a, s in f.items():
        for b, t in g.items():
            img = result[(a, b)]
            if s in ff and t in fg and img not in fam:
                return _report(which, Witness(
                    ((a, b),),
                    note=f"S({format_label(a)}) and G({format_label(b)}) are in their {kind.upper()} families "
                    f"but {img} is not in {kind.upper()} of the result",
                ))
    return _report(which, None)


# --- generation ----------------------------------------------------------------

@dataclass(frozen=True)
class GenConfig:
    universe_size: int = 3
    param_count: int = 3
    grade_denominator: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.universe_size < 1:
            raise ValueError("universe_size must be at least 1")
        if self.param_count < 0:
            raise ValueError("param_count must be non-negative")
        if self.grade_denominator < 1:
            raise ValueError("grade_denominator must be at least 1")

    def with_seed(self, seed: int) -> "GenConfig":
        return GenConfig(self.universe_size, self.param_count, self.grade_denominator, seed)


def make_universe(size: int) -> Universe:
    return Universe(f"x{i}" for i in range(1, size + 1))


def _random_set(rng: random.Random, universe: Universe, d: int) -> FuzzySet:
    return FuzzySet._trusted(
        universe, tuple(Fraction(rng.randint(0, d), d) for _ in range(len(universe)))
    )


def _random_soft(rng: random.Random, cfg: GenConfig, prefix: str = "p") -> FuzzySoftSet:
    universe = make_universe(cfg.universe_size)
    params = tuple(f"{prefix}{j}" for j in range(1, cfg.param_count + 1))
    images = tuple(_random_set(rng, universe, cfg.grade_denominator) for _ in params)
    return FuzzySoftSet._trusted(universe, params, images)


def gen_random(cfg: GenConfig) -> FuzzySoftSet:
    """A random soft set; identical seeds give identical output."""
    return _random_soft(random.Random(cfg.seed), cfg)


def _weak_pair(rng: random.Random, cfg: GenConfig) -> tuple[FuzzySoftSet, FuzzySoftSet]:
    f = _random_soft(rng, cfg)
    images = list(f.images)
    rng.shuffle(images)
    extra = rng.randrange(cfg.param_count)
    images += [rng.choice(f.images) for _ in range(extra)]
    params = tuple(f"q{j}" for j in range(1, len(images) + 1))
    return f, FuzzySoftSet._trusted(f.universe, params, tuple(images))


def gen_weakly_equivalent_pair(cfg: GenConfig) -> tuple[FuzzySoftSet, FuzzySoftSet]:
    """Two soft sets with the same image family under different labels.

    The second one is the first relabelled, shuffled, and with some images
    repeated under extra labels.
    """
    if cfg.param_count < 1:
        raise ValueError("need at least one parameter")
    return _weak_pair(random.Random(cfg.seed), cfg)


def _disjoint_soft(rng: random.Random, cfg: GenConfig) -> FuzzySoftSet:
    """Images with pairwise disjoint supports, none empty or universal."""
    universe = make_universe(cfg.universe_size)
    d = cfg.grade_denominator
    m = max(1, min(cfg.param_count, cfg.universe_size))
    owner = list(range(m)) + [rng.randrange(-1, m) for _ in range(cfg.universe_size - m)]
    rng.shuffle(owner)
    images = []
    for j in range(m):
        grades = tuple(Fraction(rng.randint(1, d), d) if o == j else Fraction(0) for o in owner)
        if all(g == 1 for g in grades):
            # lone owner of every element: knock one grade below 1
            if d == 1:
                raise PreconditionUnmet("cannot build a non-universal image with denominator 1")
            k = rng.randrange(len(grades))
            grades = grades[:k] + (Fraction(rng.randint(1, d - 1), d),) + grades[k + 1:]
        images.append(FuzzySet._trusted(universe, grades))
    params = tuple(f"p{j}" for j in range(1, m + 1))
    return FuzzySoftSet._trusted(universe, params, tuple(images))


def _non_degenerate_soft(rng: random.Random, cfg: GenConfig, prefix: str = "p") -> FuzzySoftSet:
    cfg = cfg if cfg.param_count else GenConfig(cfg.universe_size, 1, cfg.grade_denominator, cfg.seed)
    for _ in range(1000):
        f = _random_soft(rng, cfg, prefix)
        if _non_degenerate(f):
            return f
    raise PreconditionUnmet("could not draw a soft set that is not null or absolute")


def gen_operands(law, cfg: GenConfig) -> tuple:
    """Random operands satisfying the hypothesis of ``law``.

    Laws without hypotheses get independent random soft sets.  The other
    laws get operands built to meet their preconditions.
    """
    rng = random.Random(cfg.seed)
    if law in (LawId.IDENTITY_COMPLEMENT_NULL, LawId.IDENTITY_COMPLEMENT_ABSOLUTE):
        universe = make_universe(cfg.universe_size)
        params = tuple(f"p{j}" for j in range(1, max(1, cfg.param_count) + 1))
        build = FuzzySet.empty if law is LawId.IDENTITY_COMPLEMENT_NULL else FuzzySet.full
        return (FuzzySoftSet._trusted(universe, params, (build(universe),) * len(params)),)
    if law.value.startswith("identity-"):
        f = _non_degenerate_soft(rng, cfg)
        universe = f.universe
        k = rng.randint(1, max(1, cfg.param_count))
        params = tuple(f"n{j}" for j in range(1, k + 1))
        build = FuzzySet.empty if law.value.endswith("-null") else FuzzySet.full
        return f, FuzzySoftSet._trusted(universe, params, (build(universe),) * k)
    if law is LawId.WEAK_EQUIV_MIN_MAX:
        c = cfg if cfg.param_count else GenConfig(cfg.universe_size, 1, cfg.grade_denominator, cfg.seed)
        return _weak_pair(rng, c)
    if law is LawId.DISJOINT_MIN_MAX:
        return (_disjoint_soft(rng, cfg),)
    if isinstance(law, ConverseId) or law.value.startswith("min-max-"):
        return _non_degenerate_soft(rng, cfg, "p"), _non_degenerate_soft(rng, cfg, "q")
    return tuple(_random_soft(rng, cfg, prefix) for prefix in "pqr"[: arity(law)])


def search_counterexample(law, cfg: GenConfig, trials: int):
    """Try ``trials`` seeded instances; return the first (operands, report) that fails.

    Trial ``i`` uses seed ``cfg.seed + i``.  Instances whose hypothesis
    does not hold are skipped.  Returns None when nothing fails.
    """
    for i in range(trials):
        try:
            ops = gen_operands(law, cfg.with_seed(cfg.seed + i))
            report = check_law(law, *ops)
        except PreconditionUnmet:
            continue
        if not report.holds:
            return ops, report
    return None


@dataclass(frozen=True)
class SuiteResult:
    law: object
    checked: int
    skipped: int
    failures: tuple  # (operands, LawReport) pairs

    @property
    def holds(self) -> bool:
        return not self.failures


def run_suite(law, cfg: GenConfig, trials: int, *, max_failures: int = 1,
              vary_sizes: bool = False) -> SuiteResult:
    """Check ``law`` on ``trials`` seeded instances.

    With ``vary_sizes`` the universe size, parameter count and denominator
    of each trial are drawn uniformly up to the values in ``cfg``.
    """
    checked = skipped = 0
    failures = []
    for i in range(trials):
        seed = cfg.seed + i
        if vary_sizes:
            r = random.Random(seed)
            trial_cfg = GenConfig(
                r.randint(1, cfg.universe_size),
                r.randint(1, max(1, cfg.param_count)),
                r.randint(1, cfg.grade_denominator),
                seed,
            )
        else:
            trial_cfg = cfg.with_seed(seed)
        try:
            ops = gen_operands(law, trial_cfg)
            report = check_law(law, *ops)
        except PreconditionUnmet:
            skipped += 1
            continue
        checked += 1
        if not report.holds:
            failures.append((ops, report))
            if len(failures) >= max_failures:
                break
    return SuiteResult(law, checked, skipped, tuple(failures))
