import pytest
from hypothesis import given, settings

from fuzzysoft import (
    FuzzySet,
    FuzzySoftSet,
    Universe,
    approx_external,
    approx_external_strict,
    approx_internal,
    approx_internal_strict,
    equiv_external,
    equiv_internal,
    equiv_weak,
    flatten_params,
    fs_complement,
    make_absolute,
    make_empty,
    make_null,
    max_family,
    min_family,
    ss_complement,
    ss_equal,
    ss_equivalent,
    ss_intersection,
    ss_isomorphic,
    ss_product,
    ss_sum,
    ss_union,
    tau,
)
from fuzzysoft.errors import DuplicateParam, EmptyParams, FlattenCollision, MissingImage, UniverseMismatch
from fuzzysoft.softset import format_label, relabel

import worked as ex
from oracles import brute_max, brute_min, grade_columns
from strategies import soft_sets

ABC = ex.ABC


def fs(text, universe=ABC):
    return FuzzySet.parse(universe, text)


def test_make_basic():
    s = ex.basic_example()
    assert s.params == ("x", "y", "z")
    assert s["x"] == fs("{b/0.3, c/0.7}")


def test_make_rejects_duplicates_and_gaps():
    with pytest.raises(DuplicateParam):
        FuzzySoftSet(ABC, ["x", "x"], {"x": fs("{a/0.1}")})
    with pytest.raises(MissingImage):
        FuzzySoftSet(ABC, ["x", "y"], {"x": fs("{a/0.1}")})
    with pytest.raises(UniverseMismatch):
        FuzzySoftSet(ABC, ["x"], {"x": FuzzySet.parse(ex.XYZ, "{x/0.1}")})


def test_empty_soft_set():
    e = make_empty(ABC)
    assert len(e) == 0 and len(tau(e)) == 0
    assert FuzzySoftSet(ABC, [], {}) == e


def test_tau_basic():
    t = tau(ex.basic_example())
    assert t == {fs("{b/0.3, c/0.7}"), fs("{c/0.1}"), fs("{a/0.5}")}
    assert list(t) == [fs("{b/0.3, c/0.7}"), fs("{c/0.1}"), fs("{a/0.5}")]


def test_tau_deduplicates():
    u = Universe(["x"])
    s = ex.soft(u, p="{x/0.5}", q="{x/0.5}")
    assert len(tau(s)) == 1


def test_equal_vs_equivalent():
    s, g = ex.basic_example(), ex.relabeled_example()
    assert ss_equal(s, s)
    assert not ss_equal(s, g)
    assert ss_equivalent(s, g)
    assert ss_equivalent(s, s)
    tweaked = ex.soft(ABC, x="{b/0.3, c/0.7}", y="{c/0.2}", z="{a/0.5}")
    assert not ss_equal(s, tweaked)


def test_equal_ignores_parameter_order():
    s = ex.basic_example()
    shuffled = FuzzySoftSet(ABC, ["z", "x", "y"], {p: s[p] for p in s.params})
    assert ss_equal(s, shuffled)


def test_not_equivalent_to_complement():
    s = ex.basic_example()
    # brute-force family comparison on grade tuples
    mine = {tuple(c) for c in grade_columns(s)}
    comp = {tuple(1 - g for g in c) for c in grade_columns(s)}
    assert mine != comp
    assert not ss_equivalent(s, ss_complement(s))


def test_approximation_example():
    s, g = ex.basic_example(), ex.approx_target()
    assert approx_internal(s, g)
    assert approx_external(s, g)
    assert approx_internal_strict(s, g)
    assert approx_external_strict(s, g)
    assert not approx_internal(g, s)
    assert not approx_external(g, s)


def test_vacuous_approximations():
    s = ex.basic_example()
    null = make_null(ABC, ["n"])
    absolute = make_absolute(ABC, ["u"])
    assert approx_internal(s, null)
    assert not approx_internal(null, s)
    assert approx_external(s, absolute)
    assert not approx_external(absolute, s)
    assert approx_internal(s, make_empty(ABC))


def test_strict_is_irreflexive():
    s = ex.basic_example()
    assert not approx_internal_strict(s, s)
    assert not approx_external_strict(s, s)


def test_equivalence_examples():
    assert equiv_internal(*ex.internal_equiv_pair())
    assert equiv_external(*ex.external_equiv_pair())
    s, g = ex.weak_equiv_pair()
    assert equiv_weak(s, g)
    assert not approx_internal_strict(s, g)
    assert not approx_external_strict(s, g)


def test_min_max_example():
    s = ex.min_max_example()
    assert min_family(s) == {fs("{a/0.5}")}
    assert max_family(s) == {fs("{a/0.6, b/0.2, c/0.3}"), fs("{a/0.7, b/0.2}")}


def test_min_max_of_null_and_absolute():
    # only the defining member is excluded: the empty set is still maximal
    null = make_null(ABC, ["p", "q"])
    assert len(min_family(null)) == 0
    assert max_family(null) == {FuzzySet.empty(ABC)}
    absolute = make_absolute(ABC, ["p"])
    assert len(max_family(absolute)) == 0
    assert min_family(absolute) == {FuzzySet.full(ABC)}


def test_incomparable_members_are_both_min_and_max():
    s = ex.soft(ABC, p="{a/0.6, b/0.1}", q="{a/0.5, b/0.2}")
    cols = grade_columns(s)
    assert brute_min(cols) == brute_max(cols) == {tuple(c) for c in cols}
    assert min_family(s) == max_family(s) == tau(s)


def test_complement_example():
    c = ss_complement(ex.complement_example())
    xyz = ex.XYZ
    assert c["a"] == FuzzySet.parse(xyz, "{x/0.8, y/1, z/0.2}")
    assert c["b"] == FuzzySet.parse(xyz, "{x/0.3, z/1}")
    assert ss_equal(ss_complement(c), ex.complement_example())
    assert tau(ss_complement(make_null(ABC, ["p"]))) == {FuzzySet.full(ABC)}


def test_union_intersection_example():
    s, g = ex.union_example()
    u = ss_union(s, g)
    assert u.params == (("x", "p"), ("x", "q"), ("y", "p"), ("y", "q"))
    assert u[("x", "p")] == fs("{a/0.4, b/0.8, c/0.5}")
    assert u[("x", "q")] == fs("{a/0.6, b/0.8, c/1}")
    assert u[("y", "p")] == fs("{b/0.3, c/0.7}")
    assert u[("y", "q")] == fs("{a/0.6, c/1}")
    i = ss_intersection(s, g)
    assert i[("x", "p")] == fs("{b/0.3}")
    assert i[("x", "q")] == fs("{a/0.4}")
    assert i[("y", "p")] == fs("{c/0.5}")
    assert i[("y", "q")] == fs("{c/0.7}")


def test_union_with_null_keeps_images():
    s = ex.basic_example()
    u = ss_union(s, make_null(ABC, ["n"]))
    for a in s.params:
        assert u[(a, "n")] == s[a]
    assert ss_equivalent(u, s)


def test_null_absolute_constructors():
    u = Universe(["x", "y"])
    assert tau(make_null(u, ["p"])) == {FuzzySet.empty(u)}
    assert tau(make_absolute(u, ["p", "q"])) == {FuzzySet.full(u)}
    with pytest.raises(EmptyParams):
        make_null(u, [])
    with pytest.raises(EmptyParams):
        make_absolute(u, [])


def test_operations_on_empty_soft_set_are_empty():
    s = ex.basic_example()
    for op in (ss_union, ss_intersection, ss_product, ss_sum):
        assert len(op(s, make_empty(ABC))) == 0
        assert len(op(make_empty(ABC), s)) == 0


def test_isomorphic():
    s = ex.basic_example()
    renamed = relabel(s, {"x": "m", "y": "n", "z": "o"})
    assert ss_isomorphic(s, renamed)
    s2, g = ex.union_example()
    assert ss_isomorphic(ss_union(s2, g), ss_union(g, s2))
    dup = FuzzySoftSet(ABC, ["x", "y", "z", "w"], {**{p: s[p] for p in s.params}, "w": s["x"]})
    assert not ss_isomorphic(s, dup)
    assert ss_equivalent(s, dup)


def test_flatten_params():
    u = Universe(["x"])
    f = ex.soft(u, a="{x/0.1}")
    g = ex.soft(u, b="{x/0.2}")
    h = ex.soft(u, c="{x/0.3}")
    left = flatten_params(ss_union(ss_union(f, g), h))
    right = flatten_params(ss_union(f, ss_union(g, h)))
    assert left.params == right.params == (("a", "b", "c"),)
    assert flatten_params(f).params == ("a",)
    assert format_label((("a", "b"), "c")) == "((a,b),c)"


def test_flatten_collision():
    u = Universe(["x"])
    img = FuzzySet.parse(u, "{x/0.1}")
    f = FuzzySoftSet(u, [(("a", "b"), "c"), ("a", ("b", "c"))], {(("a", "b"), "c"): img, ("a", ("b", "c")): img})
    with pytest.raises(FlattenCollision):
        flatten_params(f)


def test_universe_mismatch_in_relations():
    other = ex.soft(ex.XYZ, p="{x/0.1}")
    with pytest.raises(UniverseMismatch):
        ss_equivalent(ex.basic_example(), other)
    with pytest.raises(UniverseMismatch):
        ss_union(ex.basic_example(), other)


# --- properties ------------------------------------------------------------------

@given(soft_sets(), soft_sets(prefix="q"))
def test_equal_implies_equivalent(f, g):
    if ss_equal(f, g):
        assert ss_equivalent(f, g)
    assert ss_equivalent(f, f)


@given(soft_sets(), soft_sets(prefix="q"), soft_sets(prefix="r"))
def test_approximations_are_preorders(f, g, h):
    for approx in (approx_internal, approx_external):
        assert approx(f, f)
        if approx(f, g) and approx(g, h):
            assert approx(f, h)


@given(soft_sets(min_params=1))
def test_min_max_match_brute_force(f):
    cols = grade_columns(f)
    assert {m.grades for m in min_family(f)} == brute_min(cols)
    assert {m.grades for m in max_family(f)} == brute_max(cols)


@given(soft_sets())
def test_complement_duality(f):
    c = ss_complement(f)
    for a in f.params:
        assert (f[a] in max_family(f)) == (c[a] in min_family(c))
        assert (f[a] in min_family(f)) == (c[a] in max_family(c))
    assert ss_equal(ss_complement(c), f)


@given(soft_sets(), soft_sets(prefix="q"))
def test_binary_ops_cardinality_and_commutativity(f, g):
    for op in (ss_union, ss_intersection, ss_product, ss_sum):
        left, right = op(f, g), op(g, f)
        assert len(left) == len(f) * len(g)
        for a in f.params:
            for b in g.params:
                assert left[(a, b)] == right[(b, a)]
        assert ss_isomorphic(left, right)


@settings(max_examples=50)
@given(soft_sets(max_params=3), soft_sets(prefix="q", max_params=3), soft_sets(prefix="r", max_params=3))
def test_associativity_and_distributivity(f, g, h):
    for op in (ss_union, ss_intersection, ss_product, ss_sum):
        left, right = op(op(f, g), h), op(f, op(g, h))
        for a in f.params:
            for b in g.params:
                for c in h.params:
                    assert left[((a, b), c)] == right[(a, (b, c))]
    p = ss_union(f, ss_intersection(g, h))
    q = ss_intersection(ss_union(f, g), ss_union(f, h))
    for a in f.params:
        for b in g.params:
            for c in h.params:
                assert p[(a, (b, c))] == q[((a, b), (a, c))]


@given(soft_sets(), soft_sets(prefix="q"))
def test_soft_de_morgan(f, g):
    left = ss_complement(ss_intersection(f, g))
    right = ss_union(ss_complement(f), ss_complement(g))
    assert ss_equal(left, right)
    assert ss_equal(ss_complement(ss_union(f, g)), ss_intersection(ss_complement(f), ss_complement(g)))


@given(soft_sets(min_params=1))
def test_weakly_equivalent_relabel_has_same_min_max(f):
    g = relabel(f, {p: "q" + p for p in f.params})
    assert equiv_weak(f, g)
    assert min_family(f) == min_family(g)
    assert max_family(f) == max_family(g)


@given(soft_sets(min_params=1))
def test_complement_of_complement_family(f):
    assert tau(ss_complement(f)) == {fs_complement(s) for s in tau(f)}
