import pytest
from hypothesis import given, settings, strategies as st

from fuzzysoft import (
    FuzzySoftSet,
    Universe,
    equiv_weak,
    max_family,
    min_family,
    ss_equal,
    ss_intersection,
    ss_isomorphic,
    ss_union,
)
from fuzzysoft.errors import ArityMismatch, PreconditionUnmet, UniverseMismatch
from fuzzysoft.laws import (
    ConverseId,
    GenConfig,
    LawId,
    arity,
    LawReport,
    check_converse_minmax,
    check_law,
    gen_operands,
    gen_random,
    gen_weakly_equivalent_pair,
    parse_target,
    run_suite,
    search_counterexample,
)

import worked as ex

MIN_MAX_IMPLICATIONS = {
    LawId.MIN_MAX_UNION_MAX,
    LawId.MIN_MAX_INTERSECTION_MAX,
    LawId.MIN_MAX_INTERSECTION_MIN,
    LawId.MIN_MAX_UNION_MIN,
}
PROVED = [law for law in LawId if law not in MIN_MAX_IMPLICATIONS]


def test_involution_on_complement_example():
    assert check_law(LawId.INVOLUTION, ex.complement_example()).holds


def test_union_null_identity():
    null = ex.soft(ex.ABC, n="{}")
    report = check_law(LawId.IDENTITY_UNION_NULL, ex.basic_example(), null)
    assert report.holds and report.witness is None


def test_identity_precondition():
    null = ex.soft(ex.ABC, n="{}")
    with pytest.raises(PreconditionUnmet):
        check_law(LawId.IDENTITY_UNION_NULL, null, null)


def test_arity_and_universe_checks():
    s = ex.basic_example()
    with pytest.raises(ArityMismatch):
        check_law(LawId.INVOLUTION, s, s)
    with pytest.raises(ArityMismatch):
        check_law(LawId.ASSOCIATIVE_UNION, s, s)
    with pytest.raises(UniverseMismatch):
        check_law(LawId.COMMUTATIVE_UNION, s, ex.complement_example())


def test_forward_union_max_holds_on_converse_pair():
    s, g = ex.converse_pair()
    assert check_law(LawId.MIN_MAX_UNION_MAX, s, g).holds


@pytest.mark.parametrize("which,pair", [
    (ConverseId.UNION_MAX, ("x", "q")),
    (ConverseId.INTERSECTION_MAX, ("x", "p")),
    (ConverseId.INTERSECTION_MIN, ("x", "p")),
    (ConverseId.UNION_MIN, ("x", "p")),
])
def test_converse_witnesses(which, pair):
    s, g = ex.converse_pair()
    report = check_converse_minmax(which, s, g)
    assert not report.holds
    assert report.witness.params == (pair,)


def test_converse_union_max_details():
    s, g = ex.converse_pair()
    u = ex.soft(ex.ABC, x="{a/0.5}")["x"]
    assert s["x"] in max_family(s) and g["q"] in max_family(g)
    result = ss_union(s, g)
    assert result[("x", "q")] == u
    assert u not in max_family(result)


def test_converse_intersection_max_image_is_empty():
    s, g = ex.converse_pair()
    assert ss_intersection(s, g)[("x", "p")].grades == (0, 0, 0)


def test_single_parameter_converse_holds():
    f = ex.soft(ex.XYZ, p="{x/0.5}")
    for which in ConverseId:
        assert check_converse_minmax(which, f, f).holds


# The four implication laws fail on small hand-built instances: a factor image
# can fall out of its own family while the combined image stays in the result's.

def test_union_max_implication_counterexample():
    u = Universe(["u", "v", "w"])
    s = ex.soft(u, a1="{u/0.5}", a2="{u/0.5, v/0.5}")
    g = ex.soft(u, b1="{v/0.5}", b2="{u/0.5, v/0.5}")
    report = check_law(LawId.MIN_MAX_UNION_MAX, s, g)
    assert not report.holds
    assert report.witness.params == (("a1", "b1"),)


def test_intersection_max_implication_counterexample():
    u = Universe(["u", "v", "w"])
    s = ex.soft(u, a1="{u/0.5}", a2="{u/0.5, v/0.5}")
    g = ex.soft(u, b1="{u/0.5}", b2="{u/0.5, w/0.5}")
    report = check_law(LawId.MIN_MAX_INTERSECTION_MAX, s, g)
    assert not report.holds
    assert report.witness.params == (("a1", "b1"),)


@pytest.mark.parametrize("law", sorted(MIN_MAX_IMPLICATIONS, key=lambda l: l.value))
def test_min_max_implications_have_random_counterexamples(law):
    found = search_counterexample(law, GenConfig(3, 3, 4, seed=0), 2000)
    assert found is not None
    ops, report = found
    assert not report.holds
    # replaying the instance reproduces the failure
    assert check_law(law, *ops) == report


@pytest.mark.parametrize("law", PROVED, ids=lambda l: l.value)
def test_proved_laws_hold_on_generated_instances(law):
    result = run_suite(law, GenConfig(3, 3, 10, seed=1), 150, vary_sizes=True)
    assert result.holds, result.failures[0][1].as_dict()
    assert result.checked > 0


@pytest.mark.parametrize("law", [LawId.INVOLUTION, LawId.DE_MORGAN_INTERSECTION])
def test_search_finds_nothing_for_universal_laws(law):
    assert search_counterexample(law, GenConfig(3, 3, 10, seed=7), 300) is None


def test_gen_random_properties():
    assert len(gen_random(GenConfig(3, 0, 10))) == 0
    crisp = gen_random(GenConfig(4, 5, 1, seed=3))
    assert all(g in (0, 1) for img in crisp.images for g in img.grades)
    cfg = GenConfig(3, 3, 10, seed=42)
    assert ss_equal(gen_random(cfg), gen_random(cfg))


def test_gen_random_distinct_seeds():
    seen = {gen_random(GenConfig(3, 3, 10, seed=s)) for s in range(1000)}
    assert len(seen) >= 995


@settings(max_examples=60)
@given(st.integers(0, 2**63 - 1), st.integers(1, 4), st.integers(1, 5), st.integers(1, 10))
def test_weak_pair_generator(seed, n, m, d):
    f, g = gen_weakly_equivalent_pair(GenConfig(n, m, d, seed))
    assert equiv_weak(f, g)
    assert min_family(f) == min_family(g)
    assert max_family(f) == max_family(g)
    assert check_law(LawId.WEAK_EQUIV_MIN_MAX, f, g).holds


def test_weak_pair_single_parameter_is_isomorphic():
    for seed in range(20):
        f, g = gen_weakly_equivalent_pair(GenConfig(3, 1, 10, seed))
        assert ss_isomorphic(f, g)


def test_weak_equiv_precondition():
    s, g = ex.basic_example(), ex.complement_example()
    with pytest.raises(UniverseMismatch):
        check_law(LawId.WEAK_EQUIV_MIN_MAX, s, g)
    h = ex.approx_target()
    with pytest.raises(PreconditionUnmet):
        check_law(LawId.WEAK_EQUIV_MIN_MAX, s, h)


def test_disjoint_min_max():
    f = ex.soft(ex.ABC, p="{a/0.3}", q="{b/0.9}", r="{c/0.1}")
    assert check_law(LawId.DISJOINT_MIN_MAX, f).holds
    with pytest.raises(PreconditionUnmet):
        check_law(LawId.DISJOINT_MIN_MAX, ex.soft(ex.ABC, p="{a/0.3}", q="{a/0.2}"))


def test_generated_operands_match_arity():
    for law in [*LawId, *ConverseId]:
        ops = gen_operands(law, GenConfig(3, 3, 10, seed=5))
        assert len(ops) == arity(law)
        assert all(isinstance(o, FuzzySoftSet) for o in ops)


def test_report_invariant_and_lookup():
    with pytest.raises(ValueError):
        LawReport(LawId.INVOLUTION, True, object())
    assert parse_target("de-morgan-union") is LawId.DE_MORGAN_UNION
    assert parse_target("converse-union-max") is ConverseId.UNION_MAX
    with pytest.raises(ValueError):
        parse_target("no-such-law")
