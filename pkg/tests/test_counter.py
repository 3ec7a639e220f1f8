import pytest

from tannercycles import (Capability, CapabilityRefused, ClassKind, DegreeProfile, GenSpec,
                          GirthTooSmall, GraphClass, NonDivisibleTrace, backtrack_cycle_count,
                          build_graph, classify, complete_bipartite, count_cycles,
                          exact_traces, generate, girth)
from tannercycles.counter import _divide, auto_lengths, capability, n4_irregular, n6_halfregular

from graphs import cycle, half_regular_example, heawood, irregular_g4, path5, tanner
from reference_values import HALF_REGULAR_EXAMPLE, TANNER

BI = GraphClass(ClassKind.BIREGULAR, 3, 5)
VR = GraphClass(ClassKind.VARIABLE_REGULAR, 2, None)
IR = GraphClass(ClassKind.IRREGULAR, None, None)


@pytest.mark.parametrize("cls,g,i,verdict", [
    (BI, 8, 12, Capability.SUPPORTED),
    (BI, 8, 10, Capability.SUPPORTED),
    (BI, 8, 14, Capability.NOT_IMPLEMENTED),
    (BI, 8, 16, Capability.IMPOSSIBLE),
    (BI, 10, 16, Capability.NOT_IMPLEMENTED),
    (BI, 4, 6, Capability.SUPPORTED),
    (BI, 4, 8, Capability.IMPOSSIBLE),
    (IR, 4, 4, Capability.SUPPORTED),
    (IR, 4, 6, Capability.IMPOSSIBLE),
    (IR, 6, 4, Capability.SUPPORTED),
    (IR, 6, 6, Capability.IMPOSSIBLE),
    (VR, 4, 4, Capability.SUPPORTED),
    (VR, 4, 6, Capability.IMPOSSIBLE),
    (VR, 6, 6, Capability.SUPPORTED),
    (VR, 6, 8, Capability.IMPOSSIBLE),
    (IR, None, 12, Capability.SUPPORTED),
])
def test_capability_table(cls, g, i, verdict):
    assert capability(cls, g, i) is verdict


def test_capability_describe_mentions_ip():
    assert "IP" in Capability.IMPOSSIBLE.describe()


def test_auto_lengths():
    assert auto_lengths(BI, 8) == [8, 10, 12]
    assert auto_lengths(BI, 4) == [4, 6]
    assert auto_lengths(BI, 6) == [6, 8, 10]
    assert auto_lengths(VR, 6) == [6]
    assert auto_lengths(IR, 4) == [4]


def test_tanner_pipeline():
    r = count_cycles(tanner(), [8, 10, 12])
    assert r.counts == TANNER["counts"]
    assert r.omegas[8].omega == TANNER["omega"][8]
    assert r.psis[10].psi == TANNER["psi"][10]
    assert r.psis[12].psi == TANNER["psi"][12]
    assert r.traces[8] == TANNER["trace"][8]


def test_only_longest_target_still_computes_prerequisites():
    r = count_cycles(tanner(), [12])
    assert r.counts == {12: 22630}
    assert r.prerequisites == {8: 465, 10: 3720}


@pytest.mark.parametrize("x", [2, 3, 4, 5, 6])
def test_complete_bipartite(x):
    r = count_cycles(complete_bipartite(x, x), [4, 6])
    assert r.counts[4] == x * x * (x - 1) ** 2 // 4
    assert r.counts[6] == x * x * (x - 1) ** 2 * (x - 2) ** 2 // 6


def test_forest_short_circuits():
    r = count_cycles(path5(), [4, 6, 8])
    assert r.counts == {4: 0, 6: 0, 8: 0}
    assert r.traces is None
    r = count_cycles(build_graph(3, 3, []), [4])
    assert r.counts == {4: 0} and r.girth is None


def test_irregular_n4():
    g = irregular_g4()
    r = count_cycles(g, [4])
    assert r.counts[4] == backtrack_cycle_count(g, 4)[4] == 1


def test_irregular_girth_six_gives_zero_n4():
    g = generate(GenSpec.irregular(15, 15, 0.25, seed=4, min_girth=6))
    assert classify(g)[1].kind is ClassKind.IRREGULAR
    n4, _ = n4_irregular(exact_traces(g, 4)[4], DegreeProfile.of(g))
    assert n4 == 0


def test_half_regular_example():
    g = half_regular_example()
    ex = HALF_REGULAR_EXAMPLE
    assert exact_traces(g, 6)[6] == ex["trace6"]
    r = count_cycles(g, [6])
    assert r.counts == {6: ex["n6"]}
    assert r.omegas[6].omega == ex["omega6"]


def test_half_regular_formula_level():
    ex = HALF_REGULAR_EXAMPLE
    profile = DegreeProfile((ex["d_v"],) * ex["n"], ex["w_degrees"])
    n6, omega = n6_halfregular(ex["trace6"], profile, 6)
    assert (n6, omega.omega) == (ex["n6"], ex["omega6"])


def test_check_regular_swaps_sides():
    g = half_regular_example().transpose()
    assert classify(g)[1].kind is ClassKind.CHECK_REGULAR
    r = count_cycles(g, [6])
    assert r.counts == {6: 5}
    assert "exchanged" in r.methods[6]


def test_half_regular_girth_four_refused():
    g = generate(GenSpec.variable_regular(12, 3, (2, 6), seed=1))
    assert girth(g) == 4
    with pytest.raises(GirthTooSmall):
        n6_halfregular(exact_traces(g, 6)[6], DegreeProfile.of(g), 4)
    r = count_cycles(g, [4, 6])
    assert 4 in r.counts and r.refused == {6: Capability.IMPOSSIBLE}


def test_strict_raises():
    with pytest.raises(CapabilityRefused) as info:
        count_cycles(irregular_g4(), [6], strict=True)
    assert info.value.verdict is Capability.IMPOSSIBLE


def test_not_implemented_refusal():
    r = count_cycles(cycle(10), [10, 16])
    # C_10 is (2,2)-regular with girth 10: length 16 = g + 6 has no closed form
    assert r.counts == {10: 1}
    assert r.refused == {16: Capability.NOT_IMPLEMENTED}


def test_below_girth_and_odd_lengths():
    r = count_cycles(heawood(), [3, 4, 6])
    assert r.counts == {3: 0, 4: 0, 6: 28}


def test_divide_rejects_remainder():
    assert _divide(48, 4) == 6
    with pytest.raises(NonDivisibleTrace):
        _divide(49, 4)
    with pytest.raises(NonDivisibleTrace):
        _divide(-8, 4)


def test_empty_targets():
    with pytest.raises(ValueError):
        count_cycles(cycle(4), [])


def test_counts_at_girth_positive():
    for g in (cycle(6), heawood(), complete_bipartite(3, 4)):
        r = count_cycles(g, [girth(g)])
        assert r.counts[girth(g)] >= 1
