import numpy as np
import pytest

from tannercycles import (DegreeProfile, InconsistentParameters, ResourceLimit,
                          UnsupportedLength, complete_bipartite, omega_biregular,
                          omega_halfregular_6, omega_irregular_4, s_closed_form, s_tree_dp)
from tannercycles.walks import OmegaMethod, q_closed_form, s_value

from graphs import path5, star
from reference_values import (HALF_REGULAR_EXAMPLE, MARGULIS, S_QUOTED, TANNER,
                              s_table_entries)


def _explicit_tree_walks(x, y, i):
    """Root-to-root i-walks in the alternating tree of height i/2, built node by node."""
    parents, levels = [-1], [0]
    frontier = [0]
    for level in range(i // 2):
        branch = x if level == 0 else (y - 1 if level % 2 else x - 1)
        nxt = []
        for v in frontier:
            for _ in range(branch):
                parents.append(v)
                levels.append(level + 1)
                nxt.append(len(parents) - 1)
        frontier = nxt
    size = len(parents)
    a = np.zeros((size, size), dtype=np.int64)
    for v, p in enumerate(parents):
        if p >= 0:
            a[v, p] = a[p, v] = 1
    return int(np.linalg.matrix_power(a, i)[0, 0])


@pytest.mark.parametrize("x,y,i,expected", list(s_table_entries()))
def test_tree_dp_matches_published_table(x, y, i, expected):
    assert s_tree_dp(x, y, i).s_value == expected


@pytest.mark.parametrize("key", sorted(S_QUOTED))
def test_quoted_s_values(key):
    assert s_value(*key) == S_QUOTED[key]


def test_closed_form_agrees_with_tree_dp_on_grid():
    for i in (2, 4, 6, 8, 10):
        for x in range(1, 9):
            for y in range(1, 9):
                closed = s_closed_form(x, y, i)
                dp = s_tree_dp(x, y, i)
                assert (closed.s_value, closed.q_value) == (dp.s_value, dp.q_value), (x, y, i)


@pytest.mark.parametrize("x,y,i", [(2, 3, 6), (3, 2, 8), (3, 3, 6), (2, 2, 10), (1, 4, 6)])
def test_tree_dp_matches_explicit_tree(x, y, i):
    assert s_tree_dp(x, y, i).s_value == _explicit_tree_walks(x, y, i)


def test_small_closed_forms():
    assert s_closed_form(2, 2, 4).s_value == 6
    assert s_closed_form(3, 5, 8).s_value == 1509
    assert s_closed_form(3, 5, 10).s_value == 13995
    assert s_closed_form(5, 3, 10).s_value == 23325
    assert s_closed_form(3, 5, 6).s_value == 171
    assert s_closed_form(5, 3, 6).s_value == 285


def test_length_two_is_degree():
    for x in range(1, 7):
        for y in range(1, 7):
            assert s_tree_dp(x, y, 2).s_value == x
            assert q_closed_form(x, y, 2) == x


def test_length_errors():
    with pytest.raises(UnsupportedLength):
        s_closed_form(3, 5, 12)
    with pytest.raises(UnsupportedLength):
        s_tree_dp(3, 5, 7)
    with pytest.raises(ResourceLimit):
        s_tree_dp(3, 5, 18)
    assert s_tree_dp(3, 5, 18, max_length=18).s_value > s_tree_dp(3, 5, 16).s_value


def test_omega_biregular_published():
    for i, v in TANNER["omega"].items():
        assert omega_biregular(155, 93, 3, 5, i).omega == v
    for i, v in MARGULIS["omega"].items():
        assert omega_biregular(2640, 1320, 3, 6, i).omega == v
    assert omega_biregular(2640, 1320, 3, 6, 12).class_used is OmegaMethod.TREE_DP


def test_omega_biregular_small():
    for x in range(2, 7):
        assert omega_biregular(x, x, x, x, 4).omega == 2 * x * x * (2 * x - 1)
    assert omega_biregular(20, 12, 3, 5, 2).omega == 2 * 60


def test_omega_biregular_inconsistent():
    with pytest.raises(InconsistentParameters):
        omega_biregular(10, 10, 3, 4, 4)


def test_omega_irregular_4():
    assert omega_irregular_4(DegreeProfile.of(path5())).omega == 20
    assert omega_irregular_4(DegreeProfile.of(star(4))).omega == 32
    assert omega_irregular_4(DegreeProfile.of(complete_bipartite(2, 2))).omega == 24


def test_omega_halfregular_6():
    ex = HALF_REGULAR_EXAMPLE
    assert omega_halfregular_6(ex["n"], ex["d_v"], ex["w_degrees"]).omega == ex["omega6"]
    assert (omega_halfregular_6(155, 3, [5] * 93).omega
            == omega_biregular(155, 93, 3, 5, 6).omega == 53010)
    # two disjoint edges
    assert omega_halfregular_6(2, 1, (1, 1)).omega == 4
