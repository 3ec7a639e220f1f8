import pytest

from tannercycles import GirthTooSmall, psi_g2, psi_g4

from reference_values import MARGULIS, TANNER


def test_psi_g2_published():
    assert psi_g2(8, 3, 5, 465).psi == TANNER["psi"][10]
    assert psi_g2(8, 3, 6, 1320).psi == MARGULIS["psi"][10]


def test_psi_g2_k22():
    v = psi_g2(4, 2, 2, 1)
    assert v.psi == 48
    assert v.unrooted == 4


def test_psi_g4_published():
    assert psi_g4(8, 3, 5, 465, 3720).psi == TANNER["psi"][12]
    assert psi_g4(8, 3, 6, 1320, 11088).psi == MARGULIS["psi"][12]


def test_zero_cycles_give_zero():
    assert psi_g2(6, 3, 4, 0).psi == 0
    assert psi_g4(6, 3, 4, 0, 0).psi == 0


def test_psi_g4_needs_girth_six():
    with pytest.raises(GirthTooSmall):
        psi_g4(4, 3, 3, 9, 6)


def test_psi_is_multiple_of_2i():
    for g in (6, 8, 10):
        for dv, dc in ((2, 3), (3, 4), (4, 7)):
            assert psi_g2(g, dv, dc, 17).psi % (2 * (g + 2)) == 0
            assert psi_g4(g, dv, dc, 17, 23).psi % (2 * (g + 4)) == 0
