import pytest

from shifted_crystal.cactus import (
    act_on_weight,
    braid_failure_chain,
    braid_order,
    cycle_orders,
    eta_pq,
    intervals,
    long_element_check,
    reduced_words_longest,
    sigma,
    theta,
    theta_index,
    verify_braid_failure,
    verify_cactus_relations,
)
from shifted_crystal.graph import build
from shifted_crystal.involutions import eta
from shifted_crystal.shapes import ShiftedShape
from shifted_crystal.tableau import enumerate_tableaux, parse_tableau

BRAID = {
    "T": "1 1 1 1 3'\n2 2 3'\n3",
    "s1": "1 1 2' 2 3'\n2 2 3'\n3",
    "s21": "1 1 2' 2 3\n2 3' 3\n3",
    "s121": "1 1 1 2 3\n2 3' 3\n3",
    "s2": "1 1 1 1 2\n2 2 3'\n3",
    "s12": "1 1 1 2' 2\n2 2 3'\n3",
    "s212": "1 1 1 2' 3'\n2 3' 3\n3",
}


def test_braid_counterexample_cell_for_cell():
    chain = braid_failure_chain()
    for key, text in BRAID.items():
        assert chain[key] == parse_tableau(text, n=3), key
    assert chain["s121"] != chain["s212"]
    assert verify_braid_failure()


def test_theta():
    # theta(a, b, n) reverses the letters a..b+1
    assert theta(1, 2, 4) == (3, 2, 1, 4)
    assert theta_index(2, 3, 2) == 3
    assert act_on_weight(theta(1, 1, 3), (4, 2, 3)) == (2, 4, 3)
    assert list(intervals(3)) == [(1, 2), (1, 3), (2, 3)]


def test_eta_pq_full_range_is_eta():
    for t in enumerate_tableaux(ShiftedShape((3, 1)), 3):
        assert eta_pq(t, 1, 3) == eta(t)


def test_sigma_is_eta_on_adjacent_pairs():
    for t in enumerate_tableaux(ShiftedShape((4, 2), (1,)), 3):
        for i in (1, 2):
            assert sigma(t, i) == eta_pq(t, i, i + 1)
            assert sigma(sigma(t, i), i) == t


def test_eta_pq_reverses_weight_window():
    for t in enumerate_tableaux(ShiftedShape((3, 2)), 4):
        e = eta_pq(t, 2, 4)
        assert e.weight == act_on_weight(theta(2, 3, 4), t.weight)
        assert e.shape == t.shape


@pytest.mark.parametrize("shape,n", [(((3, 1),), 3), (((2, 1),), 4), (((3, 1), (1,)), 4)])
def test_cactus_relations(shape, n):
    rep = verify_cactus_relations(build(ShiftedShape(*shape), n))
    assert rep.ok, rep.violations[:3]
    assert rep.checked["involution"] > 0


def test_cycle_orders():
    assert cycle_orders([1, 2, 0, 3]) == [3, 3, 3, 1]


def test_braid_order_small():
    least, hist = braid_order((3, 2, 1), 3)
    assert least == 3
    assert sum(hist.values()) == 8


def test_reduced_words_and_long_element():
    assert len(reduced_words_longest(3)) == 2
    assert len(reduced_words_longest(4)) == 16
    assert long_element_check((3, 1), 3)
    assert long_element_check((4, 2, 1), 3)
