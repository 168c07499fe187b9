import copy
import json

import pytest

from shifted_crystal.graph import (
    build,
    components,
    export,
    from_json,
    lrs_coefficient,
    strings,
    summary,
    to_dot,
    weight_multiset,
)
from shifted_crystal.shapes import ShiftedShape
from shifted_crystal.verify import (
    check_commutation,
    check_highest_weights,
    check_inverse_pairs,
    check_strings,
    check_walk_shift,
)


@pytest.fixture(scope="module")
def b21():
    return build(ShiftedShape((2, 1)), 4)


@pytest.fixture(scope="module")
def skew():
    return build(ShiftedShape((3, 1), (1,)), 4)


def test_sizes(b21, skew):
    # frozen from the brute-force enumerator
    assert len(b21) == 16
    assert len(skew) == 36


def test_components_of_skew_crystal(skew, b21):
    comps = components(skew)
    assert sorted(len(c) for c in comps) == [16, 20]
    small = min(comps, key=len)
    assert weight_multiset(skew, small) == weight_multiset(b21)


def test_one_highest_weight_per_component(skew):
    assert len(skew.highest_weights()) == len(components(skew)) == 2
    assert len(skew.lowest_weights()) == 2


def test_strings_classified(b21):
    for i in range(1, 4):
        parts = strings(b21, i)
        assert sum(len(vs) for vs, _ in parts) == len(b21)
        assert {s.kind for _, s in parts} <= {"collapsed", "separated"}


def test_empty_shape_is_one_vertex():
    g = build(ShiftedShape(()), 3)
    assert len(g) == 1 and g.edges() == []


def test_dot_export(b21):
    dot = to_dot(b21)
    assert dot.startswith("digraph crystal {")
    assert "color=red" in dot and "color=blue" in dot and "color=green" in dot
    assert "style=dashed" in dot and "label=\"1'\"" in dot
    assert dot.count(" -> ") == len(b21.edges())


def test_json_round_trip(skew):
    doc = export(skew, "json")
    assert from_json(doc) == skew
    assert json.loads(doc)["n"] == 4
    with pytest.raises(ValueError):
        export(skew, "svg")


def test_summary(skew):
    s = summary(skew)
    assert s["vertices"] == 36 and s["components"] == 2
    assert sorted(map(tuple, s["highest_weights"])) == [(2, 1, 0, 0), (3, 0, 0, 0)]


def test_lrs_coefficient_example():
    # frozen from the backtracking ballot oracle
    assert lrs_coefficient((6, 5, 2, 1), (4, 2), (4, 3, 1), 3) == 4
    with pytest.raises(ValueError):
        lrs_coefficient((3,), (), (2,))


def test_checks_pass_on_real_graph(b21):
    for check in (check_inverse_pairs, check_walk_shift, check_commutation, check_highest_weights, check_strings):
        assert check(b21) == []


def test_mutated_graph_is_caught(b21):
    g = copy.deepcopy(b21)
    f = g.f[1]
    a, b = [v for v in range(len(g)) if f[v] >= 0][:2]
    f[a], f[b] = f[b], f[a]
    g._e.clear()
    assert check_inverse_pairs(g)
    assert check_walk_shift(g) or check_strings(g)


def test_dropped_edge_is_caught(b21):
    g = copy.deepcopy(b21)
    v = next(v for v in range(len(g)) if g.fp[2][v] >= 0)
    g.fp[2][v] = -1
    g._ep.clear()
    assert check_inverse_pairs(g)
