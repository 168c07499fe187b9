"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import time
from contextlib import contextmanager

import pytest

from oracles import lrs_brute
from shifted_crystal.cactus import braid_failure_chain, braid_order, sigma_permutation, eta_permutation, verify_cactus_relations
from shifted_crystal.graph import build, components, lrs_coefficient, weight_multiset
from shifted_crystal.involutions import complement_word, evac_yamanouchi_direct, evacuate, reversal
from shifted_crystal.operators import apply_to_tableau, lower_unprimed, raise_unprimed
from shifted_crystal.shapes import ShiftedShape, complement_shape, partitions_inside, strict_partitions
from shifted_crystal.tableau import enumerate_tableaux, parse_tableau, yamanouchi
from shifted_crystal.verify import SUITE_CHECKS
from shifted_crystal.words import all_words

NINE = [(3, 2, 1), (4, 2, 1), (4, 3, 1), (5, 2, 1), (5, 3, 1), (5, 4, 1), (6, 2, 1), (6, 3, 1), (6, 4, 1)]


def T(text, n=3):
    return parse_tableau(text, n=n)


@contextmanager
def criterion(k, title, limit=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        secs = time.perf_counter() - t0
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f}s)")
    if limit is not None:
        assert secs < limit, f"took {secs:.2f}s, limit {limit}s"


@pytest.mark.criterion(1, "appendix cardinalities")
def test_criterion_1_cardinalities():
    with criterion(1, "appendix cardinalities", limit=5):
        got = [len(enumerate_tableaux(ShiftedShape(nu), 3)) for nu in NINE]
        assert got == [8, 24, 24, 48, 64, 48, 80, 120, 120]


@pytest.mark.criterion(2, "braid orbit orders")
def test_criterion_2_braid_orders():
    with criterion(2, "braid orbit orders", limit=30):
        results = {nu: braid_order(nu, 3) for nu in NINE}
        assert [results[nu][0] for nu in NINE] == [3, 3, 3, 9, 45, 9, 18, 18, 18]
        assert results[(5, 3, 1)][1] == {3: 18, 5: 10, 9: 36}


@pytest.mark.criterion(3, "braid failure tableaux")
def test_criterion_3_braid_failure():
    expected = {
        "T": "1 1 1 1 3'\n2 2 3'\n3",
        "s1": "1 1 2' 2 3'\n2 2 3'\n3",
        "s21": "1 1 2' 2 3\n2 3' 3\n3",
        "s121": "1 1 1 2 3\n2 3' 3\n3",
        "s2": "1 1 1 1 2\n2 2 3'\n3",
        "s12": "1 1 1 2' 2\n2 2 3'\n3",
        "s212": "1 1 1 2' 3'\n2 3' 3\n3",
    }
    with criterion(3, "braid failure tableaux"):
        chain = braid_failure_chain()
        for key, text in expected.items():
            assert chain[key] == T(text), key
        assert chain["s121"] != chain["s212"]


@pytest.mark.criterion(4, "worked involutions")
def test_criterion_4_involutions():
    with criterion(4, "worked involutions"):
        t = "1 1 2' 2\n2 2\n3"
        assert evacuate(T(t)) == T("1 2' 2 2\n2 3'\n3")
        assert evacuate(T(t, 4)) == T("2 3' 3 3\n3 4'\n4", 4)
        y_evac = T("1 2' 2 3'\n2 3' 3\n3")
        assert evacuate(yamanouchi((4, 3, 1), 3)) == y_evac
        assert evac_yamanouchi_direct((4, 3, 1), 3) == y_evac
        skew = T(". . . . 1' 1\n. . . 1 2'\n1 2 2\n3")
        assert reversal(skew) == T(". . . . 2' 3'\n. . . 2' 3'\n1 2 3'\n3")


@pytest.mark.criterion(5, "operator examples")
def test_criterion_5_operators():
    with criterion(5, "operator examples"):
        t = T("1 1 1 1 2'\n2 3' 3\n3")
        assert apply_to_tableau(t, "E", 2) == T("1 1 1 1 2'\n2 2 3'\n3")
        assert apply_to_tableau(t, "F", 2) == T("1 1 1 1 3'\n2 3' 3\n3")
        u = T("1 1 1 2' 2\n2 2 2\n3")
        assert apply_to_tableau(u, "Fp", 2) == T("1 1 1 2' 3'\n2 2 2\n3")


@pytest.mark.criterion(6, "skew crystal components")
def test_criterion_6_components():
    with criterion(6, "skew crystal components"):
        g = build(ShiftedShape((3, 1), (1,)), 4)
        comps = components(g)
        assert len(comps) == 2
        target = weight_multiset(build(ShiftedShape((2, 1)), 4))
        assert sum(weight_multiset(g, c) == target for c in comps) == 1


CACTUS_TARGETS = [((3, 2, 1), 3), ((4, 2, 1), 3), ((2, 1), 4)]


@pytest.mark.criterion(7, "cactus action")
def test_criterion_7_cactus():
    with criterion(7, "cactus action", limit=60):
        for nu, n in CACTUS_TARGETS:
            g = build(ShiftedShape(nu), n)
            rep = verify_cactus_relations(g)
            assert rep.ok, (nu, rep.violations[:3])
            rels = ["involution", "weight", "intertwining", "nested", "sigma=eta"]
            if n >= 4:  # two disjoint intervals of length 2 need four letters
                rels.append("disjoint")
            for rel in rels:
                assert rep.checked[rel] > 0, (nu, rel)
            for i in range(1, n):
                assert sigma_permutation(g, i) == eta_permutation(g, i, i + 1)


AXIOM_TARGETS = [
    ((3, 2, 1), (), 3),
    ((4, 2, 1), (), 3),
    ((2, 1), (), 4),
    ((3, 1), (1,), 4),
    ((5, 3, 1), (), 3),
    ((4, 2), (2,), 3),
]


@pytest.mark.criterion(8, "crystal axioms")
def test_criterion_8_axioms():
    with criterion(8, "crystal axioms"):
        for outer, inner, n in AXIOM_TARGETS:
            g = build(ShiftedShape(outer, inner), n)
            for name, check in SUITE_CHECKS["crystal"]:
                assert check(g) == [], (outer, inner, n, name)
        n = 3
        for length in range(6):
            for w in all_words(n, length):
                for i in range(1, n):
                    f = lower_unprimed(complement_word(w, n), n - i)
                    assert raise_unprimed(w, i) == (None if f is None else complement_word(f, n))


def _contains(a, b):
    return len(b) <= len(a) and all(x <= y for x, y in zip(b, a))


@pytest.mark.criterion(9, "LRS symmetry")
def test_criterion_9_lrs_symmetry():
    with criterion(9, "LRS symmetry"):
        shapes = list(partitions_inside((4, 3, 2, 1)))
        mismatches = []
        triples = 0
        for lam in shapes:
            for mu in shapes:
                if not _contains(lam, mu):
                    continue
                for nu in strict_partitions(sum(lam) - sum(mu)):
                    lv, mv = complement_shape(lam, 4), complement_shape(mu, 4)
                    a = lrs_brute(lam, mu, nu)
                    b = lrs_brute(mv, lv, nu)
                    triples += 1
                    if a != b or lrs_coefficient(lam, mu, nu) != a:
                        mismatches.append((lam, mu, nu, a, b))
        assert triples == 275
        assert mismatches == []
