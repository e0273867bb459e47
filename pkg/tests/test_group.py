from __future__ import annotations

import random

import pytest

from normlab.catalog import build, default_sweep, parse_spec
from normlab.errors import DegreeMismatch, EmptyDegree, OrderTooLarge, PointOutOfRange
from normlab.group import Group, trivial_group
from normlab.limits import Limits, using_limits
from normlab.perm import Perm, perm_from_cycles

from oracles import brute_order, mulclose


def test_s4_order(s4):
    assert s4.order() == 24


def test_trivial_group_order():
    assert trivial_group(3).order() == 1
    assert list(trivial_group(3).elements())[0].is_identity()


def test_psl2_17_order(psl2_17):
    q = 17
    assert psl2_17.order() == q * (q * q - 1) // 2 == 2448


def test_order_against_exhaustive_closure_oracle(s4, a4, d4):
    for G in (s4, a4, d4):
        assert G.order() == brute_order(list(G.generators), G.degree)


def test_empty_degree():
    with pytest.raises(EmptyDegree):
        Group(0, ())


def test_generator_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Group(4, (perm_from_cycles(3, [[1, 2]]),))


def test_contains(s4, a4):
    assert s4.contains(perm_from_cycles(4, [[1, 2, 3, 4]]))
    assert not a4.contains(perm_from_cycles(4, [[1, 2]]))


def test_contains_degree_mismatch(s4):
    with pytest.raises(DegreeMismatch):
        s4.contains(perm_from_cycles(3, [[1, 2]]))


def test_klein_membership():
    v4 = Group(4, (perm_from_cycles(4, [[1, 2], [3, 4]]), perm_from_cycles(4, [[1, 3], [2, 4]])))
    closure = mulclose(list(v4.generators), 4)
    assert perm_from_cycles(4, [[1, 4], [2, 3]]) in closure
    assert v4.contains(perm_from_cycles(4, [[1, 4], [2, 3]]))
    assert v4.order() == 4


def test_elements_exactly_once(s3, psl2_17):
    els = list(s3.elements())
    assert len(els) == 6 == len(set(els))
    big = list(psl2_17.elements())
    assert len(big) == 2448 == len(set(big))
    sample = random.Random(7).sample(big, 40)
    assert all(psl2_17.contains(g) for g in sample)


def test_elements_bound():
    G, _ = build(parse_spec("S:5"))
    with using_limits(Limits(enum_bound=100)):
        with pytest.raises(OrderTooLarge):
            list(G.elements())


def test_membership_positive_and_negative(s4):
    closure = mulclose(list(s4.generators), 4)
    for g in closure:
        assert s4.contains(g)
    # on 4 points every permutation is in S4; use A4 for negatives
    a4, _ = build(parse_spec("A:4"))
    a4_set = mulclose(list(a4.generators), 4)
    rng = random.Random(3)
    negatives = 0
    while negatives < 100:
        images = list(range(1, 5))
        rng.shuffle(images)
        p = Perm(tuple(images))
        if p not in a4_set:
            assert not a4.contains(p)
            negatives += 1


def test_orbit(s4):
    assert s4.orbit(1) == {1, 2, 3, 4}


def test_orbit_fixed_point():
    G = Group(4, (perm_from_cycles(4, [[1, 2]]),))
    assert G.orbit(3) == {3}


def test_orbit_out_of_range(s4):
    with pytest.raises(PointOutOfRange):
        s4.orbit(5)


def test_transitivity():
    agl5, _ = build(parse_spec("AGL1:5"))
    assert agl5.is_transitive()
    G = Group(4, (perm_from_cycles(4, [[1, 2]]),))
    assert not G.is_transitive()


def test_point_stabilizer(s4):
    stab = s4.point_stabilizer(4)
    assert stab.order() == 6
    assert all(g.apply(4) == 4 for g in stab.generators)


def test_chain_base_reordering_invariance():
    # rebuilding with any base ordering never changes order or membership
    for name in ("S:4", "A:5", "D:6", "AGL1:7"):
        G, _ = build(parse_spec(name))
        closure = mulclose(list(G.generators), G.degree)
        for base in [(G.degree,), (2, 1), (1, 2, 3)]:
            base = tuple(b for b in base if b <= G.degree)
            chain = G.chain_with_base(base)
            assert chain.order() == G.order()
            assert all(chain.contains(g) for g in closure)


def test_chain_sift_products_of_generators(s4):
    rng = random.Random(11)
    for _ in range(30):
        word = [rng.choice(s4.generators) for _ in range(6)]
        g = word[0]
        for w in word[1:]:
            g = g * w
        assert s4.chain.contains(g)


def test_conjugacy_class_reps(s4):
    reps = s4.conjugacy_class_reps()
    assert len(reps) == 5  # cycle types of S4


def test_from_element_tuples_roundtrip(d4):
    rebuilt = Group.from_element_tuples(4, d4.element_tuples())
    assert rebuilt.order() == d4.order()
    assert rebuilt.element_tuples() == d4.element_tuples()


def test_catalog_chain_order_matches_closure_oracle():
    for spec in default_sweep(max_order=200):
        G, _ = build(spec)
        assert G.order() == brute_order(list(G.generators), G.degree), str(spec)
