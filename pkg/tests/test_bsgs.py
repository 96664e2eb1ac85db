import random
from math import factorial, lcm

import pytest

from cubegal.bsgs import PermutationGroup, ProductReplacementSampler, normal_closure
from cubegal.perm import Permutation, parse_cycles


def s_n_generators(n):
    return [parse_cycles("(1 2)", n),
            Permutation(list(range(2, n + 1)) + [1])]


def test_order_transposition():
    g = PermutationGroup([parse_cycles("(1 2)", 2)])
    assert g.order() == 2


def test_order_s3():
    g = PermutationGroup([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    assert g.order() == 6


def test_order_s24():
    g = PermutationGroup(s_n_generators(24))
    assert g.order() == factorial(24)


def test_order_a5():
    g = PermutationGroup([parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)])
    assert g.order() == 60


def test_order_equals_product_of_basic_orbits():
    g = PermutationGroup(s_n_generators(8))
    prod = 1
    for size in g.basic_orbit_sizes:
        prod *= size
    assert prod == g.order()


def test_empty_generators_rejected():
    with pytest.raises(ValueError):
        PermutationGroup([])


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        PermutationGroup([parse_cycles("(1 2)", 3), parse_cycles("(1 2)", 4)])


def test_trivial_group():
    g = PermutationGroup([Permutation.identity(6)])
    assert g.order() == 1
    assert g.contains(Permutation.identity(6))
    assert not g.contains(parse_cycles("(1 2)", 6))
    assert g.random_element(3).is_identity()


def test_contains_identity_and_generators():
    gens = s_n_generators(10)
    g = PermutationGroup(gens)
    assert g.contains(Permutation.identity(10))
    for x in gens:
        assert g.contains(x)


def test_contains_full_symmetric():
    g = PermutationGroup(s_n_generators(9))
    rng = random.Random(3)
    for _ in range(20):
        images = list(range(1, 10))
        rng.shuffle(images)
        assert g.contains(Permutation(images))


def test_contains_respects_subgroup():
    # A5 rejects odd permutations
    g = PermutationGroup([parse_cycles("(1 2 3)", 5), parse_cycles("(1 2 3 4 5)", 5)])
    assert not g.contains(parse_cycles("(1 2)", 5))
    assert g.contains(parse_cycles("(1 2)(3 4)", 5))


def test_contains_degree_mismatch():
    g = PermutationGroup(s_n_generators(5))
    with pytest.raises(ValueError):
        g.contains(Permutation.identity(6))


def test_contains_closed_under_products_random():
    g = PermutationGroup([parse_cycles("(1 2 3)", 7), parse_cycles("(3 4 5 6 7)", 7)])
    sampler = g.sampler(99)
    for _ in range(30):
        a = sampler.next()
        b = sampler.next()
        assert g.contains(a * b)
        assert g.contains(a.inverse())


def test_cyclic_group_order_matches_element_order():
    rng = random.Random(23)
    for _ in range(10):
        images = list(range(1, 16))
        rng.shuffle(images)
        p = Permutation(images)
        g = PermutationGroup([p])
        assert g.order() == p.order() == lcm(*p.cycle_type().parts)


def test_random_element_deterministic():
    g = PermutationGroup(s_n_generators(12))
    assert g.random_element(42) == g.random_element(42)
    stream_a = [g.sampler(7).next() for _ in range(3)]
    stream_b = [g.sampler(7).next() for _ in range(3)]
    assert stream_a == stream_b


def test_random_elements_are_members():
    g = PermutationGroup([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6),
                          parse_cycles("(1 4)(2 5)(3 6)", 6)])
    sampler = g.sampler(1)
    for _ in range(50):
        assert g.contains(sampler.next())


def test_even_fraction_of_s24_samples():
    from cubegal.evidence import EVEN_FRACTION_WINDOW
    g = PermutationGroup(s_n_generators(24))
    sampler = g.sampler(2024)
    even = sum(1 for _ in range(10_000) if sampler.next().sign() == 1)
    low, high = EVEN_FRACTION_WINDOW
    assert low <= even / 10_000 <= high


def test_sampler_requires_generators():
    with pytest.raises(ValueError):
        ProductReplacementSampler([], seed=1)


def test_base_points_are_moved():
    g = PermutationGroup(s_n_generators(6))
    for b, size in zip(g.base, g.basic_orbit_sizes):
        assert 1 <= b <= 6
        assert size >= 2


def test_strong_generators_are_members():
    g = PermutationGroup(s_n_generators(8), seed=5)
    for s in g.strong_generators:
        assert g.contains(s)


def test_order_independent_of_seed():
    gens = [parse_cycles("(1 2 3 4)", 8), parse_cycles("(1 5)(2 6)(3 7)(4 8)", 8)]
    orders = {PermutationGroup(gens, seed=s).order() for s in (1, 2, 3, 99)}
    assert len(orders) == 1


def test_normal_closure_of_even_part():
    # closure of a 3-cycle inside S5 is A5
    g = PermutationGroup(s_n_generators(5))
    h = normal_closure(g, [parse_cycles("(1 2 3)", 5)])
    assert h is not None
    assert h.order() == 60


def test_normal_closure_trivial_seeds():
    g = PermutationGroup(s_n_generators(4))
    h = normal_closure(g, [Permutation.identity(4)])
    assert h is not None
    assert h.order() == 1


def test_normal_closure_cap_returns_none():
    g = PermutationGroup(s_n_generators(10))
    assert normal_closure(g, [parse_cycles("(1 2 3)", 10)], max_generators=1) is None
