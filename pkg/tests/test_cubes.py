import hashlib
import random

import pytest

from cubegal.cubes import (GENERATOR_TABLES, TABLES_SHA256, ConfigTuple,
                           canonical_table_text, cube_model, decode_config,
                           encode_config, induced_cubie_perm, load_net,
                           orientation_sum, r3_model, r4_model, r5_model,
                           resolve_sign_assignment, sign_vector,
                           superflip_permutation, validity_check)
from cubegal.perm import Permutation, orbits, parse_cycles


def test_table_integrity():
    assert hashlib.sha256(canonical_table_text().encode()).hexdigest() == TABLES_SHA256


def test_net_is_versioned_and_complete():
    net = load_net()
    assert net["version"] == 1
    labels = [x for grid in net["faces"].values() for row in grid for x in row
              if x is not None]
    assert sorted(labels) == list(range(1, 145))


def test_generator_count_and_degree():
    m5 = r5_model()
    assert len(m5.generators) == 12
    assert all(g.degree == 144 for g in m5.generators.values())
    assert m5.generators["r1"](40) == 88  # first entry of the first table


def test_r5_classes_and_blocks():
    m5 = r5_model()
    assert {k: len(v) for k, v in m5.classes.items()} == {
        "corners": 24, "central_edges": 24, "wings": 48,
        "plus_centers": 24, "x_centers": 24}
    assert len(m5.blocks["corners"]) == 8
    assert all(len(b) == 3 for b in m5.blocks["corners"])
    assert len(m5.blocks["central_edges"]) == 12
    assert len(m5.blocks["wings"]) == 24
    assert all(len(b) == 2 for b in m5.blocks["wings"])
    assert all(len(b) == 1 for b in m5.blocks["plus_centers"])


def test_classes_are_unions_of_orbits():
    m5 = r5_model()
    gen_list = list(m5.generators.values())
    for orbit in orbits(gen_list, 144):
        assert any(orbit <= pts for pts in m5.classes.values())


def test_every_generator_preserves_every_class():
    m5 = r5_model()
    for g in m5.generators.values():
        for pts in m5.classes.values():
            assert {g(a) for a in pts} == set(pts)


def test_wing_blocks_span_both_chiral_orbits():
    m5 = r5_model()
    gen_list = list(m5.generators.values())
    wing_orbits = [o for o in orbits(gen_list, 144) if o <= m5.classes["wings"]]
    assert len(wing_orbits) == 2
    for a, b in m5.blocks["wings"]:
        sides = {next(i for i, o in enumerate(wing_orbits) if s in o) for s in (a, b)}
        assert sides == {0, 1}


def test_r4_restriction():
    m4 = r4_model()
    assert m4.degree == 96
    assert {k: len(v) for k, v in m4.classes.items()} == {
        "corners": 24, "wings": 48, "x_centers": 24}
    # four orbits of 24 (wings chiral-split), three classes
    sizes = sorted(len(o) for o in orbits(list(m4.generators.values()), 96))
    assert sizes == [24, 24, 24, 24]


def test_r4_restricted_r2_text():
    m4 = r4_model()
    assert m4.source_text["r2"] == \
        "(39 87 10 95)(27 75 22 83)(15 63 34 71)(3 51 46 59)"
    assert parse_cycles(m4.source_text["r2"], 96) == m4.generators["r2"]


def test_r5_source_text_is_verbatim():
    m5 = r5_model()
    assert m5.source_text == GENERATOR_TABLES


def test_r3_model_structure():
    m3 = r3_model()
    assert m3.degree == 48
    assert sorted(m3.generators) == ["b", "d", "f", "l", "r", "u"]
    assert all(g.order() == 4 for g in m3.generators.values())
    sizes = sorted(len(o) for o in orbits(list(m3.generators.values()), 48))
    assert sizes == [24, 24]


def test_cube_model_dispatch():
    assert cube_model(3).size == 3
    assert cube_model(5).degree == 144
    with pytest.raises(ValueError):
        cube_model(6)


def test_induced_corner_perm_of_r1():
    m5 = r5_model()
    corner = induced_cubie_perm(m5, m5.generators["r1"], "corners")
    assert corner.cycle_type().parts == (4, 1, 1, 1, 1)
    assert corner.sign() == -1


def test_induced_corner_perm_of_r2_is_identity():
    m5 = r5_model()
    assert induced_cubie_perm(m5, m5.generators["r2"], "corners").is_identity()


def test_induced_identity():
    m5 = r5_model()
    ident = Permutation.identity(144)
    for name in m5.class_order:
        assert induced_cubie_perm(m5, ident, name).is_identity()


def test_induced_rejects_block_breaker():
    m5 = r5_model()
    a, b = m5.blocks["corners"][0][0], m5.blocks["corners"][1][0]
    breaker = parse_cycles(f"({a} {b})", 144)
    with pytest.raises(ValueError):
        induced_cubie_perm(m5, breaker, "corners")


def test_sign_vectors_of_generators():
    m5 = r5_model()
    outer = (-1, -1, 1, -1, -1)
    inner = (1, 1, -1, -1, 1)
    for name, g in m5.generators.items():
        expected = outer if name.endswith("1") else inner
        assert sign_vector(m5, g) == expected, name


def test_sign_character_image_has_order_four():
    m5 = r5_model()
    vectors = {sign_vector(m5, g) for g in m5.generators.values()}
    group = {(1,) * 5}
    frontier = set(group)
    while frontier:
        fresh = set()
        for v in frontier:
            for w in vectors:
                prod = tuple(a * b for a, b in zip(v, w))
                if prod not in group:
                    group.add(prod)
                    fresh.add(prod)
        frontier = fresh
    assert len(group) == 4


def test_sign_vector_closure_on_random_elements():
    m5 = r5_model()
    vectors = {sign_vector(m5, g) for g in m5.generators.values()}
    span = {(1,) * 5}
    frontier = set(span)
    while frontier:
        fresh = set()
        for v in frontier:
            for w in vectors:
                prod = tuple(a * b for a, b in zip(v, w))
                if prod not in span:
                    span.add(prod)
                    fresh.add(prod)
        frontier = fresh
    sampler = m5.group().sampler(5)
    for _ in range(1000):
        assert sign_vector(m5, sampler.next()) in span


def test_r4_corner_sign_equals_center_sign():
    m4 = r4_model()
    order = m4.class_order
    ci, xi = order.index("corners"), order.index("x_centers")
    for name, g in m4.generators.items():
        v = sign_vector(m4, g)
        assert v[ci] == v[xi], name


def test_orientation_sums_vanish_on_generators():
    m5 = r5_model()
    for name, g in m5.generators.items():
        assert orientation_sum(m5, g, "corners") == 0, name
        assert orientation_sum(m5, g, "central_edges") == 0, name


def test_orientation_sums_vanish_on_random_elements():
    m5 = r5_model()
    sampler = m5.group().sampler(11)
    for _ in range(1000):
        p = sampler.next()
        assert orientation_sum(m5, p, "corners") == 0
        assert orientation_sum(m5, p, "central_edges") == 0


def test_orientation_identity_and_validation():
    m5 = r5_model()
    assert orientation_sum(m5, Permutation.identity(144), "corners") == 0
    with pytest.raises(ValueError):
        orientation_sum(m5, m5.generators["r1"], "wings")


def test_sign_assignment_resolution():
    report = resolve_sign_assignment(r5_model())
    assert report["candidates"] == ["x_centers"]
    assert report["resolved"] == {"tau": "x_centers", "rho_c": "plus_centers",
                                  "rho_e": "wings"}


def test_initial_config_valid_and_identity():
    m5 = r5_model()
    cfg = ConfigTuple.initial()
    valid, conditions = validity_check(m5, cfg)
    assert valid and all(conditions.values())
    assert encode_config(m5, cfg).is_identity()


def test_single_corner_twist_invalid():
    m5 = r5_model()
    cfg = ConfigTuple(x=(1, 0, 0, 0, 0, 0, 0, 0), sigma_c=Permutation.identity(8),
                      y=(0,) * 12, sigma_e=Permutation.identity(12),
                      tau=Permutation.identity(24), rho_c=Permutation.identity(24),
                      rho_e=Permutation.identity(24))
    valid, conditions = validity_check(m5, cfg, cross_check=True)
    assert not valid
    assert not conditions["corner_twist_sum_zero"]
    assert conditions["membership_cross_check"] is False


def test_generator_decodes_to_valid_config():
    m5 = r5_model()
    cfg = decode_config(m5, m5.generators["r1"])
    valid, conditions = validity_check(m5, cfg, cross_check=True)
    assert valid
    assert conditions["membership_cross_check"] is True
    assert encode_config(m5, cfg) == m5.generators["r1"]


def test_decode_encode_round_trip_random():
    m5 = r5_model()
    sampler = m5.group().sampler(3)
    for _ in range(25):
        p = sampler.next()
        cfg = decode_config(m5, p)
        assert encode_config(m5, cfg) == p
        valid, _ = validity_check(m5, cfg)
        assert valid


def test_validity_matches_membership_on_random_tuples():
    m5 = r5_model()
    rng = random.Random(1234)

    def random_perm(n):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return Permutation(images)

    agreements = 0
    for _ in range(20):
        cfg = ConfigTuple(
            x=tuple(rng.randrange(3) for _ in range(8)),
            sigma_c=random_perm(8),
            y=tuple(rng.randrange(2) for _ in range(12)),
            sigma_e=random_perm(12),
            tau=random_perm(24), rho_c=random_perm(24), rho_e=random_perm(24),
        )
        valid, conditions = validity_check(m5, cfg, cross_check=True)
        assert conditions["membership_cross_check"] == valid
        agreements += 1
    assert agreements == 20


def test_superflip_in_r3():
    m3 = r3_model()
    sf = superflip_permutation(m3)
    assert sf.order() == 2
    assert all(sf * g == g * sf for g in m3.generators.values())
    assert m3.group().contains(sf)
    # flips stickers only within edge blocks
    assert all(sf(a) == b and sf(b) == a for a, b in m3.blocks["central_edges"])
    assert all(sf(s) == s for s in m3.classes["corners"])


def test_superflip_only_in_r3():
    with pytest.raises(ValueError):
        superflip_permutation(r5_model())


def test_corner_sticker_transposition_not_a_member():
    # swapping two stickers breaks the corner-block structure
    m5 = r5_model()
    group = m5.group()
    within_block = parse_cycles("(4 5)", 144)
    assert not group.contains(within_block)
    a = sorted(m5.classes["corners"])[0]
    b = sorted(m5.classes["corners"])[2]
    across_blocks = parse_cycles(f"({a} {b})", 144)
    assert not group.contains(across_blocks)
