from itertools import product

import pytest

import oracles
from gammarough import catalog
from gammarough.antihom import Level, check_anti_hom, enumerate_maps, image_product, map_from_index
from gammarough.core import apply
from gammarough.errors import StructureMismatchError
from gammarough.rough import SetValuedMap


def test_example3_map_plain():
    v = check_anti_hom(catalog.example3_map())
    assert v.level is Level.PLAIN
    w = v.strong_witness
    assert w.product != w.image and w.product <= w.image


def test_example3_counts():
    S = catalog.example3()
    assert enumerate_maps(S, S).total == 343
    plain = list(enumerate_maps(S, S, Level.PLAIN))
    strong = list(enumerate_maps(S, S, Level.STRONG))
    assert (len(plain), len(strong)) == (51, 15)


def test_filter_matches_post_filter():
    pairs = [(catalog.example3(), catalog.example3()), (catalog.cyclic3(), catalog.chain3())]
    pairs += [(a, b) for a in catalog.order2_structures()[:3] for b in catalog.order2_structures()[:3]]
    for S1, S2 in pairs:
        everything = list(enumerate_maps(S1, S2))
        for f in (Level.PLAIN, Level.STRONG):
            want = [T.images for T in everything if oracles.antihom_level(T) >= f]
            got = [T.images for T in enumerate_maps(S1, S2, f)]
            assert got == want


def test_level_matches_oracle_and_witnesses_replay():
    S = catalog.example3()
    for T in enumerate_maps(S, S):
        v = check_anti_hom(T)
        assert int(v.level) == oracles.antihom_level(T)
        if v.level is Level.NONE:
            w = v.plain_witness
            assert w.offending in image_product(T, w.a, w.gamma, w.b)
            assert w.offending not in T.image(apply(S, w.a, w.gamma, w.b))
        if v.level >= Level.PLAIN:
            for a, g, b in product(S.elements, S.gammas, S.elements):
                assert image_product(T, a, g, b) <= T.image(apply(S, a, g, b))


def test_singleton_forced_strong():
    S = catalog.singleton()
    maps = list(enumerate_maps(S, S, Level.STRONG))
    assert len(maps) == 1


def test_example_maps_levels():
    assert check_anti_hom(catalog.example4_map()).level is Level.NONE
    assert check_anti_hom(catalog.example5_map()).level is Level.NONE
    assert check_anti_hom(catalog.example6_map()).level is Level.NONE


def test_gamma_mismatch():
    one = catalog.order2_structures()[0]
    two = catalog.order2_two_gamma_structures()[0]
    T = SetValuedMap("T", one, two, (1, 1))
    with pytest.raises(StructureMismatchError):
        check_anti_hom(T)


def test_sampled_enumeration_deterministic():
    S = catalog.example4()
    a = [T.images for T in enumerate_maps(S, S, budget=50, seed=3)]
    b = [T.images for T in enumerate_maps(S, S, budget=50, seed=3)]
    assert a == b and len(a) == 50
    assert not enumerate_maps(S, S, budget=50).exhaustive


def test_map_from_index_round_trip():
    S = catalog.example3()
    seen = {map_from_index(S, S, i).images for i in range(343)}
    assert len(seen) == 343
