from itertools import product

import pytest

import oracles
from gammarough import catalog
from gammarough.antihom import enumerate_maps
from gammarough.core import Universe, apply
from gammarough.errors import StructureMismatchError, UnknownTheoremError
from gammarough.ideals import IdealKind, is_ideal_of_kind
from gammarough.quotient import (
    audit_quotient_theorem,
    build_quotient,
    class_image,
    quotient_lower,
    quotient_upper,
)
from gammarough.rough import SetValuedMap, lower_approx, upper_approx

KINDS3 = (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED)


def test_factoring_over_fixture_maps():
    for T in catalog.fixture_maps():
        for H in T.target.all_subsets():
            assert quotient_lower(T, H) == class_image(T, lower_approx(T, H))
            assert quotient_upper(T, H) == class_image(T, upper_approx(T, H))


def test_classes_are_image_fibres():
    S = catalog.example3()
    for T in enumerate_maps(S, S):
        q = build_quotient(T)
        for x, y in product(S.elements, repeat=2):
            assert (q.class_of(x) == q.class_of(y)) == (T.image(x) == T.image(y))


def _well_defined_oracle(T):
    S = T.source
    img = oracles.images_of(T)
    for x, x2, y, g in product(S.elements, S.elements, S.elements, S.gammas):
        if img[x] != img[x2]:
            continue
        if img[apply(S, x, g, y)] != img[apply(S, x2, g, y)]:
            return False
        if img[apply(S, y, g, x)] != img[apply(S, y, g, x2)]:
            return False
    return True


def test_well_definedness_matches_oracle_and_projection():
    S = catalog.example3()
    found_bad = False
    for T in enumerate_maps(S, S):
        q = build_quotient(T)
        assert q.well_defined == _well_defined_oracle(T)
        if not q.well_defined:
            found_bad = True
            w = q.failure_witness
            assert T.image(w.x) == T.image(w.x2)
            if w.side == "right":
                assert T.image(apply(S, w.x, w.gamma, w.y)) != T.image(apply(S, w.x2, w.gamma, w.y))
            else:
                assert T.image(apply(S, w.y, w.gamma, w.x)) != T.image(apply(S, w.y, w.gamma, w.x2))
            assert q.induced is None
        else:
            Q = q.induced
            for x, g, y in product(S.elements, S.gammas, S.elements):
                lhs = q.class_of(apply(S, x, g, y))
                rhs = Q.index(apply(Q, q.class_name(q.class_of(x)), g, q.class_name(q.class_of(y))))
                assert lhs == rhs
    assert found_bad


def test_constant_map_has_one_class():
    S = catalog.example3()
    T = SetValuedMap("C", S, S, (0b010,) * 3)
    q = build_quotient(T)
    assert len(q.classes) == 1 and q.well_defined
    assert q.induced.elements == ("{b}",)


def test_injective_map_copies_source():
    S = catalog.example3()
    T = SetValuedMap("I", S, S, (1, 2, 4))
    q = build_quotient(T)
    assert q.well_defined and q.induced.is_valid
    assert [q.class_name(i) for i in range(3)] == ["{a}", "{b}", "{c}"]


def test_example1_quotient_values():
    T = catalog.example1_map()
    H = T.target.subset(["b"])
    assert quotient_lower(T, H).members == ("{b}",)
    assert quotient_upper(T, H).members == ("{b}", "{a,b,c}")
    assert build_quotient(T).induced is None


def test_example3_quotient_lines():
    q = build_quotient(catalog.example3_map())
    lines = q.lines()
    assert "well_defined=true" in lines and "associative=true" in lines


def test_carrier_mismatch():
    T = catalog.example3_map()
    with pytest.raises(StructureMismatchError):
        quotient_lower(T, Universe("U", ("a", "b", "c")).full())


def test_q518_on_injective_map():
    # the quotient is M relabeled, so verdicts follow the base classification
    S = catalog.example3()
    T = SetValuedMap("I", S, S, (1, 2, 4))
    B = S.subset(["b"])
    for tid, approx in (("Q5.18.i", upper_approx), ("Q5.18.ii", lower_approx)):
        r = audit_quotient_theorem(tid, T, [B])
        assert r.instance_counts[1] == 3
        R = approx(T, B)
        want = all(
            is_ideal_of_kind(S, R, k).holds for k in KINDS3 if is_ideal_of_kind(S, B, k).holds
        )
        assert r.hypothesis_met
        assert r.status == ("PASS" if want else "FAIL")


def test_non_quotient_id_rejected():
    with pytest.raises(UnknownTheoremError):
        audit_quotient_theorem("T5.3.i", catalog.example3_map(), [catalog.example3().full()])
