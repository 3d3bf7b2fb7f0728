import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from gammarough import catalog
from gammarough.core import apply
from gammarough.errors import EmptySubsetError, StructureMismatchError
from gammarough.ideals import KINDS, IdealKind, classify_subset, is_ideal_of_kind, is_prime_for

K = IdealKind


def sweep():
    for S in catalog.fixture_structures(4):
        for A in S.all_subsets(nonempty=True):
            yield S, A, classify_subset(S, A)


def test_classifier_matches_oracle():
    bad = []
    for S, A, rep in sweep():
        for kind in KINDS:
            if rep.verdicts[kind].holds != oracles.kind_holds(S, A.members, kind.value):
                bad.append((S.name, str(A), kind.value))
        if rep.prime.holds != oracles.is_prime(S, A.members):
            bad.append((S.name, str(A), "prime"))
    assert bad == []


def test_hierarchy():
    for S, A, rep in sweep():
        v = {k: rep.verdicts[k].holds for k in KINDS}
        assert v[K.TWO_SIDED] == (v[K.LEFT] and v[K.RIGHT])
        assert not v[K.LEFT] or v[K.QUASI]
        assert not v[K.RIGHT] or v[K.QUASI]
        assert not v[K.TWO_SIDED] or (v[K.BI] and v[K.INTERIOR])
        assert v[K.BI_QUASI] == (v[K.LEFT_BI_QUASI] and v[K.RIGHT_BI_QUASI])
        assert v[K.QUASI_INTERIOR] == (v[K.LEFT_QUASI_INTERIOR] and v[K.RIGHT_QUASI_INTERIOR])


def test_full_carrier_satisfies_everything():
    for S in catalog.fixture_structures(4):
        rep = classify_subset(S, S.full())
        assert all(v.holds for v in rep.verdicts.values())
        assert rep.prime.holds


def test_witnesses_replay():
    for S, A, rep in sweep():
        for kind, v in rep.verdicts.items():
            if not v.holds:
                assert v.witness.element not in A
        if not rep.prime.holds:
            w = rep.prime.witness
            assert apply(S, w.x, w.gamma, w.y) in A
            assert w.x not in A and w.y not in A


def test_singleton_all_true():
    S = catalog.singleton()
    rep = classify_subset(S, S.full())
    assert rep.lines()[0] == "subset={e}"
    assert all(line.endswith("=true") for line in rep.lines()[1:])


def test_empty_and_foreign_subsets_rejected():
    S = catalog.example3()
    with pytest.raises(EmptySubsetError):
        is_ideal_of_kind(S, S.empty(), K.LEFT)
    with pytest.raises(StructureMismatchError):
        is_prime_for(S, catalog.example4().full())


def test_sub_conjunct_reported_separately():
    # a full verdict implies the bare containment verdict
    S = catalog.example3()
    for A in S.all_subsets(nonempty=True):
        for kind in KINDS:
            v = is_ideal_of_kind(S, A, kind)
            if v.holds:
                assert v.containment_holds


def test_kind_parse():
    assert IdealKind.parse("BiIdeal") is K.BI
    assert IdealKind.parse("QUASI") is K.QUASI
    with pytest.raises(ValueError):
        IdealKind.parse("nope")


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_prime_depends_on_membership_only(data):
    S = data.draw(st.sampled_from(catalog.fixture_structures(4)))
    A = S.from_mask(data.draw(st.integers(1, S.full_mask)))
    assert is_prime_for(S, A).holds == is_prime_for(S, S.subset(list(A))).holds
