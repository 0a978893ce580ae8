import json

import pytest

from idemgraph.field import GF
from idemgraph.idempotents import (
    CapExceeded,
    IdempotentClass,
    NotIdempotent,
    classify,
    complement,
    enumerate_bruteforce,
    enumerate_constructive,
    expected_class_sizes,
    expected_count,
    p3_member,
    p5_member,
    p7_member,
)
from idemgraph.matring import Mat2

SWEEP = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]


@pytest.mark.parametrize("p,k,count", [(2, 1, 8), (3, 1, 14), (2, 2, 22)])
def test_bruteforce_counts(p, k, count):
    assert len(enumerate_bruteforce(GF(p, k)).members) == count


def test_gf4_count_against_independent_scan():
    from oracles import idempotents_gf4

    oracle = idempotents_gf4()
    assert len(oracle) == 22
    ours = enumerate_bruteforce(GF(2, 2))
    assert sorted(m.reps for m in ours.members) == sorted(oracle)


@pytest.mark.parametrize("p,k", SWEEP)
def test_enumerators_agree_as_ordered_lists(p, k):
    gf = GF(p, k)
    brute = enumerate_bruteforce(gf)
    cons = enumerate_constructive(gf)
    assert brute.members == cons.members
    ids = [m.canonical_id for m in cons.members]
    assert ids == sorted(ids)
    assert len(cons.members) == expected_count(gf.q)
    assert len(cons.nontrivial) == gf.q**2 + gf.q
    assert all(m.is_idempotent() for m in cons.members)


@pytest.mark.parametrize("p,k", SWEEP)
def test_class_sizes(p, k):
    gf = GF(p, k)
    assert enumerate_constructive(gf).class_sizes() == expected_class_sizes(gf.q)


def test_p7_empty_exactly_for_q2():
    assert enumerate_constructive(GF(2)).class_sizes()[IdempotentClass.P7] == 0
    assert enumerate_constructive(GF(3)).class_sizes()[IdempotentClass.P7] == 2


def test_classify_examples():
    gf2 = GF(2)
    assert classify(Mat2.from_reps(gf2, (0, 0, 1, 1))) is IdempotentClass.P3
    assert classify(Mat2.unit(gf2, 1, 1)) is IdempotentClass.P1
    assert classify(Mat2.unit(gf2, 2, 2)) is IdempotentClass.P2
    assert classify(Mat2.zero(gf2)) is IdempotentClass.P0
    gf3 = GF(3)
    m = Mat2.from_reps(gf3, (2, 1, 1, 2))
    # Hand check: [[2,1],[1,2]]^2 = [[5,4],[4,5]] = [[2,1],[1,2]] mod 3.
    assert m * m == m
    assert classify(m) is IdempotentClass.P7


def test_classify_rejects_non_idempotents():
    gf = GF(3)
    with pytest.raises(NotIdempotent):
        classify(Mat2.from_reps(gf, (1, 1, 1, 1)))
    with pytest.raises(NotIdempotent):
        complement(Mat2.from_reps(gf, (1, 2, 0, 1)))


@pytest.mark.parametrize("p,k", SWEEP)
def test_classify_matches_recorded_classes(p, k):
    gf = GF(p, k)
    idems = enumerate_constructive(gf)
    for e in idems.members:
        assert classify(e) is idems.classes[e]


def test_complement_examples():
    gf = GF(5)
    assert complement(Mat2.unit(gf, 1, 1)) == Mat2.unit(gf, 2, 2)
    for c in gf.nonzero_elements():
        t = complement(p3_member(gf, c))
        assert t == p5_member(gf, -c)
        assert classify(t) is IdempotentClass.P5


@pytest.mark.parametrize("p,k", SWEEP)
def test_complement_involution_and_orthogonality(p, k):
    gf = GF(p, k)
    for e in enumerate_constructive(gf).members:
        t = complement(e)
        assert complement(t) == e
        assert (e * t).is_zero() and (t * e).is_zero()


@pytest.mark.parametrize("p,k", SWEEP)
def test_orthogonal_partner_uniqueness(p, k):
    # Over nonzero idempotents: both products vanish only for the partner.
    gf = GF(p, k)
    members = enumerate_constructive(gf).members
    nonzero = [e for e in members if not e.is_zero()]
    for e in nonzero:
        t = complement(e)
        for a in nonzero:
            both = (e * a).is_zero() and (a * e).is_zero()
            assert both == (a == t)


@pytest.mark.parametrize("p,k", SWEEP)
def test_p7_iff_both_offdiagonals_nonzero(p, k):
    gf = GF(p, k)
    idems = enumerate_constructive(gf)
    for e in idems.nontrivial:
        _, b, c, _ = e.reps
        assert (idems.classes[e] is IdempotentClass.P7) == (b != 0 and c != 0)


def test_p7_member_validates_parameters():
    gf = GF(3)
    with pytest.raises(ValueError):
        p7_member(gf, gf.zero, gf.one)
    with pytest.raises(ValueError):
        p7_member(gf, gf.element(2), gf.zero)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        enumerate_bruteforce(GF(5), cap=100)
    # Exactly at the cap is allowed.
    assert len(enumerate_bruteforce(GF(2), cap=16).members) == 8


def test_json_document_shape():
    idems = enumerate_constructive(GF(3))
    doc = idems.to_json_dict()
    assert doc["count"] == 14
    assert doc["field"] == {"p": 3, "k": 1, "modulus": [0, 1], "order": 3}
    assert doc["class_sizes"] == {
        "P0": 2, "P1": 1, "P2": 1, "P3": 2, "P4": 2, "P5": 2, "P6": 2, "P7": 2,
    }
    ids = [entry["id"] for entry in doc["idempotents"]]
    assert ids == sorted(ids)
    assert json.loads(json.dumps(doc)) == doc
