import json

import pytest

from idemgraph.field import GF
from idemgraph.graph import GraphKind, all_pairs_distances, build_graph
from idemgraph.idempotents import enumerate_constructive
from idemgraph.verify import (
    DEFAULT_SWEEP,
    GraphReport,
    audit_witnesses,
    expected_values,
    verify_all,
)


@pytest.mark.parametrize("p,k", DEFAULT_SWEEP)
def test_verify_all_claim_outcomes(p, k):
    gf = GF(p, k)
    report = verify_all(gf)
    failed = [c.name for c in report.failed_claims()]
    if gf.q == 2:
        # The computed girth is 3 (the graph matches the drawn 6-vertex
        # picture, which contains triangles); the claim suite encodes the
        # expected dichotomy of 4 at q=2 and therefore reports this one
        # claim as failing.  Everything else must pass.
        assert failed == ["girth dichotomy with cycle witness"]
        assert report.girth == 3
    else:
        assert failed == []
        assert report.all_passed


def test_verify_holds_for_alternative_modulus():
    # Same field order, different irreducible modulus: encodings change,
    # the structure must not.
    report = verify_all(GF(3, 2, [2, 1, 1]))
    assert report.all_passed
    assert report.wiener == 7245


def test_report_fields_gf3():
    report = verify_all(GF(3))
    assert report.q == 3
    assert report.vertex_count == 12
    assert report.degree_min == report.degree_max == 5
    assert report.is_regular
    assert report.diameter == 2
    assert report.girth == 3
    assert report.component_count == 1
    assert report.wiener == 102
    assert report.harary == 96
    assert report.expected == expected_values(3)


def test_report_json_roundtrip():
    report = verify_all(GF(2, 2))
    doc = report.to_json_dict()
    text = json.dumps(doc, sort_keys=True)
    back = GraphReport.from_json_dict(json.loads(text))
    assert back == report


def test_skip_claims_when_cap_blocks_bruteforce():
    report = verify_all(GF(3), cap=10)
    by_name = {c.name: c for c in report.claims}
    assert by_name["idempotent count (brute force)"].status == "skip"
    assert by_name["enumeration agreement"].status == "skip"
    # Skips do not fail the run.
    assert report.all_passed


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (2, 2), (3, 2)])
def test_audit_documents_exactly_one_partial_case(p, k):
    gf = GF(p, k)
    idems = enumerate_constructive(gf)
    gid = build_graph(idems, GraphKind.GID)
    cases = audit_witnesses(idems, gid, all_pairs_distances(gid))
    assert all(c.ok for c in cases)
    assert all(c.distance_failures == 0 for c in cases)
    limited = [c for c in cases if c.known_limited]
    assert len(limited) == 1
    case = limited[0]
    # The as-stated mediator only works when the P7 parameter is 1, so for
    # q > 2 it must fail on some instances while the corrected one holds.
    assert case.witness_failures > 0
    assert case.corrected_ok
    others = [c for c in cases if not c.known_limited]
    assert all(c.witness_failures == 0 for c in others)


def test_audit_trivial_for_q2():
    gf = GF(2)
    idems = enumerate_constructive(gf)
    gid = build_graph(idems, GraphKind.GID)
    cases = audit_witnesses(idems, gid, all_pairs_distances(gid))
    assert all(c.ok for c in cases)
    # No P7 vertices: the partial case has nothing to check.
    limited = [c for c in cases if c.known_limited]
    assert limited[0].checked == 0
