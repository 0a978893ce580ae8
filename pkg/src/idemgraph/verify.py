"""Structural verification of the idempotent graphs.

verify_all() recomputes every invariant the package promises for one
field and reports them claim by claim: enumeration counts and agreement,
partition sizes, regularity, closed-form adjacency against the naive
build, metric values (diameter, girth, component structure), per-vertex
distance sums, the Wiener and Harary indices against their closed forms,
the transpose automorphism, and an audit of the distance-2 mediator
constructions.  Failures are recorded as data, never raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .field import GF
from .graph import (
    GraphKind,
    IdemGraph,
    all_pairs_distances,
    build_graph,
    component_labels,
    diameter,
    girth,
    harary,
    neighbors_closed_form,
    wiener,
)
from .idempotents import (
    DEFAULT_BRUTE_FORCE_CAP,
    CapExceeded,
    IdempotentClass,
    IdempotentSet,
    classify,
    complement,
    enumerate_bruteforce,
    enumerate_constructive,
    expected_class_sizes,
    expected_count,
    p3_member,
    p4_member,
    p5_member,
    p6_member,
    p7_member,
)
from .matring import Mat2

# (p, k) for every prime power q <= 13, ascending in q: the default sweep.
DEFAULT_SWEEP = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1))


@dataclass
class ClaimCheck:
    name: str
    computed: str
    expected: str
    status: str  # "pass" | "fail" | "skip"


@dataclass
class WitnessCase:
    """One family of mediator constructions, checked over all parameters."""

    name: str
    checked: int = 0
    witness_failures: int = 0
    distance_failures: int = 0
    known_limited: bool = False
    corrected_ok: bool = True
    note: str = ""

    @property
    def ok(self) -> bool:
        if self.distance_failures:
            return False
        if self.witness_failures == 0:
            return True
        return self.known_limited and self.corrected_ok


@dataclass
class GraphReport:
    """Everything verify_all measured for one field, plus the claim table.

    Graph-level fields describe the one-sided-product graph (kind GID);
    the orthogonal-pairs graph (kind IR) appears through its own claims.
    """

    p: int
    k: int
    modulus: list[int]
    q: int
    vertex_count: int
    degree_min: int
    degree_max: int
    is_regular: bool
    diameter: int
    girth: int
    component_count: int
    wiener: int
    harary: Fraction
    expected: dict[str, int]
    claims: list[ClaimCheck] = dc_field(default_factory=list)
    witness_audit: list[dict] = dc_field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def failed_claims(self) -> list[ClaimCheck]:
        return [c for c in self.claims if c.status == "fail"]

    def to_json_dict(self) -> dict:
        return {
            "field": {"p": self.p, "k": self.k, "modulus": list(self.modulus), "q": self.q},
            "graph": {
                "vertex_count": self.vertex_count,
                "degree_min": self.degree_min,
                "degree_max": self.degree_max,
                "is_regular": self.is_regular,
                "diameter": self.diameter,
                "girth": self.girth,
                "component_count": self.component_count,
                "wiener": self.wiener,
                "harary": [self.harary.numerator, self.harary.denominator],
            },
            "expected": dict(self.expected),
            "claims": [
                {
                    "name": c.name,
                    "computed": c.computed,
                    "expected": c.expected,
                    "status": c.status,
                    "passed": c.status != "fail",
                }
                for c in self.claims
            ],
            "witness_audit": [dict(entry) for entry in self.witness_audit],
            "all_passed": self.all_passed,
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "GraphReport":
        g = doc["graph"]
        return cls(
            p=doc["field"]["p"],
            k=doc["field"]["k"],
            modulus=list(doc["field"]["modulus"]),
            q=doc["field"]["q"],
            vertex_count=g["vertex_count"],
            degree_min=g["degree_min"],
            degree_max=g["degree_max"],
            is_regular=g["is_regular"],
            diameter=g["diameter"],
            girth=g["girth"],
            component_count=g["component_count"],
            wiener=g["wiener"],
            harary=Fraction(g["harary"][0], g["harary"][1]),
            expected=dict(doc["expected"]),
            claims=[
                ClaimCheck(c["name"], c["computed"], c["expected"], c["status"])
                for c in doc["claims"]
            ],
            witness_audit=[dict(entry) for entry in doc.get("witness_audit", [])],
        )


def expected_values(q: int) -> dict[str, int]:
    """Closed-form expectations for every reported quantity."""
    return {
        "idempotent_count": expected_count(q),
        "vertex_count": q * q + q,
        "degree": 2 * q - 1,
        "edge_count": (q * q + q) * (2 * q - 1) // 2,
        "diameter": 2,
        "girth": 4 if q == 2 else 3,
        "matching_components": q * (q + 1) // 2,
        "distance2_per_vertex": q * q - q,
        "distance_sum_per_vertex": 2 * q * q - 1,
        "reciprocal_sum_per_vertex": (q * q + 3 * q - 2) // 2,
        "wiener": (q * q + q) * (2 * q * q - 1) // 2,
        "harary": (q * q + q) * (q * q + 3 * q - 2) // 2,
    }


def _zero(x: Mat2, y: Mat2) -> bool:
    return (x * y).is_zero()


def _adjacent(x: Mat2, y: Mat2) -> bool:
    return x != y and (_zero(x, y) or _zero(y, x))


def _by_class(idems: IdempotentSet) -> dict[IdempotentClass, list[Mat2]]:
    buckets: dict[IdempotentClass, list[Mat2]] = {cls: [] for cls in IdempotentClass}
    for e in idems.members:
        buckets[idems.classes[e]].append(e)
    return buckets


def audit_witnesses(idems: IdempotentSet, gid: IdemGraph, dist: np.ndarray) -> list[WitnessCase]:
    """Validate every mediator construction behind the distance-2 claims.

    Each case checks, for all parameter values, that the constructed
    mediator really is a common neighbor of the pair (some product on
    each side vanishes) and that the pair's distance is exactly 2.  One
    construction is documented as partial: the unscaled mediator for a
    P4 vertex against a non-partner P7 vertex omits a factor of the P7
    vertex's upper-right parameter and only works when that parameter
    is 1; the audit records it, validates the scaled form, and still
    requires the distance itself to hold.
    """
    field = idems.field
    one = field.one
    cls = _by_class(idems)
    e11 = Mat2.unit(field, 1, 1)
    e22 = Mat2.unit(field, 2, 2)
    inner = [a for a in field.elements() if a != field.zero and a != one]

    def d(x: Mat2, y: Mat2) -> int:
        return int(dist[gid.index_of(x), gid.index_of(y)])

    def common(w: Mat2, x: Mat2, y: Mat2) -> bool:
        return w != x and w != y and _adjacent(w, x) and _adjacent(w, y)

    cases: list[WitnessCase] = []

    def pair_case(name: str, pairs, mediator) -> WitnessCase:
        """pairs: iterable of (x, y); mediator: callable (x, y) -> Mat2."""
        case = WitnessCase(name=name)
        for x, y in pairs:
            case.checked += 1
            if not common(mediator(x, y), x, y):
                case.witness_failures += 1
            if d(x, y) != 2:
                case.distance_failures += 1
        cases.append(case)
        return case

    p7 = cls[IdempotentClass.P7]

    # Distance-2 mediators between the matrix units and the far families.
    pair_case(
        "unit [[1,0],[0,0]] to P5/P6 via [[0,0],[0,1]]",
        [(e11, f) for f in cls[IdempotentClass.P5] + cls[IdempotentClass.P6]],
        lambda x, y: e22,
    )
    pair_case(
        "unit [[0,0],[0,1]] to P3/P4 via [[1,0],[0,0]]",
        [(e22, f) for f in cls[IdempotentClass.P3] + cls[IdempotentClass.P4]],
        lambda x, y: e11,
    )
    pair_case(
        "unit [[1,0],[0,0]] to P7 via P3",
        [(e11, y) for y in p7],
        lambda x, y: p3_member(field, (y.a - one) * y.b.inverse()),
    )
    pair_case(
        "unit [[0,0],[0,1]] to P7 via P6",
        [(e22, y) for y in p7],
        lambda x, y: p6_member(field, (y.a - one).inverse() * y.b),
    )

    # P3 vertex against the one-parameter classes and P7.
    def not_partner(a_list, b_list, partner_of):
        for x in a_list:
            px = partner_of(x)
            for y in b_list:
                if y != x and y not in px:
                    yield x, y

    pair_case(
        "P3 to P3/P4 (non-partner) via [[1,0],[0,0]]",
        not_partner(
            cls[IdempotentClass.P3],
            cls[IdempotentClass.P3] + cls[IdempotentClass.P4],
            lambda x: {p4_member(field, -x.c.inverse())},
        ),
        lambda x, y: e11,
    )
    pair_case(
        "P3 to P6 via P5",
        [(x, y) for x in cls[IdempotentClass.P3] for y in cls[IdempotentClass.P6]],
        lambda x, y: p5_member(field, -y.b.inverse()),
    )
    pair_case(
        "P3 to P7 (non-partner) via P5",
        not_partner(
            cls[IdempotentClass.P3],
            p7,
            lambda x: {p7_member(field, a, -(one - a) * x.c.inverse()) for a in inner},
        ),
        lambda x, y: p5_member(field, -(y.a * y.b.inverse())),
    )

    # P4 vertex.
    pair_case(
        "P4 to P3/P4 (non-partner) via [[1,0],[0,0]]",
        not_partner(
            cls[IdempotentClass.P4],
            cls[IdempotentClass.P3] + cls[IdempotentClass.P4],
            lambda x: {p3_member(field, -x.b.inverse())},
        ),
        lambda x, y: e11,
    )
    pair_case(
        "P4 to P5 via P6",
        [(x, y) for x in cls[IdempotentClass.P4] for y in cls[IdempotentClass.P5]],
        lambda x, y: p6_member(field, -y.c.inverse()),
    )
    limited = pair_case(
        "P4 to P7 (non-partner) via P6, unscaled mediator",
        not_partner(
            cls[IdempotentClass.P4],
            p7,
            lambda x: {p7_member(field, a, -(a * x.b)) for a in inner},
        ),
        lambda x, y: p6_member(field, (y.a - one).inverse()),
    )
    limited.known_limited = True
    limited.note = (
        "the unscaled mediator drops the P7 vertex's upper-right parameter and "
        "only annihilates when that parameter is 1; the scaled form is verified "
        "as well"
    )
    if limited.witness_failures:
        for x, y in not_partner(
            cls[IdempotentClass.P4],
            p7,
            lambda x: {p7_member(field, a, -(a * x.b)) for a in inner},
        ):
            w = p6_member(field, (y.a - one).inverse() * y.b)
            if not common(w, x, y):
                limited.corrected_ok = False

    # P5 vertex.
    pair_case(
        "P5 to P5/P6 (non-partner) via [[0,0],[0,1]]",
        not_partner(
            cls[IdempotentClass.P5],
            cls[IdempotentClass.P5] + cls[IdempotentClass.P6],
            lambda x: {p6_member(field, -x.c.inverse())},
        ),
        lambda x, y: e22,
    )
    pair_case(
        "P5 to P4 via P3",
        [(x, y) for x in cls[IdempotentClass.P5] for y in cls[IdempotentClass.P4]],
        lambda x, y: p3_member(field, -y.b.inverse()),
    )
    pair_case(
        "P5 to P7 (non-partner) via P3",
        not_partner(
            cls[IdempotentClass.P5],
            p7,
            lambda x: {p7_member(field, a, -(a * x.c.inverse())) for a in inner},
        ),
        lambda x, y: p3_member(field, (y.a - one) * y.b.inverse()),
    )

    # P6 vertex.
    pair_case(
        "P6 to P5/P6 (non-partner) via [[0,0],[0,1]]",
        not_partner(
            cls[IdempotentClass.P6],
            cls[IdempotentClass.P5] + cls[IdempotentClass.P6],
            lambda x: {p5_member(field, -x.b.inverse())},
        ),
        lambda x, y: e22,
    )
    pair_case(
        "P6 to P3 via P4",
        [(x, y) for x in cls[IdempotentClass.P6] for y in cls[IdempotentClass.P3]],
        lambda x, y: p4_member(field, -y.c.inverse()),
    )
    pair_case(
        "P6 to P7 (non-partner) via P4",
        not_partner(
            cls[IdempotentClass.P6],
            p7,
            lambda x: {p7_member(field, a, (a - one) * x.b) for a in inner},
        ),
        lambda x, y: p4_member(field, -(y.a.inverse() * y.b)),
    )

    # Adjacency constructions: the stated one-sided products must vanish.
    def product_case(name: str, triples) -> None:
        """triples: iterable of (left, right) whose product must be zero."""
        case = WitnessCase(name=name)
        for left, right in triples:
            case.checked += 1
            if not _zero(left, right):
                case.witness_failures += 1
        cases.append(case)

    nonzero = field.nonzero_elements()
    product_case(
        "unit adjacency products",
        [(e11, e22), (e22, e11)]
        + [(e11, x) for x in cls[IdempotentClass.P3]]
        + [(x, e11) for x in cls[IdempotentClass.P4]]
        + [(x, e22) for x in cls[IdempotentClass.P5]]
        + [(e22, x) for x in cls[IdempotentClass.P6]],
    )
    product_case(
        "one-parameter sporadic partners",
        [(x, p4_member(field, -x.c.inverse())) for x in cls[IdempotentClass.P3]]
        + [(p3_member(field, -x.b.inverse()), x) for x in cls[IdempotentClass.P4]]
        + [(p6_member(field, -x.c.inverse()), x) for x in cls[IdempotentClass.P5]]
        + [(x, p5_member(field, -x.b.inverse())) for x in cls[IdempotentClass.P6]],
    )
    product_case(
        "one-parameter family adjacencies",
        [(p5_member(field, t), x) for x in cls[IdempotentClass.P3] for t in nonzero]
        + [(x, p6_member(field, t)) for x in cls[IdempotentClass.P4] for t in nonzero]
        + [(x, p3_member(field, t)) for x in cls[IdempotentClass.P5] for t in nonzero]
        + [(p4_member(field, t), x) for x in cls[IdempotentClass.P6] for t in nonzero],
    )
    product_case(
        "one-parameter to P7 partners",
        [(x, p7_member(field, a, -(one - a) * x.c.inverse()))
         for x in cls[IdempotentClass.P3] for a in inner]
        + [(p7_member(field, a, -(a * x.b)), x)
           for x in cls[IdempotentClass.P4] for a in inner]
        + [(p7_member(field, a, -(a * x.c.inverse())), x)
           for x in cls[IdempotentClass.P5] for a in inner]
        + [(x, p7_member(field, a, (a - one) * x.b))
           for x in cls[IdempotentClass.P6] for a in inner],
    )
    product_case(
        "P7 sporadic neighbor products",
        [pair for y in p7 for pair in (
            (p3_member(field, (y.a - one) * y.b.inverse()), y),
            (y, p4_member(field, -(y.a.inverse() * y.b))),
            (p6_member(field, (y.a - one).inverse() * y.b), y),
            (y, p5_member(field, -(y.a * y.b.inverse()))),
        )],
    )
    product_case(
        "P7 to P7 annihilation formulas",
        [(y, p7_member(field, a1, -(one - a1) * y.a.inverse() * y.b))
         for y in p7 for a1 in inner]
        + [(p7_member(field, a2, -(a2 * (one - y.a).inverse() * y.b)), y)
           for y in p7 for a2 in inner],
    )

    overlap = WitnessCase(name="P7 two-sided overlap is the orthogonal partner")
    for y in p7:
        overlap.checked += 1
        rights = {p7_member(field, a1, -(one - a1) * y.a.inverse() * y.b) for a1 in inner}
        lefts = {p7_member(field, a2, -(a2 * (one - y.a).inverse() * y.b)) for a2 in inner}
        if rights & lefts != {complement(y)}:
            overlap.witness_failures += 1
    cases.append(overlap)

    return cases


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if value is math.inf:
        return "inf"
    return str(value)


def verify_all(gf: GF, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> GraphReport:
    """Run every structural check for one field and collect the results."""
    q = gf.q
    exp = expected_values(q)
    claims: list[ClaimCheck] = []

    def claim(name: str, computed, expected, ok: bool | None = None) -> None:
        if ok is None:
            ok = computed == expected
        claims.append(
            ClaimCheck(name, _fmt(computed), _fmt(expected), "pass" if ok else "fail")
        )

    def skip(name: str, reason: str) -> None:
        claims.append(ClaimCheck(name, reason, "-", "skip"))

    idems = enumerate_constructive(gf)
    try:
        brute = enumerate_bruteforce(gf, cap)
    except CapExceeded:
        brute = None

    claim("idempotent count (constructive)", len(idems.members), exp["idempotent_count"])
    if brute is None:
        skip("idempotent count (brute force)", "not run (q^4 over cap)")
        skip("enumeration agreement", "not run (q^4 over cap)")
    else:
        claim("idempotent count (brute force)", len(brute.members), exp["idempotent_count"])
        claim(
            "enumeration agreement",
            "identical" if brute.members == idems.members else "mismatch",
            "identical",
        )

    sizes = idems.class_sizes()
    want_sizes = expected_class_sizes(q)
    claim(
        "partition class sizes",
        " ".join(f"{c.value}={sizes[c]}" for c in IdempotentClass),
        " ".join(f"{c.value}={want_sizes[c]}" for c in IdempotentClass),
    )

    mismatched = sum(1 for e in idems.members if classify(e) is not idems.classes[e])
    claim("classification consistency", f"{mismatched} mismatches", "0 mismatches")

    # Orthogonal complements: existence, involution, uniqueness.  Both E and
    # the candidate partner range over the nonzero idempotents (zero trivially
    # annihilates everything from both sides).
    bad = 0
    for e in idems.members:
        if e.is_zero():
            continue
        t = complement(e)
        if not (t.is_idempotent() and _zero(e, t) and _zero(t, e) and complement(t) == e):
            bad += 1
            continue
        for other in idems.members:
            if other.is_zero():
                continue
            both = _zero(e, other) and _zero(other, e)
            if both != (other == t):
                bad += 1
    claim("orthogonal complement uniqueness", f"{bad} violations", "0 violations")

    gid = build_graph(idems, GraphKind.GID)
    ir = build_graph(idems, GraphKind.IR)
    dist = all_pairs_distances(gid)

    claim("vertex count", gid.vertex_count, exp["vertex_count"])
    degs = gid.degrees()
    dmin, dmax = min(degs), max(degs)
    claim(
        "one-sided graph regularity",
        f"degrees {dmin}..{dmax}",
        f"degrees {exp['degree']}..{exp['degree']}",
    )
    claim("edge count", gid.edge_count(), exp["edge_count"])

    bad_rows = 0
    for i, v in enumerate(gid.vertices):
        want = [gid.index_of(m) for m in neighbors_closed_form(v)]
        if tuple(sorted(want)) != gid.adj[i]:
            bad_rows += 1
    claim("closed-form neighbors match naive adjacency", f"{bad_rows} rows differ", "0 rows differ")

    comp_count = len(set(component_labels(gid)))
    diam = diameter(gid, dist)
    claim(
        "one-sided graph connected with diameter 2",
        f"components={comp_count} diameter={_fmt(diam)}",
        f"components=1 diameter={exp['diameter']}",
    )

    gr = girth(gid)
    witness_ok = _girth_witness_ok(gf)
    claim(
        "girth dichotomy with cycle witness",
        f"girth={_fmt(gr)} witness={'ok' if witness_ok else 'invalid'}",
        f"girth={exp['girth']} witness=ok",
    )

    # Orthogonal-pairs graph: a perfect matching of complement pairs.
    ir_degrees_one = all(d == 1 for d in ir.degrees())
    partner_ok = all(
        ir.vertices[ir.adj[i][0]] == complement(v)
        for i, v in enumerate(ir.vertices)
        if ir.adj[i]
    )
    ir_comps = len(set(component_labels(ir)))
    subgraph = all(gid.has_edge(ir.vertices[i], ir.vertices[j]) for i, j in ir.edges())
    claim(
        "orthogonal-pairs graph is a perfect matching of complement pairs",
        f"components={ir_comps} degrees_one={ir_degrees_one} "
        f"partners_ok={partner_ok} subgraph={subgraph}",
        f"components={exp['matching_components']} degrees_one=True "
        f"partners_ok=True subgraph=True",
    )

    counts2 = (dist == 2).sum(axis=1)
    claim(
        "distance-2 neighborhood size per vertex",
        f"{int(counts2.min())}..{int(counts2.max())}",
        f"{exp['distance2_per_vertex']}..{exp['distance2_per_vertex']}",
    )

    row_sums = dist.sum(axis=1)
    sums_ok = bool((row_sums == exp["distance_sum_per_vertex"]).all())
    recip = [
        Fraction(int(deg)) + Fraction(int(c2), 2) for deg, c2 in zip(degs, counts2.tolist())
    ]
    recip_ok = all(r == Fraction(exp["reciprocal_sum_per_vertex"]) for r in recip)
    claim(
        "per-vertex distance and reciprocal-distance sums",
        f"distance_sums_ok={sums_ok} reciprocal_sums_ok={recip_ok}",
        "distance_sums_ok=True reciprocal_sums_ok=True",
    )

    w = wiener(gid, dist)
    h = harary(gid, dist)
    claim("wiener index closed form", w, exp["wiener"])
    claim("harary index closed form", h, Fraction(exp["harary"]))

    claim(
        "transpose map is a graph automorphism",
        f"one_sided={_transpose_automorphism(gid)} orthogonal={_transpose_automorphism(ir)}",
        "one_sided=True orthogonal=True",
    )

    audit = audit_witnesses(idems, gid, dist)
    undocumented = sum(1 for c in audit if not c.ok)
    documented = sum(1 for c in audit if c.known_limited and c.witness_failures)
    claim(
        "distance-2 mediator audit",
        f"{len(audit)} cases, {undocumented} failing, {documented} documented-partial",
        f"{len(audit)} cases, 0 failing, {documented} documented-partial",
        ok=(undocumented == 0),
    )

    return GraphReport(
        p=gf.p,
        k=gf.k,
        modulus=list(gf.modulus),
        q=q,
        vertex_count=gid.vertex_count,
        degree_min=dmin,
        degree_max=dmax,
        is_regular=(dmin == dmax),
        diameter=int(diam) if diam is not math.inf else -1,
        girth=int(gr) if gr is not math.inf else -1,
        component_count=comp_count,
        wiener=w,
        harary=h,
        expected=exp,
        claims=claims,
        witness_audit=[
            {
                "name": c.name,
                "checked": c.checked,
                "witness_failures": c.witness_failures,
                "distance_failures": c.distance_failures,
                "known_limited": c.known_limited,
                "corrected_ok": c.corrected_ok,
                "note": c.note,
            }
            for c in audit
        ],
    )


def _girth_witness_ok(gf: GF) -> bool:
    """Validate the explicit shortest-cycle construction.

    q = 2: a 4-cycle through the two matrix units; q > 2: a triangle built
    from one P3, one P7 and one P5 member with cyclically vanishing
    products.
    """
    one = gf.one
    e11 = Mat2.unit(gf, 1, 1)
    e22 = Mat2.unit(gf, 2, 2)
    if gf.q == 2:
        a = p5_member(gf, one)
        b = p3_member(gf, one)
        return (
            _zero(a, e22) and _zero(a, b) and _zero(e11, b) and _zero(e11, e22)
        )
    a = next(x for x in gf.elements() if x != gf.zero and x != one)
    c = one
    t1 = p3_member(gf, c)
    t2 = p7_member(gf, a, -(one - a) * c.inverse())
    t3 = p5_member(gf, a * (one - a).inverse() * c)
    return _zero(t1, t2) and _zero(t2, t3) and _zero(t3, t1)


def _transpose_automorphism(g: IdemGraph) -> bool:
    """Entrywise transpose must permute the vertex set and preserve edges."""
    try:
        perm = [g.index_of(v.transpose()) for v in g.vertices]
    except KeyError:
        return False
    if sorted(perm) != list(range(g.vertex_count)):
        return False
    permuted = g.adj_matrix[np.ix_(perm, perm)]
    return bool((permuted == g.adj_matrix).all())
