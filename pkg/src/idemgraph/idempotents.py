"""Enumeration and classification of idempotent 2x2 matrices.

Over GF(q) the ring of 2x2 matrices contains exactly q^2 + q + 2
idempotents.  Besides the trivial pair (zero and identity) they fall
into structural families, tagged P0..P7:

    P0  zero and identity
    P1  [[1,0],[0,0]]                    P2  [[0,0],[0,1]]
    P3  [[0,0],[c,1]], c != 0            P4  [[0,b],[0,1]], b != 0
    P5  [[1,0],[c,0]], c != 0            P6  [[1,b],[0,0]], b != 0
    P7  [[a,b],[a(1-a)/b, 1-a]], a not in {0,1}, b != 0

Two independent enumerators are provided: a brute-force scan of all q^4
matrices (kernel-backed) and a constructive generator that emits each
family from its parametric form.  They must agree element for element;
the verification suite asserts this.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .field import GF, Fq
from .matring import Mat2

DEFAULT_BRUTE_FORCE_CAP = 10**8  # candidate matrices (q^4)


class NotIdempotent(ValueError):
    """The matrix does not satisfy X^2 = X."""


class CapExceeded(Exception):
    """q^4 exceeds the brute-force cap; use the constructive enumerator."""


class IdempotentClass(enum.Enum):
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"


# --- family constructors ---

def p3_member(field: GF, c: Fq) -> Mat2:
    z, o = field.zero, field.one
    return Mat2(z, z, c, o)


def p4_member(field: GF, b: Fq) -> Mat2:
    z, o = field.zero, field.one
    return Mat2(z, b, z, o)


def p5_member(field: GF, c: Fq) -> Mat2:
    z, o = field.zero, field.one
    return Mat2(o, z, c, z)


def p6_member(field: GF, b: Fq) -> Mat2:
    z, o = field.zero, field.one
    return Mat2(o, b, z, z)


def p7_member(field: GF, a: Fq, b: Fq) -> Mat2:
    """The unique idempotent with upper row (a, b) and both off-diagonal
    entries nonzero: lower-left is a(1-a)/b, lower-right is 1-a."""
    one = field.one
    if not b:
        raise ValueError("b must be nonzero")
    if a == field.zero or a == one:
        raise ValueError("a must avoid 0 and 1")
    return Mat2(a, b, a * (one - a) * b.inverse(), one - a)


def classify(e: Mat2) -> IdempotentClass:
    """Structural class of an idempotent, decided from its entry pattern.

    Independent of the enumerators: used to cross-check the classes the
    constructive generator records.
    """
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    field = e.field
    if e.is_zero() or e == Mat2.identity(field):
        return IdempotentClass.P0
    a, b, c, d = e.reps
    if b == 0 and c == 0:
        return IdempotentClass.P1 if (a, d) == (1, 0) else IdempotentClass.P2
    if b != 0 and c != 0:
        return IdempotentClass.P7
    if a == 0 and d == 1:
        return IdempotentClass.P3 if c != 0 else IdempotentClass.P4
    if a == 1 and d == 0:
        return IdempotentClass.P5 if c != 0 else IdempotentClass.P6
    raise NotIdempotent(f"{e} matches no idempotent pattern")


def complement(e: Mat2) -> Mat2:
    """The orthogonal partner 1 - E: the unique idempotent annihilating E
    from both sides (for nonzero E)."""
    if not e.is_idempotent():
        raise NotIdempotent(f"{e} is not idempotent")
    return Mat2.identity(e.field) - e


@dataclass(frozen=True)
class IdempotentSet:
    """All idempotents of the 2x2 matrix ring over one field, in canonical
    id order, with their structural class tags."""

    field: GF
    members: tuple[Mat2, ...]
    classes: dict[Mat2, IdempotentClass]

    @property
    def nontrivial(self) -> tuple[Mat2, ...]:
        return tuple(e for e in self.members if self.classes[e] is not IdempotentClass.P0)

    def class_sizes(self) -> dict[IdempotentClass, int]:
        sizes = {cls: 0 for cls in IdempotentClass}
        for tag in self.classes.values():
            sizes[tag] += 1
        return sizes

    def to_json_dict(self) -> dict:
        return {
            "field": {
                "p": self.field.p,
                "k": self.field.k,
                "modulus": list(self.field.modulus),
                "order": self.field.q,
            },
            "count": len(self.members),
            "class_sizes": {cls.value: n for cls, n in sorted(
                self.class_sizes().items(), key=lambda kv: kv[0].value)},
            "idempotents": [
                {
                    "id": e.canonical_id,
                    "entries": list(e.reps),
                    "class": self.classes[e].value,
                }
                for e in self.members
            ],
        }


def _finish(field: GF, members: list[Mat2], classes: dict[Mat2, IdempotentClass]) -> IdempotentSet:
    members.sort(key=lambda m: m.canonical_id)
    return IdempotentSet(field=field, members=tuple(members), classes=classes)


def enumerate_bruteforce(field: GF, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> IdempotentSet:
    """Scan all q^4 matrices and keep those with X^2 = X.

    Serves as the independent oracle for the constructive enumerator.
    Classes are assigned by the structural classifier.
    """
    q = field.q
    if q**4 > cap:
        raise CapExceeded(f"q^4 = {q**4} exceeds cap {cap}")
    ids = kernels.find_idempotent_ids(field.add_table, field.mul_table)
    members = [Mat2.from_id(field, int(m)) for m in ids]
    classes = {e: classify(e) for e in members}
    return _finish(field, members, classes)


def enumerate_constructive(field: GF) -> IdempotentSet:
    """Emit every idempotent directly from its parametric family.

    No search involved: 4 sporadic members plus four (q-1)-parameter
    families plus the (q-2)(q-1) two-parameter family.  Classes are
    recorded during generation.
    """
    zero, one = field.zero, field.one
    members: list[Mat2] = []
    classes: dict[Mat2, IdempotentClass] = {}

    def put(e: Mat2, tag: IdempotentClass) -> None:
        members.append(e)
        classes[e] = tag

    put(Mat2.zero(field), IdempotentClass.P0)
    put(Mat2.identity(field), IdempotentClass.P0)
    put(Mat2.unit(field, 1, 1), IdempotentClass.P1)
    put(Mat2.unit(field, 2, 2), IdempotentClass.P2)
    for t in field.nonzero_elements():
        put(p3_member(field, t), IdempotentClass.P3)
        put(p4_member(field, t), IdempotentClass.P4)
        put(p5_member(field, t), IdempotentClass.P5)
        put(p6_member(field, t), IdempotentClass.P6)
    for a in field.elements():
        if a == zero or a == one:
            continue
        for b in field.nonzero_elements():
            put(p7_member(field, a, b), IdempotentClass.P7)
    return _finish(field, members, classes)


def expected_count(q: int) -> int:
    """Closed form for the number of idempotents, trivial ones included."""
    return q * q + q + 2


def expected_class_sizes(q: int) -> dict[IdempotentClass, int]:
    return {
        IdempotentClass.P0: 2,
        IdempotentClass.P1: 1,
        IdempotentClass.P2: 1,
        IdempotentClass.P3: q - 1,
        IdempotentClass.P4: q - 1,
        IdempotentClass.P5: q - 1,
        IdempotentClass.P6: q - 1,
        IdempotentClass.P7: (q - 2) * (q - 1),
    }


def entry_rep_array(mats) -> np.ndarray:
    """V x 4 int16 array of entry encodings, kernel input format."""
    return np.array([m.reps for m in mats], dtype=np.int16)
