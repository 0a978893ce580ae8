"""2x2 matrices over a finite field.

A Mat2 is an immutable quadruple of field elements (a, b, c, d) read
row-wise, i.e. [[a, b], [c, d]].  The canonical id of a matrix is the
base-q integer ((a*q + b)*q + c)*q + d built from the entry encodings,
a bijection onto [0, q^4) that fixes the vertex order used everywhere
(enumeration, adjacency, exports).
"""

from __future__ import annotations

from .field import GF, FieldMismatch, Fq


class Mat2:
    """Immutable 2x2 matrix; entries must share one field."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, a: Fq, b: Fq, c: Fq, d: Fq):
        field = a.field
        for entry in (b, c, d):
            if entry.field != field:
                raise FieldMismatch("matrix entries from different fields")
        self.field = field
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    # --- constructors ---

    @classmethod
    def from_reps(cls, field: GF, reps) -> "Mat2":
        a, b, c, d = reps
        return cls(field.element(a), field.element(b), field.element(c), field.element(d))

    @classmethod
    def from_id(cls, field: GF, m: int) -> "Mat2":
        q = field.q
        d = m % q
        m //= q
        c = m % q
        m //= q
        b = m % q
        a = m // q
        return cls.from_reps(field, (a, b, c, d))

    @classmethod
    def zero(cls, field: GF) -> "Mat2":
        z = field.zero
        return cls(z, z, z, z)

    @classmethod
    def identity(cls, field: GF) -> "Mat2":
        z, o = field.zero, field.one
        return cls(o, z, z, o)

    @classmethod
    def unit(cls, field: GF, i: int, j: int) -> "Mat2":
        """Matrix unit with a single 1 in row i, column j (1-based)."""
        reps = [0, 0, 0, 0]
        reps[(i - 1) * 2 + (j - 1)] = 1
        return cls.from_reps(field, reps)

    # --- ring operations ---

    def _peer(self, other: "Mat2") -> None:
        if not isinstance(other, Mat2):
            raise TypeError(f"expected Mat2, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other: "Mat2") -> "Mat2":
        self._peer(other)
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        self._peer(other)
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: "Mat2") -> "Mat2":
        self._peer(other)
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def det(self) -> Fq:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fq:
        return self.a + self.d

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    # --- ordering and identity ---

    @property
    def reps(self) -> tuple[int, int, int, int]:
        return (self.a.rep, self.b.rep, self.c.rep, self.d.rep)

    @property
    def canonical_id(self) -> int:
        q = self.field.q
        a, b, c, d = self.reps
        return ((a * q + b) * q + c) * q + d

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat2)
            and self.field == other.field
            and self.reps == other.reps
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.reps))

    def __lt__(self, other: "Mat2") -> bool:
        self._peer(other)
        return self.canonical_id < other.canonical_id

    def __repr__(self) -> str:
        return f"Mat2{self.reps} over {self.field!r}"

    def __str__(self) -> str:
        a, b, c, d = self.reps
        return f"[[{a},{b}],[{c},{d}]]"
