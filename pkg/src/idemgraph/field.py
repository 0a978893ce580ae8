"""Exact arithmetic for the finite fields GF(p^k).

Elements are encoded as integers in [0, p^k): the base-p digits of the
encoding are the coefficients of the residue polynomial, lowest degree
first (rep = c0 + c1*p + ... + c_{k-1}*p^{k-1}).  GF(p) is the integers
mod p; for k > 1 arithmetic is done in Z_p[X] modulo a monic irreducible
polynomial of degree k.  When no modulus is supplied the lexicographically
smallest irreducible one is chosen (coefficients compared constant term
first), so element encodings are reproducible across runs.

Addition and multiplication tables over the whole field are precomputed;
they double as the integer-level operation tables consumed by the
scanning kernels.
"""

from __future__ import annotations

import itertools

import numpy as np


class NonPrimeP(ValueError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(ValueError):
    """The supplied modulus polynomial factors over Z_p."""


class DegreeMismatch(ValueError):
    """The supplied modulus does not have degree k (or is not monic)."""


class FieldMismatch(ValueError):
    """Operands belong to different fields."""


class DivisionByZero(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


def is_prime(n: int) -> bool:
    """Trial-division primality check; the characteristics here are small."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- polynomial helpers over Z_p (coefficient lists, constant term first) ---

def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over Z_p.  den must have an invertible lead."""
    num = list(num)
    inv_lead = pow(den[-1], -1, p)
    while len(num) >= len(den):
        if num[-1] == 0:
            num.pop()
            continue
        coef = num[-1] * inv_lead % p
        off = len(num) - len(den)
        for i, c in enumerate(den):
            num[off + i] = (num[off + i] - coef * c) % p
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _poly_is_zero(coeffs: list[int]) -> bool:
    return all(c == 0 for c in coeffs)


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over Z_p.

    Checks for roots in Z_p, then trial-divides by every monic polynomial
    of degree 2..deg/2.  Exponential in the degree, which is fine for the
    small extension degrees this package targets.
    """
    k = len(coeffs) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) % p == 0:
            return False
    for d in range(2, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            if _poly_is_zero(_poly_rem(coeffs, den, p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k over Z_p.

    Candidates are ordered by their coefficient tuple (c0, c1, ...,
    c_{k-1}), constant term compared first.
    """
    for t in range(p**k):
        coeffs = [(t // p ** (k - 1 - i)) % p for i in range(k)] + [1]
        if is_irreducible(coeffs, p):
            return coeffs
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over Z_{p}")


class Fq:
    """An element of a GF instance.

    Immutable; `rep` is the canonical integer encoding.  Operators raise
    FieldMismatch when the operands' fields differ.
    """

    __slots__ = ("field", "rep")

    def __init__(self, field: "GF", rep: int):
        if not 0 <= rep < field.q:
            raise ValueError(f"rep {rep} out of range for GF({field.q})")
        self.field = field
        self.rep = rep

    def _peer(self, other: "Fq") -> None:
        if not isinstance(other, Fq):
            raise TypeError(f"expected Fq, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Fq") -> "Fq":
        self._peer(other)
        return Fq(self.field, self.field.add_rep(self.rep, other.rep))

    def __sub__(self, other: "Fq") -> "Fq":
        self._peer(other)
        return Fq(self.field, self.field.add_rep(self.rep, self.field.neg_rep(other.rep)))

    def __neg__(self) -> "Fq":
        return Fq(self.field, self.field.neg_rep(self.rep))

    def __mul__(self, other: "Fq") -> "Fq":
        self._peer(other)
        return Fq(self.field, self.field.mul_rep(self.rep, other.rep))

    def __truediv__(self, other: "Fq") -> "Fq":
        self._peer(other)
        return Fq(self.field, self.field.mul_rep(self.rep, self.field.inv_rep(other.rep)))

    def inverse(self) -> "Fq":
        return Fq(self.field, self.field.inv_rep(self.rep))

    def __eq__(self, other) -> bool:
        return isinstance(other, Fq) and self.field == other.field and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.field.q, self.rep))

    def __bool__(self) -> bool:
        return self.rep != 0

    def __repr__(self) -> str:
        return f"GF{self.field.q}({self.rep})"

    def __str__(self) -> str:
        return str(self.rep)


class GF:
    """A finite field GF(p^k), with full add/mul tables.

    Two GF instances denote the same field exactly when (p, k, modulus)
    coincide; no isomorphism detection is attempted.
    """

    def __init__(self, p: int, k: int = 1, modulus: list[int] | None = None):
        if not is_prime(p):
            raise NonPrimeP(f"p={p} is not prime")
        if k < 1:
            raise ValueError(f"k={k} must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = [0, 1] if k == 1 else smallest_irreducible(p, k)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {k} over Z_{p}: {modulus}"
                )
            if k > 1 and not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over Z_{p}")
        self.modulus = tuple(modulus)
        self._build_tables()

    # `order` is an alias kept alongside `q` for readability in reports.
    @property
    def order(self) -> int:
        return self.q

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    # --- encoding ---

    def decode(self, rep: int) -> tuple[int, ...]:
        """Base-p digits of rep, lowest degree first; length k."""
        digits = []
        for _ in range(self.k):
            digits.append(rep % self.p)
            rep //= self.p
        return tuple(digits)

    def encode(self, coeffs) -> int:
        rep = 0
        for c in reversed(list(coeffs)):
            rep = rep * self.p + c % self.p
        return rep

    # --- table construction ---

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        if k == 1:
            r = np.arange(q, dtype=np.int64)
            add = (r[:, None] + r[None, :]) % p
            mul = (r[:, None] * r[None, :]) % p
        else:
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            digits = [self.decode(x) for x in range(q)]
            mod = list(self.modulus)
            for x in range(q):
                dx = digits[x]
                for y in range(x, q):
                    dy = digits[y]
                    add[x, y] = add[y, x] = self.encode(
                        (dx[i] + dy[i]) % p for i in range(k)
                    )
                    prod = [0] * (2 * k - 1)
                    for i in range(k):
                        if dx[i] == 0:
                            continue
                        for j in range(k):
                            prod[i + j] += dx[i] * dy[j]
                    prod = [c % p for c in prod]
                    mul[x, y] = mul[y, x] = self.encode(_poly_rem(prod, mod, p))
        self.add_table = add.astype(np.int16)
        self.mul_table = mul.astype(np.int16)
        neg = np.zeros(q, dtype=np.int16)
        inv = np.zeros(q, dtype=np.int16)
        for x in range(q):
            neg[x] = int(np.nonzero(self.add_table[x] == 0)[0][0])
            if x:
                inv[x] = int(np.nonzero(self.mul_table[x] == 1)[0][0])
        self._neg = neg
        self._inv = inv

    # --- integer-level operations (table lookups) ---

    def add_rep(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def mul_rep(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def neg_rep(self, x: int) -> int:
        return int(self._neg[x])

    def inv_rep(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero(f"inverse of 0 in {self!r}")
        return int(self._inv[x])

    # --- element-level API ---

    def element(self, rep: int) -> Fq:
        return Fq(self, rep)

    @property
    def zero(self) -> Fq:
        return Fq(self, 0)

    @property
    def one(self) -> Fq:
        return Fq(self, 1)

    def elements(self) -> list[Fq]:
        """All q elements in increasing rep order."""
        return [Fq(self, r) for r in range(self.q)]

    def nonzero_elements(self) -> list[Fq]:
        return [Fq(self, r) for r in range(1, self.q)]

    def modulus_str(self) -> str:
        """Comma-separated coefficients, constant term first."""
        return ",".join(str(c) for c in self.modulus)


def make_field(p: int, k: int = 1, modulus: list[int] | None = None) -> GF:
    """Construct and validate GF(p^k); see the GF class for encoding rules."""
    return GF(p, k, modulus)


def parse_modulus(text: str) -> list[int]:
    """Parse a comma-separated coefficient list, constant term first."""
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise DegreeMismatch(f"bad modulus string {text!r}") from exc
