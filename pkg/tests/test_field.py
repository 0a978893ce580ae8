import itertools

import pytest

from idemgraph.field import (
    GF,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrimeP,
    ReducibleModulus,
    is_irreducible,
    make_field,
    parse_modulus,
    smallest_irreducible,
)

SWEEP = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]


def all_fields():
    return [GF(p, k) for p, k in SWEEP]


# --- construction ---

def test_prime_field_construction():
    gf = make_field(2, 1)
    assert gf.q == 2
    assert gf.modulus == (0, 1)


def test_gf4_default_modulus_is_the_only_irreducible_quadratic():
    gf = make_field(2, 2)
    assert gf.q == 4
    assert gf.modulus == (1, 1, 1)
    # Oracle: of the four monic quadratics over Z_2, only X^2+X+1 has no root.
    irreducible = []
    for c0, c1 in itertools.product(range(2), repeat=2):
        if all((r * r + c1 * r + c0) % 2 != 0 for r in range(2)):
            irreducible.append((c0, c1, 1))
    assert irreducible == [(1, 1, 1)]


def test_nonprime_p_rejected():
    with pytest.raises(NonPrimeP):
        make_field(4, 1)
    with pytest.raises(NonPrimeP):
        make_field(1, 1)


def test_default_moduli_are_lexicographically_smallest():
    # Oracle: first irreducible in (c0, c1, ...) order, found independently
    # by root check plus trial division over low-degree monic products.
    def divides(den, num, p):
        num = list(num)
        while len(num) >= len(den):
            if num[-1] == 0:
                num.pop()
                continue
            coef = num[-1] * pow(den[-1], -1, p) % p
            off = len(num) - len(den)
            for i, c in enumerate(den):
                num[off + i] = (num[off + i] - coef * c) % p
            num.pop()
        return all(c == 0 for c in num)

    def oracle(p, k):
        for t in range(p**k):
            coeffs = [(t // p ** (k - 1 - i)) % p for i in range(k)] + [1]
            if any(sum(c * r**i for i, c in enumerate(coeffs)) % p == 0 for r in range(p)):
                continue
            if any(
                divides(list(tail) + [1], coeffs, p)
                for d in range(2, k // 2 + 1)
                for tail in itertools.product(range(p), repeat=d)
            ):
                continue
            return tuple(coeffs)
        raise AssertionError

    assert GF(2, 2).modulus == oracle(2, 2) == (1, 1, 1)
    assert GF(2, 3).modulus == oracle(2, 3) == (1, 0, 1, 1)
    assert GF(3, 2).modulus == oracle(3, 2) == (1, 0, 1)


def test_explicit_modulus_validation():
    assert GF(2, 2, [1, 1, 1]).q == 4
    with pytest.raises(ReducibleModulus):
        GF(2, 2, [0, 0, 1])  # X^2
    with pytest.raises(DegreeMismatch):
        GF(2, 2, [1, 1])  # wrong length
    with pytest.raises(DegreeMismatch):
        GF(3, 2, [1, 0, 2])  # not monic


def test_field_identity_requires_same_modulus():
    assert GF(3) == GF(3)
    assert GF(3, 2) == GF(3, 2, [1, 0, 1])
    assert GF(2) != GF(3)
    with pytest.raises(FieldMismatch):
        GF(2).one + GF(3).one


# --- arithmetic examples ---

def test_mul_examples():
    gf5 = GF(5)
    assert (gf5.element(2) * gf5.element(3)).rep == 1
    gf3 = GF(3)
    assert (gf3.element(2) + gf3.element(2)).rep == 1
    gf4 = GF(2, 2)
    assert (gf4.element(2) * gf4.element(2)).rep == 3  # X * X = X + 1


def test_gf4_matches_independent_multiplication_table():
    from oracles import gf4_add, gf4_mul

    gf4 = GF(2, 2)
    for x in range(4):
        for y in range(4):
            assert gf4.mul_rep(x, y) == gf4_mul(x, y)
            assert gf4.add_rep(x, y) == gf4_add(x, y)


def test_inverse_examples():
    assert GF(7).element(3).inverse().rep == 5
    assert GF(2).element(1).inverse().rep == 1
    gf9 = GF(3, 2)
    for x in gf9.nonzero_elements():
        assert (x.inverse() * x).rep == 1


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        GF(5).zero.inverse()


def test_elements_ordering_and_length():
    assert [e.rep for e in GF(3).elements()] == [0, 1, 2]
    assert [e.rep for e in GF(2, 2).elements()] == [0, 1, 2, 3]
    for gf in all_fields():
        assert len(gf.elements()) == gf.p**gf.k


# --- field axioms, exhaustive ---

@pytest.mark.parametrize("p,k", SWEEP)
def test_field_axioms_pairs(p, k):
    gf = GF(p, k)
    elems = gf.elements()
    zero, one = gf.zero, gf.one
    for x in elems:
        assert x + zero == x
        assert x * one == x
        assert x * zero == zero
        assert x + (-x) == zero
        if x != zero:
            assert x * x.inverse() == one
        for y in elems:
            assert x + y == y + x
            assert x * y == y * x


@pytest.mark.parametrize("p,k", SWEEP)
def test_field_axioms_triples(p, k):
    gf = GF(p, k)
    elems = gf.elements()
    for x in elems:
        for y in elems:
            for z in elems:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_inverse_is_involution():
    for gf in all_fields():
        for x in gf.nonzero_elements():
            assert x.inverse().inverse() == x


def test_selected_moduli_pass_irreducibility_invariant():
    # No root and no monic divisor of degree 1..k/2, checked through the
    # same public predicate the constructor uses plus a raw root check.
    for p, k in [(2, 2), (2, 3), (3, 2)]:
        gf = GF(p, k)
        coeffs = list(gf.modulus)
        assert is_irreducible(coeffs, p)
        for r in range(p):
            assert sum(c * r**i for i, c in enumerate(coeffs)) % p != 0


def test_encode_decode_roundtrip():
    for gf in all_fields():
        for rep in range(gf.q):
            assert gf.encode(gf.decode(rep)) == rep


def test_smallest_irreducible_degree_one():
    assert smallest_irreducible(5, 1) == [0, 1]


def test_parse_modulus():
    assert parse_modulus("1,1,1") == [1, 1, 1]
    with pytest.raises(DegreeMismatch):
        parse_modulus("1,x")
