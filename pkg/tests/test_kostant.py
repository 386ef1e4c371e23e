import pytest

from eqschubert.kostant import (billey_restriction, c_perm, classical_product_oracle,
                                grassmannian_reduced_word, restrictions_at, xi)
from eqschubert.partitions import Partition
from eqschubert.pieri import grassmann_space
from eqschubert.polyring import EquivPoly, poly_ring
from eqschubert.typeweyl import FlagShape, Perm, build_type_a


def lin(ring, coeffs):
    return EquivPoly.linear(ring, coeffs)


def test_grassmannian_reduced_word():
    a = Partition((5, 4), 2, 7)
    assert grassmannian_reduced_word(a) == [6, 4, 5, 3, 4, 2, 3, 1, 2]
    assert grassmannian_reduced_word(Partition((0, 0), 2, 7)) == []
    word = grassmannian_reduced_word(Partition((2, 1), 2, 7))
    assert word == [3, 1, 2]
    w = Perm.from_word(word, 7)
    assert w.length == 3 and w == Partition((2, 1), 2, 7).to_perm()


def test_xi_examples():
    r = poly_ring(6)
    a = Partition((5, 4), 2, 7)
    assert xi(2, 1, a) == lin(r, [1, 2, 2, 2, 1, 1])
    assert xi(2, 2, a) == lin(r, [1, 1, 1, 1, 0, 0]) * lin(r, [1] * 6)
    for n in (3, 4, 6):
        assert not xi(2, 2, Partition((2, 0), 2, n + 1))


def test_restrictions():
    rs = build_type_a(2)
    r = poly_ring(2)
    for w in rs.elements():
        assert billey_restriction(rs, rs.identity(), w) == EquivPoly.one(r)
    assert billey_restriction(rs, rs.s(1), rs.s(1)) == EquivPoly.var(r, 1)


def test_restriction_is_xi():
    rs = build_type_a(6)
    w = Partition((5, 4), 2, 7).to_perm()
    assert billey_restriction(rs, c_perm(2, 1, 7), w) == xi(2, 1, Partition((5, 4), 2, 7))


def test_restriction_independent_of_word():
    rs = build_type_a(3)
    for w in rs.elements():
        table = restrictions_at(rs, w)
        for v, val in table.items():
            assert billey_restriction(rs, v, w, word=list(reversed(
                rs.reduced_word(w.inverse())))) == val


def test_unit_and_oracle_example():
    space = grassmann_space(3, 6)
    u = Partition((4, 2, 1), 3, 7).to_perm()
    assert classical_product_oracle(space, u, space.rs.identity()).coefficient(u, (0,)) == 1
    prod = classical_product_oracle(space, Partition((1, 1, 0), 3, 7).to_perm(), u)
    r = poly_ring(6)
    assert prod.coefficient(u, (0,)) == lin(r, [1, 1, 1, 0, 0, 0]) * lin(r, [1] * 6)
    assert prod.coefficient(Partition((4, 3, 2), 3, 7).to_perm(), (0,)) == 1


def test_oracle_is_commutative():
    space = FlagShape.type_a(3, (1, 3))
    els = space.elements()
    for u in els:
        for v in els:
            assert classical_product_oracle(space, u, v) == classical_product_oracle(space, v, u)
