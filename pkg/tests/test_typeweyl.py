import itertools
import math

import pytest

from eqschubert.typeweyl import (BudgetExceeded, FlagShape, Perm, build_root_system,
                                 build_type_a, coset_decompose, enumerate_wp,
                                 grassmannian_bijection, grassmannian_inverse,
                                 longest_element, reduced_word, sgn_beta)


def test_rank_one():
    rs = build_type_a(1)
    assert rs.positive_roots == [(1,)]
    assert rs.reflection((1,)) == Perm.parse("[21]")


def test_positive_root_count():
    assert len(build_type_a(6).positive_roots) == 21


def test_a2_coroot_and_rho():
    rs = build_type_a(2)
    assert rs.coroot[(1, 1)] == (1, 1)
    assert 2 * sum(rs.coroot[(1, 1)]) == 4


@pytest.mark.parametrize("text,length", [("[1234567]", 0), ("[3715246]", 9), ("[4321]", 6)])
def test_length(text, length):
    assert Perm.parse(text).length == length


def test_length_is_inversion_count():
    for w in itertools.permutations(range(1, 6)):
        inv = sum(1 for a, b in itertools.combinations(w, 2) if a > b)
        assert Perm(w).length == inv


def test_parse_forms():
    assert Perm.parse("[3,7,1,5,2,4,6]") == Perm.parse("[3715246]")
    assert Perm.parse("(1 2 3)", 4) == Perm.parse("[2314]")
    assert Perm.from_cycles([(3, 5), (1, 6)], 7) == Perm.parse("[6254317]")
    assert str(Perm(list(range(10, 0, -1)))).startswith("[10,9,")
    with pytest.raises(ValueError):
        Perm.parse("[1134]")


def test_composition_and_right_multiplication():
    u = Perm.parse("[3715246]")
    assert u * u.inverse() == Perm.identity(7)
    assert u.rmul_s(1) == u * Perm.simple(1, 7) == Perm.parse("[7315246]")
    assert Perm.from_word(reduced_word(u), 7) == u
    assert len(reduced_word(u)) == u.length


def test_sgn_beta():
    rs = build_type_a(2)
    assert sgn_beta(rs, rs.identity(), 1) == 0
    assert sgn_beta(rs, rs.s(1), 1) == 1
    assert sgn_beta(rs, rs.from_word([2, 1]), 1) == 1


def test_coset_decompose():
    rs3 = build_type_a(2)
    assert coset_decompose(rs3, {1}, Perm.parse("[213]")) == (Perm.identity(3), Perm.parse("[213]"))
    rs4 = build_type_a(3)
    for w in rs4.elements():
        x, y = coset_decompose(rs4, {1, 3}, w)
        assert x * y == w
        assert x.length + y.length == w.length
        assert not x.has_descent(1) and not x.has_descent(3)


def test_longest_elements():
    rs = build_type_a(3)
    assert longest_element(rs, []) == rs.identity()
    assert longest_element(rs, [1, 3]) == Perm.parse("[2143]")
    w = longest_element(rs, [1, 2])
    assert w == Perm.parse("[3214]") and w.length == 3
    assert rs.longest().length == 6


def test_grassmannian_bijection():
    assert grassmannian_bijection(Perm.parse("[5712346]"), 2) == (5, 4)
    assert grassmannian_bijection(Perm.identity(7), 3) == (0, 0, 0)
    w = grassmannian_inverse((4, 0, 0), 3, 7)
    assert (w(1), w(2), w(3)) == (1, 2, 7)


@pytest.mark.parametrize("n,steps", [(2, (1, 2)), (3, (2,)), (6, (2, 4)), (5, (1, 3, 4))])
def test_wp_counts(n, steps):
    ext = (0,) + steps + (n + 1,)
    want = math.factorial(n + 1)
    for a, b in zip(ext, ext[1:]):
        want //= math.factorial(b - a)
    els = enumerate_wp(FlagShape.type_a(n, steps))
    assert len(els) == want
    assert len(set(els)) == want


def test_fl247_count():
    # 7!/(2! 2! 3!) = 210
    assert len(FlagShape.type_a(6, (2, 4)).elements()) == 210


@pytest.mark.parametrize("name,order,nroots", [
    ("B2", 8, 4), ("C2", 8, 4), ("G2", 12, 6), ("B3", 48, 9), ("C3", 48, 9),
    ("D4", 192, 12), ("F4", 1152, 24)])
def test_other_types(name, order, nroots):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == nroots
    assert len(rs.elements()) == order
    assert rs.longest().length == nroots
    for i in range(1, rs.n + 1):
        for j in range(1, rs.n + 1):
            a_i = tuple(1 if t == i else 0 for t in range(1, rs.n + 1))
            a_j = tuple(1 if t == j else 0 for t in range(1, rs.n + 1))
            assert rs.pair(a_i, rs.coroot[a_j]) == rs.cartan[j - 1][i - 1] or \
                rs.pair(a_i, rs.coroot[a_j]) == rs.cartan[i - 1][j - 1]


def test_non_a_reflections_are_involutions():
    rs = build_root_system("G2")
    for g in rs.positive_roots:
        r = rs.reflection(g)
        assert r * r == rs.identity()
        assert rs.act_root(r, g) == tuple(-x for x in g)


def test_budget(monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_W", "100")
    with pytest.raises(BudgetExceeded):
        build_root_system("F4").elements()
