import itertools

import pytest

from eqschubert.kostant import c_perm, classical_product_oracle, xi
from eqschubert.partitions import Partition, box_partitions
from eqschubert.pieri import (PieriDegree, classical_pieri_gp, eq_quantum_pieri,
                              grassmann_pieri, grassmann_space, mu_partition,
                              per_membership, per_membership_by_length, pieri_degrees,
                              robinson_pieri, special_superior_set, superior_cycles,
                              tau_phi, tau_phi_words, top_row_products)
from eqschubert.polyring import EquivPoly, QuantumClass, poly_ring
from eqschubert.typeweyl import FlagShape, Perm, build_type_a

U = Perm.parse("[3715246]")
FL = FlagShape.type_a(6, (2, 4))


def lin(ring, coeffs):
    return EquivPoly.linear(ring, coeffs)


def test_superior_sets():
    assert special_superior_set(U, 4, 0) == [U]
    w = Perm.parse("[4725136]")
    assert w in special_superior_set(U, 4, 2)
    assert superior_cycles(U, 4)[w] == ((5, (3,)), (6, (1,)))
    assert w == U * Perm.from_cycles([(3, 5), (1, 6)], 7)
    assert mu_partition(w, U, 4).parts == (5, 4)
    assert mu_partition(Perm.identity(7), Perm.identity(7), 3).parts == (0, 0, 0)


def test_robinson_against_oracle():
    full = FlagShape.full(build_type_a(3))
    for u in full.elements():
        for r in range(1, 4):
            for p in range(1, r + 1):
                got = robinson_pieri(3, r, p, u)
                assert got == classical_product_oracle(full, c_perm(r, p, 4), u)
                assert got == classical_pieri_gp(full, r, p, u)


def test_robinson_unit():
    for r in range(1, 5):
        for p in range(1, r + 1):
            cls = robinson_pieri(4, r, p, Perm.identity(5))
            assert dict(cls.items()) == {(c_perm(r, p, 5), (0, 0, 0, 0)): 1}


def test_diagonal_coefficient():
    for space in [FL, FlagShape.type_a(4, (1, 3))]:
        for idx, ni in enumerate(space.steps, 1):
            for p in range(1, ni + 1):
                for u in space.elements()[:40]:
                    c = classical_pieri_gp(space, idx, p, u).coefficient(u, (0,) * space.k)
                    assert (c or 0) == xi(ni, p, mu_partition(u, u, ni))


def test_pieri_degrees():
    assert [pd.d for pd in pieri_degrees(FL, 2, 3, U)] == [(0, 0), (1, 1)]
    ident = Perm.identity(7)
    assert [pd.d for pd in pieri_degrees(FL, 2, 3, ident)] == [(0, 0)]


def test_degree_vectors():
    pd = PieriDegree.from_vector((1, 2, 1))
    assert (pd.h, pd.l) == ((1, 2), (3, 2))
    with pytest.raises(ValueError):
        PieriDegree.from_vector((2, 0, 1))


def test_tau_phi():
    zero = PieriDegree.from_vector((0, 0))
    assert tau_phi(FL, zero) == (Perm.identity(7), Perm.identity(7))
    d = PieriDegree.from_vector((1, 1))
    tau, phi = tau_phi(FL, d)
    assert tau == Perm.parse("[1345672]") == Perm.from_cycles([(2, 3, 4, 5, 6, 7)], 7)
    assert phi == Perm.from_cycles([(1, 2, 3, 4)], 7)
    tw, pw = tau_phi_words(FL, d)
    assert Perm.from_word(tw, 7) == tau and Perm.from_word(pw, 7) == phi
    assert U * tau == Perm.parse("[3152467]")


def test_per_membership():
    d = PieriDegree.from_vector((1, 1))
    assert per_membership(FL, d, Perm.parse("[1325467]"))
    assert per_membership_by_length(FL, d, Perm.parse("[1325467]"))
    zero = PieriDegree.from_vector((0, 0))
    assert all(per_membership(FL, zero, w) for w in FL.elements())


def _per_to_last_step(space, pd, w):
    if not space.is_min_rep(w):
        return False
    ext = space.ext_steps
    return all(w(r) > w(ext[h - 1] + 1) for h, l in zip(pd.h, pd.l)
               for r in range(ext[h - 1] + 2, ext[l] + 1))


def test_length_form_of_per_is_range_ending_at_last_step():
    # the length characterization matches the index range n_{h-1}+2..n_l
    for n in range(1, 5):
        for k in range(1, n + 1):
            for steps in itertools.combinations(range(1, n + 1), k):
                space = FlagShape.type_a(n, steps)
                for d in itertools.product(range(3), repeat=k):
                    try:
                        pd = PieriDegree.from_vector(d)
                    except ValueError:
                        continue
                    for w in space.elements():
                        assert per_membership_by_length(space, pd, w) == \
                            _per_to_last_step(space, pd, w)


def test_both_per_tests_give_the_same_products():
    for space in [FlagShape.type_a(3, (1, 3)), FlagShape.type_a(4, (2,)), FlagShape.type_a(3, (1, 2, 3))]:
        for idx, ni in enumerate(space.steps, 1):
            for p in range(1, ni + 1):
                for u in space.elements():
                    assert eq_quantum_pieri(space, idx, p, u) == \
                        eq_quantum_pieri(space, idx, p, u, per=per_membership_by_length)


def test_fl247_example():
    r = poly_ring(6)
    prod = eq_quantum_pieri(FL, 2, 3, U)
    assert len(prod) == 11
    assert prod.coefficient(Perm.parse("[4726135]"), (0, 0)) == 1
    assert prod.coefficient(U, (0, 0)) == (
        lin(r, [0, 1, 0, 0, 0, 0]) * lin(r, [0, 1, 1, 1, 0, 0]) * lin(r, [0, 1, 1, 1, 1, 1]))
    assert prod.coefficient(Perm.parse("[1325467]"), (1, 1)) == lin(r, [1, 2, 1, 1, 0, 0])
    assert prod.coefficient(Perm.parse("[1425367]"), (1, 1)) == 1
    assert prod.classical_limit() == classical_pieri_gp(FL, 2, 3, U)


def test_unit():
    for space in [FL, FlagShape.type_a(4, (1, 2, 4))]:
        ident = space.rs.identity()
        for idx, ni in enumerate(space.steps, 1):
            for p in range(1, ni + 1):
                got = eq_quantum_pieri(space, idx, p, ident)
                assert dict(got.items()) == {(c_perm(ni, p, space.n + 1), (0,) * space.k): 1}


def test_bad_arguments():
    with pytest.raises(ValueError):
        eq_quantum_pieri(FL, 3, 1, U)
    with pytest.raises(ValueError):
        eq_quantum_pieri(FL, 1, 3, U)
    with pytest.raises(ValueError):
        eq_quantum_pieri(FL, 1, 1, Perm.parse("[2135467]"))


def gr(parts, m, nplus1):
    return Partition(tuple(parts), m, nplus1)


def test_grassmann_examples():
    r = poly_ring(6)
    space = grassmann_space(3, 6)
    got = grassmann_pieri(3, 6, 3, gr((4, 0, 0), 3, 7))
    want = QuantumClass(space, {(gr((4, 1, 1), 3, 7).to_perm(), (0,)): lin(r, [1] * 6),
                                (space.rs.identity(), (1,)): EquivPoly.one(r)})
    assert got == want
    ex = grassmann_pieri(3, 6, 2, gr((4, 2, 1), 3, 7))
    assert len(ex) == 7
    assert ex.coefficient(gr((4, 2, 2), 3, 7).to_perm(), (0,)) == lin(r, [1, 2, 2, 1, 1, 1])
    assert ex.coefficient(gr((1, 0, 0), 3, 7).to_perm(), (1,)) == lin(r, [1, 1, 1, 0, 0, 0])


def test_grassmann_unit_and_projective_space():
    for n in range(1, 6):
        for p in range(1, 3):
            if p > 2 or n < 2:
                continue
            got = grassmann_pieri(2, n, p, gr((0, 0), 2, n + 1))
            assert dict(got.items()) == {(gr((1,) * p + (0,) * (2 - p), 2, n + 1).to_perm(), (0,)): 1}
        r = poly_ring(n)
        got = grassmann_pieri(1, n, 1, gr((n,), 1, n + 1))
        want = QuantumClass(grassmann_space(1, n), {
            (gr((n,), 1, n + 1).to_perm(), (0,)): lin(r, [1] * n),
            (Perm.identity(n + 1), (1,)): EquivPoly.one(r)})
        assert got == want


def test_top_row_corollary():
    for n in range(2, 6):
        for m in range(1, n + 1):
            prods = top_row_products(m, n)
            nu = gr((n + 1 - m,) + (0,) * (m - 1), m, n + 1)
            space = grassmann_space(m, n)
            for p, cls in prods.items():
                if p < m:
                    assert cls == cls.classical_limit()
                    assert cls == classical_product_oracle(space, c_perm(m, p, n + 1), nu.to_perm())
                else:
                    r = poly_ring(n)
                    top = gr((n + 1 - m,) + (1,) * (m - 1), m, n + 1)
                    assert cls == QuantumClass(space, {(top.to_perm(), (0,)): lin(r, [1] * n),
                                                       (space.rs.identity(), (1,)): EquivPoly.one(r)})


def test_grassmann_rule_matches_flag_rule():
    for n in range(1, 6):
        for m in range(1, n + 1):
            space = grassmann_space(m, n)
            for nu in box_partitions(m, n + 1):
                for p in range(1, m + 1):
                    assert grassmann_pieri(m, n, p, nu) == eq_quantum_pieri(space, 1, p, nu.to_perm())
