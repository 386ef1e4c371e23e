import pytest

from eqschubert.chevalley import divisor_product_gp, quantum_chevalley_gb
from eqschubert.kostant import classical_product_oracle
from eqschubert.partitions import Partition
from eqschubert.pieri import eq_quantum_pieri, grassmann_space
from eqschubert.polyring import EquivPoly, QuantumClass, poly_ring
from eqschubert.typeweyl import FlagShape, build_root_system, build_type_a

SYSTEMS = [build_type_a(2), build_type_a(3)] + [
    build_root_system(x) for x in ("B2", "C2", "G2", "B3", "C3")]


def unit(n, k):
    return tuple(1 if t == k else 0 for t in range(1, n + 1))


def test_a2_square():
    rs = build_type_a(2)
    r = poly_ring(2)
    got = quantum_chevalley_gb(rs, 1, rs.s(1))
    want = {(rs.identity(), (1, 0)): EquivPoly.one(r),
            (rs.s(1), (0, 0)): EquivPoly.var(r, 1),
            (rs.s(2) * rs.s(1), (0, 0)): EquivPoly.one(r)}
    assert got == QuantumClass(FlagShape.full(rs), want)


@pytest.mark.parametrize("rs", SYSTEMS, ids=str)
def test_unit(rs):
    for i in range(1, rs.n + 1):
        prod = quantum_chevalley_gb(rs, i, rs.identity())
        assert dict(prod.items()) == {(rs.s(i), (0,) * rs.n): 1}


@pytest.mark.parametrize("rs", SYSTEMS, ids=str)
def test_square_of_simple_reflection(rs):
    n = rs.n
    ring = poly_ring(n)
    for b in range(1, n + 1):
        sb = rs.s(b)
        want = {(rs.identity(), unit(n, b)): EquivPoly.one(ring),
                (sb, (0,) * n): EquivPoly.var(ring, b)}
        for a in range(1, n + 1):
            if a != b and rs.cartan[a - 1][b - 1]:
                c = rs.act_coroot(sb, unit(n, a))[b - 1]
                want[(rs.s(a) * sb, (0,) * n)] = EquivPoly.const(ring, c)
        assert quantum_chevalley_gb(rs, b, sb) == QuantumClass(FlagShape.full(rs), want)


@pytest.mark.parametrize("rs", SYSTEMS, ids=str)
def test_classical_part_matches_localization(rs):
    space = FlagShape.full(rs)
    for u in rs.elements():
        for i in range(1, rs.n + 1):
            prod = quantum_chevalley_gb(rs, i, u).classical_limit()
            assert prod == classical_product_oracle(space, rs.s(i), u)


def test_projective_plane():
    space = grassmann_space(1, 2)
    r = poly_ring(2)
    u = Partition((2,), 1, 3).to_perm()
    got = divisor_product_gp(space, 1, u)
    want = {(u, (0,)): EquivPoly.linear(r, [1, 1]),
            (space.rs.identity(), (1,)): EquivPoly.one(r)}
    assert got == QuantumClass(space, want)


def test_gr37_divisor_has_q():
    space = grassmann_space(3, 6)
    u = Partition((4, 1, 1), 3, 7).to_perm()
    prod = divisor_product_gp(space, 1, u)
    assert prod.coefficient(space.rs.identity(), (1,)) == 1


@pytest.mark.parametrize("steps", [(1,), (2,), (1, 3), (1, 2, 3), (2, 3)])
def test_divisor_unit_and_pieri(steps):
    space = FlagShape.type_a(3, steps)
    for idx, ni in enumerate(steps, 1):
        cls = divisor_product_gp(space, idx, space.rs.identity())
        assert dict(cls.items()) == {(space.rs.s(ni), (0,) * space.k): 1}
        for u in space.elements():
            assert divisor_product_gp(space, idx, u) == eq_quantum_pieri(space, idx, 1, u)


def test_divisor_rejects_bad_input():
    space = FlagShape.type_a(3, (2,))
    with pytest.raises(ValueError):
        divisor_product_gp(space, 2, space.rs.identity())
    with pytest.raises(ValueError):
        divisor_product_gp(space, 1, space.rs.s(1))
