import itertools

import pytest

from eqschubert.partitions import (Partition, associated_partition, box_partitions,
                                   join_and_cut, transpose, vertical_strip_extensions)


def P(parts, m, nplus1):
    return Partition(tuple(parts), m, nplus1)


def test_transpose():
    assert transpose(P((5, 4), 2, 7)).parts == (2, 2, 2, 2, 1)
    assert transpose(P((2, 1), 2, 7)).parts == (2, 1, 0, 0, 0)
    assert transpose(P((0, 0), 2, 7)).parts == (0,) * 5
    for lam in box_partitions(3, 7):
        assert transpose(transpose(lam)) == lam


def test_box_count():
    # binomial(7, 3)
    assert len(box_partitions(3, 7)) == 35


def test_vertical_strips():
    nu = P((4, 2, 1), 3, 7)
    assert vertical_strip_extensions(nu, 2) == [P((4, 3, 2), 3, 7)]
    assert vertical_strip_extensions(nu, 0) == [nu]
    got = {e.parts for e in vertical_strip_extensions(P((1, 0), 2, 4), 1)}
    assert got == {(2, 0), (1, 1)}


def test_vertical_strips_brute_force():
    for m, nplus1 in [(2, 5), (3, 6), (4, 7)]:
        boxes = box_partitions(m, nplus1)
        for nu in boxes:
            for r in range(m + 1):
                want = {e for e in boxes
                        if all(x - y in (0, 1) for x, y in zip(e.parts, nu.parts))
                        and e.size - nu.size == r}
                assert set(vertical_strip_extensions(nu, r)) == want


def test_associated_partition_examples():
    nu = P((6, 3, 2, 2, 0, 0), 6, 13)
    eta = P((6, 3, 3, 2, 1, 1), 6, 13)
    assert associated_partition(eta, nu).parts == (9, 6, 4)
    assert join_and_cut(eta, nu).parts == (9, 6, 4)
    assert associated_partition(nu, nu) == nu
    assert associated_partition(P((2, 1), 2, 7), P((2, 1), 2, 7)).parts == (2, 1)
    z = P((0, 0, 0), 3, 6)
    assert associated_partition(z, z) == z == join_and_cut(z, z)


def test_join_and_cut_agrees_on_p36():
    for nu in box_partitions(3, 6):
        for r in range(4):
            for eta in vertical_strip_extensions(nu, r):
                assert join_and_cut(eta, nu) == associated_partition(eta, nu)


def test_not_a_strip():
    with pytest.raises(ValueError):
        associated_partition(P((2, 0), 2, 5), P((0, 0), 2, 5))


def test_text_forms():
    lam = P((6, 3, 2, 2, 0, 0), 6, 13)
    assert str(lam) == "(6,3,2,2,0,0)@6x13"
    assert Partition.parse(str(lam)) == lam
    assert Partition.parse("(4,2)", 3, 7).parts == (4, 2, 0)
    for bad in ["(1,2)@2x5", "(9)@1x5", "4,2"]:
        with pytest.raises(ValueError):
            Partition.parse(bad)


def test_perm_bijection():
    for lam in box_partitions(3, 7):
        w = lam.to_perm()
        assert w.length == lam.size
        assert Partition.from_perm(w, 3) == lam
        assert all(w(i) < w(i + 1) for i in itertools.chain(range(1, 3), range(4, 7)))
