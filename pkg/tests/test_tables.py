import pytest

from eqschubert.chevalley import quantum_chevalley_gb
from eqschubert.partitions import Partition
from eqschubert.pieri import eq_quantum_pieri, grassmann_pieri
from eqschubert.polyring import QuantumClass
from eqschubert.tables import format_class, format_table, parse_table
from eqschubert.typeweyl import FlagShape, Perm, build_root_system, build_type_a


def test_round_trip_fl247():
    fl = FlagShape.type_a(6, (2, 4))
    cls = eq_quantum_pieri(fl, 2, 3, Perm.parse("[3715246]"))
    text = format_table(cls)
    assert parse_table(text) == cls
    assert format_table(parse_table(text)) == text


def test_table_sort_order():
    cls = grassmann_pieri(3, 6, 2, Partition((4, 2, 1), 3, 7))
    lines = format_table(cls).splitlines()[1:]
    keys = []
    for ln in lines:
        w = Perm.parse(ln.split()[0][2:])
        q = int(ln.split()[1][2:])
        keys.append((q, w.length, w.w))
    assert keys == sorted(keys)


def test_empty_and_full_flag():
    space = FlagShape.full(build_type_a(2))
    empty = QuantumClass(space, {})
    assert parse_table(format_table(empty)) == empty
    assert format_class(empty) == "0"
    cls = quantum_chevalley_gb(space.rs, 1, space.rs.s(1))
    assert parse_table(format_table(cls)) == cls
    assert format_class(cls) == "a1*s[213] + s[312] + q1"


@pytest.mark.parametrize("text", [
    "", "w=[123] q=0 c=1\n", "#space A n=2 flag=1\nw=[213] c=1\n",
    "#space A n=2 flag=1\nw=[213] q=0 c=1\nw=[213] q=0 c=a1\n"])
def test_bad_tables(text):
    with pytest.raises(ValueError):
        parse_table(text)


def test_non_a_table_refused():
    rs = build_root_system("B2")
    with pytest.raises(ValueError):
        format_table(quantum_chevalley_gb(rs, 1, rs.s(1)))


def test_unknown_format():
    with pytest.raises(ValueError):
        format_class(QuantumClass(FlagShape.full(build_type_a(1)), {}), "xml")
