import pytest

from orbit_atlas.levi import (
    LeviDescriptor,
    decorate,
    jacobson_morozov_levi,
    parse_decorated,
    semisimple_corank,
)
from orbit_atlas.rootsys import RootSystemError, WeightedDiagram, parse_type

E7 = parse_type("E7")
E6 = parse_type("E6")
F4 = parse_type("F4")
G2 = parse_type("G2")


def test_e7_marks():
    assert str(decorate(E7, {1, 4, 6})) == "(3A1)''"      # roots 2,5,7
    assert str(decorate(E7, {1, 3, 4, 6})) == "(A3+A1)''"
    assert str(decorate(E7, {1, 3, 4, 5, 6})) == "(A5)''"
    assert str(decorate(E7, {0, 2, 3, 4, 5})) == "(A5)'"


def test_every_marked_type_gets_exactly_one_mark():
    marked = {"3A1", "A3+A1", "A5"}
    for bits in range(1 << 7):
        subset = frozenset(i for i in range(7) if bits >> i & 1)
        dec = decorate(E7, subset)
        if str(dec.base) in marked:
            assert dec.mark in ("'", "''")
        else:
            assert dec.mark is None


def test_e6_never_marked():
    for bits in range(1 << 6):
        subset = frozenset(i for i in range(6) if bits >> i & 1)
        assert decorate(E6, subset).mark is None


def test_f4_twin_classes():
    # exactly two decorated classes for each of A1, A2, A2+A1
    seen = {}
    for bits in range(1 << 4):
        subset = frozenset(i for i in range(4) if bits >> i & 1)
        dec = decorate(F4, subset)
        seen.setdefault(str(dec.base), set()).add(str(dec))
    assert seen["A1"] == {"A1", "~A1"}
    assert seen["A2"] == {"A2", "~A2"}
    assert seen["A2+A1"] == {"A2+~A1", "~A2+A1"}


def test_g2_tilde():
    assert str(decorate(G2, {0})) == "~A1"
    assert str(decorate(G2, {1})) == "A1"


def test_corank():
    assert semisimple_corank(LeviDescriptor(E7, frozenset({1, 4, 6}))) == 4
    assert semisimple_corank(LeviDescriptor(E6, frozenset())) == 6
    e8 = parse_type("E8")
    assert semisimple_corank(LeviDescriptor(e8, frozenset(range(8)))) == 0


def test_jacobson_morozov():
    wd = WeightedDiagram(E7, (2,) * 7)
    assert str(jacobson_morozov_levi(E7, wd).decorated) == "T"
    wd = WeightedDiagram(E7, (2, 2, 2, 0, 2, 2, 2))
    jm = jacobson_morozov_levi(E7, wd)
    assert str(jm.decorated) == "A1" and jm.subset == frozenset({3})
    wd = WeightedDiagram(F4, (0, 2, 0, 0))
    jm = jacobson_morozov_levi(F4, wd)
    assert str(jm.decorated) == "~A2+A1"
    assert jm.subset == frozenset({0, 2, 3})


def test_jacobson_morozov_rejects_odd_diagram():
    with pytest.raises(RootSystemError):
        jacobson_morozov_levi(E7, WeightedDiagram(E7, (1,) + (0,) * 6))


def test_decorated_parse_round_trip():
    for text in ["(3A1)''", "(A5)'", "~A2+A1", "A1+~A1", "D5+A1", "T",
                 "2A2+A1", "(A3+A1)'"]:
        assert str(parse_decorated(text)) == text
