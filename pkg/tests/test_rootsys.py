import pytest
from hypothesis import given, settings, strategies as st

from orbit_atlas.rootsys import (
    DynkinType,
    RootSystemError,
    WeightedDiagram,
    ambient,
    build_root_system,
    diagram_text,
    grading_dimensions,
    orbit_dimension_from_diagram,
    parse_diagram,
    parse_type,
    root_subsystem_type,
)

POSITIVE_COUNTS = {
    "A1": 1, "A2": 3, "A5": 15, "B2": 4, "B3": 9, "C3": 9, "D4": 12,
    "D7": 42, "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(name, count):
    rs = ambient(name)
    assert len(rs.positive_roots) == count


def test_e7_dimension_identity():
    rs = ambient("E7")
    assert rs.dim_g == 133
    assert 2 * len(rs.positive_roots) + rs.rank == 133


def test_g2_lengths():
    rs = ambient("G2")
    short = [r for r in rs.positive_roots if rs.norm2(r) == 2]
    long = [r for r in rs.positive_roots if rs.norm2(r) == 6]
    assert len(short) == 3 and len(long) == 3


def test_invalid_ranks_rejected():
    with pytest.raises(RootSystemError):
        parse_type("E9")
    with pytest.raises(RootSystemError):
        parse_type("F5")
    with pytest.raises(RootSystemError):
        DynkinType((("G", 3),))


def test_low_rank_aliases_normalise():
    assert str(DynkinType.of(("D", 3))) == "A3"
    assert str(DynkinType.of(("C", 2))) == "B2"
    assert str(DynkinType.of(("D", 2))) == "2A1"


TYPES = ["A1", "A3", "B3", "C4", "D5", "E6", "F4", "G2", "A2+A1", "D4"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES))
def test_reflection_closure(name):
    rs = ambient(name)
    n = rs.rank
    roots = set(rs.positive_roots) | {tuple(-c for c in a)
                                      for a in rs.positive_roots}
    for a in roots:
        for i in range(n):
            k = sum(a[j] * rs.cartan[j][i] for j in range(n))
            b = list(a)
            b[i] -= k
            assert tuple(b) in roots


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_grading_reconstructs_dimension(name, data):
    rs = ambient(name)
    labels = tuple(data.draw(st.sampled_from([0, 1, 2]))
                   for _ in range(rs.rank))
    wd = WeightedDiagram(rs.dtype, labels)
    g0, g1 = grading_dimensions(rs, wd)
    rest = sum(2 for a in rs.positive_roots
               if sum(l * c for l, c in zip(labels, a)) >= 2)
    odd_high = sum(1 for a in rs.positive_roots
                   if sum(l * c for l, c in zip(labels, a)) == 1)
    assert g0 + g1 + odd_high + rest == rs.dim_g


def test_grading_examples():
    e7 = ambient("E7")
    assert grading_dimensions(e7, WeightedDiagram(e7.dtype, (2,) * 7)) == (7, 0)
    assert grading_dimensions(e7, WeightedDiagram(e7.dtype, (0,) * 7)) == (133, 0)
    a1 = ambient("A1")
    assert grading_dimensions(a1, WeightedDiagram(a1.dtype, (2,))) == (1, 0)
    assert orbit_dimension_from_diagram(
        e7, WeightedDiagram(e7.dtype, (2,) * 7)) == 126


def test_dimension_formula_matches_zero_orbit_induction():
    # dim of the E6 orbit with diagram 0 0 2 0 0 / 0 equals twice the number
    # of roots outside the 2A2+A1 Levi, i.e. the Richardson dimension
    e6 = ambient("E6")
    wd = WeightedDiagram(e6.dtype, (0, 0, 0, 2, 0, 0))
    subset = wd.zero_nodes()
    levi_roots = sum(1 for a in e6.positive_roots
                     if all(c == 0 for i, c in enumerate(a) if i not in subset))
    assert orbit_dimension_from_diagram(e6, wd) == \
        2 * (len(e6.positive_roots) - levi_roots)


def test_subsystem_types():
    e7 = ambient("E7")
    assert str(root_subsystem_type(e7, {1, 4, 6})) == "3A1"
    e6 = ambient("E6")
    assert root_subsystem_type(e6, set()).is_empty
    f4 = ambient("F4")
    sub = root_subsystem_type(f4, {2, 3})
    assert str(sub) == "A2"
    assert all(f4.simple_d[i] == 1 for i in (2, 3))


def test_diagram_text_round_trip():
    e7 = ambient("E7")
    wd = WeightedDiagram(e7.dtype, (2, 1, 1, 0, 1, 0, 2))
    text = diagram_text(wd)
    assert text == "2 1 0 1 0 2 / 1"
    assert parse_diagram(e7.dtype, text) == wd
    d6 = ambient("D6")
    wd = WeightedDiagram(d6.dtype, (0, 2, 0, 0, 2, 0))
    assert parse_diagram(d6.dtype, diagram_text(wd)) == wd


def test_bad_diagram_labels():
    e6 = ambient("E6")
    with pytest.raises(RootSystemError):
        WeightedDiagram(e6.dtype, (3, 0, 0, 0, 0, 0))
    with pytest.raises(RootSystemError):
        WeightedDiagram(e6.dtype, (0, 0))
