import pytest
from hypothesis import given, settings, strategies as st

from orbit_atlas.partitions import (
    PartitionOrbit,
    PartitionError,
    collapse,
    enumerate_classical,
    is_birationally_rigid,
    is_rigid,
    is_valid,
    orbit_from_text,
)


def test_enumerate_counts():
    assert len(enumerate_classical("C", 3)) == 8
    assert len(enumerate_classical("A", 1)) == 2
    d4 = [str(o) for o in enumerate_classical("D", 4)]
    assert "(2^4)_I" in d4 and "(2^4)_II" in d4
    assert len(d4) == 12


def test_validity_rules():
    assert is_valid("B", 7, (3, 2, 2))
    assert not is_valid("B", 7, (3, 2, 1, 1))     # even part odd multiplicity
    assert is_valid("C", 6, (2, 2, 1, 1))
    assert not is_valid("C", 6, (3, 2, 1))        # odd part odd multiplicity
    assert not is_valid("D", 8, (4, 3, 1))


def test_collapse_examples():
    assert collapse("C", (3, 1, 1, 1)) == (2, 2, 1, 1)
    assert collapse("B", (3, 1, 1, 1, 1)) == (3, 1, 1, 1, 1)
    assert collapse("D", (4, 2)) == (3, 3)
    assert collapse("D", (4, 2, 1, 1, 1, 1)) == (3, 3, 1, 1, 1, 1)


def _family_rank(family, total):
    return {"A": total - 1, "B": (total - 1) // 2,
            "C": total // 2, "D": total // 2}[family]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from("BCD"), st.integers(3, 7), st.data())
def test_collapse_idempotent_and_dominated(family, rank, data):
    total = {"B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]
    if family == "D" and rank < 4:
        rank = 4
        total = 8
    # a random partition of the right total
    parts = []
    left = total
    while left:
        p = data.draw(st.integers(1, left))
        parts.append(p)
        left -= p
    parts = tuple(sorted(parts, reverse=True))
    out = collapse(family, parts)
    assert is_valid(family, total, out)
    assert collapse(family, out) == out
    # dominance: prefix sums never exceed the input's
    pref_in, pref_out = 0, 0
    padded_in = list(parts) + [0] * len(out)
    for i, x in enumerate(out):
        pref_in += padded_in[i]
        pref_out += x
        assert pref_out <= pref_in


def test_rigid_rules():
    assert not is_rigid(PartitionOrbit("B", 3, (3, 1, 1, 1, 1)))
    assert is_rigid(PartitionOrbit("A", 3, (1, 1, 1, 1)))
    assert not is_rigid(PartitionOrbit("A", 3, (2, 1, 1)))
    assert is_rigid(PartitionOrbit("D", 5, (3, 2, 2, 1, 1, 1)))
    assert is_rigid(PartitionOrbit("D", 4, (3, 2, 2, 1)))
    assert not is_rigid(PartitionOrbit("C", 3, (2, 2, 1, 1)))  # even part twice


def test_birigid_rules():
    assert is_birationally_rigid(PartitionOrbit("D", 4, (3, 2, 2, 1)))
    assert is_birationally_rigid(PartitionOrbit("C", 3, (2, 2, 1, 1)))
    # the (2^m, 1^2) exclusion in type D
    assert not is_birationally_rigid(PartitionOrbit("D", 5, (2, 2, 2, 2, 1, 1)))
    assert not is_birationally_rigid(PartitionOrbit("D", 4, (3, 3, 1, 1)))


@pytest.mark.parametrize("family", "BCD")
def test_rigid_implies_birationally_rigid(family):
    for rank in range(2 if family == "B" else 3 if family == "C" else 4, 9):
        for orbit in enumerate_classical(family, rank):
            if is_rigid(orbit):
                assert is_birationally_rigid(orbit), orbit


def test_dimensions():
    assert PartitionOrbit("D", 4, (2, 2, 1, 1, 1, 1)).dim() == 10
    assert PartitionOrbit("D", 4, (3, 2, 2, 1)).dim() == 16
    assert PartitionOrbit("D", 4, (7, 1)).dim() == 24
    assert PartitionOrbit("B", 3, (3, 1, 1, 1, 1)).dim() == 10
    assert PartitionOrbit("C", 3, (2, 2, 1, 1)).dim() == 10
    assert PartitionOrbit("A", 5, (6,)).dim() == 30
    assert PartitionOrbit("A", 5, (1,) * 6).dim() == 0


def test_partition_text():
    o = orbit_from_text("D", 6, "(4^2,2^2)_I")
    assert o.parts == (4, 4, 2, 2) and o.very_even_label == "I"
    assert str(o) == "(4^2,2^2)_I"
    assert orbit_from_text("B", 3, "0").parts == (1,) * 7
    with pytest.raises(PartitionError):
        orbit_from_text("D", 4, "(2^4)")      # very even needs a label
    with pytest.raises(PartitionError):
        orbit_from_text("D", 4, "(3,1^5)_I")  # label needs very even
