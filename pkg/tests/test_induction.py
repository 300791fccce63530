import pytest

from orbit_atlas.catalog import exceptional_catalogue
from orbit_atlas.induction import (
    InductionError,
    canonical_orbit_text,
    datum_from_text,
    datum_is_rigid,
    dimension_check,
    levi_subset,
    ls_induce_classical,
    rigid_data,
    rigid_registry,
)
from orbit_atlas.partitions import PartitionOrbit


def test_quoted_classical_instances():
    # Ind_{C2}^{C3}(0) and Ind_{B2}^{B3}(0)
    r = ls_induce_classical("C", 3, [(1,)], PartitionOrbit("C", 2, (1,) * 4))
    assert r.parts == (2, 2, 1, 1)
    r = ls_induce_classical("B", 3, [(1,)], PartitionOrbit("B", 2, (1,) * 5))
    assert r.parts == (3, 1, 1, 1, 1)
    # gl2+gl2 inside gl4
    r = ls_induce_classical("A", 3, [(1, 1), (1, 1)])
    assert r.parts == (2, 2)


def test_d5_chain_agreement():
    # Ind_{A3+A1}^{D5}(0) = Ind_{D4}^{D5}((2^2,1^4)): the A3 is a D3 core
    via_a3 = ls_induce_classical("D", 5, [(1, 1)], None)
    via_d4 = ls_induce_classical(
        "D", 5, [(1,)], PartitionOrbit("D", 4, (2, 2, 1, 1, 1, 1)))
    assert via_a3.parts == via_d4.parts == (3, 3, 1, 1, 1, 1)


def test_d5a2_instance():
    # the D5 part of Ind_{A3+A2+A1}^{D5+A2}(0)
    r = ls_induce_classical("D", 5, [(1, 1)], None)
    assert r.parts == (3, 3, 1, 1, 1, 1)


def test_identity_induction():
    o = PartitionOrbit("C", 3, (4, 2))
    assert ls_induce_classical("C", 3, [], o) == o


def test_collapse_stability():
    from orbit_atlas.partitions import enumerate_classical, is_valid
    for core in enumerate_classical("C", 2):
        out = ls_induce_classical("C", 4, [(2,), (1, 1)][:1], core)
        assert is_valid("C", 8, out.parts)


def test_bad_data_aborts():
    # blocks plus core exceeding the ambient size
    with pytest.raises(InductionError):
        ls_induce_classical("C", 3, [(2,)], PartitionOrbit("C", 2, (2, 2)))
    # wrong core family
    with pytest.raises(InductionError):
        ls_induce_classical("B", 3, [(1,)], PartitionOrbit("C", 2, (1,) * 4))


def test_registry_complete_and_rigid():
    for amb in ("G2", "F4", "E6", "E7", "E8"):
        for orb in exceptional_catalogue(amb):
            if orb.rigid:
                continue
            entries = rigid_data(amb, orb.bala_carter)
            assert entries, (amb, orb.bala_carter)
            for e in entries:
                assert datum_is_rigid(e.datum)
                assert dimension_check(e.datum, orb.bala_carter)


def test_registry_counts():
    per_ambient = {}
    for e in rigid_registry():
        per_ambient[e.ambient_name] = per_ambient.get(e.ambient_name, 0) + 1
    # every induced orbit has at least one entry; D7(a2), E7(a5) etc have two
    assert per_ambient["G2"] == 3
    assert per_ambient["E6"] == 20


def test_levi_subset_picks_paper_representatives():
    assert sorted(levi_subset("E7", "4A1")) == [0, 1, 4, 6]        # 1,2,5,7
    assert sorted(levi_subset("E7", "(A3+A1)''")) == [1, 3, 4, 6]  # 2,4,5,7
    assert sorted(levi_subset("E7", "A3+2A1")) == [0, 1, 3, 4, 6]  # 1,2,4,5,7
    assert sorted(levi_subset("E7", "D6")) == [1, 2, 3, 4, 5, 6]
    assert levi_subset("E7", "T") == frozenset()


def test_canonical_text_round_trip():
    t = canonical_orbit_text("E7", "D5+A1", "(3,2^2,1^3)x(2)")
    assert t == "(3,2^2,1^3)x(2)"
    t = canonical_orbit_text("E7", "A2+3A1", "(1^3)x(2)x(2)x(2)")
    assert t == "0x(2)x(2)x(2)"
    d = datum_from_text("E7", "D6", "(3,2^4,1)")
    assert str(d) == "(D6, (3,2^4,1))"
