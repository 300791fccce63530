import pytest

from orbit_atlas import groups
from orbit_atlas.fundgrp import (
    center_generator,
    center_in_connected_center,
    center_of_simply_connected,
    levi_pi1,
    scalar_in_identity_component_SL,
    spin_center_membership,
)
from orbit_atlas.levi import LeviDescriptor
from orbit_atlas.partitions import PartitionOrbit, orbit_from_text
from orbit_atlas.rootsys import parse_type

E6 = parse_type("E6")
E7 = parse_type("E7")
E8 = parse_type("E8")


def test_center_orders():
    for name, order in [("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)]:
        assert len(center_of_simply_connected(name)) == order


def test_center_words_match_known_generators():
    # Z(E6) = <a1(w) a3(w^2) a5(w) a6(w^2)> up to the choice of primitive root
    g = center_generator("E6")
    assert g.modulus == 3
    assert g.exponents in ((1, 0, 2, 0, 1, 2), (2, 0, 1, 0, 2, 1))
    # Z(E7) = <a2(-1) a5(-1) a7(-1)>
    g = center_generator("E7")
    assert g.modulus == 2 and g.exponents == (0, 1, 0, 0, 1, 0, 1)


def test_containment_lists():
    z6 = center_generator("E6")
    # the only standard Levi classes of E6 not containing z in Z(L)° are
    # 2A2, 2A2+A1 and A5
    from orbit_atlas.levi import decorate
    found = set()
    for bits in range(1 << 6):
        subset = frozenset(i for i in range(6) if bits >> i & 1)
        if not center_in_connected_center("E6", subset, z6):
            found.add(str(decorate(E6, subset)))
    assert found == {"2A2", "2A2+A1", "A5"}

    z7 = center_generator("E7")
    found = set()
    for bits in range(1 << 7):
        subset = frozenset(i for i in range(7) if bits >> i & 1)
        if not center_in_connected_center("E7", subset, z7):
            found.add(str(decorate(E7, subset)))
    assert found == {"(3A1)''", "4A1", "(A3+A1)''", "A2+3A1", "A3+2A1",
                     "D4+A1", "(A5)''", "D5+A1", "A3+A2+A1", "A5+A1", "D6"}


def test_scalar_membership():
    assert scalar_in_identity_component_SL(6, 3, (3, 3))        # -I, h=3
    assert scalar_in_identity_component_SL(6, 2, (2, 2, 2))     # wI, h=2
    assert scalar_in_identity_component_SL(3, 1, (1, 1, 1))
    assert not scalar_in_identity_component_SL(6, 1, (6,))
    assert not scalar_in_identity_component_SL(6, 3, (2, 2, 2))


def test_spin_membership():
    # kernel of the vector representation: in iff not rather odd
    o = PartitionOrbit("D", 6, (4, 4, 3, 1))
    assert o.is_rather_odd() and not spin_center_membership(
        o, "kernel_of_vector_rep")
    o = PartitionOrbit("D", 6, (3, 2, 2, 2, 2, 1))
    assert not o.is_rather_odd() and spin_center_membership(
        o, "kernel_of_vector_rep")
    # half spin: evenly odd and not rather odd
    o = PartitionOrbit("D", 6, (3, 3, 2, 2, 1, 1))
    assert spin_center_membership(o, "half_spin")
    o = PartitionOrbit("D", 6, (5, 3, 2, 2))
    assert not spin_center_membership(o, "half_spin")
    # very even: decided by the fork label
    o = PartitionOrbit("D", 6, (2,) * 6, "I")
    assert spin_center_membership(o, "half_spin", "I")
    assert not spin_center_membership(o, "half_spin", "II")


def _pi1(ambient_name, subset, *orbits):
    dt = {"E6": E6, "E7": E7, "E8": E8}[ambient_name]
    ld = LeviDescriptor(dt, frozenset(subset))
    return levi_pi1(ambient_name, ld, tuple(orbits))


def test_levi_pi1_examples():
    o3 = orbit_from_text("A", 2, "(3)")
    assert str(_pi1("E6", {0, 2, 4, 5}, o3, o3)) == "Z/3"
    d = orbit_from_text("D", 5, "(5,3,1^2)")
    a = orbit_from_text("A", 1, "(2)")
    assert str(_pi1("E7", {0, 1, 2, 3, 4, 6}, d, a)) == "Sym2xZ/2"
    zero3 = orbit_from_text("A", 2, "0")
    two = orbit_from_text("A", 1, "(2)")
    assert str(_pi1("E7", {0, 1, 2, 4, 6}, zero3, two, two, two)) == "Z/2"
    # E8 always takes the adjoint value
    o = orbit_from_text("D", 6, "(2^4,1^4)")
    assert _pi1("E8", {1, 2, 3, 4, 5, 6}, o) == groups.TRIVIAL


def test_very_even_d6_labels():
    # (2^6)_I deviates, (2^6)_II does not (Remark on label conventions)
    subset = {1, 2, 3, 4, 5, 6}
    one = _pi1("E7", subset, orbit_from_text("D", 6, "(2^6)_I"))
    two = _pi1("E7", subset, orbit_from_text("D", 6, "(2^6)_II"))
    assert str(one) == "Z/2" and two == groups.TRIVIAL


def test_adjoint_surjection_sanity():
    # |pi1 sc| / |pi1 ad| is 1, 2 or 3; 3 only in E6, 2 only in E7
    from orbit_atlas.tables import compute_deviation_set, _adjoint_value_for
    from orbit_atlas.catalog import exceptional_catalogue
    for amb, allowed in (("E6", 3), ("E7", 2)):
        for orb in exceptional_catalogue(amb):
            sc = orb.pi1_simply_connected.order
            ad = orb.pi1_adjoint.order
            assert sc % ad == 0 and sc // ad in (1, allowed)
