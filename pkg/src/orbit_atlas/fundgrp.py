"""Equivariant fundamental groups of Levi orbits via integer lattice arithmetic.

For a simply connected exceptional group G and a standard Levi L, the group
pi_1^L of a nilpotent L-orbit equals the adjoint-form value unless the
generator of Z(G) survives in L/Z(L)°; in that case the value may grow by a
central Z/2 or Z/3.  The survival test, and the decision of whether some
element of Zhat(minus Z) lies in the identity component of the centraliser,
are carried out on the character/cocharacter lattices:

  * centres are enumerated as coroot words q in (Q/Z)^rank killed by the
    Cartan pairing, via the Smith normal form;
  * X_Delta(T) = X(T) cap Q.Delta is computed as an integer kernel, and
    membership of a central element in Z(L_Delta)° is evaluation of that
    basis on the coroot word;
  * per-factor membership of a central element in the identity component of
    the centraliser uses the classical component-group tables: Z/h for
    scalars in SL_n, and the rather-odd / evenly-odd case analysis for
    Spin factors, with the fixed fork conventions for very even partitions.

Everything is exponents mod m; no complex numbers appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import groups
from .classical import embedded_node_order, has_fixed_orientation
from .intlinalg import integer_kernel_basis, rational_inverse, \
    solve_integer_congruences
from .levi import LeviDescriptor
from .partitions import PartitionOrbit
from .rootsys import RootSystem, ambient, root_subsystem_type


class FundGroupError(ValueError):
    pass


@dataclass(frozen=True)
class CenterElement:
    """A coroot word: prod_i alpha_i^vee(zeta_m^{c_i}) as exponents mod m."""

    exponents: tuple[int, ...]
    modulus: int

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.modulus) for c in self.exponents)

    @property
    def is_identity(self) -> bool:
        return all(c % self.modulus == 0 for c in self.exponents)

    def order(self) -> int:
        if self.is_identity:
            return 1
        g = math.gcd(self.modulus, *(c % self.modulus for c in self.exponents))
        return self.modulus // g

    def word(self) -> str:
        toks = []
        for i, c in enumerate(self.exponents):
            c %= self.modulus
            if c:
                toks.append(f"a{i + 1}v({c}/{self.modulus})")
        return "*".join(toks) if toks else "1"


def _reduce(q: tuple[Fraction, ...]) -> CenterElement:
    m = 1
    for x in q:
        m = m * x.denominator // math.gcd(m, x.denominator)
    return CenterElement(tuple(int(x * m) % m for x in q), m)


@lru_cache(maxsize=None)
def center_of_simply_connected(ambient_name: str) -> tuple[CenterElement, ...]:
    """Generators-first listing of Z(G) for the simply connected form.

    Returns all elements, identity first, then by word; the canonical
    generator (when the centre is nontrivial cyclic) is element [1].
    """
    rs = ambient(ambient_name)
    det = 1
    from .intlinalg import smith_normal_form
    d, _, _ = smith_normal_form([list(r) for r in rs.cartan])
    for i in range(rs.rank):
        det *= d[i][i]
    m = abs(det)
    if m == 1:
        return (CenterElement((0,) * rs.rank, 1),)
    sols = solve_integer_congruences([list(r) for r in rs.cartan], m)
    elems = [CenterElement(q, m) for q in sols]
    # order: identity, then maximal-order elements by exponent tuple
    elems.sort(key=lambda e: (e.order() != m and not e.is_identity,
                              not e.is_identity, e.exponents))
    # place identity first, generators right after
    ident = [e for e in elems if e.is_identity]
    gens = sorted((e for e in elems if e.order() == m), key=lambda e: e.exponents)
    rest = sorted((e for e in elems if not e.is_identity and e.order() != m),
                  key=lambda e: e.exponents)
    return tuple(ident + gens + rest)


def center_generator(ambient_name: str) -> CenterElement:
    elems = center_of_simply_connected(ambient_name)
    if len(elems) == 1:
        return elems[0]
    return elems[1]


@lru_cache(maxsize=None)
def _x_delta_basis(ambient_name: str, subset: frozenset[int]):
    """Basis of X_Delta(T) = X(T) cap Q.Delta as pairing vectors n.

    A weight lambda = sum n_k omega_k lies in Q.Delta iff its root
    coordinates vanish off Delta; those coordinates are C^-T n.
    """
    rs = ambient(ambient_name)
    n = rs.rank
    inv_t = rational_inverse([[rs.cartan[j][i] for j in range(n)]
                              for i in range(n)])
    outside = [i for i in range(n) if i not in subset]
    if not outside:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    # scale rows to integers
    rows = []
    for i in outside:
        row = [inv_t[i][j] for j in range(n)]
        scale = 1
        for x in row:
            scale = scale * x.denominator // math.gcd(scale, x.denominator)
        rows.append([int(x * scale) for x in row])
    basis = integer_kernel_basis(rows)
    return tuple(tuple(v) for v in basis)


def center_in_connected_center(ambient_name: str, subset,
                               z: CenterElement) -> bool:
    """Does the central element lie in Z(L_Delta)°?

    True iff every lambda in a basis of X_Delta(T) evaluates to 1 on the
    coroot word, i.e. sum_j n_j c_j = 0 mod m.
    """
    basis = _x_delta_basis(ambient_name, frozenset(subset))
    m = z.modulus
    return all(sum(nv * c for nv, c in zip(vec, z.exponents)) % m == 0
               for vec in basis)


def scalar_in_identity_component_SL(n: int, k: int,
                                    parts: tuple[int, ...]) -> bool:
    """Is the scalar zeta_n^k I_n in the identity component of (SL_n)_e?

    The component group of the SL_n centraliser is Z/h with h the gcd of
    the parts, and the scalar maps to k mod h.
    """
    if sum(parts) != n:
        raise FundGroupError("partition does not sum to n")
    h = math.gcd(*parts)
    return k % h == 0


def spin_center_membership(orbit: PartitionOrbit, element_kind: str,
                           half_spin_label: str | None = None) -> bool:
    """Membership of a centre element of Spin_2n in the identity component.

    `element_kind` is "kernel_of_vector_rep" (the element killed by the
    vector representation) or "half_spin" (an element acting by -1 there).
    For very even partitions the half-spin answer depends on which of the
    two fork-node representations kills the element: `half_spin_label` then
    carries "I" or "II" for comparison with the orbit's label.
    """
    if orbit.family != "D":
        raise FundGroupError("spin membership is a type D question")
    rather = orbit.is_rather_odd()
    evenly = orbit.is_evenly_odd()
    if element_kind == "kernel_of_vector_rep":
        return not rather
    if element_kind != "half_spin":
        raise FundGroupError(f"unknown element kind {element_kind!r}")
    if orbit.is_very_even:
        if half_spin_label is None:
            raise FundGroupError("very even case needs the fork label")
        return half_spin_label == orbit.very_even_label
    return evenly and not rather


# ---------------------------------------------------------------------------
# adjoint-form component groups per classical factor (CM 6.1.6 rules)


def _adjoint_factor_group(family: str, orbit: PartitionOrbit) -> groups.GroupId:
    if family == "A":
        return groups.TRIVIAL
    a = orbit.distinct_odd()
    if family == "B":
        return groups.GroupId(sym=(2,) * max(a - 1, 0))
    if family == "C":
        b = len({p for p in orbit.parts if p % 2 == 0})
        if all(orbit.multiplicity(p) % 2 == 0
               for p in set(orbit.parts) if p % 2 == 0):
            k = b
        else:
            k = max(b - 1, 0)
        return groups.GroupId(sym=(2,) * k)
    if family == "D":
        if orbit.is_evenly_odd():
            k = max(a - 1, 0)
        else:
            k = max(a - 2, 0)
        return groups.GroupId(sym=(2,) * k)
    raise FundGroupError(f"unexpected classical family {family}")


# ---------------------------------------------------------------------------
# levi_pi1


OrbitSpec = PartitionOrbit | str   # str = Bala-Carter label of an E-factor


def _factor_center(rs: RootSystem, comp: tuple[int, ...]) -> list[CenterElement]:
    """Centre of the simply connected factor on the given nodes, as ambient
    coroot words supported on the component."""
    sub = [[rs.cartan[i][j] for j in comp] for i in comp]
    det = 1
    from .intlinalg import smith_normal_form
    d, _, _ = smith_normal_form(sub)
    for i in range(len(comp)):
        det *= d[i][i]
    m = abs(det)
    n = rs.rank
    if m == 1:
        return [CenterElement((0,) * n, 1)]
    sols = solve_integer_congruences(sub, m)
    out = []
    for q in sols:
        exps = [0] * n
        for pos, node in enumerate(comp):
            exps[node] = q[pos]
        out.append(CenterElement(tuple(exps), m))
    return out


def _combine(elems: list[CenterElement]) -> CenterElement:
    m = 1
    for e in elems:
        m = m * e.modulus // math.gcd(m, e.modulus)
    n = len(elems[0].exponents)
    exps = [0] * n
    for e in elems:
        scale = m // e.modulus
        for i, c in enumerate(e.exponents):
            exps[i] = (exps[i] + c * scale) % m
    return CenterElement(tuple(exps), m)


def _component_value(z: CenterElement, node: int) -> Fraction:
    """Value exponent of the fundamental weight at `node` on the word."""
    return Fraction(z.exponents[node], z.modulus)


def _factor_membership(ambient_name: str, rs: RootSystem,
                       comp: tuple[int, ...], family: str,
                       orbit: PartitionOrbit, z: CenterElement) -> bool:
    """Is the component-piece of z in the identity component of the factor
    centraliser?  Only A and D factors can occur for the deviating Levis."""
    if all(z.exponents[i] % z.modulus == 0 for i in comp):
        return True
    if family == "A":
        n_lin = len(comp) + 1
        order = embedded_node_order(ambient_name, rs, comp, "A")
        first = order[0]
        val = _component_value(z, first)
        k = int(val * n_lin)
        if Fraction(k, n_lin) != val:
            raise FundGroupError("scalar exponent is not a multiple of 1/n")
        return scalar_in_identity_component_SL(n_lin, k, orbit.parts)
    if family == "D":
        order = embedded_node_order(ambient_name, rs, comp, "D")
        n = len(comp)
        vector_node = order[0]
        fork_i, fork_ii = order[n - 2], order[n - 1]
        vec_val = _component_value(z, vector_node)
        if vec_val.denominator == 1:
            return spin_center_membership(orbit, "kernel_of_vector_rep")
        # half-spin type: which fork representation kills the element?
        if not orbit.is_very_even:
            return spin_center_membership(orbit, "half_spin")
        if not has_fixed_orientation(ambient_name, comp, "D"):
            raise FundGroupError(
                "very even membership needs a fixed D4 orientation")
        val_i = _component_value(z, fork_i)
        val_ii = _component_value(z, fork_ii)
        if val_i.denominator == 1 and val_ii.denominator != 1:
            killed = "I"
        elif val_ii.denominator == 1 and val_i.denominator != 1:
            killed = "II"
        else:
            raise FundGroupError("element is not a half-spin kernel")
        return spin_center_membership(orbit, "half_spin", killed)
    raise FundGroupError(f"unexpected factor family {family} in deviation test")


def levi_pi1(ambient_name: str, levi: LeviDescriptor,
             orbit_parts: tuple[OrbitSpec, ...]) -> groups.GroupId:
    """pi_1^L of a Levi orbit in a simply connected exceptional group.

    `orbit_parts` matches the connected components of the Levi in sorted
    order; classical components take PartitionOrbit values, E-type factors
    take Bala-Carter labels.
    """
    rs = ambient(ambient_name)
    comps = levi.components()
    if len(comps) != len(orbit_parts):
        raise FundGroupError("component count mismatch")
    factor_data = []
    for comp, spec in zip(comps, orbit_parts):
        ctype = root_subsystem_type(rs, set(comp))
        family, rank = ctype.components[0]
        if isinstance(spec, PartitionOrbit):
            if spec.family != family or spec.rank != rank:
                raise FundGroupError(
                    f"component {comp} has type {family}{rank}, "
                    f"orbit is {spec.family}{spec.rank}")
        factor_data.append((comp, family, rank, spec))

    adjoint = _adjoint_value(ambient_name, factor_data)

    z = center_generator(ambient_name)
    if z.is_identity:
        return adjoint
    if center_in_connected_center(ambient_name, levi.subset, z):
        return adjoint

    # Zhat \ Z membership test
    factor_centers = []
    for comp, family, rank, spec in factor_data:
        if isinstance(spec, str):
            raise FundGroupError(
                "exceptional factors never occur in deviating Levis")
        factor_centers.append(_factor_center(rs, comp))
    import itertools
    deviates = True
    for combo in itertools.product(*factor_centers):
        xi = _combine(list(combo))
        if xi.is_identity:
            continue
        if center_in_connected_center(ambient_name, levi.subset, xi):
            continue  # xi lies in Z, not in Zhat \ Z
        member = True
        for (comp, family, rank, spec), piece in zip(factor_data, combo):
            if not _factor_membership(ambient_name, rs, comp, family,
                                      spec, xi):
                member = False
                break
        if member:
            deviates = False
            break
    if not deviates:
        return adjoint
    return groups.central_extension(adjoint, z.order())


def _adjoint_value(ambient_name: str, factor_data) -> groups.GroupId:
    from .catalog import orbit_by_label
    parts = []
    for comp, family, rank, spec in factor_data:
        if isinstance(spec, str):
            if spec == "0":
                parts.append(groups.TRIVIAL)
            else:
                # component ambient name, e.g. E6 Levi inside E7
                comp_name = f"{family}{rank}"
                parts.append(orbit_by_label(comp_name, spec).pi1_adjoint)
        else:
            parts.append(_adjoint_factor_group(family, spec))
    return groups.product(parts)
