"""Subgroup lattices of the catalogue groups and the orbit-cover model.

Covers of an orbit correspond to conjugacy classes of subgroups of the
equivariant fundamental group; the lattice (classes plus inclusion up to
conjugacy) is computed by brute force on the permutation realisation and
the classes are given the paper's names (Sym2 vs tw(Sym2) etc.).

Internally a group is flattened to a multiplication table over element
indices and subgroups are bitmasks, which keeps the Sym5 lattice (156
subgroups, 19 classes) well under a second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .groups import GroupId, Perm, _compose, realisation


@dataclass(frozen=True)
class SubgroupClass:
    group: GroupId
    name: str
    order: int
    index: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SubgroupLattice:
    group: GroupId
    classes: tuple[SubgroupClass, ...]
    # inclusion up to conjugacy: (smaller name, larger name) pairs
    inclusions: frozenset[tuple[str, str]]
    reps: dict = field(compare=False, hash=False, repr=False, default=None)

    def by_name(self, name: str) -> SubgroupClass:
        for cls in self.classes:
            if cls.name == name:
                return cls
        raise KeyError(f"no subgroup class {name!r} of {self.group}")

    def contains(self, small: str, large: str) -> bool:
        return small == large or (small, large) in self.inclusions

    def overgroups(self, name: str) -> list[str]:
        return [c.name for c in self.classes if self.contains(name, c.name)]

    def subgroups_of(self, name: str) -> list[str]:
        return [c.name for c in self.classes if self.contains(c.name, name)]

    def full_name(self) -> str:
        return max(self.classes, key=lambda c: c.order).name

    def covering_edges(self) -> list[tuple[str, str]]:
        """Hasse edges (small, large) of the inclusion order."""
        edges = []
        for a, b in sorted(self.inclusions):
            inter = any(
                self.contains(a, c.name) and self.contains(c.name, b)
                and c.name not in (a, b)
                for c in self.classes)
            if not inter:
                edges.append((a, b))
        return edges


class _Table:
    """Multiplication table of a finite group over element indices."""

    def __init__(self, elems: list[Perm]):
        self.elems = elems
        self.n = len(elems)
        index = {e: i for i, e in enumerate(elems)}
        self.mul = [[index[_compose(a, b)] for b in elems] for a in elems]
        self.inv = [0] * self.n
        ident = index[tuple(range(len(elems[0])))]
        self.ident = ident
        for i in range(self.n):
            self.inv[i] = next(j for j in range(self.n)
                               if self.mul[i][j] == ident)
        # conjugation maps: conj[g][x] = g x g^-1
        self.conj = [[self.mul[self.mul[g][x]][self.inv[g]]
                      for x in range(self.n)] for g in range(self.n)]
        self.order_of = [self._elem_order(i) for i in range(self.n)]

    def _elem_order(self, i: int) -> int:
        n, x = 1, i
        while x != self.ident:
            x = self.mul[x][i]
            n += 1
        return n

    def closure(self, seed: int) -> int:
        """Subgroup bitmask generated by the bits of `seed`."""
        bits = seed | (1 << self.ident)
        members = [i for i in range(self.n) if bits >> i & 1]
        frontier = members[:]
        got = bits
        while frontier:
            nxt = []
            for a in frontier:
                row = self.mul[a]
                for b in members:
                    for c in (row[b], self.mul[b][a]):
                        if not got >> c & 1:
                            got |= 1 << c
                            members.append(c)
                            nxt.append(c)
            frontier = nxt
        return got

    def generator_pool(self) -> list[int]:
        """Minimal generators of the prime-power cyclic subgroups.

        Every finite group is generated by elements of prime-power order, so
        extending along this pool reaches every subgroup.
        """
        pool = []
        seen_cyclic: set[int] = set()
        for g in range(self.n):
            o = self.order_of[g]
            if o == 1:
                continue
            f = _prime_power(o)
            if not f:
                continue
            cyc = self.closure(1 << g)
            if cyc not in seen_cyclic:
                seen_cyclic.add(cyc)
                pool.append(g)
        return pool

    def subgroup_classes(self) -> list[list[int]]:
        """Conjugacy classes of subgroups, each as a sorted list of masks."""
        pool = self.generator_pool()
        trivial = 1 << self.ident
        found: set[int] = {trivial}
        classes: list[list[int]] = [[trivial]]
        frontier = [trivial]
        while frontier:
            nxt = []
            for h in frontier:
                for g in pool:
                    if h >> g & 1:
                        continue
                    k = self.closure(h | (1 << g))
                    if k in found:
                        continue
                    orbit = {self.conjugate_mask(k, c) for c in range(self.n)}
                    found |= orbit
                    rep = min(orbit)
                    classes.append(sorted(orbit))
                    nxt.append(rep)
            frontier = nxt
        return sorted(classes, key=lambda c: (c[0].bit_count(), c[0]))

    def conjugate_mask(self, h: int, g: int) -> int:
        out = 0
        cmap = self.conj[g]
        x = h
        while x:
            low = (x & -x).bit_length() - 1
            out |= 1 << cmap[low]
            x &= x - 1
        return out

    def members(self, h: int) -> list[int]:
        out = []
        x = h
        while x:
            low = (x & -x).bit_length() - 1
            out.append(low)
            x &= x - 1
        return out


def _prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True


@lru_cache(maxsize=None)
def _table(gid: GroupId) -> _Table:
    _, elems, _ = realisation(gid)
    return _Table(sorted(elems))


def _abstract_type(tab: _Table, h: int) -> str:
    """Coarse isomorphism type among the groups of order <= 120 we meet."""
    members = tab.members(h)
    n = len(members)
    orders = sorted(tab.order_of[i] for i in members)
    abelian = all(tab.mul[a][b] == tab.mul[b][a]
                  for a in members for b in members)
    if n == 1:
        return "1"
    if abelian:
        if n in (2, 3, 5):
            return f"C{n}"
        if n == 4:
            return "C4" if 4 in orders else "V4"
        if n == 6:
            return "C6"
        raise ValueError(f"unexpected abelian subgroup of order {n}")
    if n == 6:
        return "S3"
    if n == 8:
        return "D8"
    if n == 10:
        return "D10"
    if n == 12:
        return "A4" if orders.count(2) == 3 else "S2xS3"
    if n == 20:
        return "F20"
    if n == 24:
        return "S4"
    if n == 60:
        return "A5"
    if n == 120:
        return "S5"
    raise ValueError(f"unexpected subgroup of order {n}")


def _support(p: Perm) -> set[int]:
    return {i for i, v in enumerate(p) if v != i}


def _name_class(gid: GroupId, tab: _Table, h: int, info: dict) -> str:
    """Paper-convention name of a subgroup class."""
    sym_pts = set(itertools.chain.from_iterable(info["sym_points"]))
    cyc_pts = set(itertools.chain.from_iterable(info["cyc_points"]))
    spec_pts = set(itertools.chain.from_iterable(info["special_points"]))
    members = tab.members(h)
    perms = [tab.elems[i] for i in members]
    kind = _abstract_type(tab, h)
    support: set[int] = set()
    for p in perms:
        support |= _support(p)

    def has_transposition():
        return any(len(_support(p)) == 2 and _support(p) <= (sym_pts | spec_pts)
                   for p in perms)

    if kind == "1":
        return "1"
    if gid.cyc and not (gid.sym or gid.alt or gid.dih or gid.special):
        return f"Z/{len(members)}"
    if kind == "C2":
        if support <= cyc_pts:
            return "Z/2"
        gen = next(p for p in perms if _support(p))
        if (support & cyc_pts) or len(_support(gen)) > 2:
            return "tw(Sym2)"
        return "Sym2"
    if kind == "C3":
        if support <= cyc_pts:
            return "Z/3"
        return "Alt3"
    if kind == "C4":
        return "Cyc4"
    if kind == "C5":
        return "Cyc5"
    if kind == "C6":
        if gid.cyc and support & cyc_pts:
            order3 = [p for p in perms if _perm_order(p) == 3]
            if all(_support(p) <= sym_pts for p in order3):
                return "Alt3xZ/2"
        return "Cyc6"
    if kind == "V4":
        if support & cyc_pts:
            return "Sym2xZ/2"
        return "Sym2xSym2" if has_transposition() else "tw(Sym2xSym2)"
    if kind == "S3":
        if support & cyc_pts:
            return "tw(Sym3)"
        return "Sym3" if has_transposition() else "tw(Sym3)"
    if kind == "D8":
        return "Dih8"
    if kind == "D10":
        return "Dih10"
    if kind == "A4":
        return "Alt4"
    if kind == "S2xS3":
        return "Sym3xZ/2" if support & cyc_pts else "Sym2xSym3"
    if kind == "S4":
        return "Sym4"
    if kind == "A5":
        return "Alt5"
    if kind == "S5":
        return "Sym5"
    if kind == "F20":
        return "Cyc5:Cyc4"
    raise ValueError(f"cannot name subgroup of type {kind} in {gid}")


def _perm_order(p: Perm) -> int:
    ident = tuple(range(len(p)))
    q, n = p, 1
    while q != ident:
        q = _compose(q, p)
        n += 1
    return n


@lru_cache(maxsize=None)
def subgroup_lattice(gid: GroupId) -> SubgroupLattice:
    """Complete subgroup lattice (conjugacy classes and inclusions)."""
    _, _, info = realisation(gid)
    tab = _table(gid)
    order = tab.n
    classes = tab.subgroup_classes()

    named: list[tuple[str, list[int]]] = []
    full_name = str(gid)
    for cls in classes:
        h = cls[0]
        size = h.bit_count()
        name = full_name if size == order else _name_class(gid, tab, h, info)
        named.append((name, cls))
    names = [n for n, _ in named]
    if len(set(names)) != len(names):
        raise ValueError(f"ambiguous subgroup names for {gid}: {sorted(names)}")

    incl: set[tuple[str, str]] = set()
    for (na, ca), (nb, cb) in itertools.permutations(named, 2):
        if ca[0].bit_count() >= cb[0].bit_count():
            continue
        if any(a & b == a for a in ca for b in cb):
            incl.add((na, nb))

    cls_objs = tuple(sorted(
        (SubgroupClass(gid, n, c[0].bit_count(), order // c[0].bit_count())
         for n, c in named),
        key=lambda s: (-s.order, s.name)))
    reps = {n: c[0] for n, c in named}
    return SubgroupLattice(gid, cls_objs, frozenset(incl), reps)


def class_size_checks(gid: GroupId) -> bool:
    """Brute-force sanity: conjugates partition correctly for every class."""
    tab = _table(gid)
    lat = subgroup_lattice(gid)
    for name, rep in lat.reps.items():
        orbit = {tab.conjugate_mask(rep, g) for g in range(tab.n)}
        stab = sum(1 for g in range(tab.n)
                   if tab.conjugate_mask(rep, g) == rep)
        if len(orbit) * stab != tab.n:
            return False
    return True


@lru_cache(maxsize=None)
def class_surjects(gid: GroupId, large_name: str,
                   small_gid: GroupId, small_name: str) -> bool:
    """Is there a surjection (rep of large class) ->> (rep of small class)?

    Checked by quotienting the large representative by each of its normal
    subgroups of the right index and comparing element-order statistics and
    abelianness, which separates all groups of order <= 12 arising here.
    """
    lat = subgroup_lattice(gid)
    small_lat = subgroup_lattice(small_gid)
    tab = _table(gid)
    small_tab = _table(small_gid)
    h = lat.reps[large_name]
    k = small_lat.reps[small_name]
    ksize = k.bit_count()
    if ksize == 1:
        return True
    hsize = h.bit_count()
    if hsize % ksize != 0:
        return False
    k_orders = sorted(small_tab.order_of[i] for i in small_tab.members(k))
    k_members = small_tab.members(k)
    k_abelian = all(small_tab.mul[a][b] == small_tab.mul[b][a]
                    for a in k_members for b in k_members)

    h_members = tab.members(h)
    for n_mask in _normal_subgroups(tab, h):
        if n_mask.bit_count() * ksize != hsize:
            continue
        q_orders, q_abelian = _quotient_stats(tab, h_members, n_mask)
        if q_orders == k_orders and q_abelian == k_abelian:
            return True
    return False


def _normal_subgroups(tab: _Table, h: int) -> list[int]:
    members = tab.members(h)
    out = []
    for n_mask in _subgroups_within(tab, h):
        if all(tab.conjugate_mask(n_mask, g) == n_mask for g in members):
            out.append(n_mask)
    return out


def _subgroups_within(tab: _Table, h: int) -> list[int]:
    members = tab.members(h)
    found = {1 << tab.ident}
    frontier = [1 << tab.ident]
    while frontier:
        nxt = []
        for sub in frontier:
            for g in members:
                if sub >> g & 1:
                    continue
                k = tab.closure(sub | (1 << g))
                if k & ~h:
                    continue
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted(found)


def _quotient_stats(tab: _Table, h_members: list[int], n_mask: int):
    cosets: list[int] = []
    assigned: dict[int, int] = {}
    for g in h_members:
        if g in assigned:
            continue
        mask = 0
        for x in tab.members(n_mask):
            y = tab.mul[g][x]
            mask |= 1 << y
            assigned[y] = len(cosets)
        cosets.append(mask)
    ident_coset = next(i for i, c in enumerate(cosets)
                       if c >> tab.ident & 1)
    rep = [tab.members(c)[0] for c in cosets]

    def coset_index(x: int) -> int:
        return assigned[x]

    def coset_order(i: int) -> int:
        n, acc = 1, rep[i]
        while coset_index(acc) != ident_coset:
            acc = tab.mul[acc][rep[i]]
            n += 1
        return n

    orders = sorted(coset_order(i) for i in range(len(cosets)))
    abelian = all(
        coset_index(tab.mul[rep[i]][rep[j]])
        == coset_index(tab.mul[rep[j]][rep[i]])
        for i in range(len(cosets)) for j in range(len(cosets)))
    return orders, abelian


@dataclass(frozen=True)
class NilpotentCover:
    """A cover of an orbit: the orbit reference plus a subgroup class."""

    orbit_key: tuple[str, str]      # (ambient, bala_carter label)
    pi1: GroupId
    subgroup: SubgroupClass

    @property
    def degree(self) -> int:
        return self.subgroup.index

    def __str__(self) -> str:
        return f"{self.subgroup.name} <= {self.pi1}"


def covers_of(orbit_key: tuple[str, str], pi1: GroupId) -> list[NilpotentCover]:
    """One cover per subgroup class; the full class is the orbit itself."""
    lat = subgroup_lattice(pi1)
    return [NilpotentCover(orbit_key, pi1, cls) for cls in lat.classes]


def lattice_dot(gid: GroupId) -> str:
    """DOT graph of the subgroup lattice, for documentation regeneration."""
    lat = subgroup_lattice(gid)
    lines = [f'digraph "{gid}" {{', "  rankdir=BT;"]
    for cls in lat.classes:
        lines.append(f'  "{cls.name}" [label="{cls.name}\\n|H|={cls.order}"];')
    for a, b in lat.covering_edges():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines)
