"""Loading and reproducing the deviation tables for E6 and E7 Levi orbits.

A table row is a pair (standard Levi class, orbit per component) whose
simply connected fundamental group differs from the adjoint one.  The
reproduction routine enumerates every proper subset of simple roots and
every orbit of the corresponding Levi and recomputes the deviation set from
scratch; agreement with the stored rows is an acceptance criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import groups
from .catalog import _read_data, exceptional_catalogue
from .fundgrp import center_generator, center_in_connected_center, levi_pi1, \
    _adjoint_value
from .levi import LeviDescriptor, parse_decorated
from .partitions import PartitionOrbit, enumerate_classical, orbit_from_text
from .rootsys import ambient, parse_type, root_subsystem_type


@dataclass(frozen=True)
class TableRow:
    levi: str
    parts: tuple[str, ...]          # orbit text per component, paper order
    comp_types: tuple[str, ...]     # matching component types, e.g. "D5","A1"
    group: groups.GroupId
    chained: bool                   # induced from an earlier row (dagger)

    def key(self):
        return (self.levi,
                tuple(sorted(zip(self.comp_types, self.parts))))


def _component_types(levi_text: str) -> tuple[str, ...]:
    dec = parse_decorated(levi_text)
    return tuple(f"{f}{r}" for f, r in dec.base.components)


@lru_cache(maxsize=None)
def load_deviation_table(ambient_name: str) -> tuple[TableRow, ...]:
    fname = {"E6": "table3_e6.txt", "E7": "table4_e7.txt"}[ambient_name]
    rows = []
    for line in _read_data(fname):
        levi, parts, grp, flag = [t.strip() for t in line.split("|")]
        comp_types = _component_types(levi)
        part_list = tuple(_split_parts(parts))
        if len(part_list) != len(comp_types):
            raise ValueError(f"component mismatch in row {line!r}")
        rows.append(TableRow(levi, part_list, comp_types,
                             groups.parse_group(grp), flag == "c"))
    return tuple(rows)


def _split_parts(text: str) -> list[str]:
    # split on 'x' but not inside parentheses
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [t.strip() for t in out]


def orbit_specs_for(ambient_name: str, levi: LeviDescriptor):
    """All orbit assignments (tuples over components) for a Levi."""
    rs = ambient(ambient_name)
    import itertools
    choices = []
    for comp in levi.components():
        ctype = root_subsystem_type(rs, set(comp))
        family, rank = ctype.components[0]
        if family in "ABCD":
            choices.append(list(enumerate_classical(family, rank)))
        else:
            labels = ["0"] + [o.bala_carter
                              for o in exceptional_catalogue(f"{family}{rank}")]
            choices.append(labels)
    return itertools.product(*choices)


def compute_deviation_set(ambient_name: str):
    """Recompute all deviating (Levi, orbit) pairs over proper subsets.

    Returns a dict key -> GroupId, with keys matching TableRow.key().
    """
    rs = ambient(ambient_name)
    n = rs.rank
    z = center_generator(ambient_name)
    found: dict = {}
    for bits in range(1, (1 << n) - 1):
        subset = frozenset(i for i in range(n) if bits >> i & 1)
        if center_in_connected_center(ambient_name, subset, z):
            continue
        ld = LeviDescriptor(rs.dtype, subset)
        comps = ld.components()
        comp_types = []
        for comp in comps:
            f, r = root_subsystem_type(rs, set(comp)).components[0]
            comp_types.append(f"{f}{r}")
        for assignment in orbit_specs_for(ambient_name, ld):
            sc = levi_pi1(ambient_name, ld, tuple(assignment))
            ad = _adjoint_value_for(ambient_name, ld, tuple(assignment))
            if sc == ad:
                continue
            key = (str(ld.decorated),
                   tuple(sorted(zip(comp_types, map(str, assignment)))))
            prev = found.get(key)
            if prev is not None and prev != sc:
                raise AssertionError(
                    f"conflicting deviation values for {key}: {prev} vs {sc}")
            found[key] = sc
    return found


def _adjoint_value_for(ambient_name: str, ld: LeviDescriptor, assignment):
    rs = ambient(ambient_name)
    factor_data = []
    for comp, spec in zip(ld.components(), assignment):
        f, r = root_subsystem_type(rs, set(comp)).components[0]
        factor_data.append((comp, f, r, spec))
    return _adjoint_value(ambient_name, factor_data)


def table_keys(ambient_name: str):
    return {row.key(): row.group
            for row in load_deviation_table(ambient_name)}


def row_orbits(row: TableRow) -> tuple:
    """Parsed per-component orbits of a table row."""
    out = []
    for ctype, text in zip(row.comp_types, row.parts):
        fam, rank = ctype[0], int(ctype[1:])
        if fam in "ABCD":
            out.append(orbit_from_text(fam, rank, text))
        else:
            out.append(text)
    return tuple(out)


def row_diagram(ambient_name: str, row: TableRow) -> str:
    """Weighted diagram of the Levi orbit, drawn on the ambient diagram.

    Nodes outside the Levi print as dots, mirroring the blank positions in
    the source displays.
    """
    from .classical import embedded_node_order, partition_diagram
    from .induction import datum_from_text, levi_subset
    rs = ambient(ambient_name)
    datum = datum_from_text(ambient_name, row.levi, "x".join(row.parts))
    subset = levi_subset(ambient_name, row.levi)
    ld = LeviDescriptor(rs.dtype, subset)
    labels: dict[int, int] = {}
    for comp, spec in zip(ld.components(), datum.orbit_parts):
        fam, rank = root_subsystem_type(rs, set(comp)).components[0]
        internal = partition_diagram(spec)
        order = embedded_node_order(ambient_name, rs, comp, fam)
        for pos, node in enumerate(order):
            labels[node] = internal[pos]
    toks = [str(labels[i]) if i in labels else "." for i in range(rs.rank)]
    if ambient_name.startswith("E"):
        bottom = [toks[0]] + toks[2:]
        return " ".join(bottom) + " / " + toks[1]
    return " ".join(toks)
