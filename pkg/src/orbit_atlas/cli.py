"""Command line interface.

Subcommands:

  orbits AMBIENT [--rigid] [--induced]   orbit catalogue listing
  fundgrp AMBIENT LEVI ORBIT             one equivariant fundamental group
  fundgrp AMBIENT --table                deviation table replica (E6/E7)
  deduce --ambient A [--orbit O] [--trace]   assignments with proof traces
  verify [tables34|tables59|dims|counts|all]
  lattice GROUP [--dot]                  subgroup lattice of a catalogue group
  report --ambient A --out DIR           TSV tables plus figures

Exit codes: 0 success, 1 verification diff, 2 usage error, 3 data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import groups
from .catalog import AMBIENTS, CatalogueError, exceptional_catalogue, \
    orbit_by_label, set_data_dir
from .covers import lattice_dot, subgroup_lattice
from .fundgrp import levi_pi1
from .induction import datum_from_text, dimension_check, levi_subset, \
    rigid_registry
from .levi import LeviDescriptor
from .partitions import is_birationally_rigid, is_rigid, PartitionOrbit
from .rootsys import ambient as ambient_rs
from .rootsys import diagram_text


def _emit(rows, header, fmt):
    if fmt == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=1))
    else:
        print("\t".join(header))
        for r in rows:
            print("\t".join(str(x) for x in r))


def cmd_orbits(args) -> int:
    if args.ambient not in AMBIENTS:
        print(f"unknown ambient {args.ambient!r} "
              f"(choose from {', '.join(AMBIENTS)})", file=sys.stderr)
        return 2
    rows = []
    for orb in exceptional_catalogue(args.ambient):
        if args.rigid and not orb.rigid:
            continue
        if args.induced and orb.rigid:
            continue
        birigid = orb.rigid or orb.bala_carter in {
            "E7": {"A2+A1", "A4+A1"}, "E8": {"A4+A1", "A4+2A1"},
        }.get(args.ambient, set())
        rows.append((orb.bala_carter, diagram_text(orb.diagram), orb.dim,
                     str(orb.pi1_simply_connected), str(orb.pi1_adjoint),
                     "Y" if orb.rigid else "N", "Y" if birigid else "N"))
    _emit(rows, ("orbit", "diagram", "dim", "pi1_sc", "pi1_ad", "rigid",
                 "birigid"), args.format)
    return 0


def cmd_fundgrp(args) -> int:
    if args.ambient not in AMBIENTS:
        print(f"unknown ambient {args.ambient!r}", file=sys.stderr)
        return 2
    if args.table:
        from .tables import load_deviation_table, row_orbits, row_diagram
        rows = []
        for row in load_deviation_table(args.ambient):
            rows.append((row.levi, "x".join(row.parts),
                         row_diagram(args.ambient, row), str(row.group)))
        _emit(rows, ("levi", "partition", "diagram", "group"), args.format)
        return 0
    if not args.levi or not args.orbit:
        print("fundgrp needs LEVI and ORBIT (or --table)", file=sys.stderr)
        return 2
    rs = ambient_rs(args.ambient)
    datum = datum_from_text(args.ambient, args.levi, args.orbit)
    ld = LeviDescriptor(rs.dtype, levi_subset(args.ambient, args.levi))
    if not ld.subset:
        print("1")
        return 0
    print(levi_pi1(args.ambient, ld, datum.orbit_parts))
    return 0


def cmd_deduce(args) -> int:
    from .deduce import compare_golden, solve_all, solve_orbit, state_rows
    if args.verify:
        bad = 0
        for amb in AMBIENTS:
            diffs = compare_golden(amb)
            for d in diffs:
                print(f"{amb}: {d}")
            bad += len(diffs)
        print(f"golden comparison: {bad} differences")
        return 1 if bad else 0
    if args.ambient not in AMBIENTS:
        print(f"unknown ambient {args.ambient!r}", file=sys.stderr)
        return 2
    if args.orbit:
        states = {args.orbit: solve_orbit(args.ambient, args.orbit)}
    else:
        states = solve_all(args.ambient)
    for label in sorted(states):
        state = states[label]
        for row in state_rows(state):
            print("\t".join(row))
        if args.trace:
            for rule, anchor, delta in state.trace:
                print(f"#   [{rule}] {delta}   ({anchor})")
        for diag in state.diagnostics:
            print(f"# unresolved: {diag}")
    return 0


def cmd_verify(args) -> int:
    scope = args.scope
    failures = 0
    try:
        if scope in ("counts", "all"):
            failures += _verify_counts()
        if scope in ("tables34", "all"):
            failures += _verify_tables34()
        if scope in ("dims", "all"):
            failures += _verify_dims()
        if scope in ("tables59", "all"):
            failures += _verify_tables59()
    except CatalogueError as exc:
        print(f"data integrity failure: {exc}", file=sys.stderr)
        return 3
    print(f"verify {scope}: {failures} failures")
    return 1 if failures else 0


def _verify_counts() -> int:
    bad = 0
    want = {"G2": (4, 2), "F4": (15, 5), "E6": (20, 3), "E7": (44, 7),
            "E8": (69, 17)}
    for amb, (total, rig) in want.items():
        cat = exceptional_catalogue(amb)
        got = (len(cat), sum(1 for o in cat if o.rigid))
        status = "ok" if got == (total, rig) else "FAIL"
        if status == "FAIL":
            bad += 1
        print(f"counts {amb}: nonzero={got[0]} rigid={got[1]} {status}")
    return bad


def _verify_tables34() -> int:
    from .tables import compute_deviation_set, table_keys
    bad = 0
    for amb in ("E6", "E7"):
        got = compute_deviation_set(amb)
        want = table_keys(amb)
        ok = set(got) == set(want) and all(got[k] == want[k] for k in want)
        if not ok:
            bad += 1
            for k in sorted(set(got) ^ set(want)):
                print(f"tables34 {amb}: row mismatch {k}")
        print(f"tables34 {amb}: {len(got)} deviating pairs "
              f"{'ok' if ok else 'FAIL'}")
    return bad


def _verify_dims() -> int:
    from .deduce import _intermediates, _towers
    bad = 0
    checked = 0
    for entry in rigid_registry():
        checked += 1
        if not dimension_check(entry.datum, entry.orbit_label):
            bad += 1
            print(f"dims: registry entry fails: {entry}")
    for amb, orb, levi, spec, cls, kind, anchor in _intermediates():
        checked += 1
        if not dimension_check(datum_from_text(amb, levi, spec), orb):
            bad += 1
            print(f"dims: intermediate fails: {amb} {orb} {levi} {spec}")
    for amb, orb, levi, spec, mapping, anchor in _towers():
        checked += 1
        if not dimension_check(datum_from_text(amb, levi, spec), orb):
            bad += 1
            print(f"dims: tower fails: {amb} {orb} {levi} {spec}")
    print(f"dims: {checked} data checked, {bad} failures")
    return bad


def _verify_tables59() -> int:
    from .deduce import compare_golden
    bad = 0
    for amb in AMBIENTS:
        diffs = compare_golden(amb)
        for d in diffs:
            print(f"tables59 {amb}: {d}")
        bad += len(diffs)
        print(f"tables59 {amb}: {'ok' if not diffs else 'FAIL'}")
    return bad


def cmd_lattice(args) -> int:
    gid = groups.parse_group(args.group)
    if args.dot:
        print(lattice_dot(gid))
        return 0
    lat = subgroup_lattice(gid)
    rows = [(c.name, c.order, c.index) for c in lat.classes]
    _emit(rows, ("class", "order", "index"), args.format)
    return 0


def cmd_report(args) -> int:
    from .report import write_report
    ambients = [args.ambient] if args.ambient else list(AMBIENTS)
    for amb in ambients:
        if amb not in AMBIENTS:
            print(f"unknown ambient {amb!r}", file=sys.stderr)
            return 2
        for path in write_report(amb, args.out):
            print(path)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="orbit-atlas",
        description="nilpotent orbit covers and birationally rigid "
                    "induction data for exceptional groups")
    parser.add_argument("--data-dir", default=None,
                        help="override the catalogue data directory "
                             "(also: ORBIT_ATLAS_DATA)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="orbit catalogue of an ambient type")
    p.add_argument("ambient")
    p.add_argument("--rigid", action="store_true")
    p.add_argument("--induced", action="store_true")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("fundgrp", help="equivariant fundamental groups")
    p.add_argument("ambient")
    p.add_argument("levi", nargs="?")
    p.add_argument("orbit", nargs="?")
    p.add_argument("--table", action="store_true",
                   help="emit the deviation table replica")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_fundgrp)

    p = sub.add_parser("deduce", help="birationally rigid induction data")
    p.add_argument("--ambient", default=None)
    p.add_argument("--orbit", default=None)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="compare all ambients against the golden tables")
    p.set_defaults(func=cmd_deduce)

    p = sub.add_parser("verify", help="run a verification scope")
    p.add_argument("scope", nargs="?", default="all",
                   choices=("tables34", "tables59", "dims", "counts", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="subgroup lattice of a finite group")
    p.add_argument("group")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("report", help="write TSV tables and figures")
    p.add_argument("--ambient", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)

    args = parser.parse_args(argv)
    data_dir = args.data_dir or os.environ.get("ORBIT_ATLAS_DATA")
    if data_dir:
        set_data_dir(data_dir)
    try:
        return args.func(args)
    except CatalogueError as exc:
        print(f"data integrity failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
