"""Report rendering: delimited tables plus matplotlib figures on disk.

The report path writes, per ambient type, the orbit catalogue and the
birationally rigid assignment as TSV, and renders subgroup-lattice Hasse
diagrams and an orbit-dimension chart as PNG files next to them.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from . import groups  # noqa: E402
from .catalog import exceptional_catalogue  # noqa: E402
from .covers import subgroup_lattice, lattice_dot  # noqa: E402
from .deduce import golden_rows, solve_all, state_rows  # noqa: E402


def orbit_table_rows(ambient_name: str):
    rows = [("orbit", "diagram", "dim", "pi1_sc", "pi1_ad", "rigid")]
    for orb in exceptional_catalogue(ambient_name):
        rows.append((orb.bala_carter, str(orb.diagram), str(orb.dim),
                     str(orb.pi1_simply_connected), str(orb.pi1_adjoint),
                     "rigid" if orb.rigid else "induced"))
    return rows


def assignment_table_rows(ambient_name: str):
    rows = [("orbit", "cover", "birationally_rigid", "levi", "levi_orbit",
             "levi_cover")]
    for label, state in sorted(solve_all(ambient_name).items()):
        for orbit, cover, yn, levi, spec, cls, grp in state_rows(state):
            rows.append((orbit, cover, yn, levi, spec,
                         cls if cls == "-" else f"{cls}<={grp}"))
    return rows


def write_tsv(path: str, rows) -> None:
    with open(path, "w") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")


def _lattice_layout(lat):
    """Layered positions: one row per subgroup order."""
    orders = sorted({c.order for c in lat.classes})
    level = {o: i for i, o in enumerate(orders)}
    pos = {}
    by_level: dict[int, list[str]] = {}
    for cls in sorted(lat.classes, key=lambda c: c.name):
        by_level.setdefault(level[cls.order], []).append(cls.name)
    for lev, names in by_level.items():
        for i, name in enumerate(names):
            pos[name] = (i - (len(names) - 1) / 2.0, lev)
    return pos


def draw_lattice(gid: groups.GroupId, path: str) -> None:
    lat = subgroup_lattice(gid)
    pos = _lattice_layout(lat)
    fig, ax = plt.subplots(figsize=(8, 6))
    for a, b in lat.covering_edges():
        xa, ya = pos[a]
        xb, yb = pos[b]
        ax.plot([xa, xb], [ya, yb], "-", color="0.6", lw=1, zorder=1)
    for name, (x, y) in pos.items():
        ax.scatter([x], [y], s=600, color="white", edgecolors="black",
                   zorder=2)
        ax.annotate(name, (x, y), ha="center", va="center", fontsize=7,
                    zorder=3)
    ax.set_title(f"Conjugacy classes of subgroups of {gid}")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def draw_dimensions(ambient_name: str, path: str) -> None:
    cat = exceptional_catalogue(ambient_name)
    labels = [o.bala_carter for o in cat]
    dims = [o.dim for o in cat]
    colors = ["0.4" if o.rigid else "tab:blue" for o in cat]
    fig, ax = plt.subplots(figsize=(max(6, 0.28 * len(cat)), 4))
    ax.bar(range(len(cat)), dims, color=colors)
    ax.set_xticks(range(len(cat)))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_ylabel("orbit dimension")
    ax.set_title(f"Nilpotent orbits of {ambient_name} "
                 "(grey = rigid, blue = induced)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(ambient_name: str, out_dir: str) -> list[str]:
    """Write TSVs and figures for one ambient; returns the paths written."""
    os.makedirs(out_dir, exist_ok=True)
    low = ambient_name.lower()
    written = []

    p = os.path.join(out_dir, f"orbits_{low}.tsv")
    write_tsv(p, orbit_table_rows(ambient_name))
    written.append(p)

    p = os.path.join(out_dir, f"assignments_{low}.tsv")
    write_tsv(p, assignment_table_rows(ambient_name))
    written.append(p)

    p = os.path.join(out_dir, f"dimensions_{low}.png")
    draw_dimensions(ambient_name, p)
    written.append(p)

    seen = set()
    for orb in exceptional_catalogue(ambient_name):
        gid = orb.pi1_simply_connected
        if gid.order > 2 and gid not in seen and gid.ce_of is None:
            seen.add(gid)
            name = str(gid).replace("/", "_").replace(":", "_")
            p = os.path.join(out_dir, f"lattice_{name}.png")
            draw_lattice(gid, p)
            written.append(p)
            p = os.path.join(out_dir, f"lattice_{name}.dot")
            with open(p, "w") as fh:
                fh.write(lattice_dot(gid) + "\n")
            written.append(p)
    return written
