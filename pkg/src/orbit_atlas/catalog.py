"""Catalogues of nilpotent orbits in the exceptional Lie algebras.

Orbit records carry the Bala-Carter label and the equivariant fundamental
groups for the adjoint and simply connected forms.  Weighted Dynkin
diagrams are not transcribed: each one is recomputed from the Bala-Carter
label, by summing the h-cocharacters of the distinguished orbits in the
label's Levi components and taking the dominant Weyl representative.
Distinguished diagrams of full exceptional type (the E/F/G "(a_i)" series)
are the only seeded inputs.

Data files live under orbit_atlas/data and carry a sha256 line that is
verified on load.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import groups
from .classical import partition_diagram
from .levi import LeviDescriptor, decorate, parse_decorated
from .partitions import PartitionOrbit
from .rootsys import (
    DynkinType,
    WeightedDiagram,
    ambient,
    parse_type,
)

AMBIENTS = ("G2", "F4", "E6", "E7", "E8")


class CatalogueError(ValueError):
    pass


_DATA_DIR_OVERRIDE: list[str | None] = [None]


def set_data_dir(path: str | None) -> None:
    """Point catalogue loading at an external data directory."""
    _DATA_DIR_OVERRIDE[0] = path


def _read_data(name: str) -> list[str]:
    override = _DATA_DIR_OVERRIDE[0]
    if override is not None:
        import pathlib
        text = (pathlib.Path(override) / name).read_text()
    else:
        text = resources.files("orbit_atlas.data").joinpath(name).read_text()
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# sha256:"):
        raise CatalogueError(f"{name}: missing checksum header")
    want = lines[0].split(":", 1)[1].strip()
    body = "\n".join(lines[1:]) + "\n"
    got = hashlib.sha256(body.encode()).hexdigest()
    if got != want:
        raise CatalogueError(f"{name}: checksum mismatch ({got} != {want})")
    out = []
    for ln in lines[1:]:
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            out.append(ln)
    return out


# ---------------------------------------------------------------------------
# distinguished diagrams for indecomposable exceptional components
# (labels within their own type; G2/F4 sections and the E(a_i) series)

DISTINGUISHED = {
    "G2": (2, 2), "G2(a1)": (0, 2),
    "F4": (2, 2, 2, 2), "F4(a1)": (2, 2, 0, 2), "F4(a2)": (0, 2, 0, 2),
    "F4(a3)": (0, 2, 0, 0),
    "E6": (2, 2, 2, 2, 2, 2), "E6(a1)": (2, 2, 2, 0, 2, 2),
    "E6(a3)": (2, 0, 0, 2, 0, 2),
    "E7": (2,) * 7, "E7(a1)": (2, 2, 2, 0, 2, 2, 2),
    "E7(a2)": (2, 2, 2, 0, 2, 0, 2), "E7(a3)": (2, 0, 0, 2, 0, 2, 2),
    "E7(a4)": (2, 0, 0, 2, 0, 0, 2), "E7(a5)": (0, 0, 0, 2, 0, 0, 2),
    "E8": (2,) * 8, "E8(a1)": (2, 2, 2, 0, 2, 2, 2, 2),
    "E8(a2)": (2, 2, 2, 0, 2, 0, 2, 2), "E8(a3)": (2, 0, 0, 2, 0, 2, 2, 2),
    "E8(a4)": (2, 0, 0, 2, 0, 2, 0, 2), "E8(b4)": (2, 0, 0, 2, 0, 0, 2, 2),
    "E8(a5)": (0, 0, 0, 2, 0, 2, 0, 2), "E8(b5)": (0, 0, 0, 2, 0, 0, 2, 2),
    "E8(a6)": (0, 0, 0, 2, 0, 0, 2, 0), "E8(b6)": (0, 0, 0, 2, 0, 0, 0, 2),
    "E8(a7)": (0, 0, 0, 0, 2, 0, 0, 0),
}

_COMP_RE = re.compile(r"^(\d*)(~?)([A-G])(\d+)(\(([ab])(\d)\))?$")


@dataclass(frozen=True)
class LabelComponent:
    family: str
    rank: int
    short: bool          # tilde component in F4/G2
    series: str | None   # "a" or "b"
    index: int | None    # the i of (a_i)

    def type_key(self):
        return (self.family, self.rank, self.short)


def parse_bala_carter(label: str) -> tuple[list[LabelComponent], str | None]:
    """Split a Bala-Carter label into components plus an E7 prime mark."""
    label = label.strip()
    mark = None
    if label.startswith("("):
        close = label.index(")")
        inner, mark = label[1:close], label[close + 1:]
        if mark not in ("'", "''"):
            raise CatalogueError(f"bad mark in label {label!r}")
        label = inner
    comps: list[LabelComponent] = []
    for chunk in label.split("+"):
        m = _COMP_RE.match(chunk.strip())
        if not m:
            raise CatalogueError(f"cannot parse component {chunk!r}")
        mult, tilde, fam, rank, _, series, idx = m.groups()
        n = int(mult) if mult else 1
        comp = LabelComponent(fam, int(rank), tilde == "~", series,
                              int(idx) if idx else None)
        comps.extend([comp] * n)
    return comps, mark


def _distinguished_internal(comp: LabelComponent) -> tuple[int, ...]:
    """Diagram of the distinguished orbit inside the component's own type."""
    if comp.series is None:
        if comp.family in ("A",):
            return (2,) * comp.rank
        if comp.family in ("B", "C", "D", "E", "F", "G"):
            name = f"{comp.family}{comp.rank}"
            if comp.family in ("E", "F", "G"):
                return DISTINGUISHED[name]
            return (2,) * comp.rank  # regular classical orbit
        raise CatalogueError(f"unknown family {comp.family}")
    if comp.family == "D":
        # D_k(a_i) is the distinguished so_{2k} orbit (2k-2i-1, 2i+1)
        parts = tuple(sorted((2 * comp.rank - 2 * comp.index - 1,
                              2 * comp.index + 1), reverse=True))
        return partition_diagram(PartitionOrbit("D", comp.rank, parts))
    if comp.family == "C":
        # C_k(a_i): distinguished sp_{2k} orbit (2k-2i, 2i)
        parts = tuple(sorted((2 * comp.rank - 2 * comp.index,
                              2 * comp.index), reverse=True))
        return partition_diagram(PartitionOrbit("C", comp.rank, parts))
    if comp.family == "B":
        parts = tuple(sorted((2 * comp.rank - 2 * comp.index + 1,
                              2 * comp.index), reverse=True))
        return partition_diagram(PartitionOrbit("B", comp.rank, parts))
    name = f"{comp.family}{comp.rank}({comp.series}{comp.index})"
    if name not in DISTINGUISHED:
        raise CatalogueError(f"no distinguished diagram for {name}")
    return DISTINGUISHED[name]


def _find_label_subset(ambient_name: str, comps: list[LabelComponent],
                       mark: str | None) -> list[tuple[int, ...]]:
    """A subset of simple roots matching the label's Levi type.

    Returns the connected components (sorted tuples) in an order matching
    `comps`.  Any representative subset works: the dominant Weyl
    representative of the summed cocharacter is independent of the choice,
    except for the E7 prime classes where the mark picks the class.
    """
    rs = ambient(ambient_name)
    want_base = DynkinType.of(*[(c.family, c.rank) for c in comps])
    n = rs.rank
    for bits in range(1 << n):
        subset = frozenset(i for i in range(n) if bits >> i & 1)
        if len(subset) != want_base.rank:
            continue
        dec = decorate(rs.dtype, subset)
        if dec.base != want_base:
            continue
        if mark is not None and dec.mark != mark:
            continue
        if ambient_name in ("F4", "G2"):
            want_tilde = tuple(sorted(
                (c.family, c.rank) for c in comps if c.short))
            if tuple(sorted(dec.tilde)) != want_tilde:
                continue
        # match components to label parts by (type, shortness)
        desc = LeviDescriptor(rs.dtype, subset)
        pieces = desc.components()
        used = [False] * len(pieces)
        chosen: list[tuple[int, ...]] = []
        ok = True
        from .rootsys import root_subsystem_type
        for comp in comps:
            found = None
            for k, piece in enumerate(pieces):
                if used[k]:
                    continue
                ptype = root_subsystem_type(rs, set(piece))
                if ptype.components != ((comp.family, comp.rank),):
                    continue
                is_short = all(rs.simple_d[i] == 1 for i in piece) and \
                    any(rs.simple_d[i] > 1 for i in range(n))
                if ambient_name in ("F4", "G2") and is_short != comp.short:
                    continue
                found = k
                break
            if found is None:
                ok = False
                break
            used[found] = True
            chosen.append(pieces[found])
        if ok:
            return chosen
    raise CatalogueError(
        f"no subset of {ambient_name} realises label components {comps}")


def _dominantize(rs, labels: list[Fraction]) -> tuple[int, ...]:
    """Dominant Weyl representative of a cocharacter given by its pairings."""
    t = list(labels)
    n = rs.rank
    cart = rs.cartan
    while True:
        j = next((k for k in range(n) if t[k] < 0), None)
        if j is None:
            break
        tj = t[j]
        for i in range(n):
            t[i] -= cart[i][j] * tj
    out = []
    for x in t:
        if x.denominator != 1:
            raise CatalogueError("non-integral weighted diagram")
        out.append(int(x))
    return tuple(out)


@lru_cache(maxsize=None)
def diagram_from_label(ambient_name: str, label: str) -> WeightedDiagram:
    """Weighted Dynkin diagram of the orbit with the given Bala-Carter label."""
    rs = ambient(ambient_name)
    if label == "0":
        return WeightedDiagram(rs.dtype, (0,) * rs.rank)
    comps, mark = parse_bala_carter(label)
    if len(comps) == 1 and comps[0].family == ambient_name[0] \
            and comps[0].rank == rs.rank and not comps[0].short:
        c = comps[0]
        name = ambient_name if c.series is None \
            else f"{ambient_name}({c.series}{c.index})"
        return WeightedDiagram(rs.dtype, DISTINGUISHED[name])
    pieces = _find_label_subset(ambient_name, comps, mark)
    from .classical import embedded_node_order
    n = rs.rank
    # target pairings <alpha_j, h> for j in the subset
    target: dict[int, int] = {}
    for comp, piece in zip(comps, pieces):
        internal = _distinguished_internal(comp)
        order = embedded_node_order(ambient_name, rs, piece, comp.family)
        for pos, node in enumerate(order):
            target[node] = internal[pos]
    support = sorted(target)
    # h = sum c_k alpha_k^vee over the support; solve <alpha_j, h> = target_j
    m = len(support)
    mat = [[Fraction(rs.cartan[j][k]) for k in support] for j in support]
    vec = [Fraction(target[j]) for j in support]
    # gaussian elimination
    for col in range(m):
        piv = next(r for r in range(col, m) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        vec[col], vec[piv] = vec[piv], vec[col]
        inv = Fraction(1) / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        vec[col] *= inv
        for r in range(m):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                vec[r] -= f * vec[col]
    coeffs = dict(zip(support, vec))
    labels = [sum((coeffs[k] * rs.cartan[j][k] for k in support),
                  start=Fraction(0)) for j in range(n)]
    return WeightedDiagram(rs.dtype, _dominantize(rs, labels))


@dataclass(frozen=True)
class ExceptionalOrbit:
    """A nonzero nilpotent orbit of an exceptional simple group."""

    ambient_name: str
    bala_carter: str
    pi1_adjoint: "groups.GroupId"
    pi1_simply_connected: "groups.GroupId"
    rigid: bool

    @property
    def diagram(self) -> WeightedDiagram:
        return diagram_from_label(self.ambient_name, self.bala_carter)

    @property
    def dim(self) -> int:
        rs = ambient(self.ambient_name)
        from .rootsys import orbit_dimension_from_diagram
        return orbit_dimension_from_diagram(rs, self.diagram)

    @property
    def is_even(self) -> bool:
        return self.diagram.is_even

    def __str__(self) -> str:
        return f"{self.bala_carter} ({self.ambient_name})"


@lru_cache(maxsize=None)
def exceptional_catalogue(ambient_name: str) -> tuple[ExceptionalOrbit, ...]:
    """All nonzero nilpotent orbits of the given exceptional type."""
    if ambient_name not in AMBIENTS:
        raise CatalogueError(f"unknown ambient {ambient_name!r}")
    rows = _read_data(f"orbits_{ambient_name.lower()}.txt")
    out = []
    for row in rows:
        label, pi_ad, pi_sc, flag = [tok.strip() for tok in row.split("|")]
        out.append(ExceptionalOrbit(
            ambient_name, label,
            groups.parse_group(pi_ad), groups.parse_group(pi_sc),
            {"R": True, "I": False}[flag]))
    return tuple(out)


@lru_cache(maxsize=None)
def orbit_by_label(ambient_name: str, label: str) -> ExceptionalOrbit:
    for orb in exceptional_catalogue(ambient_name):
        if orb.bala_carter == label:
            return orb
    raise CatalogueError(f"no orbit {label!r} in {ambient_name}")


def checksum_line(body: str) -> str:
    return "# sha256: " + hashlib.sha256(body.encode()).hexdigest()
