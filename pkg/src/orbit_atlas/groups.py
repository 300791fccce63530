"""The closed catalogue of finite groups attached to orbits and covers.

Groups are realised as permutation groups on at most 8 points (Sym5 on
{0..4}, extra cyclic factors on further points), small enough that subgroup
lattices and conjugacy are brute-forced exactly.  Subgroup conjugacy-class
names follow the paper's conventions: tw(...) marks diagonal embeddings,
Z/n marks factors that disappear in the adjoint isogeny type, Sym/Alt/Dih/
Cyc name the rest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


Perm = tuple[int, ...]


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[b[i]] for i in range(len(a)))


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _closure(gens: list[Perm], n: int) -> frozenset[Perm]:
    if not gens:
        return frozenset([_identity(n)])
    elems = {_identity(n)}
    frontier = list(gens)
    while frontier:
        nxt = []
        for g in frontier:
            for h in list(elems):
                for prod in (_compose(g, h), _compose(h, g)):
                    if prod not in elems:
                        elems.add(prod)
                        nxt.append(prod)
        frontier = nxt
    return frozenset(elems)


def _cycle(points: list[int], n: int) -> Perm:
    img = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return tuple(img)


def _prod_cycles(cycles: list[list[int]], n: int) -> Perm:
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


# ---------------------------------------------------------------------------
# group ids


@dataclass(frozen=True, order=True)
class GroupId:
    """Normal form of a group in the closed catalogue.

    `sym` counts Sym_k factors (adjoint-surviving), `cyc` lists cyclic
    factors Z/n that exist only in the simply connected form, `ce` tags an
    unresolved central extension (order only).
    """

    sym: tuple[int, ...] = ()
    cyc: tuple[int, ...] = ()
    alt: tuple[int, ...] = ()
    dih: tuple[int, ...] = ()
    special: str | None = None       # "Cyc5:Cyc4" style irreducibles
    ce_of: "GroupId | None" = None   # central extension of ce_of by Z/ce_by
    ce_by: int = 0

    @property
    def order(self) -> int:
        import math
        if self.ce_of is not None:
            return self.ce_of.order * self.ce_by
        n = 1
        for k in self.sym:
            n *= math.factorial(k)
        for k in self.alt:
            n *= math.factorial(k) // 2
        for k in self.cyc:
            n *= k
        for k in self.dih:
            n *= k
        if self.special == "Cyc5:Cyc4":
            n *= 20
        return n

    def __str__(self) -> str:
        if self.ce_of is not None:
            return f"ce({self.ce_of},Z/{self.ce_by})"
        toks = ([f"Sym{k}" for k in self.sym]
                + [f"Alt{k}" for k in self.alt]
                + [f"Dih{k}" for k in self.dih]
                + ([self.special] if self.special else [])
                + [f"Z/{k}" for k in self.cyc])
        return "x".join(toks) if toks else "1"


TRIVIAL = GroupId()


def parse_group(text: str) -> GroupId:
    text = text.strip()
    if text in ("1", ""):
        return TRIVIAL
    sym, cyc, alt, dih = [], [], [], []
    special = None
    for tok in text.split("x"):
        tok = tok.strip()
        if tok.startswith("Sym"):
            sym.append(int(tok[3:]))
        elif tok.startswith("Alt"):
            alt.append(int(tok[3:]))
        elif tok.startswith("Dih"):
            dih.append(int(tok[3:]))
        elif tok.startswith("Z/"):
            cyc.append(int(tok[2:]))
        elif tok == "Cyc5:Cyc4":
            special = tok
        else:
            raise ValueError(f"unknown group token {tok!r}")
    return GroupId(sym=tuple(sorted(sym, reverse=True)),
                   cyc=tuple(sorted(cyc, reverse=True)),
                   alt=tuple(sorted(alt, reverse=True)),
                   dih=tuple(sorted(dih, reverse=True)),
                   special=special)


def central_extension(base: GroupId, by: int) -> GroupId:
    """Name the central extension of `base` by Z/by, where the paper does."""
    if base == TRIVIAL:
        return GroupId(cyc=(by,))
    if base == GroupId(sym=(2,)) and by == 2:
        return GroupId(sym=(2,), cyc=(2,))
    return GroupId(ce_of=base, ce_by=by)


def adjoint_part(g: GroupId) -> GroupId:
    """Drop the Z/n factors: the adjoint-form value of a product id."""
    return GroupId(sym=g.sym, alt=g.alt, dih=g.dih, special=g.special)


def product(ids: list[GroupId]) -> GroupId:
    sym, cyc, alt, dih = [], [], [], []
    special = None
    for g in ids:
        if g.ce_of is not None:
            raise ValueError("cannot multiply an unresolved extension")
        sym += list(g.sym)
        cyc += list(g.cyc)
        alt += list(g.alt)
        dih += list(g.dih)
        if g.special:
            if special:
                raise ValueError("two special factors")
            special = g.special
    cyc = [k for k in cyc if k > 1]
    sym = [k for k in sym if k > 1]
    return GroupId(sym=tuple(sorted(sym, reverse=True)),
                   cyc=tuple(sorted(cyc, reverse=True)),
                   alt=tuple(sorted(alt, reverse=True)),
                   dih=tuple(sorted(dih, reverse=True)),
                   special=special)


# ---------------------------------------------------------------------------
# permutation realisations

def _sym_gens(points: list[int], n: int) -> list[Perm]:
    if len(points) < 2:
        return []
    out = [_prod_cycles([[points[0], points[1]]], n)]
    if len(points) > 2:
        out.append(_cycle(points, n))
    return out


@lru_cache(maxsize=None)
def realisation(gid: GroupId) -> tuple[int, frozenset[Perm], dict]:
    """(degree, elements, structure) for a catalogue group.

    structure records which points carry which factor, used for canonical
    subgroup naming.
    """
    if gid.ce_of is not None:
        raise ValueError(f"no permutation realisation for extension tag {gid}")
    degree = 0
    gens: list[Perm] = []
    info: dict = {"sym_points": [], "cyc_points": [], "alt_points": [],
                  "dih_points": [], "special_points": []}
    blocks: list[tuple[str, int]] = (
        [("sym", k) for k in gid.sym] + [("alt", k) for k in gid.alt]
        + [("dih", k) for k in gid.dih]
        + ([("special", 5)] if gid.special else [])
        + [("cyc", k) for k in gid.cyc])
    for kind, k in blocks:
        if kind == "cyc":
            pts = list(range(degree, degree + k))
        elif kind == "dih":
            pts = list(range(degree, degree + k // 2))
        else:
            pts = list(range(degree, degree + k))
        degree += len(pts)
        info[f"{kind}_points"].append(pts)
    full = degree

    def pad(perm_map: dict[int, int]) -> Perm:
        return tuple(perm_map.get(i, i) for i in range(full))

    for kind, k in blocks:
        pts = info[f"{kind}_points"].pop(0)
        info[f"{kind}_points"].append(pts)
        if kind == "sym":
            gens += [pad({pts[0]: pts[1], pts[1]: pts[0]})]
            if k > 2:
                gens += [pad(dict(zip(pts, pts[1:] + pts[:1])))]
        elif kind == "alt":
            if k >= 3:
                gens += [pad({pts[0]: pts[1], pts[1]: pts[2], pts[2]: pts[0]})]
            if k >= 4:
                gens += [pad(dict(zip(pts, pts[1:] + pts[:1])))] if k % 2 else []
                # 3-cycles generate Alt_k
                for i in range(3, k):
                    gens += [pad({pts[0]: pts[1], pts[1]: pts[i],
                                  pts[i]: pts[0]})]
        elif kind == "dih":
            m = k // 2
            gens += [pad(dict(zip(pts, pts[1:] + pts[:1])))]
            gens += [pad({pts[i]: pts[(m - i) % m] for i in range(m)})]
        elif kind == "special":
            # Cyc5 : Cyc4 = <(0..4), (1,2,4,3)> on five points
            gens += [pad(dict(zip(pts, pts[1:] + pts[:1])))]
            gens += [pad({pts[1]: pts[2], pts[2]: pts[4],
                          pts[4]: pts[3], pts[3]: pts[1]})]
        elif kind == "cyc":
            gens += [pad(dict(zip(pts, pts[1:] + pts[:1])))]
    elems = _closure(gens, full)
    assert len(elems) == gid.order, (gid, len(elems), gid.order)
    return full, elems, info
