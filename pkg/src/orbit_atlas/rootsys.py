"""Root systems of types A-G in the Bourbaki numbering.

Roots are stored as integer coefficient vectors over the simple roots, so
all arithmetic is exact.  The symmetrised Cartan matrix plays the role of
the invariant bilinear form; short roots have squared length 2 and long
roots 2r where r is the lacing number.

Bourbaki conventions used throughout:

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n          (n short)
    C_n   1 - 2 - ... - (n-1) <= n          (n long)
    D_n   1 - ... - (n-2) < (n-1 , n)       (fork)
    E_n   1 - 3 - 4 - 5 - 6 (- 7 (- 8)),  2 attached to 4
    F_4   1 - 2 => 3 - 4                    (1,2 long; 3,4 short)
    G_2   1 <= 2                            (1 short, 2 long)
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# canonical sort key for components of a decomposable type: big first
_FAMILY_ORDER = {"E": 0, "D": 1, "F": 2, "B": 3, "C": 4, "G": 5, "A": 6}


class RootSystemError(ValueError):
    pass


def _check_component(family: str, rank: int) -> None:
    if family not in FAMILIES:
        raise RootSystemError(f"unknown family {family!r}")
    bounds = {"A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    lo, hi = bounds[family]
    if rank < lo or (hi is not None and rank > hi):
        raise RootSystemError(f"rank {rank} out of range for family {family}")


@dataclass(frozen=True, order=True)
class DynkinType:
    """A (possibly decomposable) Dynkin type, canonically sorted."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for family, rank in self.components:
            _check_component(family, rank)
        ordered = tuple(sorted(
            self.components,
            key=lambda c: (-c[1], _FAMILY_ORDER[c[0]]),
        ))
        object.__setattr__(self, "components", ordered)

    @staticmethod
    def of(*components: tuple[str, int]) -> "DynkinType":
        """Build a type, normalising low-rank aliases (D3=A3, C2=B2, D2=2A1)."""
        normal: list[tuple[str, int]] = []
        for family, rank in components:
            if family == "B" and rank == 1:
                family = "A"
            elif family == "C" and rank in (1, 2):
                family = {1: "A", 2: "B"}[rank]
            elif family == "D":
                if rank == 2:
                    normal.extend([("A", 1), ("A", 1)])
                    continue
                if rank == 3:
                    family = "A"
            normal.append((family, rank))
        return DynkinType(tuple(normal))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components

    def __str__(self) -> str:
        if not self.components:
            return "0"
        parts = []
        i = 0
        comps = list(self.components)
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            fam, rk = comps[i]
            name = f"{fam}{rk}"
            count = j - i
            parts.append(name if count == 1 else f"{count}{name}")
            i = j
        return "+".join(parts)


def parse_type(text: str) -> DynkinType:
    """Parse "E7", "A3+A2+A1", "2A2+A1", "0" (empty)."""
    text = text.strip()
    if text in ("0", "T", ""):
        return DynkinType(())
    comps: list[tuple[str, int]] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        mult = 1
        k = 0
        while k < len(chunk) and chunk[k].isdigit():
            k += 1
        if k:
            mult = int(chunk[:k])
            chunk = chunk[k:]
        family = chunk[0]
        rank = int(chunk[1:])
        comps.extend([(family, rank)] * mult)
    return DynkinType.of(*comps)


def cartan_matrix(dtype: DynkinType) -> list[list[int]]:
    """Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> in block Bourbaki order."""
    blocks = [_cartan_block(f, r) for f, r in dtype.components]
    n = dtype.rank
    c = [[0] * n for _ in range(n)]
    off = 0
    for blk in blocks:
        m = len(blk)
        for i in range(m):
            for j in range(m):
                c[off + i][off + j] = blk[i][j]
        off += m
    return c


def _cartan_block(family: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)
        if family == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
    elif family == "E":
        # chain 1-3-4-5-...-n with 2 attached to 4 (indices 0-based)
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    return c


def root_lengths(dtype: DynkinType) -> list[int]:
    """d_i = (alpha_i, alpha_i)/2 per simple root: 1 short, r long."""
    out: list[int] = []
    for family, n in dtype.components:
        if family in ("A", "D", "E"):
            out.extend([1] * n)
        elif family == "B":
            out.extend([2] * (n - 1) + [1])
        elif family == "C":
            out.extend([1] * (n - 1) + [2])
        elif family == "F":
            out.extend([2, 2, 1, 1])
        elif family == "G":
            out.extend([1, 3])
    return out


@dataclass(frozen=True)
class RootSystem:
    """Closed root system with positive roots as coefficient vectors."""

    dtype: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    simple_d: tuple[int, ...]           # half squared lengths of simple roots
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.dtype.rank

    @property
    def dim_g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def inner(self, a, b) -> int:
        """Invariant form (a, b) = sum_ij a_i b_j d_j C_ij (symmetric)."""
        n = self.rank
        total = 0
        for i in range(n):
            if a[i] == 0:
                continue
            for j in range(n):
                if b[j]:
                    total += a[i] * b[j] * self.simple_d[j] * self.cartan[i][j]
        return total

    def norm2(self, a) -> int:
        return self.inner(a, a)

    def pairing(self, a, b) -> Fraction:
        """<a, b^vee> = 2 (a,b) / (b,b)."""
        return Fraction(2 * self.inner(a, b), self.norm2(b))

    def is_long(self, a) -> bool:
        return self.norm2(a) == max(self.norm2(r) for r in self.positive_roots)

    def is_short(self, a) -> bool:
        return not self.is_long(a)


@functools.lru_cache(maxsize=None)
def _build_cached(dtype: DynkinType) -> RootSystem:
    n = dtype.rank
    cart = cartan_matrix(dtype)
    d = root_lengths(dtype)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    # reflection closure: s_i(a) = a - <a, alpha_i^vee> alpha_i,
    # <a, alpha_i^vee> = sum_j a_j C[j][i]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(n):
                k = sum(a[j] * cart[j][i] for j in range(n))
                b = list(a)
                b[i] -= k
                tb = tuple(b)
                if all(x >= 0 for x in tb) and any(x > 0 for x in tb):
                    if tb not in roots:
                        roots.add(tb)
                        nxt.append(tb)
        frontier = nxt

    ordered = sorted(roots, key=lambda a: (sum(a), a))
    return RootSystem(dtype, tuple(map(tuple, cart)), tuple(d), tuple(ordered))


def build_root_system(dtype: DynkinType) -> RootSystem:
    """Construct the closed root system for `dtype` (cached, immutable)."""
    return _build_cached(dtype)


def ambient(name: str) -> RootSystem:
    return build_root_system(parse_type(name))


@dataclass(frozen=True)
class WeightedDiagram:
    """Weighted Dynkin diagram: labels in {0,1,2} per simple root."""

    dtype: DynkinType
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.dtype.rank:
            raise RootSystemError("label count does not match rank")
        if any(v not in (0, 1, 2) for v in self.labels):
            raise RootSystemError("diagram labels must lie in {0,1,2}")

    @property
    def is_even(self) -> bool:
        return all(v in (0, 2) for v in self.labels)

    def zero_nodes(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.labels) if v == 0)

    def __str__(self) -> str:
        return diagram_text(self)


def diagram_text(wd: WeightedDiagram) -> str:
    """Serialise labels in Bourbaki order, slash before each branch-node row.

    For E types this mirrors the paper's two-row display: the bottom chain
    first, then "/" and the label of node 2.  For D types the two fork nodes
    follow the slash.  Indecomposable non-branching types are a plain list.
    """
    comps = wd.dtype.components
    out = []
    off = 0
    for family, n in comps:
        labs = wd.labels[off:off + n]
        off += n
        if family == "E":
            bottom = [labs[0]] + list(labs[2:])
            out.append(" ".join(map(str, bottom)) + " / " + str(labs[1]))
        elif family == "D":
            out.append(" ".join(map(str, labs[:n - 2]))
                       + " / " + f"{labs[n - 2]} {labs[n - 1]}")
        else:
            out.append(" ".join(map(str, labs)))
    return " | ".join(out)


def parse_diagram(dtype: DynkinType, text: str) -> WeightedDiagram:
    """Inverse of diagram_text for a known type."""
    chunks = text.split("|")
    comps = dtype.components
    if len(chunks) != len(comps):
        raise RootSystemError("component count mismatch in diagram text")
    labels: list[int] = []
    for (family, n), chunk in zip(comps, chunks):
        nums = [int(tok) for tok in chunk.replace("/", " ").split()]
        if len(nums) != n:
            raise RootSystemError("label count mismatch in diagram text")
        if family == "E":
            labels.extend([nums[0], nums[-1]] + nums[1:-1])
        elif family == "D":
            labels.extend(nums)
        else:
            labels.extend(nums)
    return WeightedDiagram(dtype, tuple(labels))


def grading_dimensions(rs: RootSystem, wd: WeightedDiagram) -> tuple[int, int]:
    """(dim g(0), dim g(1)) for the grading defined by the diagram.

    Root weights are sums of labels against coefficients; both signs of each
    root are counted, and the Cartan contributes its full rank to g(0).
    """
    if wd.dtype != rs.dtype:
        raise RootSystemError("diagram type does not match root system")
    w0 = w1 = 0
    for a in rs.positive_roots:
        w = sum(l * c for l, c in zip(wd.labels, a))
        if w == 0:
            w0 += 2
        elif w == 1:
            w1 += 1  # the negative root has weight -1
    return rs.rank + w0, w1


def orbit_dimension_from_diagram(rs: RootSystem, wd: WeightedDiagram) -> int:
    """dim of the orbit attached to a weighted Dynkin diagram.

    This is dim g - dim g(0) - dim g(1), the codimension of the centraliser.
    """
    g0, g1 = grading_dimensions(rs, wd)
    return rs.dim_g - g0 - g1


def root_subsystem_type(rs: RootSystem, subset) -> DynkinType:
    """Dynkin type of the root subsystem Z-spanned by a subset of simple roots.

    For subsets of simple roots the span is the set of roots supported on the
    subset, and the type is read off the induced Cartan matrix.
    """
    nodes = sorted(subset)
    if not nodes:
        return DynkinType(())
    sub = [[rs.cartan[i][j] for j in nodes] for i in nodes]
    d = [rs.simple_d[i] for i in nodes]
    return _classify_cartan(sub, d)


def _classify_cartan(c: list[list[int]], d: list[int]) -> DynkinType:
    """Identify the type of a valid Cartan matrix with length data."""
    n = len(c)
    seen = [False] * n
    comps: list[tuple[str, int]] = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        comp = []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in range(n):
                if not seen[w] and c[v][w] != 0 and v != w:
                    seen[w] = True
                    stack.append(w)
        comps.append(_classify_component(c, d, sorted(comp)))
    return DynkinType.of(*comps)


def _classify_component(c, d, nodes) -> tuple[str, int]:
    n = len(nodes)
    deg = {v: sum(1 for w in nodes if w != v and c[v][w] != 0) for v in nodes}
    lengths = {d[v] for v in nodes}
    triple = any(c[v][w] * c[w][v] == 3 for v in nodes for w in nodes if v != w)
    double = any(c[v][w] * c[w][v] == 2 for v in nodes for w in nodes if v != w)
    if triple:
        return ("G", 2)
    if double:
        # B, C or F depending on where the short roots sit
        if n == 2:
            return ("B", 2)
        ends = [v for v in nodes if deg[v] == 1]
        longs = sum(1 for v in nodes if d[v] == max(lengths))
        shorts = n - longs
        if longs >= 2 and shorts >= 2 and n == 4 and longs == 2:
            return ("F", 4)
        # short simple roots at one end only
        short_d = min(lengths)
        short_nodes = [v for v in nodes if d[v] == short_d]
        if len(short_nodes) == 1:
            return ("B", n)
        if len(short_nodes) == n - 1:
            return ("C", n)
        return ("F", 4)
    # simply laced: A, D, or E by branch structure
    branch = [v for v in nodes if deg[v] == 3]
    if not branch:
        return ("A", n)
    b = branch[0]
    arms = []
    for w in nodes:
        if w != b and c[b][w] != 0:
            length = 1
            prev, cur = b, w
            while True:
                nxt = [u for u in nodes if u not in (prev, cur) and c[cur][u] != 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    return ("E", n)
