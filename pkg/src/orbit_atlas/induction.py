"""Lusztig-Spaltenstein induction for classical data and the rigid registry.

Only classical-inside-classical induction is computed algorithmically (gl
blocks feeding a B/C/D core by column addition plus collapse, componentwise
sums in type A).  Inductions landing in exceptional ambients are registry
data validated against the dimension formula

    dim Ind = dim O_L + 2 dim u,   dim u = |Phi+(G)| - |Phi+(L)|.

A dimension mismatch always raises: it signals a misapplied recipe and is
never returned silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import CatalogueError, _read_data, orbit_by_label
from .levi import LeviDescriptor, decorate, parse_decorated
from .partitions import PartitionOrbit, collapse, is_rigid, orbit_from_text
from .rootsys import ambient, parse_type, root_subsystem_type


class InductionError(ValueError):
    pass


def _pad(parts, length):
    return list(parts) + [0] * (length - len(parts))


def ls_induce_classical(family: str, rank: int,
                        gl_parts: list[tuple[int, ...]],
                        core: PartitionOrbit | None = None,
                        very_even_label: str | None = None) -> PartitionOrbit:
    """Induce to the classical ambient from gl blocks plus an optional core.

    In type A the result is the componentwise sum of the block partitions.
    In B/C/D each gl(k) block adds two copies of its partition columnwise
    (p -> p + 2q) and the result is X-collapsed; the dimension formula is
    verified before returning.
    """
    if family == "A":
        n = rank + 1
        if core is not None:
            raise InductionError("type A has no classical core")
        if sum(sum(q) for q in gl_parts) != n:
            raise InductionError("block sizes do not sum to n")
        length = max(len(q) for q in gl_parts)
        total = [0] * length
        for q in gl_parts:
            for i, x in enumerate(q):
                total[i] += x
        result = PartitionOrbit("A", rank, tuple(sorted(total, reverse=True)))
        _check_dimension(family, rank, gl_parts, core, result)
        return result

    big_n = {"B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]
    used = 2 * sum(sum(q) for q in gl_parts)
    core_n = big_n - used
    if core is None:
        if core_n < 0:
            raise InductionError("blocks exceed the ambient size")
        p = [1] * core_n if core_n else []
    else:
        if sum(core.parts) != core_n or core.family != family:
            raise InductionError("core partition has the wrong size or family")
        p = list(core.parts)
    for q in sorted(gl_parts, key=sum):
        length = max(len(p), len(q))
        p = _pad(p, length)
        q2 = _pad(q, length)
        p = sorted((a + 2 * b for a, b in zip(p, q2)), reverse=True)
        p = list(collapse(family, tuple(p)))
    parts = tuple(x for x in p if x > 0)
    label = None
    if family == "D" and parts and all(x % 2 == 0 for x in parts):
        label = very_even_label or "I"
    result = PartitionOrbit(family, rank, parts, label)
    _check_dimension(family, rank, gl_parts, core, result)
    return result


def _check_dimension(family, rank, gl_parts, core, result):
    pos = {"A": rank * (rank + 1) // 2, "B": rank * rank,
           "C": rank * rank, "D": rank * (rank - 1)}[family]
    levi_pos = sum(k * (k - 1) // 2 for k in (sum(q) for q in gl_parts))
    dim_l = sum(
        (sum(q)) ** 2 - sum((2 * i + 1) * x for i, x in enumerate(q))
        for q in gl_parts)
    if family != "A":
        # a missing core is the implicit zero orbit on the leftover block
        big_n = {"B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]
        core_n = big_n - 2 * sum(sum(q) for q in gl_parts)
        if family == "B":
            m = (core_n - 1) // 2
            levi_pos += m * m
        elif family == "C":
            m = core_n // 2
            levi_pos += m * m
        else:
            m = core_n // 2
            levi_pos += m * (m - 1)
    core_dim = core.dim() if core is not None else 0
    dim_u = pos - levi_pos
    want = dim_l + core_dim + 2 * dim_u
    if result.dim() != want:
        raise InductionError(
            f"dimension oracle mismatch: dim {result} = {result.dim()} "
            f"but datum forces {want}")


# ---------------------------------------------------------------------------
# induction data and the registry


OrbitSpec = PartitionOrbit | str     # str: Bala-Carter label or "0"


@dataclass(frozen=True)
class InductionDatum:
    """A Levi of an exceptional ambient plus an orbit per component."""

    ambient_name: str
    levi: str                         # decorated class text
    orbit_parts: tuple[OrbitSpec, ...]

    def __str__(self) -> str:
        return f"({self.levi}, {orbit_text(self.orbit_parts)})"


def orbit_text(parts: tuple[OrbitSpec, ...]) -> str:
    if not parts:
        return "0"
    toks = []
    for p in parts:
        if isinstance(p, PartitionOrbit):
            toks.append("0" if p.is_zero else str(p))
        else:
            toks.append(p)
    if all(t == "0" for t in toks):
        return "0"
    return "x".join(toks)


@lru_cache(maxsize=None)
def levi_subset(ambient_name: str, levi_text: str) -> frozenset[int]:
    """Smallest subset of simple roots whose decorated class matches."""
    rs = ambient(ambient_name)
    want = parse_decorated(levi_text)
    n = rs.rank
    best = None
    for bits in range(1 << n):
        subset = frozenset(i for i in range(n) if bits >> i & 1)
        if len(subset) != want.base.rank:
            continue
        if decorate(rs.dtype, subset) == want:
            key = tuple(sorted(subset))
            if best is None or key < best:
                best = key
    if best is None:
        raise InductionError(f"no Levi of class {levi_text!r} in {ambient_name}")
    return frozenset(best)


def parse_orbit_spec(ambient_name: str, levi_text: str,
                     text: str) -> tuple[OrbitSpec, ...]:
    """Parse an orbit spec like "(3,2^2,1^3)x(2)" against the Levi's components.

    Components are matched big-type-first; equal-type runs are filled in
    min-node order of the representative subset.
    """
    rs = ambient(ambient_name)
    subset = levi_subset(ambient_name, levi_text)
    ld = LeviDescriptor(rs.dtype, subset)
    comps = ld.components()
    typed = []
    for comp in comps:
        f, r = root_subsystem_type(rs, set(comp)).components[0]
        typed.append((f, r, comp))
    # canonical order: big first, then min node
    order = sorted(range(len(typed)),
                   key=lambda i: (-typed[i][1],
                                  "EDFBCGA".index(typed[i][0]),
                                  typed[i][2]))
    text = text.strip()
    if text == "0":
        chunks = ["0"] * len(comps)
    else:
        chunks = _split_on_x(text)
    if len(chunks) != len(comps):
        raise InductionError(
            f"{text!r} has {len(chunks)} parts, Levi {levi_text} has "
            f"{len(comps)} components")
    specs: list[OrbitSpec | None] = [None] * len(comps)
    for pos, chunk in zip(order, chunks):
        f, r, comp = typed[pos]
        if f in "ABCD":
            specs[pos] = orbit_from_text(f, r, chunk)
        else:
            specs[pos] = chunk
    return tuple(specs)


def _split_on_x(text: str) -> list[str]:
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


def canonical_orbit_text(ambient_name: str, levi_text: str, text: str) -> str:
    """Normalise an orbit spec: canonical component order, 0 for zero orbits.

    The order within runs of equal component types is preserved (it encodes
    which simple roots carry which orbit, and the fundamental group can
    depend on the placement), so this is parse followed by re-rendering.
    """
    specs = parse_orbit_spec(ambient_name, levi_text, text)
    rs = ambient(ambient_name)
    subset = levi_subset(ambient_name, levi_text)
    ld = LeviDescriptor(rs.dtype, subset)
    comps = ld.components()
    typed = []
    for comp, spec in zip(comps, specs):
        f, r = root_subsystem_type(rs, set(comp)).components[0]
        if isinstance(spec, PartitionOrbit):
            tok = "0" if spec.is_zero else str(spec)
        else:
            tok = spec
        typed.append((-r, "EDFBCGA".index(f), comp, tok))
    typed.sort(key=lambda t: (t[0], t[1], t[2]))
    out = [t[3] for t in typed]
    if all(t == "0" for t in out):
        return "0"
    return "x".join(out)


def datum_from_text(ambient_name: str, levi_text: str,
                    orbit_txt: str) -> InductionDatum:
    return InductionDatum(ambient_name, levi_text,
                          parse_orbit_spec(ambient_name, levi_text, orbit_txt))


def datum_levi_dim(ambient_name: str, levi_text: str) -> tuple[int, int]:
    """(number of positive roots of the Levi, of the ambient)."""
    rs = ambient(ambient_name)
    subset = levi_subset(ambient_name, levi_text)
    count = sum(1 for a in rs.positive_roots
                if all(c == 0 for i, c in enumerate(a) if i not in subset))
    return count, len(rs.positive_roots)


def datum_orbit_dim(datum: InductionDatum) -> int:
    total = 0
    for spec in datum.orbit_parts:
        if isinstance(spec, PartitionOrbit):
            total += spec.dim()
        elif spec == "0":
            pass
        else:
            # exceptional factor: the component's own catalogue
            rs = ambient(datum.ambient_name)
            subset = levi_subset(datum.ambient_name, datum.levi)
            ld = LeviDescriptor(rs.dtype, subset)
            for comp, s in zip(ld.components(), datum.orbit_parts):
                if s is spec:
                    f, r = root_subsystem_type(rs, set(comp)).components[0]
                    total += orbit_by_label(f"{f}{r}", spec).dim
                    break
    return total


def dimension_check(datum: InductionDatum, target_label: str) -> bool:
    """dim(target) == dim(O_L) + 2 dim u for a registry entry."""
    levi_pos, amb_pos = datum_levi_dim(datum.ambient_name, datum.levi)
    lhs = orbit_by_label(datum.ambient_name, target_label).dim
    rhs = datum_orbit_dim(datum) + 2 * (amb_pos - levi_pos)
    return lhs == rhs


def datum_is_rigid(datum: InductionDatum) -> bool:
    """Every component orbit rigid (zero orbits and rigid partitions)."""
    rs = ambient(datum.ambient_name)
    subset = levi_subset(datum.ambient_name, datum.levi)
    ld = LeviDescriptor(rs.dtype, subset)
    for comp, spec in zip(ld.components(), datum.orbit_parts):
        if isinstance(spec, PartitionOrbit):
            if not is_rigid(spec):
                return False
        else:
            if spec == "0":
                continue
            f, r = root_subsystem_type(rs, set(comp)).components[0]
            if not orbit_by_label(f"{f}{r}", spec).rigid:
                return False
    return True


@dataclass(frozen=True)
class RegistryEntry:
    ambient_name: str
    orbit_label: str
    datum: InductionDatum
    anchor: str


@lru_cache(maxsize=None)
def rigid_registry() -> tuple[RegistryEntry, ...]:
    """Rigid induction data for every induced exceptional orbit."""
    out = []
    for line in _read_data("registry_rigid.txt"):
        amb, orb, levi, spec, anchor = [t.strip() for t in line.split("|")]
        out.append(RegistryEntry(
            amb, orb, datum_from_text(amb, levi, spec), anchor))
    return tuple(out)


def rigid_data(ambient_name: str, orbit_label: str) -> list[RegistryEntry]:
    orb = orbit_by_label(ambient_name, orbit_label)
    entries = [e for e in rigid_registry()
               if e.ambient_name == ambient_name
               and e.orbit_label == orbit_label]
    if orb.rigid:
        if entries:
            raise CatalogueError(
                f"rigid orbit {orbit_label} has registry entries")
        return []
    if not entries:
        raise CatalogueError(
            f"induced orbit {orbit_label} in {ambient_name} missing from "
            "the rigid registry")
    return entries
