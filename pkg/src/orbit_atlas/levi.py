"""Standard Levi subgroups as subsets of simple roots, with decorated labels.

A standard Levi subgroup of an exceptional group is a subset of the simple
roots.  Its conjugacy class is the Dynkin type of the generated subsystem,
decorated where the type alone is ambiguous:

  * F4 / G2: a tilde marks components made of short roots.
  * E7: the types 3A1, A3+A1 and A5 each split into two classes.  The
    double-prime class is the one whose span is orthogonal to some A2
    subsystem of the ambient root system.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import (
    DynkinType,
    RootSystem,
    RootSystemError,
    WeightedDiagram,
    ambient,
    parse_type,
    root_subsystem_type,
)

_MARKED_E7_TYPES = {parse_type("3A1"), parse_type("A3+A1"), parse_type("A5")}


@dataclass(frozen=True)
class DecoratedType:
    """Dynkin type of a Levi class plus tilde flags / E7 prime marks."""

    base: DynkinType
    mark: str | None = None            # "'" or "''" in E7
    tilde: tuple[tuple[str, int], ...] = ()   # short-root components, sorted

    def __str__(self) -> str:
        if self.base.is_empty:
            return "T"
        if self.mark:
            return f"({self.base}){self.mark}"
        if not self.tilde:
            return str(self.base)
        # rank-descending; untilded before tilded at equal rank (A1+~A1)
        rest = list(self.base.components)
        items: list[tuple[int, int, str]] = []
        for fam, rk in self.tilde:
            rest.remove((fam, rk))
            items.append((-rk, 1, f"~{fam}{rk}"))
        for fam, rk in rest:
            items.append((-rk, 0, f"{fam}{rk}"))
        return "+".join(tok for _, _, tok in sorted(items))


def parse_decorated(text: str) -> DecoratedType:
    """Parse "(3A1)''", "~A2+A1", "D6", "T"."""
    text = text.strip()
    if text in ("T", "0", ""):
        return DecoratedType(DynkinType(()))
    mark = None
    if text.startswith("("):
        close = text.index(")")
        mark = text[close + 1:]
        if mark not in ("'", "''"):
            raise RootSystemError(f"bad mark in {text!r}")
        return DecoratedType(parse_type(text[1:close]), mark=mark)
    tilde: list[tuple[str, int]] = []
    plain_parts: list[str] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if chunk.startswith("~"):
            body = chunk[1:]
            mult = 1
            k = 0
            while k < len(body) and body[k].isdigit():
                k += 1
            if k:
                mult = int(body[:k])
                body = body[k:]
            comp = (body[0], int(body[1:]))
            tilde.extend([comp] * mult)
            plain_parts.extend([body] * mult)
        else:
            plain_parts.append(chunk)
    base = parse_type("+".join(plain_parts))
    return DecoratedType(base, tilde=tuple(sorted(tilde)))


@dataclass(frozen=True)
class LeviDescriptor:
    """A standard Levi of an exceptional ambient, as a set of simple roots."""

    ambient_type: DynkinType
    subset: frozenset[int]

    def __post_init__(self):
        rs = ambient(str(self.ambient_type))
        if not all(0 <= i < rs.rank for i in self.subset):
            raise RootSystemError("subset index out of range")

    @property
    def decorated(self) -> DecoratedType:
        return decorate(self.ambient_type, self.subset)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the subset, each sorted, in sorted order."""
        rs = ambient(str(self.ambient_type))
        nodes = sorted(self.subset)
        seen: set[int] = set()
        comps = []
        for start in nodes:
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in nodes:
                    if w not in seen and rs.cartan[v][w] != 0:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return sorted(comps)

    def __str__(self) -> str:
        return str(self.decorated)


@lru_cache(maxsize=None)
def _span_roots(ambient_type: DynkinType, subset: frozenset[int]):
    rs = ambient(str(ambient_type))
    return [a for a in rs.positive_roots
            if all(c == 0 for i, c in enumerate(a) if i not in subset)]


@lru_cache(maxsize=None)
def _has_orthogonal_a2(ambient_type: DynkinType, subset: frozenset[int]) -> bool:
    """Does some A2 subsystem of the ambient pair to zero with the span?

    The search runs over pairs of positive roots beta, gamma with
    (beta, gamma^vee) = -1 forming an A2; exhaustive per the decoration rule.
    """
    rs = ambient(str(ambient_type))
    span = _span_roots(ambient_type, subset)
    perp = [b for b in rs.positive_roots
            if all(rs.inner(b, s) == 0 for s in span)]
    for i, b in enumerate(perp):
        for g in perp[i + 1:]:
            if rs.inner(b, g) != 0 and rs.pairing(b, g) * rs.pairing(g, b) == 1:
                return True
    return False


def decorate(ambient_type: DynkinType, subset) -> DecoratedType:
    """Decorated conjugacy-class label of the standard Levi on `subset`."""
    subset = frozenset(subset)
    rs = ambient(str(ambient_type))
    base = root_subsystem_type(rs, subset)
    fam = ambient_type.components[0][0] if ambient_type.components else ""
    if fam in ("F", "G"):
        tilde = []
        # a component is tilde when all of its simple roots are short
        desc = LeviDescriptor(ambient_type, subset)
        for comp in desc.components():
            ctype = root_subsystem_type(rs, set(comp))
            if all(rs.simple_d[i] == 1 for i in comp):
                tilde.append(ctype.components[0])
        return DecoratedType(base, tilde=tuple(sorted(tilde)))
    if ambient_type == parse_type("E7") and base in _MARKED_E7_TYPES:
        mark = "''" if _has_orthogonal_a2(ambient_type, subset) else "'"
        return DecoratedType(base, mark=mark)
    return DecoratedType(base)


def semisimple_corank(levi: LeviDescriptor) -> int:
    """|Pi| - |Delta|: corank of the Levi inside its ambient group."""
    rs = ambient(str(levi.ambient_type))
    return rs.rank - len(levi.subset)


def jacobson_morozov_levi(ambient_type: DynkinType,
                          wd: WeightedDiagram) -> LeviDescriptor:
    """Standard Levi on the 0-labelled nodes of an even diagram."""
    if wd.dtype != ambient_type:
        raise RootSystemError("diagram type mismatch")
    if not wd.is_even:
        raise RootSystemError("Jacobson-Morozov Levi requires an even diagram")
    return LeviDescriptor(ambient_type, frozenset(wd.zero_nodes()))
