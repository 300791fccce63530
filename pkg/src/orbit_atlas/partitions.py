"""Partition calculus for nilpotent orbits of classical groups.

Families here are the classical ones, keyed by the letter of the ambient
root system:

    A_{n-1}  <->  partitions of n       (sl_n)
    B_n      <->  partitions of 2n+1, even parts with even multiplicity
    C_n      <->  partitions of 2n,   odd parts with even multiplicity
    D_n      <->  partitions of 2n,   even parts with even multiplicity,
                  very even partitions counted twice (labels I / II)
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache


class PartitionError(ValueError):
    pass


def is_valid(family: str, total: int, parts: tuple[int, ...]) -> bool:
    if sum(parts) != total:
        return False
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        return False
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    if family == "A":
        return True
    if family in ("B", "D"):
        return all(m % 2 == 0 for p, m in counts.items() if p % 2 == 0)
    if family == "C":
        return all(m % 2 == 0 for p, m in counts.items() if p % 2 == 1)
    raise PartitionError(f"unknown family {family!r}")


def _family_total(family: str, rank: int) -> int:
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


@dataclass(frozen=True, order=True)
class PartitionOrbit:
    """A classical nilpotent orbit: family, rank and decorated partition."""

    family: str
    rank: int
    parts: tuple[int, ...]
    very_even_label: str | None = None

    def __post_init__(self):
        total = _family_total(self.family, self.rank)
        if not is_valid(self.family, total, self.parts):
            raise PartitionError(
                f"{self.parts} is not a valid {self.family}{self.rank} partition")
        ve = self.family == "D" and all(p % 2 == 0 for p in self.parts)
        if ve and self.very_even_label not in ("I", "II"):
            raise PartitionError("very even partition needs a label I or II")
        if not ve and self.very_even_label is not None:
            raise PartitionError("label only allowed on very even partitions")

    @property
    def is_very_even(self) -> bool:
        return self.very_even_label is not None

    @property
    def is_zero(self) -> bool:
        return all(p == 1 for p in self.parts)

    @property
    def gcd(self) -> int:
        return math.gcd(*self.parts) if self.parts else 0

    def multiplicity(self, part: int) -> int:
        return sum(1 for p in self.parts if p == part)

    def distinct_odd(self) -> int:
        return len({p for p in self.parts if p % 2 == 1})

    def odd_count(self) -> int:
        return sum(1 for p in self.parts if p % 2 == 1)

    def is_rather_odd(self) -> bool:
        return all(self.multiplicity(p) <= 1 for p in set(self.parts) if p % 2)

    def is_evenly_odd(self) -> bool:
        return all(self.multiplicity(p) % 2 == 0 for p in set(self.parts) if p % 2)

    def transpose(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= j)
                     for j in range(1, self.parts[0] + 1))

    def dim(self) -> int:
        """Orbit dimension from the partition (exact classical formulae)."""
        s = sum((2 * i + 1) * p for i, p in enumerate(self.parts))
        if self.family == "A":
            n = self.rank + 1
            return n * n - s
        n2 = sum(self.parts)
        odd = self.odd_count()
        if self.family in ("B", "D"):
            return n2 * (n2 - 1) // 2 - (s - odd) // 2
        return n2 * (n2 + 1) // 2 - (s + odd) // 2

    def __str__(self) -> str:
        body = format_parts(self.parts)
        return body + (f"_{self.very_even_label}" if self.very_even_label else "")


def format_parts(parts: tuple[int, ...]) -> str:
    if not parts:
        return "()"
    toks = []
    for p, group in itertools.groupby(parts):
        m = len(list(group))
        toks.append(f"{p}^{m}" if m > 1 else f"{p}")
    return "(" + ",".join(toks) + ")"


_PART_RE = re.compile(r"^\((.*)\)(_(I{1,2}))?$")


def parse_parts(text: str) -> tuple[tuple[int, ...], str | None]:
    """Parse "(3,2^2,1^3)" or "(2^4)_I"; "0" means the zero partition."""
    text = text.strip()
    m = _PART_RE.match(text)
    if not m:
        raise PartitionError(f"cannot parse partition {text!r}")
    body, _, label = m.groups()
    parts: list[int] = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if "^" in tok:
            p, mult = tok.split("^")
            parts.extend([int(p)] * int(mult))
        else:
            parts.append(int(tok))
    return tuple(sorted(parts, reverse=True)), label


def orbit_from_text(family: str, rank: int, text: str) -> PartitionOrbit:
    if text.strip() == "0":
        total = _family_total(family, rank)
        return PartitionOrbit(family, rank, (1,) * total)
    parts, label = parse_parts(text)
    return PartitionOrbit(family, rank, parts, label)


@lru_cache(maxsize=None)
def enumerate_classical(family: str, rank: int) -> tuple[PartitionOrbit, ...]:
    """All nilpotent orbits, very even ones duplicated with labels I and II."""
    total = _family_total(family, rank)
    out: list[PartitionOrbit] = []
    for parts in _partitions(total):
        if not is_valid(family, total, parts):
            continue
        if family == "D" and all(p % 2 == 0 for p in parts):
            out.append(PartitionOrbit(family, rank, parts, "I"))
            out.append(PartitionOrbit(family, rank, parts, "II"))
        else:
            out.append(PartitionOrbit(family, rank, parts))
    return tuple(sorted(out, reverse=True))


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    cap = n if cap is None else min(cap, n)
    for first in range(cap, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def dominates(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    """p >= q in the dominance order (prefix sums)."""
    pp = list(p) + [0] * max(0, len(q) - len(p))
    qq = list(q) + [0] * max(0, len(p) - len(q))
    sp = sq = 0
    for a, b in zip(pp, qq):
        sp += a
        sq += b
        if sq > sp:
            return False
    return True


@lru_cache(maxsize=None)
def _valid_partitions(family: str, total: int) -> tuple[tuple[int, ...], ...]:
    return tuple(p for p in _partitions(total) if is_valid(family, total, p))


def collapse(family: str, parts) -> tuple[int, ...]:
    """Largest valid partition (dominance order) below `parts` for the family.

    The totals appearing here are small (at most twice the ambient rank), so
    the dominance maximum is taken over the enumerated valid partitions; the
    maximum is unique by the standard collapse theory, and that uniqueness
    is asserted.
    """
    p = tuple(sorted((x for x in parts if x > 0), reverse=True))
    total = sum(p)
    if family == "A":
        return p
    if is_valid(family, total, p):
        return p
    below = [q for q in _valid_partitions(family, total) if dominates(p, q)]
    maxima = [q for q in below
              if not any(dominates(r, q) and r != q for r in below)]
    if len(maxima) != 1:
        raise PartitionError(
            f"collapse of {p} in type {family} is not unique: {maxima}")
    return maxima[0]


def is_rigid(orbit: PartitionOrbit) -> bool:
    """No proper Lusztig-Spaltenstein induction reaches this orbit.

    Family A: only the zero orbit.  Families B/C/D: steps p_i <= p_{i+1} + 1
    throughout and no part of the critical parity (odd for B/D, even for C)
    occurring exactly twice.
    """
    if orbit.family == "A":
        return orbit.is_zero
    p = orbit.parts + (0,)
    if any(p[i] > p[i + 1] + 1 for i in range(len(orbit.parts))):
        return False
    crit = 1 if orbit.family in ("B", "D") else 0
    return all(orbit.multiplicity(x) != 2
               for x in set(orbit.parts) if x % 2 == crit)


def is_birationally_rigid(orbit: PartitionOrbit) -> bool:
    """Birational rigidity for the canonical simply connected classical forms.

    SL: zero orbit only.  Spin/Sp: the step condition alone.  For D there is
    one exclusion: partitions of the shape (2^m, 1^2).
    """
    if orbit.family == "A":
        return orbit.is_zero
    p = orbit.parts + (0,)
    if any(p[i] > p[i + 1] + 1 for i in range(len(orbit.parts))):
        return False
    if orbit.family == "D":
        tail = [x for x in orbit.parts if x == 1]
        rest = [x for x in orbit.parts if x != 1]
        if len(tail) == 2 and rest and all(x == 2 for x in rest):
            return False
    return True
