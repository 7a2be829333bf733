"""Partitions labelling nilpotent orbits, and the dominance order on them."""
from __future__ import annotations

import re
import time
from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .report import CheckReport

__all__ = [
    "Partition",
    "Comparison",
    "is_orthogonal_partition",
    "dominance_compare",
    "greater_or_not_related",
    "partitions",
    "paper_orbit_facts",
    "ORBIT_FACTS",
]


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,2,2,1"``, ``"5 2 2 1"`` or exponent form ``"3^3 1"`` / ``"4^2,1^2"``."""
        tokens = [t for t in re.split(r"[,\s]+", text.strip().strip("()")) if t]
        if not tokens:
            raise DomainError(f"empty partition: {text!r}")
        parts: list[int] = []
        for tok in tokens:
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise DomainError(f"malformed partition token {tok!r} in {text!r}")
            parts += [int(m.group(1))] * int(m.group(2) or 1)
        if sorted(parts, reverse=True) != parts:
            raise DomainError(f"parts of {text!r} are not weakly decreasing")
        return cls(tuple(parts))

    def __str__(self):
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            out.append(f"{self.parts[i]}^{j - i}" if j - i > 1 else str(self.parts[i]))
            i = j
        return "(" + " ".join(out) + ")"


class Comparison(str, Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return Partition.parse(p)
    return Partition(tuple(p))


def is_orthogonal_partition(p, n: int) -> bool:
    """Every even part occurs with even multiplicity."""
    p = _as_partition(p)
    if p.total != n:
        raise DomainError(f"{p} is a partition of {p.total}, not {n}")
    return all(p.parts.count(k) % 2 == 0 for k in set(p.parts) if k % 2 == 0)


def dominance_compare(p, q) -> Comparison:
    p, q = _as_partition(p), _as_partition(q)
    if p.total != q.total:
        raise DomainError(f"{p} and {q} partition different integers")
    length = max(len(p.parts), len(q.parts))
    sp = list(accumulate(p.parts + (0,) * (length - len(p.parts))))
    sq = list(accumulate(q.parts + (0,) * (length - len(q.parts))))
    ge = all(a >= b for a, b in zip(sp, sq))
    le = all(a <= b for a, b in zip(sp, sq))
    if ge and le:
        return Comparison.EQUAL
    if ge:
        return Comparison.GREATER
    if le:
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def greater_or_not_related(p, q) -> bool:
    return dominance_compare(p, q) in (Comparison.GREATER, Comparison.INCOMPARABLE)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest parts first."""
    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail

    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)


# (group, n, must be orthogonal, larger partition, reference orbit).
# (4 1^18) only bounds a family of SO_22 orbits from below; it is not
# itself an orthogonal partition.
ORBIT_FACTS: tuple[tuple[str, int, bool, str, str], ...] = (
    ("SO10", 10, True, "9 1", "3^3 1"),
    ("SO10", 10, True, "7 3", "3^3 1"),
    ("SO10", 10, True, "7 1^3", "3^3 1"),
    ("SO10", 10, True, "5 2^2 1", "3^3 1"),
    ("SO10", 10, True, "5 1^5", "3^3 1"),
    ("SO10", 10, True, "4^2 1^2", "3^3 1"),
    ("SO22", 22, False, "4 1^18", "3^7 1"),
    ("SO22", 22, True, "5 1^17", "3^7 1"),
)


def paper_orbit_facts() -> CheckReport:
    """Check every orbit comparison that the vanishing arguments rely on."""
    start = time.perf_counter()
    rows = []
    failures = []
    for group, n, orth, big, ref in ORBIT_FACTS:
        p, q = Partition.parse(big), Partition.parse(ref)
        ok = p.total == n and q.total == n and is_orthogonal_partition(q, n)
        orthogonal = is_orthogonal_partition(p, n)
        if orth:
            ok = ok and orthogonal
        verdict = dominance_compare(p, q)
        ok = ok and greater_or_not_related(p, q)
        rows.append({"group": group, "orbit": str(p), "reference": str(q),
                     "comparison": verdict.value, "orthogonal": orthogonal, "ok": ok})
        if not ok:
            failures.append(str(p))
    # GL_6: the Speh orbit (3^2) against everything strictly above it.
    ref6 = Partition((3, 3))
    above = [p for p in partitions(6) if dominance_compare(p, ref6) is Comparison.GREATER]
    for p in above:
        ok = greater_or_not_related(p, ref6)
        rows.append({"group": "GL6", "orbit": str(p), "reference": str(ref6),
                     "comparison": "greater", "ok": ok})
        if not ok:
            failures.append(str(p))
    if greater_or_not_related(ref6, ref6):
        failures.append("(3^2) vs itself")
    return CheckReport(
        "orbits",
        not failures,
        "exact-zero" if not failures else len(failures),
        {"facts": len(ORBIT_FACTS), "gl6_partitions_above_3^2": len(above)},
        (time.perf_counter() - start) * 1000,
        {"comparisons": rows, "failures": failures},
    )


def all_orthogonal_partitions(n: int) -> list[Partition]:
    return [p for p in partitions(n) if is_orthogonal_partition(p, n)]
