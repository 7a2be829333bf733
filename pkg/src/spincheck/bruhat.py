"""Exhaustive admissibility sweep over the Weyl group of D_5.

A Weyl element w is *not admissible* for a unipotent character if w maps
one of the character's support roots into the parabolic Q.  Elements that
survive that test go through a second, commutator-based filter.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Literal

from .errors import DomainError
from .lie_core import D5, Weight, WeylElement, enumerate_weyl_group
from .report import CheckReport

__all__ = [
    "ParabolicSpec",
    "CharacterSupport",
    "build_parabolic",
    "matrix_position_root",
    "support_for",
    "verify_lemma3",
    "LEMMA3_LEVI",
]

# Levi GL_3 x GSO_4: drop alpha_3.
LEMMA3_LEVI = frozenset({1, 2, 4, 5})


def _simple_coefficients(r: Weight) -> tuple[int, ...]:
    # Simply laced with (alpha, alpha) = 2: coefficient of alpha_i is (r, varpi_i).
    return tuple(int(r.dot(fw)) for fw in r.system.fundamental_weights)


@dataclass(frozen=True)
class ParabolicSpec:
    levi_simple_roots: frozenset[int]
    phi_Q: frozenset[Weight]
    phi_Uminus: frozenset[Weight]
    layer1: frozenset[Weight]


def build_parabolic(levi, system=D5) -> ParabolicSpec:
    """Roots of the standard parabolic whose Levi has the given simple roots (1-based)."""
    levi = frozenset(levi)
    if not levi <= set(range(1, system.rank + 1)):
        raise DomainError(f"Levi indices must lie in 1..{system.rank}: {sorted(levi)}")
    off = [i - 1 for i in range(1, system.rank + 1) if i not in levi]
    positive = set(system.positive_roots)
    negative = {-r for r in system.positive_roots}
    in_levi = {r for r in negative if all(_simple_coefficients(r)[i] == 0 for i in off)}
    phi_q = frozenset(positive | in_levi)
    u_minus = frozenset(negative - in_levi)
    sums = {a + b for a in u_minus for b in u_minus}
    layer1 = frozenset(r for r in u_minus if r not in sums)
    return ParabolicSpec(levi, phi_q, u_minus, layer1)


def matrix_position_root(i: int, j: int, system=D5) -> Weight:
    """Root of the one-parameter subgroup I + r e'_{i,j} (J-form, 1-based, i < j)."""
    n = system.dim
    if not (1 <= i < j <= 2 * n) or i > n or i + j == 2 * n + 1:
        raise DomainError(f"({i}, {j}) is not an upper-triangular root position")
    v = [0] * n
    v[i - 1] += 1
    if j <= n:
        v[j - 1] -= 1
    else:
        v[2 * n - j] += 1
    return system.weight(v)


@dataclass(frozen=True)
class CharacterSupport:
    support_roots: tuple[Weight, ...]
    label: str
    positions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        roots = set(self.support_roots[0].system.roots)
        for r in self.support_roots:
            if r not in roots:
                raise DomainError(f"{r} is not a root")

    @property
    def third(self) -> Weight:
        """The support root whose sum with each of the other two is a root."""
        roots = set(self.support_roots[0].system.roots)
        for k, b in enumerate(self.support_roots):
            others = [c for m, c in enumerate(self.support_roots) if m != k]
            if all(b + c in roots for c in others):
                return b
        raise DomainError("no support root fails to commute with both others")

    @property
    def paired(self) -> tuple[Weight, Weight]:
        t = self.third
        a, b = (r for r in self.support_roots if r != t)
        return a, b


_POSITIONS = {
    "V": ((1, 2), (2, 5), (2, 6)),
    "R": ((1, 3), (2, 4), (3, 7)),
}


def support_for(case: Literal["V", "R"], a=1) -> CharacterSupport:
    """Roots on which the (51^5) character psi_{V,a} or the (4^2 1^2) character psi_R is nontrivial.

    The coefficient ``a`` scales a root-group coordinate but not the root,
    so the support (and everything downstream) is independent of it.
    """
    if case == "V":
        if a == 0:
            raise DomainError("psi_{V,a} requires a != 0")
    elif case != "R":
        raise DomainError(f"unknown case {case!r}")
    pos = _POSITIONS[case]
    return CharacterSupport(tuple(matrix_position_root(i, j) for i, j in pos), case, pos)


def _commute(g: Weight, d: Weight, roots: set) -> bool:
    return g + d not in roots and g != -d


def _classify(w: WeylElement, supp: CharacterSupport, par: ParabolicSpec, roots: set) -> tuple[int, bool, dict]:
    images = [w.act(b) for b in supp.support_roots]
    if any(img in par.phi_Q for img in images):
        return 1, False, {}
    p1, p2 = (w.act(b) for b in supp.paired)
    t = w.act(supp.third)
    flags = {
        "paired_in_layer1": p1 in par.layer1 and p2 in par.layer1,
        "third_in_layer1": t in par.layer1,
        "commuting_layer1_root": any(
            _commute(g, p1, roots) and _commute(g, p2, roots) for g in par.layer1
        ),
    }
    admissible = all(flags.values())
    return 2, admissible, flags


def verify_lemma3(case: Literal["V", "R"], a=1) -> CheckReport:
    """Classify all 1920 Weyl elements; pass iff none is admissible."""
    start = time.perf_counter()
    supp = support_for(case, a)
    par = build_parabolic(LEMMA3_LEVI)
    roots = set(D5.roots)
    group = enumerate_weyl_group(D5)
    stages = []
    admissible = []
    stage2 = []
    sum_relations = True
    t, (p1, p2) = supp.third, supp.paired
    for idx, w in enumerate(group):
        stage, adm, flags = _classify(w, supp, par, roots)
        stages.append(stage)
        if stage == 2:
            stage2.append({"element": idx, **flags})
        if adm:
            admissible.append({"perm": w.perm, "signs": w.signs})
        sum_relations &= w.act(t) + w.act(p1) in roots and w.act(t) + w.act(p2) in roots
    passed = not admissible and len(group) == 1920 and sum_relations
    return CheckReport(
        f"lemma3-{case}",
        passed,
        "exact-zero" if passed else len(admissible),
        {"case": case, "a": a if case == "V" else None, "levi": sorted(LEMMA3_LEVI)},
        (time.perf_counter() - start) * 1000,
        {
            "weyl_elements": len(group),
            "admissible_count": len(admissible),
            "admissible": admissible,
            "decided_stage1": stages.count(1),
            "decided_stage2": stages.count(2),
            "stage2_elements": stage2,
            "deciding_stage": "".join(str(s) for s in stages),
            "support_roots": [str(r) for r in supp.support_roots],
            "phi_Uminus_size": len(par.phi_Uminus),
            "layer1_size": len(par.layer1),
            "sum_relations_preserved": sum_relations,
            "a_independent": True,
        },
    )
