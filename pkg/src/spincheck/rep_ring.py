"""Representation-ring arithmetic via Brauer's formula.

A :class:`VirtualCharacter` is an integer combination of irreducibles,
keyed by dominant highest weight.  Labels ``(m_1, ..., m_5)`` always mean
``sum m_i varpi_i`` in Bourbaki numbering.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .characters import SatakeClass, _dominant_multiplicities, _orbit_scaled, dimension, eval_character
from .errors import DomainError
from .lie_core import D5, RootSystem, Weight

__all__ = [
    "VirtualCharacter",
    "tensor_decompose",
    "brauer_shift_product",
    "okada_rhs",
]


class VirtualCharacter:
    """Finitely supported ``dominant weight -> nonzero integer`` map."""

    __slots__ = ("system", "_terms")

    def __init__(self, terms: Mapping[Weight, int] | None = None, system: RootSystem = D5):
        self.system = system
        clean: dict[tuple[int, ...], int] = {}
        for w, m in (terms or {}).items():
            if w.system is not system:
                raise DomainError("weight from a different root system")
            if not w.is_dominant():
                raise DomainError(f"{w} is not dominant")
            if m:
                t = system.to_scaled(w)
                clean[t] = clean.get(t, 0) + int(m)
        self._terms = {k: v for k, v in clean.items() if v}

    # -- constructors -----------------------------------------------------
    @classmethod
    def _from_scaled(cls, system: RootSystem, terms: Mapping[tuple[int, ...], int]) -> VirtualCharacter:
        out = cls.__new__(cls)
        out.system = system
        out._terms = {k: v for k, v in terms.items() if v}
        return out

    @classmethod
    def irreducible(cls, lam: Weight, mult: int = 1) -> VirtualCharacter:
        return cls({lam: mult}, lam.system)

    @classmethod
    def from_labels(cls, labels: Mapping[Sequence[int], int] | Iterable[Sequence[int]],
                    system: RootSystem = D5) -> VirtualCharacter:
        if not isinstance(labels, Mapping):
            counts: dict[tuple[int, ...], int] = defaultdict(int)
            for lab in labels:
                counts[tuple(lab)] += 1
            labels = counts
        return cls({system.from_label(lab): m for lab, m in labels.items()}, system)

    @classmethod
    def one(cls, system: RootSystem = D5) -> VirtualCharacter:
        return cls._from_scaled(system, {(0,) * system.dim: 1})

    # -- views --------------------------------------------------------------
    @property
    def terms(self) -> dict[Weight, int]:
        return {self.system.from_scaled(k): v for k, v in self._terms.items()}

    def by_label(self) -> dict[tuple[int, ...], int]:
        return {self.system.label_scaled(k): v for k, v in self._terms.items()}

    def dimension(self) -> int:
        return sum(m * dimension(w) for w, m in self.terms.items())

    def evaluate(self, s: SatakeClass) -> complex:
        return sum((m * eval_character(w, s) for w, m in self.terms.items()), 0j)

    def support_size(self) -> int:
        return len(self._terms)

    def is_genuine(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    # -- ring structure -----------------------------------------------------
    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, VirtualCharacter):
            return self.system is other.system and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "VirtualCharacter(0)"
        items = sorted(self.by_label().items())
        return "VirtualCharacter({" + ", ".join(f"{k}: {v}" for k, v in items) + "})"

    def _check(self, other: VirtualCharacter):
        if self.system is not other.system:
            raise DomainError("virtual characters of different root systems")

    def __add__(self, other):
        if isinstance(other, int):
            other = VirtualCharacter.one(self.system) * other
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return VirtualCharacter._from_scaled(self.system, out)

    __radd__ = __add__

    def __neg__(self):
        return VirtualCharacter._from_scaled(self.system, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualCharacter._from_scaled(self.system, {k: v * other for k, v in self._terms.items()})
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        self._check(other)
        # Shift the larger factor by the weights of the smaller one.
        if _diagram_cost(self) < _diagram_cost(other):
            self, other = other, self
        out = VirtualCharacter._from_scaled(self.system, {})
        for mu, m in other._terms.items():
            out = out + _brauer_scaled(self, mu) * m
        return out

    def __rmul__(self, other):
        return self * other


def _diagram_cost(v: VirtualCharacter) -> int:
    return sum(len(_dominant_multiplicities(v.system, k)) for k in v._terms)


def _brauer_scaled(series_coeff: VirtualCharacter, mu: tuple[int, ...]) -> VirtualCharacter:
    sys = series_coeff.system
    rho = sys._rho_scaled
    out: dict[tuple[int, ...], int] = defaultdict(int)
    diagram = [
        (nu, m)
        for dom, m in _dominant_multiplicities(sys, mu)
        for nu in _orbit_scaled(sys, dom)
    ]
    for lam, c in series_coeff._terms.items():
        shifted = tuple(a + b for a, b in zip(lam, rho))
        for nu, m in diagram:
            t = tuple(a + b for a, b in zip(shifted, nu))
            if sys.on_wall_scaled(t):
                continue
            dom, sign = sys.dominant_scaled(t)
            out[tuple(a - b for a, b in zip(dom, rho))] += sign * m * c
    return VirtualCharacter._from_scaled(sys, out)


def brauer_shift_product(series_coeff: VirtualCharacter, mu: Weight) -> VirtualCharacter:
    """Multiply a virtual character by V(mu) using Brauer's formula.

    For each term lambda and each weight nu of V(mu), counted with
    multiplicity, add sign * V(|lambda + nu + rho| - rho); weights
    ``lambda + nu + rho`` on a wall contribute nothing.
    """
    if mu.system is not series_coeff.system:
        raise DomainError("mismatched root systems")
    if not mu.is_dominant():
        raise DomainError(f"{mu} is not dominant")
    return _brauer_scaled(series_coeff, mu.system.to_scaled(mu))


def tensor_decompose(lam: Weight, mu: Weight) -> VirtualCharacter:
    """Irreducible decomposition of V(lam) x V(mu)."""
    if lam.system is not mu.system:
        raise DomainError("mismatched root systems")
    for w in (lam, mu):
        if not w.is_dominant():
            raise DomainError(f"{w} is not dominant")
    return brauer_shift_product(VirtualCharacter.irreducible(lam), mu)


def okada_rhs(ell: int, m: int, system: RootSystem = D5) -> VirtualCharacter:
    """sum over a + b <= min(ell, m) of (a, 0, b, 0, ell + m - 2a - 2b)."""
    if ell < 0 or m < 0:
        raise DomainError("okada_rhs needs nonnegative arguments")
    labels = [
        (a, 0, b, 0, ell + m - 2 * a - 2 * b)
        for a in range(min(ell, m) + 1)
        for b in range(min(ell, m) - a + 1)
    ]
    return VirtualCharacter.from_labels(labels, system)
