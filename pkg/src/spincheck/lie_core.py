"""Root systems of type A_n and D_n, weights, and Weyl groups.

Weights live in the orthogonal e-basis with exact rational coordinates.
For D_n the simple roots follow Bourbaki::

    alpha_i = e_i - e_{i+1}   (1 <= i <= n-1)
    alpha_n = e_{n-1} + e_n

so that for D_5 the half-spin highest weights are
``varpi_4 = (1/2, 1/2, 1/2, 1/2, -1/2)`` and ``varpi_5 = (1/2, ..., 1/2)``.
For A_n the e-basis has n+1 coordinates and weights are kept traceless.

The hot loops elsewhere in the package work on *scaled* integer tuples
(coordinates multiplied by ``RootSystem.scale``); :class:`Weight` is the
public, exact type.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .errors import ConfigurationError, DomainError

__all__ = [
    "RootSystem",
    "Weight",
    "WeylElement",
    "build_root_system",
    "dominant_representative",
    "enumerate_weyl_group",
    "D5",
]

# Largest Weyl group we are willing to list element by element.
MAX_WEYL_ORDER = 50_000


@dataclass(frozen=True, eq=False)
class Weight:
    """A weight of a root system, in orthogonal coordinates."""

    coords: tuple[Fraction, ...]
    system: "RootSystem" = field(repr=False)

    def __post_init__(self):
        if len(self.coords) != self.system.dim:
            raise DomainError(
                f"expected {self.system.dim} coordinates, got {len(self.coords)}"
            )

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.system is other.system and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other: Weight) -> Weight:
        _check_same(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: Weight) -> Weight:
        _check_same(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.system)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.system)

    def __mul__(self, k) -> Weight:
        k = Fraction(k)
        return Weight(tuple(k * a for a in self.coords), self.system)

    __rmul__ = __mul__

    def dot(self, other: Weight) -> Fraction:
        _check_same(self, other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def coroot_pairing(self, root: Weight) -> Fraction:
        """<self, root^vee> = 2 (self, root) / (root, root)."""
        return 2 * self.dot(root) / root.dot(root)

    def is_dominant(self) -> bool:
        return self.system.is_dominant_scaled(self.system.to_scaled(self))

    def fundamental_coords(self) -> tuple[Fraction, ...]:
        """Coefficients m_i with self = sum m_i varpi_i (on the semisimple part)."""
        return tuple(self.coroot_pairing(a) for a in self.system.simple_roots)

    def label(self) -> tuple[int, ...]:
        """Integral fundamental-weight label; raises if the weight is not integral."""
        out = []
        for c in self.fundamental_coords():
            if c.denominator != 1:
                raise DomainError(f"{self} is not an integral weight")
            out.append(int(c))
        return tuple(out)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"Weight({self.system.name}: {self})"


def _check_same(a: Weight, b: Weight):
    if a.system is not b.system:
        raise DomainError("weights belong to different root systems")


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation ``e_i -> signs[i] * e_{perm[i]}``.

    Type A elements carry all-positive signs; type D elements an even
    number of minus signs.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def act_scaled(self, v: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(v)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)

    def act(self, w: Weight) -> Weight:
        out = [Fraction(0)] * len(w.coords)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * w.coords[i]
        return Weight(tuple(out), w.system)

    __call__ = act

    def compose(self, other: WeylElement) -> WeylElement:
        """self o other."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return WeylElement(perm, signs)

    def inverse(self) -> WeylElement:
        n = len(self.perm)
        perm = [0] * n
        signs = [0] * n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return WeylElement(tuple(perm), tuple(signs))

    @property
    def det(self) -> int:
        return _perm_sign(self.perm) * math.prod(self.signs)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class RootSystem:
    """Root datum of type A_n or D_n in the orthogonal e-basis."""

    def __init__(self, type_tag: str, rank: int):
        self.type_tag = type_tag
        self.rank = rank
        self.dim = rank + 1 if type_tag == "A" else rank
        # Every weight coordinate times `scale` is an integer.
        self.scale = 2 * (rank + 1) if type_tag == "A" else 2

        n = self.dim
        simple: list[tuple[int, ...]] = []
        for i in range(n - 1):
            simple.append(_unit(n, i, 1, i + 1, -1))
        if type_tag == "D":
            simple.append(_unit(n, n - 2, 1, n - 1, 1))
        positive: list[tuple[int, ...]] = []
        for i, j in itertools.combinations(range(n), 2):
            positive.append(_unit(n, i, 1, j, -1))
            if type_tag == "D":
                positive.append(_unit(n, i, 1, j, 1))

        self.simple_roots = tuple(self._w(r) for r in simple)
        self.positive_roots = tuple(self._w(r) for r in positive)
        two_rho = [sum(r[k] for r in positive) for k in range(n)]
        self.rho = self._w(tuple(Fraction(c, 2) for c in two_rho))
        self.fundamental_weights = tuple(self._fundamental(i) for i in range(rank))

        s = self.scale
        self._pos_scaled = tuple(tuple(s * c for c in r) for r in positive)
        self._simple_scaled = tuple(tuple(s * c for c in r) for r in simple)
        self._rho_scaled = self.to_scaled(self.rho)

    @property
    def name(self) -> str:
        return f"{self.type_tag}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    # -- construction helpers -------------------------------------------
    def _w(self, coords: Iterable) -> Weight:
        return Weight(tuple(Fraction(c) for c in coords), self)

    def _fundamental(self, i: int) -> Weight:
        n = self.dim
        if self.type_tag == "A":
            k = i + 1
            return self._w(
                [Fraction(n - k, n) if j < k else Fraction(-k, n) for j in range(n)]
            )
        half = Fraction(1, 2)
        if i < n - 2:
            return self._w([1 if j <= i else 0 for j in range(n)])
        if i == n - 2:
            return self._w([half] * (n - 1) + [-half])
        return self._w([half] * n)

    def weight(self, coords: Iterable) -> Weight:
        """Weight from orthogonal coordinates (anything Fraction accepts)."""
        return self._w(coords)

    def from_label(self, label: Sequence[int]) -> Weight:
        """The weight sum m_i varpi_i for a label (m_1, ..., m_rank)."""
        if len(label) != self.rank:
            raise DomainError(f"label needs {self.rank} entries, got {len(label)}")
        coords = [Fraction(0)] * self.dim
        for m, fw in zip(label, self.fundamental_weights):
            for k, c in enumerate(fw.coords):
                coords[k] += m * c
        return Weight(tuple(coords), self)

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    # -- scaled integer interface ---------------------------------------
    def to_scaled(self, w: Weight) -> tuple[int, ...]:
        out = []
        for c in w.coords:
            v = c * self.scale
            if v.denominator != 1:
                raise DomainError(f"{w} is not in the weight lattice")
            out.append(int(v))
        return tuple(out)

    def from_scaled(self, t: Sequence[int]) -> Weight:
        return Weight(tuple(Fraction(c, self.scale) for c in t), self)

    def label_scaled(self, t: Sequence[int]) -> tuple[int, ...]:
        """Fundamental-weight label of a scaled weight (roots have length^2 2)."""
        s = self.scale
        out = []
        for a in self._simple_scaled:
            num = sum(x * y for x, y in zip(t, a))
            q, r = divmod(num, s * s)
            if r:
                raise DomainError("not an integral weight")
            out.append(q)
        return tuple(out)

    def is_dominant_scaled(self, t: Sequence[int]) -> bool:
        for a in self._simple_scaled:
            if sum(x * y for x, y in zip(t, a)) < 0:
                return False
        return True

    def dominant_scaled(self, t: Sequence[int]) -> tuple[tuple[int, ...], int]:
        """Dominant Weyl-orbit representative and the permutation sign.

        The sign is det of *a* Weyl element achieving it; it is only
        meaningful for regular weights (callers test walls separately).
        """
        if self.type_tag == "A":
            order = sorted(range(len(t)), key=lambda i: -t[i])
            return tuple(t[i] for i in order), _perm_sign(_inverse_order(order))
        order = sorted(range(len(t)), key=lambda i: -abs(t[i]))
        dom = [abs(t[i]) for i in order]
        negatives = sum(1 for c in t if c < 0)
        if negatives % 2 and dom[-1] != 0:
            dom[-1] = -dom[-1]
        return tuple(dom), _perm_sign(_inverse_order(order))

    def on_wall_scaled(self, t: Sequence[int]) -> bool:
        """True iff some reflection fixes t, i.e. the stabilizer is nontrivial."""
        for a in self._pos_scaled:
            if sum(x * y for x, y in zip(t, a)) == 0:
                return True
        return False

    def weyl_order(self) -> int:
        if self.type_tag == "A":
            return math.factorial(self.dim)
        return 2 ** (self.dim - 1) * math.factorial(self.dim)


def _inverse_order(order: Sequence[int]) -> list[int]:
    # order[k] = source index placed at slot k; the acting permutation sends i -> slot.
    inv = [0] * len(order)
    for k, i in enumerate(order):
        inv[i] = k
    return inv


def _unit(n: int, i: int, a: int, j: int, b: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = a
    v[j] = b
    return tuple(v)


@cache
def build_root_system(type_tag: str, rank: int) -> RootSystem:
    """Return the (cached) root system of the given type and rank."""
    if type_tag not in ("A", "D"):
        raise ConfigurationError(f"unsupported type {type_tag!r}; expected 'A' or 'D'")
    if not isinstance(rank, int) or rank < 1:
        raise ConfigurationError(f"rank must be a positive integer, got {rank!r}")
    if type_tag == "D" and rank < 3:
        raise ConfigurationError("type D requires rank >= 3")
    return RootSystem(type_tag, rank)


D5 = build_root_system("D", 5)


def dominant_representative(w: Weight) -> tuple[Weight, int]:
    """Dominant member of the Weyl orbit of ``w`` and the Brauer sign.

    The sign is det(sigma) for the unique sigma with sigma(w) dominant, or 0
    when ``w`` has a nontrivial stabilizer.
    """
    sys = w.system
    t = sys.to_scaled(w)
    dom, sign = sys.dominant_scaled(t)
    if sys.on_wall_scaled(t):
        sign = 0
    return sys.from_scaled(dom), sign


def enumerate_weyl_group(sys: RootSystem) -> list[WeylElement]:
    """All elements of the Weyl group, as signed permutations."""
    if sys.weyl_order() > MAX_WEYL_ORDER:
        raise ConfigurationError(
            f"Weyl group of {sys.name} has {sys.weyl_order()} elements; too large to enumerate"
        )
    n = sys.dim
    if sys.type_tag == "A":
        ones = (1,) * n
        return [WeylElement(p, ones) for p in itertools.permutations(range(n))]
    sign_choices = [
        s for s in itertools.product((1, -1), repeat=n) if s.count(-1) % 2 == 0
    ]
    return [
        WeylElement(p, s)
        for p in itertools.permutations(range(n))
        for s in sign_choices
    ]
