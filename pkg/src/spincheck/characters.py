"""Weight multiplicities, dimensions and character values.

Multiplicities come from Freudenthal's recursion on dominant weights;
characters are evaluated as weight sums, grouped by Weyl orbits so that a
single matrix of conjugated torus angles serves every orbit.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError
from .lie_core import D5, RootSystem, Weight, enumerate_weyl_group
from .polynomials import LaurentPoly

__all__ = [
    "WeightDiagram",
    "SatakeClass",
    "weight_multiplicities",
    "dimension",
    "eval_character",
    "eval_character_alternant",
    "k_factor",
]


# ---------------------------------------------------------------------------
# Freudenthal recursion on scaled integer weights
# ---------------------------------------------------------------------------

def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _add(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(sys: RootSystem, top: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """((mu, mult), ...) for the dominant weights mu of V(top), highest first."""
    pos = sys._pos_scaled
    # Dominant weights below `top`: chains of dominant weights differing by positive roots.
    found = {top: 0}
    frontier = [top]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = _add(mu, a, -1)
                if nu not in found and sys.is_dominant_scaled(nu):
                    found[nu] = found[mu] + 1
                    nxt.append(nu)
        frontier = nxt
    rho = sys._rho_scaled
    lr = _add(top, rho)
    norm_top = _dot(lr, lr)
    # Height below `top` measured against rho^vee orders the recursion.
    order = sorted(found, key=lambda mu: (_dot(_add(top, mu, -1), rho), mu), reverse=False)
    mult: dict[tuple[int, ...], int] = {}
    for mu in order:
        if mu == top:
            mult[mu] = 1
            continue
        num = 0
        for a in pos:
            k = 1
            while True:
                nu = _add(mu, a, k)
                dom, _ = sys.dominant_scaled(nu)
                m = mult.get(dom)
                if m is None:
                    break
                num += m * _dot(nu, a)
                k += 1
        mr = _add(mu, rho)
        den = norm_top - _dot(mr, mr)
        q, r = divmod(2 * num, den)
        if r:
            raise ArithmeticError(f"Freudenthal recursion produced a non-integer at {mu}")
        if q:
            mult[mu] = q
    return tuple((mu, mult[mu]) for mu in order if mu in mult)


def _orbit_scaled(sys: RootSystem, t: tuple[int, ...]) -> set[tuple[int, ...]]:
    perms, signs, _ = _weyl_arrays(sys)
    img = np.empty(perms.shape, dtype=np.int64)
    img[np.arange(perms.shape[0])[:, None], perms] = signs.astype(np.int64) * np.asarray(t)[None, :]
    return set(map(tuple, np.unique(img, axis=0).tolist()))


@lru_cache(maxsize=None)
def _weyl_list(sys: RootSystem):
    return enumerate_weyl_group(sys)


@lru_cache(maxsize=None)
def _weyl_arrays(sys: RootSystem):
    """(perms, signs, dets) as numpy arrays over the whole Weyl group."""
    group = _weyl_list(sys)
    perms = np.array([w.perm for w in group], dtype=np.intp)
    signs = np.array([w.signs for w in group], dtype=float)
    dets = np.array([w.det for w in group], dtype=float)
    return perms, signs, dets


@lru_cache(maxsize=64)
def _conjugates_cached(sys: RootSystem, thetas: tuple) -> np.ndarray:
    return _conjugates(sys, np.asarray(thetas, dtype=complex))


def _conjugates(sys: RootSystem, theta: np.ndarray) -> np.ndarray:
    """Rows w(theta) for every Weyl element w."""
    perms, signs, _ = _weyl_arrays(sys)
    out = np.empty(perms.shape, dtype=complex)
    rows = np.arange(perms.shape[0])[:, None]
    out[rows, perms] = signs * theta[None, :]
    return out


def _stabilizer_sizes(sys: RootSystem, weights: np.ndarray) -> np.ndarray:
    perms, signs, _ = _weyl_arrays(sys)
    counts = np.empty(len(weights), dtype=float)
    rows = np.arange(perms.shape[0])[:, None]
    for k, mu in enumerate(weights):
        img = np.empty(perms.shape)
        img[rows, perms] = signs * mu[None, :]
        counts[k] = np.count_nonzero(np.all(img == mu[None, :], axis=1))
    return counts


# ---------------------------------------------------------------------------
# Public types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class WeightDiagram:
    """All weights of an irreducible representation, with multiplicities."""

    highest_weight: Weight
    dominant: dict = field(repr=False)
    dimension: int

    @cached_property
    def mults(self) -> dict[Weight, int]:
        sys = self.highest_weight.system
        out: dict[Weight, int] = {}
        for mu, m in self.dominant.items():
            for nu in _orbit_scaled(sys, sys.to_scaled(mu)):
                out[sys.from_scaled(nu)] = m
        return out

    def __len__(self):
        return len(self.mults)

    def scaled_items(self):
        """Yield (scaled weight, multiplicity) over the full diagram."""
        sys = self.highest_weight.system
        for mu, m in self.dominant.items():
            for nu in _orbit_scaled(sys, sys.to_scaled(mu)):
                yield nu, m


@dataclass(frozen=True)
class SatakeClass:
    """Semisimple class in the dual torus plus the GL_2 character value chi.

    Torus coordinates are ``t_j = exp(i * thetas[j])``; complex angles give
    non-unitary classes.
    """

    thetas: tuple[complex, ...]
    chi: complex
    tempered: bool = True

    def __post_init__(self):
        if self.chi == 0:
            raise DomainError("chi must be nonzero")
        if self.tempered:
            if any(abs(complex(t).imag) > 1e-15 for t in self.thetas):
                raise DomainError("tempered class requires real angles")
            if abs(abs(self.chi) - 1) > 1e-12:
                raise DomainError("tempered class requires |chi| = 1")

    @classmethod
    def random(cls, rng: np.random.Generator, rank: int = 5, tempered: bool = True) -> SatakeClass:
        thetas = rng.uniform(0.0, 2 * math.pi, size=rank)
        phase = rng.uniform(0.0, 2 * math.pi)
        if tempered:
            return cls(tuple(float(t) for t in thetas), cmath.exp(1j * phase), True)
        # Off the unit circle: moduli in [1/2, 2].
        logs = rng.uniform(-math.log(2), math.log(2), size=rank + 1)
        return cls(
            tuple(complex(t, -l) for t, l in zip(thetas, logs[:rank])),
            cmath.exp(complex(logs[rank], phase)),
            False,
        )

    @classmethod
    def identity(cls, rank: int = 5, chi: complex = 1.0) -> SatakeClass:
        return cls((0.0,) * rank, chi, abs(abs(chi) - 1) < 1e-12)

    @property
    def torus(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.thetas, dtype=complex))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def _require_dominant(lam: Weight):
    if not lam.is_dominant():
        raise DomainError(f"{lam} is not dominant")


def weight_multiplicities(lam: Weight) -> WeightDiagram:
    """Weight diagram of the irreducible representation with highest weight ``lam``."""
    _require_dominant(lam)
    sys = lam.system
    dom = _dominant_multiplicities(sys, sys.to_scaled(lam))
    dominant = {sys.from_scaled(mu): m for mu, m in dom}
    return WeightDiagram(lam, dominant, dimension(lam))


def dimension(lam: Weight) -> int:
    """Weyl dimension formula."""
    _require_dominant(lam)
    sys = lam.system
    num = Fraction(1)
    lr = lam + sys.rho
    for a in sys.positive_roots:
        num *= lr.dot(a) / sys.rho.dot(a)
    assert num.denominator == 1
    return int(num)


def _theta_array(s: SatakeClass, sys: RootSystem) -> np.ndarray:
    theta = np.asarray(s.thetas, dtype=complex)
    if theta.shape != (sys.dim,):
        raise DomainError(f"{sys.name} needs {sys.dim} torus angles, got {theta.shape[0]}")
    return theta


@lru_cache(maxsize=4096)
def _orbit_table(sys: RootSystem, top: tuple[int, ...]):
    """Dominant weights (unscaled floats), multiplicities and orbit sizes."""
    dom = _dominant_multiplicities(sys, top)
    weights = np.array([mu for mu, _ in dom], dtype=float) / sys.scale
    mults = np.array([m for _, m in dom], dtype=float)
    stab = _stabilizer_sizes(sys, weights)
    return weights, mults, stab


def character_sum(sys: RootSystem, top: tuple[int, ...], conj: np.ndarray) -> complex:
    """Weight-sum character value given the conjugate-angle matrix ``conj``."""
    weights, mults, stab = _orbit_table(sys, top)
    phases = np.exp(1j * (weights @ conj.T))  # (orbits, |W|)
    return complex(np.sum(mults * phases.sum(axis=1) / stab))


def eval_character(lam: Weight, s: SatakeClass) -> complex:
    """Sum over the weight diagram of mult(w) exp(i <w, theta>)."""
    _require_dominant(lam)
    sys = lam.system
    _theta_array(s, sys)
    conj = _conjugates_cached(sys, tuple(s.thetas))
    return character_sum(sys, sys.to_scaled(lam), conj)


def _alternant(sys: RootSystem, conj: np.ndarray, weight: Weight) -> complex:
    _, _, dets = _weyl_arrays(sys)
    w = np.array([float(c) for c in weight.coords])
    return complex(np.sum(dets * np.exp(1j * (conj @ w))))


def weyl_denominator(s: SatakeClass, sys: RootSystem = D5) -> complex:
    """Alternant of rho at ``s``; zero exactly on singular classes.

    Its size controls how many digits the alternant ratio loses to cancellation.
    """
    return _alternant(sys, _conjugates(sys, _theta_array(s, sys)), sys.rho)


def eval_character_alternant(lam: Weight, s: SatakeClass) -> complex:
    """Weyl's alternant ratio; only meaningful on regular classes."""
    _require_dominant(lam)
    sys = lam.system
    conj = _conjugates(sys, _theta_array(s, sys))
    num = _alternant(sys, conj, lam + sys.rho)
    den = _alternant(sys, conj, sys.rho)
    if abs(den) < 1e-12 * max(1.0, abs(num)):
        raise DomainError("class is not regular; the Weyl denominator vanishes")
    return complex(num / den)


def _one_minus(exponent: int) -> LaurentPoly:
    return LaurentPoly({0: 1, exponent: -1})


def k_factor(n1: int, n2: int, n3: int, n5: int) -> LaurentPoly:
    """Closed form of l(n2, n3) x (n1) x (n5) as a Laurent polynomial in chi."""
    if min(n1, n2, n3, n5) < 0:
        raise DomainError("k_factor arguments must be nonnegative")
    num = (
        _one_minus(2 * (n2 + 1))
        * _one_minus(2 * (n3 + 1))
        * _one_minus(2 * (n2 + n3 + 2))
        * _one_minus(2 * (n1 + 1))
        * _one_minus(2 * (n5 + 1))
    )
    den = _one_minus(2) ** 4 * _one_minus(4)
    return num.divmod_exact(den).shift(-(n1 + 2 * n2 + 2 * n3 + n5))


def spin_rep(label: Sequence[int], sys: RootSystem = D5) -> Weight:
    """Shorthand for ``sys.from_label(label)``."""
    return sys.from_label(label)
