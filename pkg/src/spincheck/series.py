"""Generating functions in (chi, y) over the representation ring of Spin_10.

Symbolic series have y-coefficients that are :class:`LaurentPoly` in chi
with :class:`VirtualCharacter` coefficients.  :func:`evaluate_series` is the
ring homomorphism to complex series at a fixed :class:`SatakeClass`.
"""
from __future__ import annotations

from typing import Literal

from .characters import SatakeClass, WeightDiagram
from .errors import DomainError
from .lie_core import D5
from .polynomials import LaurentPoly, MultiLaurent, TruncatedSeries
from .rep_ring import VirtualCharacter

__all__ = [
    "LaurentPoly",
    "TruncatedSeries",
    "MultiLaurent",
    "p_poly",
    "p_poly_terms",
    "brion_spin_series",
    "spin_cartan_series",
    "euler_factor_series",
    "evaluate_series",
]

SYMBOLIC_ORDER = 12
NUMERIC_ORDER = 10

# P(chi, y) as (rep label, sign, chi-and-y degree) triples.  Every monomial has
# equal chi and y exponents, so one integer carries both.
_P_TERMS = {
    # (1 - u^8) + (u^6 - u^2) varpi_1 + u^3 varpi_4 - u^5 varpi_5,  u = chi*y
    "resolution": (
        ((0, 0, 0, 0, 0), +1, 0),
        ((0, 0, 0, 0, 0), -1, 8),
        ((1, 0, 0, 0, 0), +1, 6),
        ((1, 0, 0, 0, 0), -1, 2),
        ((0, 0, 0, 1, 0), +1, 3),
        ((0, 0, 0, 0, 1), -1, 5),
    ),
    # Same, with the vector-rep term carrying an extra factor chi^2 y^2.
    "literal": (
        ((0, 0, 0, 0, 0), +1, 0),
        ((0, 0, 0, 0, 0), -1, 8),
        ((1, 0, 0, 0, 0), +1, 8),
        ((1, 0, 0, 0, 0), -1, 4),
        ((0, 0, 0, 1, 0), +1, 3),
        ((0, 0, 0, 0, 1), -1, 5),
    ),
}

PParse = Literal["resolution", "literal"]


def p_poly_terms(parse: PParse = "resolution") -> tuple[tuple[tuple[int, ...], int, int], ...]:
    """The monomials of P as ``(label, sign, degree)``; chi and y share the degree."""
    try:
        return _P_TERMS[parse]
    except KeyError:
        raise DomainError(f"unknown P parse {parse!r}") from None


def p_poly(inverse: bool = False, order: int | None = None, parse: PParse = "resolution") -> TruncatedSeries:
    """P(chi, y), or P(chi^-1, y) when ``inverse`` is set.

    The result is a y-series (padded with zeros up to ``order``) whose
    coefficients are Laurent polynomials in chi over the representation
    ring.  ``parse="literal"`` keeps the stray chi^2 y^2 on the vector-rep
    term; that variant does not satisfy the annihilation identity.
    """
    terms = p_poly_terms(parse)
    top = max(d for _, _, d in terms)
    order = top if order is None else order
    sign_chi = -1 if inverse else 1
    coeffs = [LaurentPoly() for _ in range(order + 1)]
    for label, sign, d in terms:
        if d > order:
            continue
        rep = VirtualCharacter.from_labels({label: sign})
        coeffs[d] = coeffs[d] + LaurentPoly.monomial(sign_chi * d, rep)
    return TruncatedSeries(order, coeffs, LaurentPoly())


def brion_spin_series(N: int, inverse: bool = False) -> TruncatedSeries:
    """sum over 2m + l <= N of (m, 0, 0, 0, l) chi^(2m+l) y^(2m+l).

    With ``inverse`` the chi exponents are negated.
    """
    if N < 0:
        raise DomainError("N must be >= 0")
    sign = -1 if inverse else 1
    coeffs = []
    for d in range(N + 1):
        labels = {(m, 0, 0, 0, d - 2 * m): 1 for m in range(d // 2 + 1)}
        coeffs.append(LaurentPoly.monomial(sign * d, VirtualCharacter.from_labels(labels)))
    return TruncatedSeries(N, coeffs, LaurentPoly())


def spin_cartan_series(N: int, inverse: bool = False) -> TruncatedSeries:
    """sum over l <= N of (0, 0, 0, 0, l) chi^l y^l (the right side of the annihilation identity)."""
    sign = -1 if inverse else 1
    coeffs = [
        LaurentPoly.monomial(sign * d, VirtualCharacter.from_labels({(0, 0, 0, 0, d): 1}))
        for d in range(N + 1)
    ]
    return TruncatedSeries(N, coeffs, LaurentPoly())


def euler_factor_series(weights: WeightDiagram, s: SatakeClass, chi_power: int, N: int) -> TruncatedSeries:
    """Truncation of prod over weights w of (1 - e^{i<w,theta>} chi^chi_power y)^-1."""
    if chi_power not in (1, -1):
        raise DomainError("chi_power must be +1 or -1")
    if N < 0:
        raise DomainError("N must be >= 0")
    import numpy as np

    sys = weights.highest_weight.system
    theta = np.asarray(s.thetas, dtype=complex)
    chi = complex(s.chi) ** chi_power
    coeffs = np.zeros(N + 1, dtype=complex)
    coeffs[0] = 1.0
    for nu, m in weights.scaled_items():
        ev = np.exp(1j * np.dot(np.asarray(nu, dtype=float) / sys.scale, theta)) * chi
        for _ in range(m):
            # Multiplying by 1/(1 - ev y) is a running prefix recursion.
            for d in range(1, N + 1):
                coeffs[d] += ev * coeffs[d - 1]
    return TruncatedSeries(N, [complex(c) for c in coeffs])


def _eval_coeff(c, s: SatakeClass) -> complex:
    if isinstance(c, LaurentPoly):
        return complex(c.evaluate(complex(s.chi), lambda v: _eval_coeff(v, s)))
    if isinstance(c, VirtualCharacter):
        return c.evaluate(s)
    return complex(c)


def evaluate_series(series: TruncatedSeries, s: SatakeClass) -> TruncatedSeries:
    """Push every coefficient through the character map at ``s``."""
    return TruncatedSeries(series.order, [_eval_coeff(c, s) for c in series.coeffs])
