"""Executable checks of the finite identities behind the L-function computation.

Every ``verify_*`` function returns a :class:`CheckReport` and never raises
on a failed identity.  Symbolic checks demand an exactly zero residual;
numeric checks compare y-coefficients at seeded random Satake classes.

Index convention
----------------
The generating functions are indexed by a quintuple ``n = (n1, ..., n5)``
whose representation is ``n2 w1 + n3 w2 + n4 w3 + n5 w4 + n1 w5`` in
Bourbaki labels.  :func:`index_to_label` and :func:`label_to_index` are the
only place this permutation is spelled out.
"""
from __future__ import annotations

import time
from itertools import product
from typing import Callable, Iterator, Sequence

import numpy as np

from .characters import SatakeClass, dimension, eval_character, k_factor, weight_multiplicities
from .errors import DomainError
from .lie_core import D5
from .polynomials import LaurentPoly, MultiLaurent
from .report import EXACT_ZERO, CheckReport
from .rep_ring import okada_rhs, tensor_decompose
from .series import (
    brion_spin_series,
    euler_factor_series,
    evaluate_series,
    p_poly,
    p_poly_terms,
    spin_cartan_series,
)

__all__ = [
    "DEFAULT_TOL",
    "ABS_FLOOR",
    "index_to_label",
    "label_to_index",
    "weight_exponent",
    "shift_set",
    "g_coefficient",
    "h_coefficient",
    "verify_okada",
    "verify_p_annihilation",
    "verify_g_identity",
    "verify_q_sums",
    "verify_h_collapse",
    "verify_main_identity",
    "verify_prop4_euler",
    "verify_brion",
    "main_identity_sides",
    "prop4_sides",
    "main_identity_integer_sides",
]

DEFAULT_TOL = 1e-9
ABS_FLOOR = 1e-12

VECTOR = (1, 0, 0, 0, 0)
HALF_SPIN_PLUS = (0, 0, 0, 1, 0)
HALF_SPIN_MINUS = (0, 0, 0, 0, 1)


# ---------------------------------------------------------------------------
# Index adapter
# ---------------------------------------------------------------------------

def index_to_label(n: Sequence[int]) -> tuple[int, ...]:
    n1, n2, n3, n4, n5 = n
    return (n2, n3, n4, n5, n1)


def label_to_index(label: Sequence[int]) -> tuple[int, ...]:
    c1, c2, c3, c4, c5 = label
    return (c5, c1, c2, c3, c4)


def weight_exponent(n: Sequence[int]) -> int:
    """y-degree n1 + 2 n2 + 4 n3 + 2 n4 + 3 n5."""
    n1, n2, n3, n4, n5 = n
    return n1 + 2 * n2 + 4 * n3 + 2 * n4 + 3 * n5


def _chi_weight(n: Sequence[int]) -> int:
    """n1 + 2 n2 + 2 n3 + n5: minus the chi-exponent of the common factor."""
    n1, n2, n3, _, n5 = n
    return n1 + 2 * n2 + 2 * n3 + n5


def shift_set(label: Sequence[int], swap_half_spin: bool = False) -> list[tuple[int, ...]]:
    """Weights of V(label) in index coordinates, repeated by multiplicity."""
    label = tuple(label)
    if swap_half_spin and label in (HALF_SPIN_PLUS, HALF_SPIN_MINUS):
        label = HALF_SPIN_MINUS if label == HALF_SPIN_PLUS else HALF_SPIN_PLUS
    diagram = weight_multiplicities(D5.from_label(label))
    out = []
    for w, m in diagram.mults.items():
        coords = tuple(int(c) for c in w.fundamental_coords())
        out += [label_to_index(coords)] * m
    return sorted(out)


# ---------------------------------------------------------------------------
# Coefficient polynomials in (chi, y)
# ---------------------------------------------------------------------------

_CY = ("chi", "y")


def _cy(chi: int = 0, y: int = 0, c=1) -> MultiLaurent:
    return MultiLaurent(_CY, {(chi, y): c})


def _from_chi(p: LaurentPoly) -> MultiLaurent:
    return MultiLaurent(_CY, {(k, 0): v for k, v in p})


def _q_integer(a: int) -> LaurentPoly:
    """(1 - chi^(2a)) / (1 - chi^2) for a >= 0, and 0 at a = 0."""
    return LaurentPoly({2 * j: 1 for j in range(a)})


def g_coefficient(n: Sequence[int]) -> MultiLaurent:
    """k(n1, n2, n3, n5) y^e(n) (1 - y^(4(n4+1))) for n >= 0."""
    n1, n2, n3, n4, n5 = n
    if min(n) < 0:
        raise DomainError(f"index must be nonnegative: {tuple(n)}")
    e = weight_exponent(n)
    return _from_chi(k_factor(n1, n2, n3, n5)) * (_cy(y=e) - _cy(y=e + 4 * (n4 + 1)))


def h_coefficient(n: Sequence[int]) -> MultiLaurent:
    """[n1+1][n2+1] chi^-(n1+2n2+2n3+n5) y^e(n) for n >= 0."""
    n1, n2 = n[0], n[1]
    if min(n) < 0:
        raise DomainError(f"index must be nonnegative: {tuple(n)}")
    return _from_chi(_q_integer(n1 + 1) * _q_integer(n2 + 1)) * _cy(-_chi_weight(n), weight_exponent(n))


def _g_target(n) -> MultiLaurent:
    n1, n2 = n[0], n[1]
    lead = _from_chi(_q_integer(n1 + 1) * _q_integer(n2 + 1)) * _cy(-_chi_weight(n), weight_exponent(n))
    return (_cy() - _cy(y=4)) ** 2 * lead


def _h_target(n) -> MultiLaurent:
    n1, n2, n3, n4, n5 = n
    if n3 or n5:
        return MultiLaurent(_CY)
    return _from_chi(_q_integer(n1 + 1)) * _cy(-n1, 2 * n2 + 2 * n4 + n1)


def _brauer_coefficients(coeff: Callable, inverse: bool, bound: int) -> dict[tuple, MultiLaurent]:
    """Coefficient of every V(n), n in [0, bound]^5, in P(chi^{+-1}, y) * sum_m V(m) coeff(m).

    Products are taken with :func:`tensor_decompose`.  All weights of the
    three small representations have index entries in {-1, 0, 1}, so only
    m in [0, bound + 1]^5 reach the target box.
    """
    sign_chi = -1 if inverse else 1
    out: dict[tuple, MultiLaurent] = {}
    for m in product(range(bound + 2), repeat=5):
        cm = coeff(m)
        if not cm:
            continue
        lam = D5.from_label(index_to_label(m))
        for label, sign, d in p_poly_terms():
            prod = tensor_decompose(lam, D5.from_label(label))
            for nu_label, mult in prod.by_label().items():
                n = label_to_index(nu_label)
                if max(n) > bound:
                    continue
                term = cm * _cy(sign_chi * d, d, sign * mult)
                out[n] = out.get(n, MultiLaurent(_CY)) + term
    return out


# ---------------------------------------------------------------------------
# Symbolic checks
# ---------------------------------------------------------------------------

def _elapsed(start: float) -> float:
    return (time.perf_counter() - start) * 1000


def verify_okada(max_l: int = 3, max_m: int = 3) -> CheckReport:
    """V(l w5) x V(m w5) against the multiplicity-free Okada sum, for l, m in range."""
    start = time.perf_counter()
    if not (0 <= max_l <= 4 and 0 <= max_m <= 4):
        return CheckReport("okada", False, "bounds out of range",
                           {"max_l": max_l, "max_m": max_m}, _elapsed(start),
                           {"error": "bounds must lie in 0..4"})
    mismatches = []
    pairs = []
    for ell in range(max_l + 1):
        for m in range(max_m + 1):
            lhs = tensor_decompose(D5.from_label((0, 0, 0, 0, ell)), D5.from_label((0, 0, 0, 0, m)))
            rhs = okada_rhs(ell, m)
            ok = lhs == rhs
            pairs.append({"l": ell, "m": m, "support_size": rhs.support_size(),
                          "dimension": rhs.dimension(), "ok": ok})
            if not ok:
                diff = lhs - rhs
                mismatches.append({"l": ell, "m": m, "difference": {str(k): v for k, v in diff.by_label().items()}})
    passed = not mismatches
    return CheckReport(
        "okada", passed, EXACT_ZERO if passed else len(mismatches),
        {"max_l": max_l, "max_m": max_m}, _elapsed(start),
        {"pairs": pairs, "mismatches": mismatches},
    )


def verify_p_annihilation(N: int = 12, parse: str = "resolution") -> CheckReport:
    """P(chi, y) times the Brion series equals sum_d (0,0,0,0,d) chi^d y^d through y^N."""
    start = time.perf_counter()
    params = {"N": N, "parse": parse}
    if not 0 <= N <= 14:
        return CheckReport("p-annihilation", False, "N out of range", params, _elapsed(start),
                           {"error": "N must lie in 0..14"})
    lhs = p_poly(order=N, parse=parse) * brion_spin_series(N)
    rhs = spin_cartan_series(N)
    bad = []
    for d in range(N + 1):
        diff = lhs[d] - rhs[d]
        if diff:
            bad.append({"degree": d, "residual": {str(k): repr(v) for k, v in diff}})
    passed = not bad
    return CheckReport(
        "p-annihilation", passed, EXACT_ZERO if passed else len(bad), params, _elapsed(start),
        {"failing_degrees": [b["degree"] for b in bad], "first_failure": bad[0] if bad else None},
    )


_G_NAMES = ("X1", "X2", "X3", "X5", "Y4", "chi", "y")


def _g_symbolic_residual(swap_half_spin: bool) -> tuple[MultiLaurent, dict[str, int]]:
    names = _G_NAMES
    one = MultiLaurent.const(names)

    def mono(**e):
        return MultiLaurent.monomial(names, e)

    X1, X2, X3, X5, Y4 = (MultiLaurent.var(names, v) for v in names[:5])

    # g_[n - w] divided by chi^-(n1+2n2+2n3+n5) y^e(n), times (1-chi^2)^4 (1-chi^4).
    def shifted(w):
        w1, w2, w3, w4, w5 = w
        num = ((one - X2 * mono(chi=-2 * w2)) * (one - X3 * mono(chi=-2 * w3))
               * (one - X2 * X3 * mono(chi=-2 * (w2 + w3)))
               * (one - X1 * mono(chi=-2 * w1)) * (one - X5 * mono(chi=-2 * w5)))
        return (num * mono(chi=w1 + 2 * w2 + 2 * w3 + w5, y=-weight_exponent(w))
                * (one - Y4 * mono(y=4 - 4 * w4)))

    lhs = MultiLaurent(names)
    sizes = {}
    for label, sign, d in p_poly_terms():
        ws = shift_set(label, swap_half_spin)
        sizes[str(label)] = len(ws)
        inner = MultiLaurent(names)
        for w in ws:
            inner = inner + shifted(w)
        lhs = lhs + inner * mono(chi=d, y=d) * sign
    rhs = ((one - mono(y=4)) ** 2 * (one - X1) * (one - X2)
           * (one - mono(chi=2)) ** 2 * (one - mono(chi=4)))
    return lhs - rhs, sizes


def verify_g_identity(swap_half_spin: bool = False, box: int = 1) -> CheckReport:
    """Shifted-sum expression for G against the right side, as polynomials in seven variables.

    The symbolic side replaces chi^(2(n_i+1)) by X_i and y^(4 n4) by Y4.  A
    second, concrete pass multiplies P into sum_m V(m) g_m with Brauer
    products for every n in [0, box]^5; it exercises the n_i - w_i = -1
    boundary terms, which must vanish on their own.
    """
    start = time.perf_counter()
    residual, sizes = _g_symbolic_residual(swap_half_spin)
    other, _ = _g_symbolic_residual(not swap_half_spin)
    symbolic_ok = not residual

    concrete = _brauer_coefficients(g_coefficient, inverse=False, bound=box)
    concrete_bad = [list(n) for n in product(range(box + 1), repeat=5)
                    if concrete.get(n, MultiLaurent(_CY)) != _g_target(n)]
    boundary = [n for n in product(range(-1, 2), repeat=5) if min(n) == -1]
    boundary_vanish = all(not _g_closed_form(n) for n in boundary)

    passed = symbolic_ok and not concrete_bad and boundary_vanish
    first = residual.leading_term()
    gamma = {
        "gamma1_size": sizes[str(VECTOR)],
        "gamma4_size": sizes[str(HALF_SPIN_PLUS)],
        "gamma5_size": sizes[str(HALF_SPIN_MINUS)],
    }
    return CheckReport(
        "g-identity", passed, EXACT_ZERO if passed else len(residual.terms) + len(concrete_bad),
        {"swap_half_spin": swap_half_spin, "box": box}, _elapsed(start),
        {
            **gamma,
            "variables": list(_G_NAMES),
            "residual_terms": len(residual.terms),
            "first_mismatch": None if first is None else {"monomial": first[0], "coefficient": first[1]},
            "other_assignment_residual_terms": len(other.terms),
            "concrete_cells_checked": (box + 1) ** 5,
            "concrete_mismatches": concrete_bad,
            "boundary_terms_vanish": boundary_vanish,
        },
    )


def _g_closed_form(n) -> MultiLaurent:
    """The five-factor closed form of g evaluated literally, valid for n_i >= -1.

    Used to confirm that indices with some n_i = -1 give zero without a
    special case.
    """
    n1, n2, n3, n4, n5 = n
    names = _CY

    def one_minus(chi_exp=0, y_exp=0):
        return MultiLaurent(names, {(0, 0): 1}) - _cy(chi_exp, y_exp)

    num = (one_minus(2 * (n2 + 1)) * one_minus(2 * (n3 + 1)) * one_minus(2 * (n2 + n3 + 2))
           * one_minus(2 * (n1 + 1)) * one_minus(2 * (n5 + 1)) * one_minus(0, 4 * (n4 + 1)))
    # The denominator (1-chi^2)^4 (1-chi^4) is a nonzero constant factor for this test.
    return num


_Q_NAMES = ("chi", "X1", "X2", "y")
_SIGN_CELLS = tuple("".join(p) for p in product("pn", repeat=3))
_Q_EXPECTED = {"ppp": 0, "ppn": 0, "npp": 0, "npn": 0, "nnn": 1, "pnp": 1, "nnp": -1, "pnn": -1}
_Q_EMPTY = ("ppp", "ppn", "npp")


def _pattern(w) -> str:
    return "".join("p" if w[j] > 0 else "n" for j in (2, 3, 4))


def _q_polys() -> tuple[dict[str, MultiLaurent], dict[str, int]]:
    names = _Q_NAMES
    one = MultiLaurent.const(names)

    def mono(**e):
        return MultiLaurent.monomial(names, e)

    X1, X2 = MultiLaurent.var(names, "X1"), MultiLaurent.var(names, "X2")
    polys = {c: MultiLaurent(names) for c in _SIGN_CELLS}
    counts = dict.fromkeys(_SIGN_CELLS, 0)
    for label, sign, d in p_poly_terms():
        for w in shift_set(label):
            w1, w2, w3, w4, w5 = w
            term = ((one - X1 * mono(chi=-2 * w1)) * (one - X2 * mono(chi=-2 * w2))
                    * mono(chi=w1 + 2 * w2 + 2 * w3 + w5 - d, y=d - weight_exponent(w)) * sign)
            cell = _pattern(w)
            polys[cell] = polys[cell] + term
            counts[cell] += 1
    return polys, counts


def _r_poly() -> MultiLaurent:
    names = _Q_NAMES
    one = MultiLaurent.const(names)
    return (MultiLaurent.var(names, "X2") * MultiLaurent.monomial(names, {"chi": -2})
            * (one - MultiLaurent.var(names, "X1")) * (one - MultiLaurent.monomial(names, {"chi": 2})))


def _describe(q: MultiLaurent, r: MultiLaurent) -> str:
    if not q:
        return "0"
    if q == r:
        return "R"
    if q == -r:
        return "-R"
    return repr(q)


def verify_q_sums() -> CheckReport:
    """The eight sign-pattern pieces Q_xyz of the H-coefficient sum, against 0 and +-R."""
    start = time.perf_counter()
    polys, counts = _q_polys()
    r = _r_poly()
    cells = {}
    offending = []
    for cell in _SIGN_CELLS:
        want = r * _Q_EXPECTED[cell]
        ok = polys[cell] == want
        if cell in _Q_EMPTY:
            ok = ok and counts[cell] == 0
        cells[cell] = {"value": _describe(polys[cell], r), "weights": counts[cell], "ok": ok}
        if not ok:
            offending.append(cell)
    passed = not offending
    return CheckReport(
        "q-sums", passed, EXACT_ZERO if passed else len(offending), {}, _elapsed(start),
        {"cells": cells, "empty_cells": [c for c in _SIGN_CELLS if counts[c] == 0],
         "offending": offending, "R": repr(r)},
    )


def verify_h_collapse(box: int = 1) -> CheckReport:
    """H_(n) collapses to the stated value in each of the eight zero/nonzero cells of (n3, n4, n5).

    Symbolically, H divided by its common factor is the sum of the Q pieces
    whose positive coordinates avoid the zero n_j.  Concretely, Brauer
    products of P(chi^-1, y) with sum_m V(m) h_m are checked on [0, box]^5.
    """
    start = time.perf_counter()
    polys, _ = _q_polys()
    r = _r_poly()
    cells = {}
    offending = []
    for zeros in product((True, False), repeat=3):
        allowed = [c for c in _SIGN_CELLS if all(c[j] == "n" for j in range(3) if zeros[j])]
        total = MultiLaurent(_Q_NAMES)
        for c in allowed:
            total = total + polys[c]
        want = r if zeros[0] and zeros[2] else MultiLaurent(_Q_NAMES)
        name = "".join("0" if z else "+" for z in zeros)
        ok = total == want
        cells[name] = {"pieces": allowed, "value": _describe(total, r), "ok": ok}
        if not ok:
            offending.append(name)

    concrete = _brauer_coefficients(h_coefficient, inverse=True, bound=box)
    concrete_bad = [list(n) for n in product(range(box + 1), repeat=5)
                    if concrete.get(n, MultiLaurent(_CY)) != _h_target(n)]
    passed = not offending and not concrete_bad
    return CheckReport(
        "h-collapse", passed, EXACT_ZERO if passed else len(offending) + len(concrete_bad),
        {"box": box}, _elapsed(start),
        {"cells_n3_n4_n5": cells, "offending": offending,
         "concrete_cells_checked": (box + 1) ** 5, "concrete_mismatches": concrete_bad},
    )


# ---------------------------------------------------------------------------
# Numeric checks
# ---------------------------------------------------------------------------

def _indices(N: int) -> Iterator[tuple[int, ...]]:
    """All n >= 0 with weight exponent <= N."""
    for n3 in range(N // 4 + 1):
        for n5 in range((N - 4 * n3) // 3 + 1):
            for n2 in range((N - 4 * n3 - 3 * n5) // 2 + 1):
                for n4 in range((N - 4 * n3 - 3 * n5 - 2 * n2) // 2 + 1):
                    rest = N - 4 * n3 - 3 * n5 - 2 * n2 - 2 * n4
                    for n1 in range(rest + 1):
                        yield (n1, n2, n3, n4, n5)


def _mul(a: np.ndarray, b: np.ndarray, N: int) -> np.ndarray:
    return np.convolve(a, b)[: N + 1]


def _spin_sum(N: int, trace: Callable, chi) -> np.ndarray:
    """sum_n tr(n) k(n)(chi) y^e(n) (1 - y^(4(n4+1))) truncated at y^N."""
    out = np.zeros(N + 1, dtype=complex)
    for n in _indices(N):
        n1, n2, n3, n4, n5 = n
        e = weight_exponent(n)
        val = trace(index_to_label(n)) * k_factor(n1, n2, n3, n5).evaluate(chi)
        out[e] += val
        if e + 4 * (n4 + 1) <= N:
            out[e + 4 * (n4 + 1)] -= val
    return out


def _p_numeric(N: int, trace: Callable, chi) -> np.ndarray:
    out = np.zeros(N + 1, dtype=complex)
    for label, sign, d in p_poly_terms():
        if d <= N:
            out[d] += sign * trace(label) * chi ** d
    return out


def _okada_sum(N: int, trace: Callable, chi) -> np.ndarray:
    out = np.zeros(N + 1, dtype=complex)
    for total in range(N + 1):
        for m in range(total + 1):
            ell = total - m
            inner = sum(trace((a, 0, b, 0, total - 2 * a - 2 * b))
                        for a in range(min(m, ell) + 1) for b in range(min(m, ell) - a + 1))
            out[total] += inner * chi ** (m - ell)
    return out


def _one_minus_y4_sq(N: int) -> np.ndarray:
    out = np.zeros(N + 1)
    for d, c in ((0, 1), (4, -2), (8, 1)):
        if d <= N:
            out[d] = c
    return out


def _tracer(s: SatakeClass) -> Callable:
    cache: dict = {}

    def trace(label):
        if label not in cache:
            cache[label] = eval_character(D5.from_label(label), s)
        return cache[label]

    return trace


def main_identity_sides(N: int, s: SatakeClass) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of P(chi)P(1/chi) * spin sum = (1-y^4)^2 * Okada sum, as y-coefficient arrays."""
    trace, chi = _tracer(s), complex(s.chi)
    lhs = _mul(_mul(_p_numeric(N, trace, chi), _p_numeric(N, trace, 1 / chi), N), _spin_sum(N, trace, chi), N)
    rhs = _mul(_one_minus_y4_sq(N), _okada_sum(N, trace, chi), N)
    return lhs, rhs


def prop4_sides(N: int, s: SatakeClass) -> tuple[np.ndarray, np.ndarray]:
    """Spin sum against (1-y^4)^2 times the degree-32 Euler product, as y-coefficient arrays."""
    trace, chi = _tracer(s), complex(s.chi)
    lhs = _spin_sum(N, trace, chi)
    diagram = weight_multiplicities(D5.from_label(HALF_SPIN_MINUS))
    plus = np.array(euler_factor_series(diagram, s, +1, N).coeffs, dtype=complex)
    minus = np.array(euler_factor_series(diagram, s, -1, N).coeffs, dtype=complex)
    rhs = _mul(_one_minus_y4_sq(N), _mul(plus, minus, N), N)
    return lhs, rhs


def main_identity_integer_sides(N: int) -> tuple[list[int], list[int]]:
    """Both sides of the main identity at theta = 0, chi = 1, in exact integers."""
    def dim(label):
        return dimension(D5.from_label(label))

    def conv(a, b):
        return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(N + 1)]

    p = [0] * (N + 1)
    for label, sign, d in p_poly_terms():
        if d <= N:
            p[d] += sign * dim(label)
    spin = [0] * (N + 1)
    for n in _indices(N):
        n1, n2, n3, n4, n5 = n
        e = weight_exponent(n)
        val = dim(index_to_label(n)) * int(k_factor(n1, n2, n3, n5).evaluate(1))
        spin[e] += val
        if e + 4 * (n4 + 1) <= N:
            spin[e + 4 * (n4 + 1)] -= val
    okada = [0] * (N + 1)
    for total in range(N + 1):
        for m in range(total + 1):
            mn = min(m, total - m)
            okada[total] += sum(dim((a, 0, b, 0, total - 2 * a - 2 * b))
                                for a in range(mn + 1) for b in range(mn - a + 1))
    y4 = [int(c) for c in _one_minus_y4_sq(N)]
    return conv(conv(p, p), spin), conv(y4, okada)


def _compare(lhs: np.ndarray, rhs: np.ndarray, tol: float) -> tuple[float, float, int | None, bool]:
    """Worst relative residual, worst absolute residual, first failing degree, verdict."""
    diff = np.abs(lhs - rhs)
    scale = np.maximum(np.abs(lhs), np.abs(rhs))
    ok = diff <= tol * scale + ABS_FLOOR
    rel = np.where(scale > ABS_FLOOR, diff / np.where(scale > 0, scale, 1), 0.0)
    failing = np.flatnonzero(~ok)
    return float(rel.max()), float(diff.max()), (int(failing[0]) if failing.size else None), bool(ok.all())


def _numeric_report(name: str, sides: Callable, N: int, trials: int, seed: int, tol: float,
                    extra: Callable | None = None) -> CheckReport:
    start = time.perf_counter()
    params = {"N": N, "trials": trials, "seed": seed, "tol": tol}
    if N < 0 or N > 12 or trials < 1:
        return CheckReport(name, False, "parameters out of range", params, _elapsed(start),
                           {"error": "need 0 <= N <= 12 and trials >= 1"})
    rng = np.random.default_rng(seed)
    worst_rel, worst_abs, passed = 0.0, 0.0, True
    per_trial = []
    for t in range(trials):
        s = SatakeClass.random(rng)
        lhs, rhs = sides(N, s)
        rel, ab, fail_deg, ok = _compare(lhs, rhs, tol)
        row = {"trial": t, "max_rel_residual": rel, "max_abs_residual": ab,
               "failing_degree": fail_deg, "ok": ok}
        if extra is not None:
            row.update(extra(N, s, tol, rhs))
            ok = ok and row.get("cross_ok", True)
        per_trial.append(row)
        worst_rel, worst_abs = max(worst_rel, rel), max(worst_abs, ab)
        passed &= ok
    return CheckReport(name, passed, worst_rel, params, _elapsed(start),
                       {"max_abs_difference": worst_abs, "trials_detail": per_trial})


def _cross_rhs(N: int, s: SatakeClass, tol: float, okada_side: np.ndarray) -> dict:
    """Okada right side against P(chi)P(1/chi) times (1-y^4)^2 L(spin, chi) L(spin, 1/chi)."""
    trace, chi = _tracer(s), complex(s.chi)
    diagram = weight_multiplicities(D5.from_label(HALF_SPIN_MINUS))
    plus = np.array(euler_factor_series(diagram, s, +1, N).coeffs, dtype=complex)
    minus = np.array(euler_factor_series(diagram, s, -1, N).coeffs, dtype=complex)
    euler_rhs = _mul(_one_minus_y4_sq(N), _mul(plus, minus, N), N)
    via_euler = _mul(_mul(_p_numeric(N, trace, chi), _p_numeric(N, trace, 1 / chi), N), euler_rhs, N)
    rel, _, _, ok = _compare(via_euler, okada_side, tol)
    return {"cross_rhs_rel_residual": rel, "cross_ok": ok}


def verify_main_identity(N: int = 10, trials: int = 5, seed: int = 42, tol: float = DEFAULT_TOL) -> CheckReport:
    """P(chi)P(1/chi) times the Casselman-Shalika spin sum equals (1-y^4)^2 times the Okada sum."""
    return _numeric_report("main-identity", main_identity_sides, N, trials, seed, tol, _cross_rhs)


def verify_prop4_euler(N: int = 10, trials: int = 5, seed: int = 42, tol: float = DEFAULT_TOL) -> CheckReport:
    """The Casselman-Shalika spin sum equals (1-y^4)^2 L(spin, chi) L(spin, 1/chi) through y^N."""
    return _numeric_report("prop4", prop4_sides, N, trials, seed, tol)


def _brion_sides(N: int, s: SatakeClass) -> tuple[np.ndarray, np.ndarray]:
    diagram = weight_multiplicities(D5.from_label(HALF_SPIN_MINUS))
    lhs = np.concatenate([
        np.array(evaluate_series(brion_spin_series(N, inverse=inv), s).coeffs, dtype=complex)
        for inv in (False, True)
    ])
    rhs = np.concatenate([
        np.array(euler_factor_series(diagram, s, p, N).coeffs, dtype=complex) for p in (1, -1)
    ])
    return lhs, rhs


def verify_brion(N: int = 10, trials: int = 5, seed: int = 42, tol: float = DEFAULT_TOL) -> CheckReport:
    """Brion series of the spin representation against the Euler factor L(spin, chi^{+-1})."""
    return _numeric_report("brion", _brion_sides, N, trials, seed, tol)

