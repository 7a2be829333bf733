"""Sparse Laurent polynomials and y-truncated power series.

The coefficient ring is whatever the caller puts in: ``int``,
``Fraction``, ``complex`` or :class:`~spincheck.rep_ring.VirtualCharacter`.
The only requirements are ``+``, ``-``, ``*`` and truthiness meaning
"nonzero".
"""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ConsistencyError, DomainError

__all__ = ["LaurentPoly", "TruncatedSeries", "MultiLaurent"]


def _clean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


class LaurentPoly:
    """Finitely supported map ``exponent -> coefficient`` in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs: dict[int, object] = _clean(coeffs or {})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({0: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = ", ".join(f"{k}: {self.coeffs[k]!r}" for k in sorted(self.coeffs))
        return f"LaurentPoly({{{terms}}})"

    def __getitem__(self, k: int):
        return self.coeffs.get(k, 0)

    def __iter__(self):
        return iter(sorted(self.coeffs.items()))

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({k: v * other for k, v in self.coeffs.items()})
        out: dict[int, object] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                p = a * b
                out[i + j] = out[i + j] + p if (i + j) in out else p
        return LaurentPoly(out)

    def __rmul__(self, other):
        return LaurentPoly({k: other * v for k, v in self.coeffs.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not supported")
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by the monomial of degree k."""
        return LaurentPoly({e + k: v for e, v in self.coeffs.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: v for e, v in self.coeffs.items()})

    def map_coeffs(self, f: Callable) -> LaurentPoly:
        return LaurentPoly({e: f(v) for e, v in self.coeffs.items()})

    def min_degree(self) -> int:
        return min(self.coeffs)

    def max_degree(self) -> int:
        return max(self.coeffs)

    def evaluate(self, x, coeff_map: Callable | None = None):
        """Evaluate at x (nonzero), optionally pushing coefficients through a map."""
        total = 0
        for e, v in self.coeffs.items():
            c = coeff_map(v) if coeff_map else v
            total = total + c * x**e
        return total

    def divmod_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division by a Laurent polynomial with integer coefficients.

        Raises :class:`ConsistencyError` if a nonzero remainder is left.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        dlo, dhi = divisor.min_degree(), divisor.max_degree()
        lead = divisor.coeffs[dhi]
        rem = dict(self.coeffs)
        quot: dict[int, object] = {}
        while rem:
            top = max(rem)
            if top - dhi < min(self.coeffs) - dlo:
                break
            c = rem[top]
            q, r = divmod(c, lead) if isinstance(c, int) and isinstance(lead, int) else (c / lead, 0)
            if r:
                raise ConsistencyError("non-integral quotient coefficient")
            e = top - dhi
            quot[e] = q
            for k, v in divisor.coeffs.items():
                nk = k + e
                nv = rem.get(nk, 0) - q * v
                if nv:
                    rem[nk] = nv
                else:
                    rem.pop(nk, None)
        if rem:
            raise ConsistencyError(f"division leaves remainder {LaurentPoly(rem)!r}")
        return LaurentPoly(quot)


class TruncatedSeries:
    """Power series in y truncated after degree ``order`` (inclusive).

    ``coeffs[d]`` is the y^d coefficient: a LaurentPoly in chi or a plain
    ring element.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence | None = None, zero=0):
        if order < 0:
            raise DomainError("truncation order must be >= 0")
        coeffs = list(coeffs or [])[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_terms(cls, order: int, terms: Iterable[tuple[int, object]], zero=0):
        out = [zero] * (order + 1)
        for d, c in terms:
            if 0 <= d <= order:
                out[d] = out[d] + c
        return cls(order, out, zero)

    def __getitem__(self, d: int):
        return self.coeffs[d]

    def __len__(self):
        return self.order + 1

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries(self.order, [other])

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(n, [self.coeffs[d] + other.coeffs[d] for d in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for d in range(n + 1):
            acc = None
            for i in range(d + 1):
                a, b = self.coeffs[i], other.coeffs[d - i]
                if not _nonzero(a) or not _nonzero(b):
                    continue
                p = a * b
                acc = p if acc is None else acc + p
            out.append(0 if acc is None else acc)
        return TruncatedSeries(n, out)

    def __rmul__(self, other):
        return TruncatedSeries(self.order, [other * c for c in self.coeffs])

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(min(order, self.order), self.coeffs)

    def map_coeffs(self, f: Callable) -> TruncatedSeries:
        return TruncatedSeries(self.order, [f(c) for c in self.coeffs])


def _nonzero(c) -> bool:
    if isinstance(c, complex):
        return c != 0
    return bool(c)


class MultiLaurent:
    """Sparse multivariate Laurent polynomial with exact coefficients.

    Variables are named; ``terms`` maps exponent tuples (aligned with
    ``names``) to nonzero coefficients.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.names = tuple(names)
        self.terms: dict[tuple[int, ...], object] = _clean(terms or {})

    @classmethod
    def var(cls, names: Sequence[str], name: str, power: int = 1) -> MultiLaurent:
        exps = tuple(power if n == name else 0 for n in names)
        return cls(names, {exps: 1})

    @classmethod
    def const(cls, names: Sequence[str], c=1) -> MultiLaurent:
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def monomial(cls, names: Sequence[str], exps: Mapping[str, int], c=1) -> MultiLaurent:
        return cls(names, {tuple(exps.get(n, 0) for n in names): c})

    def _lift(self, other) -> MultiLaurent:
        if isinstance(other, MultiLaurent):
            if other.names != self.names:
                raise DomainError("variable sets differ")
            return other
        return MultiLaurent.const(self.names, other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiLaurent):
            return self.names == other.names and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiLaurent(self.names, {k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        out = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return MultiLaurent(self.names, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        out = defaultdict(int)
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                out[tuple(x + y for x, y in zip(ka, kb))] += va * vb
        return MultiLaurent(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiLaurent.const(self.names)
        for _ in range(n):
            out = out * self
        return out

    def leading_term(self) -> tuple[dict[str, int], object] | None:
        """Lexicographically largest monomial, for error reports."""
        if not self.terms:
            return None
        k = max(self.terms)
        return dict(zip(self.names, k)), self.terms[k]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            mon = "*".join(f"{n}^{e}" if e != 1 else n for n, e in zip(self.names, k) if e)
            parts.append(f"{self.terms[k]}" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)
