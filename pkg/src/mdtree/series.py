"""Truncated bivariate exponential generating functions over exact rationals.

A :class:`TruncatedSeries` is a polynomial in ``x`` truncated above ``x^order``
whose coefficients are polynomials in a marker variable ``t`` truncated
above ``t^tcap``.  Both truncations are compatible with multiplication since
no operation here divides by ``x`` or ``t``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Literal, Sequence

from .errors import BadConstantTerm, NonzeroConstantTerm, OrderMismatch

__all__ = [
    "TruncatedSeries",
    "exp_series",
    "reciprocal_series",
    "log_one_minus_inverse",
    "derivative",
    "build_G",
    "build_lhs",
    "build_rhs",
    "verify_gen_identity",
    "specialize_t",
]

DEFAULT_ORDER = 12
DEFAULT_TCAP = 12

Which = Literal["gen1", "gen2", "gen3"]
TPoly = tuple[Fraction, ...]


def _zero_tpoly(tcap: int) -> TPoly:
    return (Fraction(0),) * (tcap + 1)


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    tcap: int
    coeffs: tuple[TPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise OrderMismatch(f"order {self.order} needs {self.order + 1} x-coefficients")
        norm = []
        for c in self.coeffs:
            c = tuple(Fraction(v) for v in c)[: self.tcap + 1]
            norm.append(c + (Fraction(0),) * (self.tcap + 1 - len(c)))
        object.__setattr__(self, "coeffs", tuple(norm))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER, tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
        return cls(order, tcap, (_zero_tpoly(tcap),) * (order + 1))

    @classmethod
    def monomial(cls, c, xdeg: int, tdeg: int = 0, order: int = DEFAULT_ORDER,
                 tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
        """``c * t^tdeg * x^xdeg``, or zero if either degree is truncated away."""
        s = [list(_zero_tpoly(tcap)) for _ in range(order + 1)]
        if xdeg <= order and tdeg <= tcap:
            s[xdeg][tdeg] = Fraction(c)
        return cls(order, tcap, tuple(tuple(r) for r in s))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER, tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
        return cls.monomial(1, 0, 0, order, tcap)

    @classmethod
    def from_x_coeffs(cls, xs: Sequence, order: int = DEFAULT_ORDER,
                      tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
        """Series constant in ``t`` with the given ``x`` coefficients."""
        xs = list(xs)[: order + 1] + [0] * max(0, order + 1 - len(xs))
        return cls(order, tcap, tuple((Fraction(c),) for c in xs))

    # -- arithmetic ----------------------------------------------------------

    def _same_shape(self, other: TruncatedSeries) -> None:
        if (self.order, self.tcap) != (other.order, other.tcap):
            raise OrderMismatch(f"series shapes differ: (order={self.order}, tcap={self.tcap}) "
                                f"vs (order={other.order}, tcap={other.tcap})")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._same_shape(other)
        return TruncatedSeries(self.order, self.tcap, tuple(
            tuple(a + b for a, b in zip(p, q)) for p, q in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, self.tcap, tuple(tuple(-a for a in p) for p in self.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(self.order, self.tcap, tuple(tuple(a * c for a in p) for p in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._same_shape(other)
        N, T = self.order, self.tcap
        out = [[Fraction(0)] * (T + 1) for _ in range(N + 1)]
        # sparse loops: most t-coefficients are zero in practice
        left = [[(j, a) for j, a in enumerate(p) if a] for p in self.coeffs]
        right = [[(j, b) for j, b in enumerate(q) if b] for q in other.coeffs]
        for d1 in range(N + 1):
            if not left[d1]:
                continue
            for d2 in range(N + 1 - d1):
                if not right[d2]:
                    continue
                row = out[d1 + d2]
                for j1, a in left[d1]:
                    for j2, b in right[d2]:
                        if j1 + j2 <= T:
                            row[j1 + j2] += a * b
        return TruncatedSeries(N, T, tuple(tuple(r) for r in out))

    __rmul__ = scale

    def constant_term(self) -> TPoly:
        return self.coeffs[0]

    def coefficient(self, xdeg: int, tdeg: int) -> Fraction:
        return self.coeffs[xdeg][tdeg]

    def to_list(self) -> list[tuple[int, list[Fraction]]]:
        """``[(d, [t^0 coeff, t^1 coeff, ...]), ...]`` with trailing zero t-coefficients trimmed."""
        out = []
        for d, p in enumerate(self.coeffs):
            p = list(p)
            while p and p[-1] == 0:
                p.pop()
            out.append((d, p))
        return out

    def to_json(self) -> str:
        return json.dumps({
            "order": self.order,
            "tcap": self.tcap,
            "coeffs": [[d, [str(c) for c in p]] for d, p in self.to_list()],
        })


def _require_zero_constant(a: TruncatedSeries) -> None:
    if any(a.constant_term()):
        raise NonzeroConstantTerm("series must have zero constant term in x")


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """``exp(a)`` by Horner summation of ``a^j / j!`` for ``j <= order``."""
    _require_zero_constant(a)
    one = TruncatedSeries.one(a.order, a.tcap)
    r = one
    for j in range(a.order, 0, -1):
        r = one + (a * r).scale(Fraction(1, j))
    return r


def reciprocal_series(a: TruncatedSeries) -> TruncatedSeries:
    """``1 / a`` for ``a`` whose constant term is exactly 1."""
    c0 = a.constant_term()
    if c0[0] != 1 or any(c0[1:]):
        raise BadConstantTerm("reciprocal needs constant term exactly 1")
    one = TruncatedSeries.one(a.order, a.tcap)
    b = one
    # 1/a = sum_j (1-a)^j, and (1-a) has zero constant term
    u = one - a
    for _ in range(a.order):
        b = one + u * b
    return b


def log_one_minus_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """``-ln(1 - a) = sum_{j>=1} a^j / j``."""
    _require_zero_constant(a)
    if a.order == 0:
        return TruncatedSeries.zero(a.order, a.tcap)
    one = TruncatedSeries.one(a.order, a.tcap)
    r = one.scale(Fraction(1, a.order))
    for j in range(a.order - 1, 0, -1):
        r = one.scale(Fraction(1, j)) + a * r
    return a * r


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal ``d/dx``; the top coefficient becomes zero."""
    coeffs = [tuple(c * d for c in a.coeffs[d]) for d in range(1, a.order + 1)]
    coeffs.append(_zero_tpoly(a.tcap))
    return TruncatedSeries(a.order, a.tcap, tuple(coeffs))


def specialize_t(a: TruncatedSeries, t=1) -> list[Fraction]:
    """Substitute a number for ``t``, leaving the ``x`` coefficients."""
    t = Fraction(t)
    return [sum((c * t ** j for j, c in enumerate(p)), Fraction(0)) for p in a.coeffs]


def build_G(order: int = DEFAULT_ORDER, tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
    """``sum_{n>=0} n^n x^(n+1) / (n+1)!``, constant in ``t``."""
    xs = [Fraction(0)] + [Fraction(n ** n, factorial(n + 1)) for n in range(order)]
    return TruncatedSeries.from_x_coeffs(xs, order, tcap)


def _t_times(a: TruncatedSeries) -> TruncatedSeries:
    return a * TruncatedSeries.monomial(1, 0, 1, a.order, a.tcap)


def _default_triangle(n: int) -> Sequence[int]:
    from .counting import triangle_row

    return triangle_row(n, "stirling").values


def build_lhs(which: Which, order: int = DEFAULT_ORDER, triangle: Callable[[int], Sequence[int]] | None = None,
              tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
    """The triangle-side series of one of the three generating-function identities.

    ``gen1`` weights ``|T(n,k)|`` by ``t^(k+1)/k!``, ``gen2`` by ``(k+1) t^(k+1)``
    (both with a leading 1) and ``gen3`` by ``t^(k+1)``.
    """
    if which not in ("gen1", "gen2", "gen3"):
        raise ValueError(f"unknown identity {which!r}")
    triangle = triangle or _default_triangle
    coeffs = [list(_zero_tpoly(tcap)) for _ in range(order + 1)]
    if which != "gen3":
        coeffs[0][0] = Fraction(1)
    for n in range(order):
        row = triangle(n)
        nf = factorial(n + 1)
        for k, v in enumerate(row):
            if k + 1 > tcap:
                break
            if which == "gen1":
                w = Fraction(v, factorial(k) * nf)
            elif which == "gen2":
                w = Fraction((k + 1) * v, nf)
            else:
                w = Fraction(v, nf)
            coeffs[n + 1][k + 1] += w
    return TruncatedSeries(order, tcap, tuple(tuple(r) for r in coeffs))


def build_rhs(which: Which, order: int = DEFAULT_ORDER, tcap: int = DEFAULT_TCAP) -> TruncatedSeries:
    """``exp(tG)``, ``1/(1 - tG)`` or ``-ln(1 - tG)`` for the matching identity."""
    tG = _t_times(build_G(order, tcap))
    if which == "gen1":
        return exp_series(tG)
    if which == "gen2":
        return reciprocal_series(TruncatedSeries.one(order, tcap) - tG)
    if which == "gen3":
        return log_one_minus_inverse(tG)
    raise ValueError(f"unknown identity {which!r}")


def verify_gen_identity(which: Which, order: int = DEFAULT_ORDER, tcap: int = DEFAULT_TCAP,
                        triangle: Callable[[int], Sequence[int]] | None = None) -> bool:
    return build_lhs(which, order, triangle, tcap) == build_rhs(which, order, tcap)
