"""Closed-form counts of rooted labeled trees by maximal decreasing subtree size.

Five independent routes to ``|T(n, k)|``, the number of trees on
``{0, ..., n}`` whose maximal decreasing subtree has ``k + 1`` vertices:

* ``enumerate``           exhaustive Prufer enumeration (:mod:`mdtree.trees`)
* ``stirling``            a sum over the size of MD plus its children
* ``inclusion_exclusion`` via ``|T(n,k)| = |F(n,k)|``, the number of maps
  ``[n] -> [n]`` whose image contains ``{1, ..., k}``
* ``decomposition``       splitting a tree into ``k+1`` local minimum trees
* ``inverse_matrix``      the closed inverse of ``[C(i+j, i)]``

plus the summation identities the triangle satisfies.  Everything is exact
integer or :class:`fractions.Fraction` arithmetic, and ``0**0 == 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Iterator

from .errors import DomainError

__all__ = [
    "Method",
    "CLOSED_FORM_METHODS",
    "TriangleRow",
    "IdentityCheck",
    "binomial",
    "stirling2",
    "forest_count",
    "t_count_stirling",
    "f_count_stirling",
    "f_count_inclusion_exclusion",
    "t_count_decomposition",
    "t_count_inverse_matrix",
    "weak_compositions",
    "triangle_row",
    "t_count",
    "check_identity_row_sum",
    "check_identity_weighted",
    "check_identity_alpha",
    "check_identity_harmonic",
]


class Method(str, enum.Enum):
    ENUMERATE = "enumerate"
    STIRLING = "stirling"
    INCLUSION_EXCLUSION = "inclusion_exclusion"
    DECOMPOSITION = "decomposition"
    INVERSE_MATRIX = "inverse_matrix"

    def __str__(self) -> str:
        return self.value


CLOSED_FORM_METHODS = (
    Method.STIRLING,
    Method.INCLUSION_EXCLUSION,
    Method.DECOMPOSITION,
    Method.INVERSE_MATRIX,
)


@dataclass(frozen=True)
class TriangleRow:
    n: int
    values: tuple[int, ...]
    method: Method

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError(f"row {self.n} must have {self.n + 1} entries, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError(f"row {self.n} has a negative entry")

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one exact identity check; truthy iff both sides agree."""

    identity: str
    n: int
    lhs: object
    rhs: object
    alpha: int | None = None
    k: int | None = None

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "n": self.n}
        if self.k is not None:
            out["k"] = self.k
        if self.alpha is not None:
            out["alpha"] = self.alpha
        out.update(lhs=str(self.lhs), rhs=str(self.rhs), **{"pass": self.passed})
        return out


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise DomainError(f"n and k must be nonnegative, got n={n}, k={k}")
    if k > n:
        raise DomainError(f"k={k} exceeds n={n}")


def _pow(base: int, exp: int) -> int:
    # int ** 0 is already 1 for base 0; this only guards negative exponents
    if exp < 0:
        raise DomainError(f"negative exponent {exp}")
    return base ** exp


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _stirling_row(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _stirling_row(m - 1)
    row = [0] * (m + 1)
    for k in range(1, m + 1):
        row[k] = (k * prev[k] if k < m else 0) + prev[k - 1]
    return tuple(row)


def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind ``S(m, k)``."""
    if m < 0 or k < 0 or k > m:
        return 0
    # build rows bottom-up so deep m never hits the recursion limit
    for i in range(0, m, 256):
        _stirling_row(i)
    return _stirling_row(m)[k]


def forest_count(N: int, s: int) -> int:
    """Rooted forests on ``N`` labeled vertices whose root set is a fixed ``s``-set."""
    if N < 0 or s < 0:
        raise DomainError(f"N and s must be nonnegative, got N={N}, s={s}")
    if s > N:
        raise DomainError(f"root set of size {s} cannot fit in {N} vertices")
    if s == N:
        return 1
    if s == 0:
        return 0
    return s * N ** (N - s - 1)


def t_count_stirling(n: int, k: int) -> int:
    _check_nk(n, k)
    fk = factorial(k)
    return sum(
        binomial(n + 1, m + 1) * stirling2(m + 1, k + 1) * fk * forest_count(n - k, m - k)
        for m in range(k, n + 1)
    )


def f_count_stirling(n: int, k: int) -> int:
    _check_nk(n, k)
    fk = factorial(k)
    return sum(
        binomial(n, m) * stirling2(m, k) * fk * _pow(n - k, n - m)
        for m in range(k, n + 1)
    )


def f_count_inclusion_exclusion(n: int, k: int) -> int:
    _check_nk(n, k)
    return sum((-1) ** i * binomial(k, i) * _pow(n - i, n) for i in range(k + 1))


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, in colexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    # colex: compare from the last coordinate, so it varies slowest
    for last in range(total + 1):
        for head in weak_compositions(total - last, parts - 1):
            yield head + (last,)


def _partitions(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of exactly ``parts`` nonnegative integers summing to ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _orbit_size(shape: tuple[int, ...]) -> int:
    counts: dict[int, int] = {}
    for x in shape:
        counts[x] = counts.get(x, 0) + 1
    return factorial(len(shape)) // prod(factorial(c) for c in counts.values())


def t_count_decomposition(n: int, k: int, *, grouped: bool = True) -> int:
    """Count via the decomposition into ``k + 1`` local minimum trees.

    The summand is symmetric in the parts, so by default each orbit of
    compositions is evaluated once and weighted by its size; the number of
    compositions, ``C(n, k)``, is around 1.5e8 at ``n = 30``.
    ``grouped=False`` walks every weak composition in colex order instead.
    """
    _check_nk(n, k)
    top = factorial(n + 1)

    def term(parts: tuple[int, ...]) -> int:
        denom = prod(factorial(p + 1) for p in parts)
        return (top // denom) * prod(_pow(p, p) for p in parts)

    if grouped:
        total = sum(_orbit_size(s) * term(s) for s in _partitions(n - k, k + 1))
    else:
        total = sum(term(c) for c in weak_compositions(n - k, k + 1))
    q, r = divmod(total, k + 1)
    if r:
        raise ArithmeticError(f"decomposition sum {total} for n={n}, k={k} not divisible by {k + 1}")
    return q


def t_count_inverse_matrix(n: int, k: int) -> int:
    _check_nk(n, k)
    powers = [(n + 1 + l) ** n for l in range(n + 1)]
    total = 0
    for m in range(k, n + 1):
        cmk = binomial(m, k)
        inner = sum((-1) ** l * binomial(m, l) * powers[l] for l in range(m + 1))
        total += cmk * inner
    return (-1) ** k * total


_CLOSED: dict[Method, Callable[[int, int], int]] = {
    Method.STIRLING: t_count_stirling,
    Method.INCLUSION_EXCLUSION: f_count_inclusion_exclusion,
    Method.DECOMPOSITION: t_count_decomposition,
    Method.INVERSE_MATRIX: t_count_inverse_matrix,
}


def t_count(n: int, k: int, method: Method | str = Method.STIRLING) -> int:
    method = Method(method)
    if method is Method.ENUMERATE:
        _check_nk(n, k)
        return triangle_row(n, method)[k]
    return _CLOSED[method](n, k)


def triangle_row(n: int, method: Method | str = Method.STIRLING, *,
                 cap: int | None = None, workers: int = 1) -> TriangleRow:
    """The full row ``(|T(n,0)|, ..., |T(n,n)|)`` computed by ``method``."""
    method = Method(method)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if method is Method.ENUMERATE:
        from .trees import brute_force_triangle

        values = brute_force_triangle(n, cap=cap, workers=workers)
    else:
        fn = _CLOSED[method]
        values = [fn(n, k) for k in range(n + 1)]
    return TriangleRow(n, tuple(values), method)


def _row(n: int, method: Method | str) -> TriangleRow:
    return triangle_row(n, method)


def check_identity_row_sum(n: int, method: Method | str = Method.STIRLING) -> IdentityCheck:
    """``sum_k |T(n,k)| == (n+1)^n``."""
    return IdentityCheck("row_sum", n, sum(_row(n, method)), (n + 1) ** n)


def check_identity_weighted(n: int, method: Method | str = Method.STIRLING) -> IdentityCheck:
    """``sum_k (k+1) |T(n,k)| == (n+2)^n``."""
    row = _row(n, method)
    return IdentityCheck("weighted", n, sum((k + 1) * v for k, v in enumerate(row)), (n + 2) ** n)


def check_identity_alpha(n: int, alpha: int, method: Method | str = Method.STIRLING) -> IdentityCheck:
    """``sum_k C(k+alpha, alpha) |T(n,k)| == (n+1+alpha)^n``."""
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    row = _row(n, method)
    lhs = sum(binomial(k + alpha, alpha) * v for k, v in enumerate(row))
    return IdentityCheck("alpha", n, lhs, (n + 1 + alpha) ** n, alpha=alpha)


def check_identity_harmonic(n: int, method: Method | str = Method.STIRLING) -> IdentityCheck:
    """``sum_{k>=1} |T(n,k)| / k == n^n``, summed as exact fractions."""
    if n < 1:
        raise DomainError(f"the harmonic identity needs n >= 1, got {n}")
    row = _row(n, method)
    lhs = sum((Fraction(v, k) for k, v in enumerate(row) if k >= 1), Fraction(0))
    return IdentityCheck("harmonic", n, lhs, Fraction(n ** n))
