"""Finite function spaces and the bijections behind the binomial-weighted row sums.

Functions on ``[n] = {1, ..., n}`` are dense tuples: ``values[i-1] == f(i)``.
Three codomains appear:

* :class:`EndoFunction`     ``[n] -> [n]``; ``F(n,k)`` is the subset whose image
  contains ``{1, ..., k}``
* :class:`ShiftedFunction`  ``[n] -> [0, n]``; ``G(n,k)`` is the subset whose image
  contains ``{0, ..., k-1}`` but not ``k``
* :class:`AlphaFunction`    ``[n] -> [-alpha, n]``; ``H(n,k,alpha)`` is the subset
  missing exactly ``alpha`` values of ``[-alpha, k-1]`` and missing ``k``

``phi`` maps ``F(n,k)`` onto ``G(n,k)``; ``psi`` maps pairs ``(A, f)`` with ``A``
an ``alpha``-subset of ``[-alpha, k-1]`` onto ``H(n,k,alpha)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Sequence

from . import config
from .errors import DomainError, InvalidInput, LimitExceeded, NotMember

__all__ = [
    "EndoFunction",
    "ShiftedFunction",
    "AlphaFunction",
    "MissingSet",
    "image",
    "is_in_F",
    "is_in_G",
    "is_in_H",
    "phi",
    "phi_inverse",
    "classify_G",
    "sigma",
    "psi",
    "psi_inverse",
    "iter_functions",
    "enumerate_F",
    "enumerate_G",
    "enumerate_H",
    "missing_sets",
    "function_to_dict",
    "function_from_json",
]


def _check_values(values: Sequence[int], lo: int, hi: int, what: str) -> tuple[int, ...]:
    values = tuple(values)
    for i, v in enumerate(values, start=1):
        if not isinstance(v, int) or isinstance(v, bool) or not lo <= v <= hi:
            raise InvalidInput(f"{what}: value at {i} is {v!r}, outside [{lo}, {hi}]")
    return values


@dataclass(frozen=True)
class EndoFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        object.__setattr__(self, "values", _check_values(self.values, 1, n, "[n] -> [n]"))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]


@dataclass(frozen=True)
class ShiftedFunction:
    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        object.__setattr__(self, "values", _check_values(self.values, 0, n, "[n] -> [0, n]"))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]


@dataclass(frozen=True)
class AlphaFunction:
    values: tuple[int, ...]
    alpha: int

    def __post_init__(self):
        if self.alpha < 0:
            raise InvalidInput(f"alpha must be nonnegative, got {self.alpha}")
        n = len(self.values)
        object.__setattr__(self, "values",
                           _check_values(self.values, -self.alpha, n, "[n] -> [-alpha, n]"))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]


@dataclass(frozen=True)
class MissingSet:
    """A sorted ``alpha``-subset of ``[-alpha, k-1]``."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(sorted(self.elements))
        if len(set(elements)) != len(elements):
            raise InvalidInput(f"missing set {elements} has repeated elements")
        object.__setattr__(self, "elements", elements)

    @property
    def alpha(self) -> int:
        return len(self.elements)

    def check(self, alpha: int, k: int) -> None:
        if len(self.elements) != alpha:
            raise NotMember(f"A={list(self.elements)} has {len(self.elements)} elements, need {alpha}")
        if any(not -alpha <= a <= k - 1 for a in self.elements):
            raise NotMember(f"A={list(self.elements)} is not inside [{-alpha}, {k - 1}]")


AnyFunction = EndoFunction | ShiftedFunction | AlphaFunction


def image(f: AnyFunction) -> tuple[int, ...]:
    return tuple(sorted(set(f.values)))


def is_in_F(f: EndoFunction, k: int) -> bool:
    if not 0 <= k <= f.n:
        raise DomainError(f"k={k} outside [0, n={f.n}]")
    return set(range(1, k + 1)) <= set(f.values)


def is_in_G(g: ShiftedFunction, k: int) -> bool:
    img = set(g.values)
    return set(range(k)) <= img and k not in img


def is_in_H(h: AlphaFunction, k: int) -> bool:
    """Direct membership test: exactly ``alpha`` values of ``[-alpha, k-1]`` unused, ``k`` unused."""
    img = set(h.values)
    unused = sum(1 for v in range(-h.alpha, k) if v not in img)
    return unused == h.alpha and k not in img


def phi(f: EndoFunction, k: int) -> ShiftedFunction:
    """Shift the values ``1..k`` down by one; fixes everything above ``k``."""
    if not is_in_F(f, k):
        raise NotMember(f"{list(f.values)} does not hit every value in [1, {k}]")
    return ShiftedFunction(tuple(v - 1 if v <= k else v for v in f.values))


def phi_inverse(g: ShiftedFunction, k: int) -> EndoFunction:
    if not 0 <= k <= g.n:
        raise DomainError(f"k={k} outside [0, n={g.n}]")
    if not is_in_G(g, k):
        raise NotMember(f"{list(g.values)} is not in G(n={g.n}, k={k})")
    return EndoFunction(tuple(v + 1 if v <= k - 1 else v for v in g.values))


def classify_G(g: ShiftedFunction) -> int:
    """The unique ``k`` with ``g`` in ``G(n,k)``: the least value of ``[0, n]`` not hit."""
    img = set(g.values)
    k = 0
    while k in img:
        k += 1
    return k


def sigma(A: MissingSet | Iterable[int], n: int, alpha: int) -> tuple[int, ...]:
    """Values ``(sigma(0), ..., sigma(n))`` of the increasing bijection ``[0,n] -> [-alpha,n] \\ A``."""
    excluded = set(A.elements if isinstance(A, MissingSet) else A)
    target = tuple(v for v in range(-alpha, n + 1) if v not in excluded)
    if len(target) != n + 1:
        raise NotMember(f"[{-alpha}, {n}] minus A has {len(target)} elements, need {n + 1}")
    return target


def psi(A: MissingSet | Iterable[int], f: EndoFunction, k: int, alpha: int) -> AlphaFunction:
    """``sigma o phi(f)`` where ``sigma`` skips the values in ``A``."""
    if not isinstance(A, MissingSet):
        A = MissingSet(tuple(A))
    A.check(alpha, k)
    g = phi(f, k)
    s = sigma(A, f.n, alpha)
    return AlphaFunction(tuple(s[v] for v in g.values), alpha)


def psi_inverse(h: AlphaFunction) -> tuple[int, MissingSet, EndoFunction]:
    """Recover ``(k, A, f)`` from ``h`` in some ``H(n, k, alpha)``.

    ``k`` is the ``(alpha+1)``-st smallest unused value of ``[-alpha, n]``;
    ``A`` is the set of smaller unused values.
    """
    n, alpha = h.n, h.alpha
    img = set(h.values)
    unused = [v for v in range(-alpha, n + 1) if v not in img]
    # |[-alpha, n]| - n = alpha + 1, so at least alpha + 1 values are unused
    k = unused[alpha]
    A = MissingSet(tuple(unused[:alpha]))
    position = {v: i for i, v in enumerate(sigma(A, n, alpha))}
    g = ShiftedFunction(tuple(position[v] for v in h.values))
    return k, A, phi_inverse(g, k)


def iter_functions(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All value tuples ``[n] -> [lo, hi]`` in odometer order (last coordinate fastest)."""
    return product(range(lo, hi + 1), repeat=n)


def _check_function_cap(n: int, cap: int | None) -> None:
    limit = config.DEFAULT_FUNCTION_CAP if cap is None else cap
    if n > limit:
        raise LimitExceeded(f"exhaustive function enumeration requested for n={n}, cap is {limit}")


def enumerate_F(n: int, k: int, *, cap: int | None = None) -> int:
    """``|F(n,k)|`` by scanning all ``n^n`` functions."""
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside [0, n={n}]")
    _check_function_cap(n, cap)
    need = set(range(1, k + 1))
    return sum(1 for vals in iter_functions(n, 1, n) if need <= set(vals))


def enumerate_G(n: int, k: int, *, cap: int | None = None) -> int:
    """``|G(n,k)|`` by scanning all ``(n+1)^n`` maps ``[n] -> [0, n]``."""
    _check_function_cap(n, cap)
    need = set(range(k))
    return sum(1 for vals in iter_functions(n, 0, n) if need <= set(vals) and k not in vals)


def enumerate_H(n: int, k: int, alpha: int, *, budget: int | None = None) -> int:
    """``|H(n,k,alpha)|`` by scanning all ``(n+1+alpha)^n`` maps ``[n] -> [-alpha, n]``."""
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    limit = config.DEFAULT_MAP_BUDGET if budget is None else budget
    if (n + 1 + alpha) ** n > limit:
        raise LimitExceeded(f"({n}+1+{alpha})^{n} maps exceed the enumeration budget {limit}")
    window = range(-alpha, k)
    count = 0
    for vals in iter_functions(n, -alpha, n):
        img = set(vals)
        if k in img:
            continue
        if sum(1 for v in window if v not in img) == alpha:
            count += 1
    return count


def missing_sets(alpha: int, k: int) -> Iterator[MissingSet]:
    """Every ``alpha``-subset of ``[-alpha, k-1]``, lexicographically."""
    for combo in combinations(range(-alpha, k), alpha):
        yield MissingSet(combo)


def function_to_dict(f: AnyFunction) -> dict:
    out: dict = {"n": f.n}
    if isinstance(f, AlphaFunction):
        out["alpha"] = f.alpha
    out["values"] = list(f.values)
    return out


def function_from_json(data: str | Mapping, kind: str = "endo") -> AnyFunction:
    """Parse ``{"n": int, "alpha": int?, "values": [int, ...]}``.

    ``kind`` is one of ``endo``, ``shifted``, ``alpha``.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, list):
        data = {"n": len(data), "values": data}
    values = tuple(data["values"])
    if "n" in data and data["n"] != len(values):
        raise InvalidInput(f"n={data['n']} but {len(values)} values given")
    if kind == "endo":
        return EndoFunction(values)
    if kind == "shifted":
        return ShiftedFunction(values)
    if kind == "alpha":
        return AlphaFunction(values, int(data.get("alpha", 0)))
    raise ValueError(f"unknown function kind {kind!r}")
