"""Batteries of exact checks, grouped the way ``mdtree verify`` reports them.

Every function returns a list of :class:`~mdtree.counting.IdentityCheck`;
a check passes iff its two sides are equal.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from . import linalg, maps, series
from .counting import (
    CLOSED_FORM_METHODS,
    IdentityCheck,
    Method,
    binomial,
    check_identity_alpha,
    check_identity_harmonic,
    check_identity_row_sum,
    check_identity_weighted,
    f_count_inclusion_exclusion,
    triangle_row,
)

SUITES = ("identities", "methods", "bijections", "matrix", "series")


def _fmt_row(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def identity_checks(n_max: int, alpha_max: int) -> list[IdentityCheck]:
    out: list[IdentityCheck] = []
    for n in range(n_max + 1):
        out.append(check_identity_row_sum(n))
        out.append(check_identity_weighted(n))
        for alpha in range(alpha_max + 1):
            out.append(check_identity_alpha(n, alpha))
        if n >= 1:
            out.append(check_identity_harmonic(n))
    return out


def method_checks(n_max: int, oracle_max: int = -1, *, workers: int = 1) -> list[IdentityCheck]:
    """Entrywise agreement of every closed form with the Stirling route.

    Rows ``n <= oracle_max`` are also compared against exhaustive enumeration.
    """
    out: list[IdentityCheck] = []
    for n in range(n_max + 1):
        ref = triangle_row(n, Method.STIRLING)
        others = [triangle_row(n, m) for m in CLOSED_FORM_METHODS if m is not Method.STIRLING]
        if n <= oracle_max:
            others.append(triangle_row(n, Method.ENUMERATE, workers=workers))
        for row in others:
            for k in range(n + 1):
                out.append(IdentityCheck(f"{row.method.value}=stirling", n, row[k], ref[k], k=k))
        if n >= 1:
            out.append(IdentityCheck("T(n,0)=n^n", n, ref[0], n ** n, k=0))
        out.append(IdentityCheck("T(n,n)=n!", n, ref[n], factorial(n), k=n))
    return out


def bijection_checks(n_max: int, alpha_max: int, *, phi_n_max: int = 5,
                     psi_n_max: int = 4) -> list[IdentityCheck]:
    """Exhaustive round trips and cardinality laws for ``phi`` and ``psi``."""
    out: list[IdentityCheck] = []
    for n in range(min(n_max, phi_n_max) + 1):
        by_k: dict[int, set] = {k: set() for k in range(n + 1)}
        round_trips = {k: 0 for k in range(n + 1)}
        for vals in maps.iter_functions(n, 1, n):
            f = maps.EndoFunction(vals)
            for k in range(n + 1):
                if not maps.is_in_F(f, k):
                    break
                g = maps.phi(f, k)
                by_k[k].add(g.values)
                if maps.phi_inverse(g, k) == f and maps.classify_G(g) == k:
                    round_trips[k] += 1
        g_total = 0
        for k in range(n + 1):
            f_size = f_count_inclusion_exclusion(n, k)
            g_size = maps.enumerate_G(n, k)
            g_total += g_size
            out.append(IdentityCheck("phi_round_trip", n, round_trips[k], f_size, k=k))
            out.append(IdentityCheck("phi_image=G", n, len(by_k[k]), g_size, k=k))
        out.append(IdentityCheck("sum_k|G|=(n+1)^n", n, g_total, (n + 1) ** n))

    for n in range(min(n_max, psi_n_max) + 1):
        for alpha in range(alpha_max + 1):
            h_total = 0
            for k in range(n + 1):
                fs = [maps.EndoFunction(v) for v in maps.iter_functions(n, 1, n)]
                fs = [f for f in fs if maps.is_in_F(f, k)]
                images = set()
                ok = 0
                pairs = 0
                for A in maps.missing_sets(alpha, k):
                    for f in fs:
                        pairs += 1
                        h = maps.psi(A, f, k, alpha)
                        images.add(h.values)
                        if maps.psi_inverse(h) == (k, A, f) and maps.is_in_H(h, k):
                            ok += 1
                h_size = maps.enumerate_H(n, k, alpha)
                h_total += h_size
                out.append(IdentityCheck("psi_round_trip", n, ok, pairs, alpha=alpha, k=k))
                out.append(IdentityCheck("psi_image=H", n, len(images), h_size, alpha=alpha, k=k))
                out.append(IdentityCheck("|H|=C(k+a,a)|F|", n, h_size,
                                         binomial(k + alpha, alpha) * len(fs), alpha=alpha, k=k))
            out.append(IdentityCheck("sum_k|H|=(n+1+a)^n", n, h_total, (n + 1 + alpha) ** n,
                                     alpha=alpha))
    return out


def matrix_checks(n_max: int) -> list[IdentityCheck]:
    out: list[IdentityCheck] = []
    for n in range(n_max + 1):
        A, B = linalg.build_A(n), linalg.build_B(n)
        I = linalg.identity(n + 1)
        out.append(IdentityCheck("A*B=I", n, linalg.matmul(A, B) == I, True))
        out.append(IdentityCheck("B*A=I", n, linalg.matmul(B, A) == I, True))
        out.append(IdentityCheck("A=A^T", n, A == A.transpose(), True))
        row = triangle_row(n, Method.STIRLING).values
        p = linalg.build_p(n)
        out.append(IdentityCheck("A*t=p", n, _fmt_row(linalg.matvec(A, row)), _fmt_row(p)))
        out.append(IdentityCheck("B*p=t", n, _fmt_row(linalg.triangle_via_matrix(n)), _fmt_row(row)))
    return out


def entry_identity_checks(i_max: int) -> list[IdentityCheck]:
    out = []
    for i in range(i_max + 1):
        for m in range(i_max + 1):
            lhs, rhs = linalg.inverse_entry_identity(i, m)
            out.append(IdentityCheck(f"inverse_entry(i={i},m={m})", i, lhs, rhs))
    return out


def series_checks(order: int, tcap: int | None = None) -> list[IdentityCheck]:
    tcap = order if tcap is None else tcap
    out: list[IdentityCheck] = []
    for which in ("gen1", "gen2", "gen3"):
        lhs = series.build_lhs(which, order, tcap=tcap)
        rhs = series.build_rhs(which, order, tcap=tcap)
        out.append(IdentityCheck(which, order, lhs == rhs, True))

    # t = 1: gen3 gives (n+1)^n, gen2 gives (n+2)^n (plus the leading 1)
    lhs3 = series.specialize_t(series.build_lhs("gen3", order, tcap=tcap))
    rhs3 = series.specialize_t(series.build_rhs("gen3", order, tcap=tcap))
    rhs2 = series.specialize_t(series.build_rhs("gen2", order, tcap=tcap))
    for n in range(order):
        scale = factorial(n + 1)
        out.append(IdentityCheck("gen3|t=1 lhs", n, lhs3[n + 1] * scale, (n + 1) ** n))
        out.append(IdentityCheck("gen3|t=1 rhs", n, rhs3[n + 1] * scale, (n + 1) ** n))
        out.append(IdentityCheck("gen2|t=1 rhs", n, rhs2[n + 1] * scale, (n + 2) ** n))
    return out


def run_suite(name: str, *, n_max: int, alpha_max: int, order: int,
              oracle_max: int = -1, workers: int = 1) -> list[IdentityCheck]:
    if name == "identities":
        return identity_checks(n_max, alpha_max)
    if name == "methods":
        return method_checks(n_max, oracle_max, workers=workers)
    if name == "bijections":
        return bijection_checks(n_max, alpha_max)
    if name == "matrix":
        return matrix_checks(n_max)
    if name == "series":
        return series_checks(order)
    if name == "all":
        out: list[IdentityCheck] = []
        for s in SUITES:
            out.extend(run_suite(s, n_max=n_max, alpha_max=alpha_max, order=order,
                                 oracle_max=oracle_max, workers=workers))
        return out
    raise ValueError(f"unknown suite {name!r}")
