from fractions import Fraction
from itertools import product, takewhile
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import ORACLE_ROWS
from mdtree.counting import (
    CLOSED_FORM_METHODS,
    IdentityCheck,
    Method,
    TriangleRow,
    binomial,
    check_identity_alpha,
    check_identity_harmonic,
    check_identity_row_sum,
    check_identity_weighted,
    f_count_inclusion_exclusion,
    f_count_stirling,
    forest_count,
    stirling2,
    t_count,
    t_count_decomposition,
    t_count_inverse_matrix,
    t_count_stirling,
    triangle_row,
    weak_compositions,
)
from mdtree.errors import DomainError
from mdtree.trees import enumerate_trees


# -- independent oracles -----------------------------------------------------

def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def count_functions_hitting(n, k):
    need = set(range(1, k + 1))
    return sum(1 for f in product(range(1, n + 1), repeat=n) if need <= set(f))


def count_rooted_forests(N, s):
    """Forests on {0..N-1} whose roots are exactly {0..s-1}, by scanning parent choices."""
    free = list(range(s, N))
    total = 0
    for ps in product(range(N), repeat=len(free)):
        parent = dict(zip(free, ps))
        ok = True
        for v in free:
            seen = set()
            u = v
            while u in parent:
                if u in seen:
                    ok = False
                    break
                seen.add(u)
                u = parent[u]
            if not ok:
                break
        total += ok
    return total


# -- binomial / stirling -----------------------------------------------------

@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (3, 5, 0), (0, 0, 1), (5, -1, 0), (-1, 0, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_stirling_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(20))
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0


@pytest.mark.parametrize("m", range(9))
def test_stirling_against_partitions(m):
    parts = list(set_partitions(list(range(m))))
    for k in range(m + 1):
        assert stirling2(m, k) == sum(1 for p in parts if len(p) == k)
    # Bell number
    assert sum(stirling2(m, k) for k in range(m + 1)) == len(parts)


def test_stirling_deep_row():
    assert stirling2(600, 599) == binomial(600, 2)


# -- forests -----------------------------------------------------------------

def test_forest_examples():
    assert forest_count(0, 0) == 1
    assert forest_count(1, 1) == 1
    assert forest_count(3, 1) == 3
    assert forest_count(4, 0) == 0
    with pytest.raises(DomainError):
        forest_count(2, 3)


@pytest.mark.parametrize("N", range(0, 6))
def test_forest_against_enumeration(N):
    for s in range(N + 1):
        assert forest_count(N, s) == count_rooted_forests(N, s)


@pytest.mark.parametrize("N", range(1, 9))
def test_forest_cayley(N):
    # one designated root: trees on N vertices with a fixed root, N^(N-2) of them;
    # times N root choices gives Cayley's N^(N-1) rooted trees
    fixed_root = sum(1 for _ in takewhile(lambda t: t.root == 0, enumerate_trees(N - 1)))
    assert forest_count(N, 1) == fixed_root
    assert N * forest_count(N, 1) == N ** (N - 1)


@pytest.mark.parametrize("N", range(1, 7))
def test_forest_cayley_by_forest_scan(N):
    assert forest_count(N, 1) == count_rooted_forests(N, 1)


# -- T and F counts ----------------------------------------------------------

def test_t_count_stirling_examples():
    assert t_count_stirling(3, 3) == 6
    assert t_count_stirling(2, 1) == 3
    assert t_count_stirling(3, 1) == 19


def test_f_count_examples():
    assert f_count_stirling(2, 1) == 3
    assert f_count_stirling(3, 0) == 27
    assert f_count_stirling(5, 2) == 1320
    assert f_count_inclusion_exclusion(2, 1) == 3
    assert f_count_inclusion_exclusion(3, 2) == 12
    assert f_count_inclusion_exclusion(4, 0) == 256


@pytest.mark.parametrize("n", range(0, 7))
def test_f_counts_against_function_scan(n):
    for k in range(n + 1):
        expected = count_functions_hitting(n, k)
        assert f_count_stirling(n, k) == expected
        assert f_count_inclusion_exclusion(n, k) == expected


def test_decomposition_examples():
    assert t_count_decomposition(2, 1) == 3
    assert t_count_decomposition(3, 0) == 27
    for n in range(8):
        assert t_count_decomposition(n, n) == factorial(n)


def test_inverse_matrix_examples():
    assert [t_count_inverse_matrix(2, k) for k in range(3)] == [4, 3, 2]


@pytest.mark.parametrize("fn", [t_count_stirling, f_count_stirling, f_count_inclusion_exclusion,
                                t_count_decomposition, t_count_inverse_matrix])
def test_domain_errors(fn):
    with pytest.raises(DomainError):
        fn(2, 3)
    with pytest.raises(DomainError):
        fn(2, -1)


def test_weak_compositions_colex():
    assert list(weak_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
    assert list(weak_compositions(3, 1)) == [(3,)]
    assert list(weak_compositions(1, 0)) == []
    assert len(list(weak_compositions(4, 3))) == binomial(6, 2)


@pytest.mark.parametrize("n", range(10))
def test_decomposition_grouped_matches_literal(n):
    for k in range(n + 1):
        assert t_count_decomposition(n, k) == t_count_decomposition(n, k, grouped=False)


@pytest.mark.parametrize("n", sorted(ORACLE_ROWS))
@pytest.mark.parametrize("method", list(Method))
def test_rows_match_oracle(n, method):
    assert triangle_row(n, method).values == ORACLE_ROWS[n]


def test_all_closed_forms_agree_to_30():
    for n in range(31):
        rows = {triangle_row(n, m).values for m in CLOSED_FORM_METHODS}
        assert len(rows) == 1, n
        (row,) = rows
        assert row[0] == n ** n
        assert row[n] == factorial(n)


def test_t_count_dispatch():
    assert t_count(3, 1) == 19
    assert t_count(3, 1, "enumerate") == 19
    assert t_count(3, 2, Method.INVERSE_MATRIX) == 12


def test_triangle_row_type():
    row = triangle_row(3, "stirling")
    assert row == TriangleRow(3, (27, 19, 12, 6), Method.STIRLING)
    assert list(row) == [27, 19, 12, 6]
    assert triangle_row(0, "decomposition").values == (1,)
    assert triangle_row(2, "inclusion_exclusion").values == (4, 3, 2)
    with pytest.raises(ValueError):
        TriangleRow(2, (1, 2), Method.STIRLING)
    with pytest.raises(ValueError):
        triangle_row(2, "nope")


# -- identities --------------------------------------------------------------

def test_row_sum_examples():
    for n in (0, 2, 3):
        c = check_identity_row_sum(n)
        assert c and c.rhs == (n + 1) ** n


def test_weighted_examples():
    assert check_identity_weighted(2).lhs == 16
    assert check_identity_weighted(3).lhs == 125
    assert check_identity_weighted(0)


def test_alpha_examples():
    assert check_identity_alpha(2, 0).lhs == 9
    assert check_identity_alpha(2, 1).lhs == 16
    assert check_identity_alpha(2, 2).lhs == 25
    assert all(check_identity_alpha(2, a) for a in range(3))
    with pytest.raises(DomainError):
        check_identity_alpha(2, -1)


def test_harmonic_examples():
    c = check_identity_harmonic(2)
    assert c.lhs == Fraction(4) and c
    assert check_identity_harmonic(3).lhs == 27
    assert check_identity_harmonic(1)
    with pytest.raises(DomainError):
        check_identity_harmonic(0)


def test_identity_record_shape():
    rec = check_identity_alpha(2, 2).to_dict()
    assert rec == {"identity": "alpha", "n": 2, "alpha": 2, "lhs": "25", "rhs": "25", "pass": True}
    bad = IdentityCheck("x", 1, 2, 3)
    assert not bad and bad.to_dict()["pass"] is False


@given(st.integers(0, 25), st.integers(0, 10))
def test_alpha_identity_property(n, alpha):
    assert check_identity_alpha(n, alpha)


@given(st.integers(0, 40), st.integers(0, 40))
def test_binomial_symmetry(n, k):
    assert binomial(n, k) == binomial(n, n - k) if k <= n else binomial(n, k) == 0
