from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from q2kit.exact_linalg import (
    RationalMatrix,
    annihilated_by,
    annihilates,
    build_projector_family,
    kron,
    proper_subsets,
    subset_projector,
    verify_nowhere_zero,
)

KS = range(1, 13)


def symbolic_householder(k):
    """I - 2 u u^T with the unit vector written using square roots."""
    if k % 2:
        u = sp.Matrix([1 / sp.sqrt(k)] * k)
    else:
        u = sp.Matrix([2 / sp.sqrt(k + 3)] + [1 / sp.sqrt(k + 3)] * (k - 1))
    assert sp.simplify((u.T * u)[0]) == 1
    return sp.eye(k) - 2 * u * u.T


def as_fractions(m):
    return [[F(int(sp.fraction(sp.nsimplify(x))[0]), int(sp.fraction(sp.nsimplify(x))[1])) for x in row] for row in m.tolist()]


def rm(rows):
    return RationalMatrix(rows)


@st.composite
def rational_matrices(draw, max_dim=3):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    vals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return RationalMatrix(draw(st.lists(st.lists(vals, min_size=c, max_size=c), min_size=r, max_size=r)))


@pytest.mark.parametrize("k", range(1, 9))
def test_householder_matches_symbolic_oracle(k):
    fam = build_projector_family(k)
    assert fam.Q.tolist() == as_fractions(symbolic_householder(k))


def test_k3_values():
    fam = build_projector_family(3)
    third, two = F(1, 3), F(-2, 3)
    assert fam.Q == rm([[third, two, two], [two, third, two], [two, two, third]])
    assert fam.J[0] == rm([[F(1, 9), F(-2, 9), F(-2, 9)], [F(-2, 9), F(4, 9), F(4, 9)], [F(-2, 9), F(4, 9), F(4, 9)]])
    assert fam.J[0] @ fam.J[0] == fam.J[0]
    assert fam.Q @ fam.Q.T == RationalMatrix.identity(3)


def test_k2_values():
    fam = build_projector_family(2)
    assert fam.Q == rm([[F(-3, 5), F(-4, 5)], [F(-4, 5), F(3, 5)]])
    assert fam.J[0] == rm([[F(9, 25), F(12, 25)], [F(12, 25), F(16, 25)]])
    assert fam.profile == (2, 1)


def test_k1_values():
    fam = build_projector_family(1)
    assert fam.Q == rm([[-1]])
    assert fam.J == (rm([[1]]),)
    assert subset_projector(fam, [0]) == RationalMatrix.identity(1)


def test_nonpositive_k_rejected():
    with pytest.raises(ValueError):
        build_projector_family(0)


@pytest.mark.parametrize("k", KS)
def test_projector_identities(k):
    fam = build_projector_family(k)
    ident, zero = RationalMatrix.identity(k), RationalMatrix.zeros(k)
    assert fam.Q @ fam.Q.T == ident
    assert fam.Q.is_symmetric() and fam.Q @ fam.Q == ident
    total = RationalMatrix.zeros(k)
    for i, ji in enumerate(fam.J):
        assert ji @ ji == ji
        assert ji.trace() == 1
        for j, jj in enumerate(fam.J):
            if i != j:
                assert ji @ jj == zero
        total = total + ji
    assert total == ident


@pytest.mark.parametrize("k", KS)
def test_columns_are_eigenvectors(k):
    fam = build_projector_family(k)
    for i, ji in enumerate(fam.J):
        for j in range(k):
            q = fam.column(j)
            expected = q if i == j else [F(0)] * k
            assert ji.matvec(q) == expected


@pytest.mark.parametrize("k", KS)
def test_entry_structure(k):
    entries = {x for row in build_projector_family(k).Q for x in row}
    if k % 2:
        allowed = {1 - F(2, k), F(-2, k)}
    else:
        d = k + 3
        allowed = {1 - F(8, d), 1 - F(2, d), F(-4, d), F(-2, d)}
    assert entries <= allowed


def test_subset_projector_examples():
    fam = build_projector_family(3)
    assert subset_projector(fam, []) == RationalMatrix.zeros(3)
    assert subset_projector(fam, [0, 1, 2]) == RationalMatrix.identity(3)
    p = subset_projector(fam, [0, 1])
    assert p == RationalMatrix.identity(3) - fam.J[2]
    assert all(x != 0 for row in p for x in row)
    with pytest.raises(IndexError):
        subset_projector(fam, [3])


@pytest.mark.parametrize("k", range(2, 13))
def test_exhaustive_nowhere_zero(k):
    rep = verify_nowhere_zero(build_projector_family(k), "exhaustive")
    assert rep.checked == 2**k - 2
    assert rep.ok and rep.conditions_ok


@pytest.mark.parametrize("k", range(1, 7))
def test_gray_scan_agrees_with_direct_sums(k):
    # direct Fraction sums of J_i, independent of the integer Gray-code scan
    fam = build_projector_family(k)
    direct = {s for s in proper_subsets(k) if any(x == 0 for row in subset_projector(fam, s) for x in row)}
    assert direct == set(verify_nowhere_zero(fam, "exhaustive").zero_entries)


def test_targeted_scan():
    assert verify_nowhere_zero(build_projector_family(3), "targeted", [(0,)]).ok
    assert verify_nowhere_zero(build_projector_family(4), "targeted", [(0, 1, 2)]).ok
    full = verify_nowhere_zero(build_projector_family(4), "targeted", [(0, 1, 2, 3)])
    assert not full.ok  # the identity has zeros
    with pytest.raises(IndexError):
        verify_nowhere_zero(build_projector_family(3), "targeted", [(5,)])


def test_exhaustive_size_limit():
    with pytest.raises(ValueError):
        verify_nowhere_zero(build_projector_family(21), "exhaustive")


@pytest.mark.parametrize("k", KS)
def test_quarter_condition_parity(k):
    # 4 (d - S) w_i^2 is even while d^2 is odd, so the diagonal condition cannot fail
    fam = build_projector_family(k)
    d = fam.norm_sq
    assert d % 2 == 1
    sq = [w * w for w in fam.profile]
    for s in proper_subsets(k):
        tot = sum(sq[i] for i in s)
        for i in s:
            assert (4 * (d - tot) * sq[i]) % 2 == 0 != (d * d) % 2


def test_kron_examples():
    b = rm([[1, 2], [3, 4]])
    assert kron(RationalMatrix.identity(2), b) == rm([[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]])
    a = rm([[F(1, 2), 3], [0, -1]])
    assert kron(a, rm([[1]])) == a
    j1 = build_projector_family(2).J[0]
    swap = kron(rm([[0, 1], [1, 0]]), j1)
    assert swap.block(0, 1, 2) == j1 and swap.block(1, 0, 2) == j1
    assert swap.block(0, 0, 2).is_zero() and swap.block(1, 1, 2).is_zero()


@given(rational_matrices(), rational_matrices(), rational_matrices())
@settings(max_examples=40, deadline=None)
def test_kron_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_kron_mixed_product(p, q, r, s, data):
    vals = st.fractions(min_value=-3, max_value=3, max_denominator=5)

    def mat(rows, cols):
        return RationalMatrix(data.draw(st.lists(st.lists(vals, min_size=cols, max_size=cols), min_size=rows, max_size=rows)))

    a, c = mat(p, q), mat(q, p)
    b, d = mat(r, s), mat(s, r)
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@given(rational_matrices(3), rational_matrices(3))
@settings(max_examples=40, deadline=None)
def test_matmul_matches_float(a, b):
    if a.cols != b.rows:
        with pytest.raises(ValueError):
            a @ b
        return
    assert np.allclose((a @ b).to_float(), a.to_float() @ b.to_float())


def test_annihilates_examples():
    assert annihilates(RationalMatrix.diag([1, -1]), 1, -1).exactly_two
    one = annihilates(RationalMatrix.identity(3), 1, -1)
    assert one.annihilates and one.first_attained and not one.second_attained
    assert not annihilates(RationalMatrix.diag([1, 0, -1]), 1, -1).annihilates
    with pytest.raises(ValueError):
        annihilates(rm([[0, 1], [0, 0]]), 1, -1)
    with pytest.raises(ValueError):
        annihilates(RationalMatrix.identity(2), 1, 1)


def test_annihilated_by_union():
    m = RationalMatrix.diag([1, 0, -1])
    assert annihilated_by(m, [1, 0, -1])
    assert not annihilated_by(m, [1, -1])


def test_matrix_text_round_trip():
    m = build_projector_family(4).J[1]
    text = m.to_text()
    assert text.startswith("matrix 4 4 symmetric")
    assert RationalMatrix.from_text(text) == m
    with pytest.raises(ValueError):
        RationalMatrix.from_text("matrix 2 2 symmetric\n0 1\n0 0\n")
    with pytest.raises(ValueError):
        RationalMatrix.from_text("matrix 2 2 general\n0 1\n")


def test_no_float_entries():
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])


def test_proper_subsets_count():
    assert sum(1 for _ in proper_subsets(5)) == 30
    assert list(combinations(range(2), 1)) == list(proper_subsets(2))
