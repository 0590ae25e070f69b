from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sjord.scalars import HPoly
from sjord.superlinalg import (GradedMatrix, NotNilpotent, SuperSpace, UndeclaredParity,
                               graded_commutator, graded_flip, graded_kron, nilpotency_index,
                               plain_flip, plain_kron, unipotent_series)

V = SuperSpace.fundamental(2)
small = st.integers(-3, 3).map(HPoly.const)


@st.composite
def homogeneous(draw, space=V, parity=None):
    p = draw(st.sampled_from((0, 1))) if parity is None else parity
    entries = {}
    for i in range(space.dim):
        for j in range(space.dim):
            if (space.parity[i] + space.parity[j]) % 2 == p:
                entries[(i, j)] = draw(small)
    return GradedMatrix(space, entries, p)


@st.composite
def strictly_upper(draw, space=V):
    entries = {(i, j): draw(small) * HPoly.gen() ** draw(st.integers(0, 1))
               for i in range(space.dim) for j in range(i + 1, space.dim)}
    return GradedMatrix(space, entries, None)


def apply_graded(a, b, j, l):
    """(a (x) b)(v_j (x) v_l) = (-1)^{|b| p(j)} a v_j (x) b v_l, as a dict."""
    sign = -1 if (b.parity and V.parity[j]) else 1
    out = {}
    for (i, jj), x in a.entries.items():
        if jj != j:
            continue
        for (k, ll), y in b.entries.items():
            if ll == l:
                out[i * V.dim + k] = out.get(i * V.dim + k, HPoly.zero()) + x * y * sign
    return {k: v for k, v in out.items() if v}


@settings(max_examples=40)
@given(homogeneous(), homogeneous())
def test_graded_kron_matches_koszul_action(a, b):
    m = graded_kron(a, b)
    for j in range(V.dim):
        for l in range(V.dim):
            col = j * V.dim + l
            got = {r: v for (r, c), v in m.entries.items() if c == col}
            assert got == apply_graded(a, b, j, l)


@settings(max_examples=40)
@given(homogeneous(), homogeneous(), homogeneous(), homogeneous())
def test_graded_mixed_product_rule(a, b, c, d):
    lhs = graded_kron(a, b) @ graded_kron(c, d)
    rhs = graded_kron(a @ c, b @ d)
    if b.parity and c.parity:
        rhs = -rhs
    assert lhs == rhs


@settings(max_examples=30)
@given(homogeneous(), homogeneous())
def test_plain_kron_mixed_product(a, b):
    assert plain_kron(a, b) @ plain_kron(b, a) == plain_kron(a @ b, b @ a)


@settings(max_examples=30)
@given(homogeneous(), homogeneous())
def test_graded_flip_swaps_factors(a, b):
    tau = graded_flip(V, V)
    sign = -1 if a.parity and b.parity else 1
    assert tau @ graded_kron(a, b) @ tau == graded_kron(b, a).scale(HPoly.const(sign))


def test_flips_are_involutions():
    one = GradedMatrix.identity(V.power(2))
    for flip in (graded_flip, plain_flip):
        t = flip(V, V)
        assert t @ t == one


@settings(max_examples=40)
@given(homogeneous(), homogeneous())
def test_graded_commutator_supersymmetry(a, b):
    sign = -1 if a.parity and b.parity else 1
    assert graded_commutator(a, b) == graded_commutator(b, a).scale(HPoly.const(-sign))


def test_commutator_needs_parity():
    x = GradedMatrix(V, {(0, 2): HPoly.one(), (0, 1): HPoly.one()}, None)
    with pytest.raises(UndeclaredParity):
        graded_commutator(x, x)


@settings(max_examples=40)
@given(strictly_upper())
def test_exp_log_inverse(x):
    one = GradedMatrix.identity(V)
    e = unipotent_series(x, "exp")
    assert unipotent_series(e, "log") == x
    s = unipotent_series(x, "sqrt_one_plus")
    assert s @ s == one + x


def test_exp_of_sum_of_commuting():
    x = GradedMatrix(V, {(0, 1): HPoly.gen()}, 0)
    two = x.scale(HPoly.const(2))
    assert unipotent_series(two, "exp") == unipotent_series(x, "exp") @ unipotent_series(x, "exp")


def test_nilpotency():
    x = GradedMatrix(V, {(0, 1): HPoly.one(), (1, 2): HPoly.one()}, None)
    assert nilpotency_index(x) == 3
    with pytest.raises(NotNilpotent):
        nilpotency_index(GradedMatrix.identity(V))


def test_parity_operator_and_dense_semantics():
    p = V.parity_operator()
    assert p[2, 2] == HPoly.const(-1)
    assert p[0, 1] == HPoly.zero()
    assert p.to_rows()[1] == [HPoly.zero(), HPoly.one(), HPoly.zero()]
    assert p @ p == GradedMatrix.identity(V)


def test_binomial_half_coefficients():
    # sqrt(1 + t) = 1 + t/2 - t^2/8 + t^3/16 on a 4x4 Jordan block
    sp = SuperSpace.even(4)
    t = GradedMatrix(sp, {(0, 1): HPoly.one(), (1, 2): HPoly.one(), (2, 3): HPoly.one()}, 0)
    s = unipotent_series(t, "sqrt_one_plus")
    assert [s[0, k] for k in range(4)] == [HPoly.const(c) for c in
                                          (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))]
