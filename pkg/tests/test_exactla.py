from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkednets.exactla import (
    QQ, QT, Field, Matrix, PoleAtZero, PrimeField, RatFunc, Subspace, compose, image, intersect,
    inverse, is_iso, kernel, rank, scalar_multiple_of, specialize_t0,
)

F3 = PrimeField(3)
t = RatFunc.t()


def test_kernel_of_zero_is_everything():
    assert kernel(Matrix.zeros(QQ, 2, 2)) == Subspace.full(QQ, 2)


def test_rank_identity():
    assert rank(Matrix.identity(QQ, 4)) == 4


def test_kernel_mod_3():
    M = Matrix.from_rows(F3, [[1, 2], [2, 4]])
    assert kernel(M) == Subspace.span(F3, 2, [[1, 1]])


def test_scalar_multiple():
    B = Matrix.from_rows(QQ, [[1, 2], [0, 3]])
    assert scalar_multiple_of(B.scale(2), B) == 2
    assert scalar_multiple_of(Matrix.zeros(QQ, 2, 2), B) == 0
    assert scalar_multiple_of(Matrix.from_rows(QQ, [[1, 0]]), Matrix.from_rows(QQ, [[0, 1]])) is None


def test_specialize():
    assert specialize_t0(Matrix.from_rows(QT, [[t]])) == Matrix.zeros(QQ, 1, 1)
    one_over = RatFunc([1], [1, 1])
    assert specialize_t0(Matrix.from_rows(QT, [[one_over]])) == Matrix.identity(QQ, 1)
    with pytest.raises(PoleAtZero):
        specialize_t0(Matrix.from_rows(QT, [[RatFunc([1], [0, 1])]]))


def test_ratfunc_canonical():
    a = RatFunc([0, 2], [0, 4])  # 2t / 4t
    assert a == QT(Fraction(1, 2))
    assert (t + 1) * (t - 1) / (t - 1) == t + 1
    assert QT.parse(QT.format(a / (t + 3))) == a / (t + 3)


def test_prime_field_arithmetic():
    F = PrimeField(7)
    x = F(3)
    assert x * (F.one / x) == F.one
    assert len(F.elements()) == 7
    with pytest.raises(ValueError):
        PrimeField(9)


def test_field_json_roundtrip():
    for F in (QQ, PrimeField(10007), QT):
        assert Field.from_json(F.to_json()) == F


def test_inverse_and_iso():
    M = Matrix.from_rows(QQ, [[2, 1], [1, 1]])
    assert is_iso(M)
    assert M @ inverse(M) == Matrix.identity(QQ, 2)


def test_intersect_and_image():
    A = Matrix.from_rows(QQ, [[1, 0], [0, 0]])
    B = Matrix.from_rows(QQ, [[1, 1], [1, 1]])
    assert intersect(image(A), image(B)) == Subspace.zero(QQ, 2)
    assert intersect(image(A), image(A)).dim == 1


entries = st.integers(-3, 3)


@st.composite
def matrices(draw, field=QQ, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(field, rows, c)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    assert rank(M) + kernel(M).dim == M.ncols


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_compose_image_kernel(B, data):
    rows = data.draw(st.lists(st.lists(entries, min_size=B.nrows, max_size=B.nrows), min_size=1, max_size=4))
    A = Matrix.from_rows(QQ, rows, B.nrows)
    AB = compose(A, B)
    assert image(AB) <= image(A)
    assert kernel(B) <= kernel(AB)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=4), st.randoms())
def test_subspace_canonical(vecs, rnd):
    shuffled = list(vecs)
    rnd.shuffle(shuffled)
    assert Subspace.span(QQ, 3, vecs) == Subspace.span(QQ, 3, shuffled)


polys = st.lists(st.integers(-2, 2), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys, polys)
def test_specialize_multiplicative(a, b, c, d):
    x = RatFunc(a, [1, 1])
    y = RatFunc(b, [2, 1])
    A = Matrix.from_rows(QT, [[x, y], [y, x]])
    B = Matrix.from_rows(QT, [[RatFunc(c), x], [RatFunc(d), y]])
    assert specialize_t0(A @ B) == specialize_t0(A) @ specialize_t0(B)
