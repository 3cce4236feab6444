from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orbinv.cyclo import (
    ConductorMismatch,
    LiteralError,
    Matrix,
    SingularMatrix,
    cyclotomic_polynomial,
    field,
    intersect_subspaces,
    kernel_basis,
    mat_inverse,
    parse_literal,
    rank,
    rref,
    totient,
)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15]

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, N=None):
    N = N if N is not None else draw(st.sampled_from(CONDUCTORS))
    K = field(N)
    coeffs = draw(st.lists(small_q, min_size=K.degree, max_size=K.degree))
    return K.from_coefficients(coeffs)


@st.composite
def triples(draw):
    N = draw(st.sampled_from(CONDUCTORS))
    return draw(elements(N)), draw(elements(N)), draw(elements(N))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) - 1 == totient(n)


def test_basic_identities():
    K4 = field(4)
    assert K4.zeta() ** 2 == -1
    K3 = field(3)
    z = K3.zeta()
    assert 1 + z + z * z == 0
    assert (1 + z).inverse() == -z
    assert str(-1 - z) == "-1-z"
    assert K3.root_of_unity(1, 6) == -(z * z)
    assert K3.root_of_unity(1, 6) ** 6 == 1


def test_roots_of_unity_orders():
    for N in CONDUCTORS:
        K = field(N)
        L = K.root_order
        for k in range(L):
            w = K.root_of_unity(k, L)
            assert w ** L == 1
        if N > 2:
            assert [K.zeta(k).root_of_unity_log() for k in range(N)] == list(range(N))


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        field(3).zeta() + field(4).zeta()


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(elements())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@given(elements())
def test_literal_round_trip(a):
    assert parse_literal(str(a), a.field) == a
    assert hash(parse_literal(str(a), a.field)) == hash(a)


@pytest.mark.parametrize("text", ["z^", "", "2*", "z^x", "1//2", "*z", "z z", "1/0"])
def test_bad_literals(text):
    with pytest.raises(LiteralError):
        parse_literal(text, field(5))


def test_literal_grammar():
    K = field(5)
    z = K.zeta()
    assert parse_literal("1/2*z^3 - 2*z + 3", K) == Fraction(1, 2) * z**3 - 2 * z + 3
    assert parse_literal("-z", K) == -z
    assert parse_literal("z^7", K) == z**2


def test_linear_algebra():
    K = field(3)
    z = K.zeta()
    g = Matrix.diagonal(K, [z, K.one])
    ker = kernel_basis(g - Matrix.identity(K, 2))
    assert ker == [(K.zero, K.one)]
    assert mat_inverse(g) * g == Matrix.identity(K, 2)
    with pytest.raises(SingularMatrix):
        mat_inverse(Matrix.zeros(K, 2, 2))
    e1 = (K.one, K.zero, K.zero)
    e2 = (K.zero, K.one, K.zero)
    e3 = (K.zero, K.zero, K.one)
    both = intersect_subspaces([e1, e2], [e2, e3])
    assert both == [e2]


@st.composite
def matrices(draw):
    N = draw(st.sampled_from([3, 4, 5]))
    K = field(N)
    r = draw(st.integers(1, 3))
    c = draw(st.integers(1, 3))
    rows = [[draw(elements(N)) for _ in range(c)] for _ in range(r)]
    return Matrix(K, rows)


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    for v in ker:
        assert all(x.is_zero() for x in m.apply(v))
    rows, pivots = rref(m)
    again = rref(Matrix(m.field, rows))
    assert again == (rows, pivots)
