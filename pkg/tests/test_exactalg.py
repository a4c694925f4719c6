from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from superbc.exactalg import (
    INCONSISTENT,
    THETA,
    PoleError,
    RatFunc,
    SparsePoly,
    UNDERDETERMINED,
    UNIQUE,
    VariableMismatch,
    poly_substitute,
    scalar_eval,
    solve_exact,
)

from .strategies import rationals, scalars, sparse_polys


# -- scalars ----------------------------------------------------------------


def test_scalar_eval_examples():
    assert scalar_eval(2 * THETA / (THETA + 1), 1) == 1
    with pytest.raises(PoleError):
        scalar_eval(1 / (THETA - 1), 1)
    assert scalar_eval(Fraction(5, 3), Fraction(7)) == Fraction(5, 3)


def test_ratfunc_canonical_form():
    a = RatFunc([0, 2, 2], [2, 2])  # (2t^2 + 2t)/(2t + 2) = t
    assert a == THETA
    assert a.num == (Fraction(0), Fraction(1)) and a.den == (Fraction(1),)
    assert RatFunc(3) == Fraction(3) == RatFunc(3)
    assert RatFunc(0).is_constant()
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_ratfunc_powers_and_division():
    assert THETA**0 == 1
    assert THETA**-2 == 1 / THETA**2
    assert (THETA + 1) / (THETA + 1) == 1
    with pytest.raises(ZeroDivisionError):
        (THETA + 1) / RatFunc(0)
    assert str(2 * THETA / (THETA + 1)) == "(2*theta)/(theta + 1)"


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + (-a) == 0
    if a:
        assert a * (1 / a) == 1


# -- sparse polynomials -----------------------------------------------------


def test_substitute_examples():
    x2 = SparsePoly(("x",), {(2,): 1})
    t_half = SparsePoly(("t",), {(1,): Fraction(1, 2)})
    assert poly_substitute(x2, {"x": t_half}) == SparsePoly(("t",), {(2,): Fraction(1, 4)})

    f = SparsePoly(("x", "y"), {(1, 0): 1, (0, 1): 1})
    assert poly_substitute(f, {"x": 1, "y": -1}).is_zero()

    xy = SparsePoly(("x", "y"), {(1, 1): 1})
    u_plus_v = SparsePoly(("u", "v"), {(1, 0): 1, (0, 1): 1})
    out = poly_substitute(xy, {"x": u_plus_v})
    assert out == SparsePoly(("u", "v", "y"), {(1, 0, 1): 1, (0, 1, 1): 1})


def test_substitute_variable_mismatch():
    f = SparsePoly(("x", "y"), {(1, 1): 1})
    with pytest.raises(VariableMismatch):
        poly_substitute(f, {"z": 1})
    with pytest.raises(VariableMismatch):
        poly_substitute(
            f,
            {"x": SparsePoly(("u",), {(1,): 1}), "y": SparsePoly(("v",), {(1,): 1})},
        )


@given(sparse_polys(), sparse_polys(), sparse_polys(variables=("u", "v")), rationals)
def test_substitute_is_ring_homomorphism(f, g, image, c):
    assignment = {"x": image, "y": c}
    lhs_mul = poly_substitute(f * g, assignment)
    rhs_mul = poly_substitute(f, assignment) * poly_substitute(g, assignment)
    assert lhs_mul == rhs_mul
    lhs_add = poly_substitute(f + g, assignment)
    rhs_add = poly_substitute(f, assignment) + poly_substitute(g, assignment)
    assert lhs_add == rhs_add


def test_poly_text_canonical_order():
    f = SparsePoly(("x", "y"), {(0, 2): -1, (2, 0): 1, (0, 0): Fraction(1, 4)})
    assert f.to_text() == "x^2 - y^2 + 1/4"
    assert SparsePoly.zero(("x",)).to_text() == "0"


def test_poly_record_round_trip():
    f = SparsePoly(("x", "y"), {(2, 0): Fraction(-1, 4), (0, 2): Fraction(1, 4)})
    rec = f.to_record()
    assert rec["variables"] == ["x", "y"]
    assert SparsePoly.from_record(rec) == f


def test_evaluate_and_degree():
    f = SparsePoly(("x", "y"), {(2, 0): 1, (0, 2): -1})
    assert f.evaluate((Fraction(3), Fraction(1))) == 8
    assert f.degree == 2
    assert SparsePoly.zero(("x",)).degree == -1
    assert f.homogeneous_part(2) == f
    assert f.homogeneous_part(1).is_zero()


# -- exact solving ----------------------------------------------------------


def test_solve_examples():
    out = solve_exact([[1, 0], [0, 1]], [3, 4])
    assert out.tag == UNIQUE and out.solution == (3, 4)

    out = solve_exact([[1], [1]], [0, 1])
    assert out.tag == INCONSISTENT

    out = solve_exact([[1, 1]], [0])
    assert out.tag == UNDERDETERMINED
    assert out.nullspace == ((Fraction(1), Fraction(-1)),)


def test_solve_empty_system():
    assert solve_exact([], [], ncols=0).tag == UNIQUE
    out = solve_exact([], [], ncols=2)
    assert out.tag == UNDERDETERMINED and len(out.nullspace) == 2


_entries = st.integers(min_value=-3, max_value=3)


@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(_entries, min_size=n, max_size=n), min_size=1, max_size=6),
            st.lists(_entries, min_size=n, max_size=n),
        )
    )
)
def test_solve_recovers_constructed_solutions(data):
    rows, x = data
    b = [sum(r[j] * x[j] for j in range(len(x))) for r in rows]
    out = solve_exact(rows, b)
    assert out.tag in (UNIQUE, UNDERDETERMINED)
    if out.tag == UNIQUE:
        assert all(
            sum(r[j] * out.solution[j] for j in range(len(x))) == bi
            for r, bi in zip(rows, b)
        )
    else:
        for v in out.nullspace:
            assert all(sum(r[j] * v[j] for j in range(len(v))) == 0 for r in rows)


@given(
    st.integers(min_value=2, max_value=4).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(_entries, min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(_entries, min_size=n, max_size=n),
        )
    )
)
def test_singular_matrix_never_unique(data):
    rows, b = data
    rows = [list(r) for r in rows]
    rows[-1] = [2 * a for a in rows[0]]  # forced row dependence
    assert solve_exact(rows, b).tag != UNIQUE


def test_solve_over_the_function_field():
    out = solve_exact([[THETA, 1], [0, THETA]], [THETA + 1, THETA**2])
    assert out.tag == UNIQUE
    assert out.solution[1] == THETA
    assert out.solution[0] == 1 / THETA
