import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from immvar.bposet import faithful_cyclic_character
from immvar.character import sign_character, trivial_character
from immvar.exactalg import MVPoly
from immvar.immanant import Matrix, check_immanant_identity, generic_matrix, generic_variables, immanant, parametric_equations
from immvar.permgrp import symmetric_group, young_subgroup

from conftest import s3_standard, s4_character
from oracles import det_cofactor, permanent_ryser

# variables of the generic 2x3 matrix
V = generic_variables(2, 3)


def var(i, j):
    return MVPoly.var(V, f"a_{i}_{j}")


def test_generic_2x3_immanants():
    M = generic_matrix(2, 3)
    S2 = symmetric_group(2)
    assert immanant(trivial_character(S2), (2, 2), (2, 3), M) == 2 * var(2, 2) * var(2, 3)
    assert immanant(sign_character(S2), (1, 2), (1, 3), M) == var(1, 1) * var(2, 3) - var(2, 1) * var(1, 3)
    assert immanant(sign_character(S2), (2, 2), (2, 3), M).is_zero()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_determinant_and_permanent(k):
    rng = random.Random(k)
    for _ in range(5):
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(k)] for _ in range(k)]
        M = Matrix.of(rows)
        ident = tuple(range(1, k + 1))
        assert immanant(sign_character(symmetric_group(k)), ident, ident, M) == det_cofactor(rows)
        assert immanant(trivial_character(symmetric_group(k)), ident, ident, M) == permanent_ryser(rows)


def test_s3_standard_equations():
    eqs = parametric_equations(s3_standard(), 2)
    names = generic_variables(2, 3)

    def m(*cols):
        # cols[j] is the row index chosen in column j+1 (a, b, c in the classical notation)
        out = MVPoly.const(names, 1)
        for j, i in enumerate(cols, start=1):
            out = out * MVPoly.var(names, f"a_{i}_{j}")
        return out

    expected = {
        (1, 1, 1): 0,
        (1, 1, 2): 2 * m(1, 1, 2) - m(2, 1, 1) - m(1, 2, 1),
        (1, 2, 1): 2 * m(1, 2, 1) - m(1, 1, 2) - m(2, 1, 1),
        (1, 2, 2): 2 * m(1, 2, 2) - m(2, 1, 2) - m(2, 2, 1),
        (2, 1, 1): 2 * m(2, 1, 1) - m(1, 2, 1) - m(1, 1, 2),
        (2, 1, 2): 2 * m(2, 1, 2) - m(2, 2, 1) - m(1, 2, 2),
        (2, 2, 1): 2 * m(2, 2, 1) - m(1, 2, 2) - m(2, 1, 2),
        (2, 2, 2): 0,
    }
    assert set(eqs) == set(expected)
    for z, p in expected.items():
        assert eqs[z] == p, z
    assert str(eqs[(1, 1, 2)]) == "2*a_1_1*a_1_2*a_2_3 - a_1_1*a_1_3*a_2_2 - a_1_2*a_1_3*a_2_1"


def test_s4_immanant_of_identity_matrix():
    # immanant of the identity matrix at x = y = (1..k) is chi(e)
    ident = Matrix.of([[1 if i == j else 0 for j in range(4)] for i in range(4)])
    chi = s4_character("standard")
    assert immanant(chi, (1, 2, 3, 4), (1, 2, 3, 4), ident) == 3


CHARS = [s3_standard(), sign_character(symmetric_group(2)), faithful_cyclic_character(3),
         trivial_character(young_subgroup(4, (2, 1, 1))), s4_character("two_two")]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CHARS), st.integers(1, 3), st.integers(1, 3), st.randoms(use_true_random=False))
def test_identity_random(chi, rows, cols, rng):
    k = chi.group.k
    M = Matrix.of([[Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(cols)] for _ in range(rows)])
    x = tuple(rng.randint(1, rows) for _ in range(k))
    y = tuple(rng.randint(1, cols) for _ in range(k))
    assert check_immanant_identity(chi, M, x, y)


def test_identity_symbolic():
    M = generic_matrix(2, 3)
    assert check_immanant_identity(s3_standard(), M, (1, 1, 2), (1, 2, 3))


def test_input_validation():
    with pytest.raises(ValueError):
        Matrix(((1, 2), (3,)))
    with pytest.raises(ValueError):
        immanant(trivial_character(symmetric_group(2)), (1, 3), (1, 1), Matrix.of([[1, 2], [3, 4]]))
