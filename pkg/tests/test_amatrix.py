from fractions import Fraction as F

import pytest

from wktau.amatrix import (
    BPoly,
    CoeffMatrix,
    a_block,
    a_closed,
    a_recursive,
    axis_value_n,
    b_const,
    b_poly,
    b_poly_recursive,
    falling_factorial,
    on_support,
)
from wktau.errors import UsageError
from wktau.exactnum import ExactScalar, SQRT_M2, ZERO

s = SQRT_M2


def test_falling_factorial():
    assert falling_factorial(F(5), 0) == 1
    assert falling_factorial(F(5), 3) == 60
    assert falling_factorial(F(1, 2), 2) == F(-1, 4)


def test_b_constants():
    assert b_const(0) == 1
    assert b_const(1) == 105
    assert b_const(2) == F(45045, 2)
    assert b_const(4) == F(25097947875, 8)


def test_b_polys():
    assert b_poly(0) == BPoly()
    assert b_poly(1) == BPoly((18,))
    assert b_poly(2) == BPoly((5778, 1944))
    assert b_poly(3).degree == 2


def test_b_poly_matches_recursion():
    for n in range(9):
        assert b_poly(n) == b_poly_recursive(n)


def test_support():
    assert not on_support(0, 0)
    assert on_support(2, 0) and on_support(1, 1) and on_support(0, 2)
    assert a_closed(0, 0) == ZERO
    assert a_closed(3, 3) == ZERO
    assert a_recursive(4, 3) == ZERO


def test_closed_values():
    assert a_closed(2, 0) == ExactScalar(0, F(-5, 96))
    assert a_closed(1, 1) == ExactScalar(0, F(7, 96))
    assert a_closed(0, 2) == ExactScalar(0, F(-5, 96))
    assert a_closed(4, 1) == ExactScalar(F(455, 9216))
    assert a_closed(5, 0) == ExactScalar(F(-385, 9216))


def test_recursive_values():
    assert a_recursive(0, 2) == ExactScalar(0, F(-5, 96))
    assert a_recursive(1, 1) == ExactScalar(0, F(7, 96))
    # one explicit recursion step from the axis:
    # A[1,1] = A[2,0] - (1/(4s)) with 1/(4s) = -s/8
    step = a_recursive(2, 0) - (4 * s).inverse()
    assert step == a_recursive(1, 1)


def test_oracle_equivalence_small():
    for total in range(16):
        for m in range(total + 1):
            assert a_closed(m, total - m) == a_recursive(m, total - m)


def test_swap_symmetry_corrected_sign():
    # A[m, n] = (-1)^(m+n) A[n, m]: the swap sign rides on the parity of
    # the total weight.
    for total in range(16):
        sign = -1 if total % 2 else 1
        for m in range(total + 1):
            n = total - m
            assert a_closed(m, n) == sign * a_closed(n, m)


def test_axis_values_from_recursion():
    # The recursion is seeded on the m-axis; the n-axis it generates must
    # reproduce the literal axis formula including its alternating sign.
    for a in range(1, 7):
        n = 3 * a - 1
        assert a_recursive(0, n) == axis_value_n(n)
        expected_sign = 1 if a % 2 else -1
        ratio_ok = a_recursive(0, n) == expected_sign * a_recursive(n, 0)
        assert ratio_ok


def test_branch_consistency_via_recursion():
    # The recursion does not know the closed form's branch equality
    # A[3a-1, 3b] = A[3a-3, 3b+2]; verify it there.
    for a in range(1, 6):
        for b in range(6):
            assert a_recursive(3 * a - 1, 3 * b) == a_recursive(
                3 * a - 3, 3 * b + 2
            )


def test_l0_scalar_identity():
    total = a_closed(2, 0) + a_closed(1, 1) + a_closed(0, 2)
    assert s * total == ExactScalar(F(1, 16))


def test_a_block():
    block = a_block(2, 2)
    nonzero = block.nonzero_entries()
    assert [(m, n) for m, n, _ in nonzero] == [(0, 2), (1, 1), (2, 0)]

    tiny = a_block(0, 0)
    assert tiny.value(0, 0) == ZERO
    assert not tiny.nonzero_entries()

    wide = a_block(5, 1)
    assert wide.value(4, 1) == ExactScalar(F(455, 9216))
    assert wide.provenance(4, 1) == "closed-form"


def test_block_coverage_error():
    block = a_block(2, 2)
    with pytest.raises(UsageError):
        block.value(3, 0)


def test_recursive_block_matches_closed_block():
    rec = CoeffMatrix.recursive_block(7, 7)
    clo = CoeffMatrix.closed_block(7, 7)
    for m, n, v in clo.entries():
        assert rec.value(m, n) == v
