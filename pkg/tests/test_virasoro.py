from fractions import Fraction as F

import pytest

from wktau.errors import DegreeError, UsageError
from wktau.exactnum import ExactScalar, SQRT_M2
from wktau.series import FormalSeries
from wktau.tau import change_coords, z_p
from wktau.virasoro import (
    build_L,
    build_W,
    cutjoin_step,
    gamma_apply,
    virasoro_check,
    z_cutjoin,
)

s = SQRT_M2


def _one(bound=6):
    return FormalSeries.constant("T", bound, 1)


def test_gamma_apply():
    assert gamma_apply(-3, _one()) == FormalSeries("T", 6, {((3, 1),): 3})
    t3 = FormalSeries.variable("T", 3, 6)
    assert gamma_apply(3, t3) == _one()
    t1sq = FormalSeries("T", 6, {((1, 2),): 1})
    assert gamma_apply(1, t1sq) == FormalSeries("T", 6, {((1, 1),): 2})
    for bad in (0, 2, -4):
        with pytest.raises(UsageError):
            gamma_apply(bad, _one())
    with pytest.raises(UsageError):
        gamma_apply(1, FormalSeries.constant("p", 3, 1))


def test_L0_on_vacuum():
    out = build_L(0, 6).apply(_one())
    assert out == FormalSeries("T", 6, {(): F(1, 16)})


def test_Lminus1_on_vacuum():
    out = build_L(-1, 6).apply(_one())
    assert out == FormalSeries("T", 6, {((1, 2),): F(-1, 4)})


def test_L_degree_bookkeeping():
    # every term drops degree by 2n, except the lone pure derivative
    # which drops it by 2n + 3
    for n in (-1, 0, 1, 2, 3):
        op = build_L(n, 12)
        drops = set()
        for _, mult, deriv in op.terms:
            drops.add(sum(deriv) - sum(mult))
        assert drops <= {2 * n, 2 * n + 3}
        assert 2 * n + 3 in drops


def test_build_L_validation():
    with pytest.raises(UsageError):
        build_L(-2, 6)


def test_W_on_vacuum():
    out = build_W(3).apply(_one(3), out_bound=3)
    assert out == FormalSeries(
        "T", 3, {((1, 3),): s * F(-1, 24), ((3, 1),): s * F(-1, 32)}
    )


def test_cutjoin_slices_match_printed_tables():
    z1 = cutjoin_step(FormalSeries.constant("T", 0, 1), 0)
    assert z1.coefficient(((1, 3),)) == s * F(-1, 24)
    assert z1.coefficient(((3, 1),)) == s * F(-1, 32)

    z2 = cutjoin_step(z1, 1)
    assert z2 == FormalSeries(
        "T",
        6,
        {
            ((1, 3), (3, 1)): F(-25, 384),
            ((1, 1), (5, 1)): F(-5, 64),
            ((3, 2),): F(-25, 1024),
            ((1, 6),): F(-1, 576),
        },
    )

    z3 = cutjoin_step(z2, 2)
    assert z3.coefficient(((9, 1),)) == s * F(105, 4096)
    assert z3.coefficient(((1, 9),)) == s * F(1, 41472)


def test_cutjoin_homogeneity():
    zk = FormalSeries.constant("T", 0, 1)
    for k in range(4):
        zk = cutjoin_step(zk, k)
        assert zk.is_homogeneous(3 * (k + 1))


def test_cutjoin_rejects_inhomogeneous_input():
    mixed = FormalSeries("T", 6, {(): 1, ((3, 1),): 1})
    with pytest.raises(UsageError):
        cutjoin_step(mixed, 0)


def test_z_cutjoin_low_degree():
    assert z_cutjoin(0) == FormalSeries.constant("T", 0, 1)
    z3 = z_cutjoin(3)
    assert z3.constant_term == ExactScalar(1)
    assert z3.coefficient(((3, 1),)) == s * F(-1, 32)


def test_z_cutjoin_matches_schur_pipeline_degree9():
    assert z_cutjoin(9) == change_coords(z_p(9), "T")


def test_virasoro_check_passes(z_T_12):
    for n in (-1, 0, 1):
        out_degree = 12 - (2 * n + 3)
        passed, residuals = virasoro_check(n, z_T_12, out_degree)
        assert passed and not residuals


def test_virasoro_check_flags_wrong_input():
    one = FormalSeries.constant("T", 12, 1)
    passed, residuals = virasoro_check(0, one, 9)
    assert not passed
    assert residuals == [((), ExactScalar(F(1, 16)))]


def test_virasoro_check_degree_guard(z_T_12):
    with pytest.raises(DegreeError):
        virasoro_check(0, z_T_12, 10)  # needs bound >= 13
    with pytest.raises(UsageError):
        virasoro_check(0, FormalSeries.constant("p", 12, 1), 3)


def test_commutator_example():
    # [L_0, L_-1] = L_-1 on a small basis, including the vacuum
    cap = 10
    l0 = build_L(0, cap)
    lm1 = build_L(-1, cap)
    for mono in ((), ((1, 1),), ((3, 1),), ((1, 2), (3, 1))):
        x = FormalSeries("T", cap, {mono: 1})
        lhs = l0.apply(lm1.apply(x)) - lm1.apply(l0.apply(x))
        assert lhs == lm1.apply(x)
