from fractions import Fraction as F

import pytest

from wktau.errors import (
    ConsistencyError,
    DegreeError,
    SelectionRuleError,
    UsageError,
)
from wktau.exactnum import ExactScalar, ONE, SQRT_M2
from wktau.partitions import Partition
from wktau.series import FormalSeries
from wktau.tau import (
    change_coords,
    correlator_genus,
    free_energy,
    genus_split,
    intersection,
    z_in_family,
    z_p,
    z_schur,
)

s = SQRT_M2


def test_z_schur_degree_zero():
    assert z_schur(0) == [(Partition(), ONE)]
    rows = z_schur(2)
    assert rows == [(Partition(), ONE)]  # degrees 1, 2 hold nothing


def test_z_schur_degree_three():
    values = {mu.parts: c for mu, c in z_schur(3)}
    assert values[(3,)] == ExactScalar(0, F(-5, 96))
    assert values[(2, 1)] == ExactScalar(0, F(-7, 96))
    assert values[(1, 1, 1)] == ExactScalar(0, F(-5, 96))


def test_z_schur_reports_zeros():
    values = {mu.parts: c for mu, c in z_schur(6)}
    assert (4, 2) in values and not values[(4, 2)]
    assert values[(6,)] == ExactScalar(F(-385, 9216))
    assert values[(3, 3)] == ExactScalar(F(70, 9216))


def test_z_p_printed_coefficients():
    zp = z_p(9)
    assert zp.coefficient(((3, 1),)) == ExactScalar(0, F(-1, 96))
    assert zp.coefficient(((1, 3),)) == ExactScalar(0, F(-1, 24))
    assert zp.coefficient(((9, 1),)) == ExactScalar(0, F(35, 12288))
    assert zp.coefficient(((3, 2),)) == ExactScalar(F(-25, 9216))
    assert zp.coefficient(((1, 1), (3, 1), (5, 1))) == ExactScalar(
        0, F(49, 6144)
    )
    assert zp.constant_term == ONE


def test_even_variables_absent_low_degree():
    zp = z_p(9)
    for key, _ in zp.terms():
        assert all(i % 2 for i, _ in key)


def test_change_coords_examples():
    zp = z_p(3)
    zT = change_coords(zp, "T")
    assert zT.coefficient(((3, 1),)) == ExactScalar(0, F(-1, 32))
    assert zT.coefficient(((1, 3),)) == ExactScalar(0, F(-1, 24))
    zt = change_coords(zT, "t")
    assert zt.coefficient(((0, 3),)) == ExactScalar(F(1, 6))
    assert zt.coefficient(((1, 1),)) == ExactScalar(F(1, 24))
    # identity transform
    assert change_coords(zp, "p") is zp


def test_change_coords_roundtrips():
    zp = z_p(6)
    for family in ("T", "t", "u"):
        there = change_coords(zp, family)
        assert change_coords(there, "p") == zp


def test_change_coords_parity_guard():
    bad = FormalSeries("p", 4, {((2, 1),): 1})
    with pytest.raises(ConsistencyError):
        change_coords(bad, "t")
    with pytest.raises(ConsistencyError):
        change_coords(bad, "u")
    # same series to T is fine
    assert change_coords(bad, "T").coefficient(((2, 1),)) == ExactScalar(2)


def test_t_u_relation():
    # t_k = (2k+1)!!/2^k u_k, so the u-series coefficients differ by that
    # factor per variable.
    zt = z_in_family(9, "t")
    zu = change_coords(zt, "u")
    assert zu.coefficient(((1, 1),)) == zt.coefficient(((1, 1),)) * F(3, 2)
    assert zu.coefficient(((0, 3),)) == zt.coefficient(((0, 3),))


def test_golden_T_table(z_T_12):
    golden3 = {
        ((1, 3),): (0, F(-1, 24)),
        ((3, 1),): (0, F(-1, 32)),
    }
    golden6 = {
        ((1, 3), (3, 1)): (F(-25, 384), 0),
        ((1, 1), (5, 1)): (F(-5, 64), 0),
        ((3, 2),): (F(-25, 1024), 0),
        ((1, 6),): (F(-1, 576), 0),
    }
    golden9 = {
        ((9, 1),): (0, F(105, 4096)),
        ((3, 3),): (0, F(1225, 98304)),
        ((1, 1), (3, 1), (5, 1)): (0, F(245, 2048)),
        ((1, 2), (7, 1)): (0, F(35, 512)),
        ((1, 3), (3, 2)): (0, F(1225, 24576)),
        ((1, 4), (5, 1)): (0, F(35, 1536)),
        ((1, 6), (3, 1)): (0, F(49, 18432)),
        ((1, 9),): (0, F(1, 41472)),
    }
    for table, degree in ((golden3, 3), (golden6, 6), (golden9, 9)):
        block = z_T_12.degree_slice(degree)
        assert len(block) == len(table)
        for key, (re, im) in table.items():
            assert block.coefficient(key) == ExactScalar(re, im)


def test_golden_p_table():
    zp = z_p(9)
    golden = {
        ((3, 1),): (0, F(-1, 96)),
        ((1, 3),): (0, F(-1, 24)),
        ((1, 3), (3, 1)): (F(-25, 1152), 0),
        ((1, 1), (5, 1)): (F(-1, 64), 0),
        ((3, 2),): (F(-25, 9216), 0),
        ((1, 6),): (F(-1, 576), 0),
        ((9, 1),): (0, F(35, 12288)),
        ((3, 3),): (0, F(1225, 2654208)),
        ((1, 1), (3, 1), (5, 1)): (0, F(49, 6144)),
        ((1, 2), (7, 1)): (0, F(5, 512)),
        ((1, 3), (3, 2)): (0, F(1225, 221184)),
        ((1, 4), (5, 1)): (0, F(7, 1536)),
        ((1, 6), (3, 1)): (0, F(49, 55296)),
        ((1, 9),): (0, F(1, 41472)),
    }
    assert len(zp) == len(golden) + 1  # plus the constant term
    for key, (re, im) in golden.items():
        assert zp.coefficient(key) == ExactScalar(re, im)


def test_golden_t_table(z_t_12):
    # Complete degree <= 9 block of the tau-function in t-coordinates.
    # The commonly printed form of this table has three defects (two wrong
    # numerators and one missing monomial); every entry below is pinned by
    # two independent routes (T-coordinate transport and exp of the genus
    # tables), which agree.
    golden = {
        (): 1,
        ((0, 3),): F(1, 6),
        ((1, 1),): F(1, 24),
        ((0, 3), (1, 1)): F(25, 144),
        ((0, 1), (2, 1)): F(1, 24),
        ((1, 2),): F(25, 1152),
        ((0, 6),): F(1, 72),
        ((0, 4), (2, 1)): F(7, 144),
        ((1, 3),): F(1225, 82944),
        ((4, 1),): F(1, 1152),
        ((0, 6), (1, 1)): F(49, 1728),
        ((0, 3), (1, 2)): F(1225, 6912),
        ((0, 1), (1, 1), (2, 1)): F(49, 576),
        ((0, 2), (3, 1)): F(1, 48),
        ((0, 9),): F(1, 1296),
    }
    low = {
        key: coeff
        for key, coeff in z_t_12.terms()
        if sum((2 * a + 1) * e for a, e in key) <= 9
    }
    assert set(low) == set(golden)
    for key, value in golden.items():
        assert low[key] == ExactScalar(value)


def test_reality_in_t(z_t_12):
    for _, coeff in z_t_12.terms():
        assert coeff.im == 0


def test_free_energy_examples(f_t_12):
    assert f_t_12.coefficient(((1, 1),)) == ExactScalar(F(1, 24))
    assert f_t_12.coefficient(((2, 1), (3, 1))) == ExactScalar(F(29, 5760))
    assert free_energy(FormalSeries.constant("t", 6, 1)) == FormalSeries("t", 6)


def test_free_energy_genus_tables(f_t_12):
    golden = {
        ((0, 3),): F(1, 6),
        ((0, 3), (1, 1)): F(1, 6),
        ((0, 3), (1, 2)): F(1, 6),
        ((0, 4), (2, 1)): F(1, 24),
        ((1, 1),): F(1, 24),
        ((0, 1), (2, 1)): F(1, 24),
        ((1, 2),): F(1, 48),
        ((1, 3),): F(1, 72),
        ((0, 1), (1, 1), (2, 1)): F(1, 12),
        ((0, 2), (3, 1)): F(1, 48),
        ((4, 1),): F(1, 1152),
        ((2, 1), (3, 1)): F(29, 5760),
        ((1, 1), (4, 1)): F(1, 384),
        ((0, 1), (5, 1)): F(1, 1152),
    }
    for key, value in golden.items():
        assert f_t_12.coefficient(key) == ExactScalar(value)


def test_free_energy_precondition():
    with pytest.raises(UsageError):
        free_energy(FormalSeries("t", 3))
    with pytest.raises(UsageError):
        free_energy(FormalSeries.constant("t", 3, 2))


def test_genus_split(f_t_12):
    split = genus_split(f_t_12)
    assert sorted(split) == [0, 1, 2]
    assert split[0].coefficient(((0, 3),)) == ExactScalar(F(1, 6))
    assert split[1].coefficient(((1, 1),)) == ExactScalar(F(1, 24))
    assert split[2].coefficient(((4, 1),)) == ExactScalar(F(1, 1152))
    # every monomial belongs to exactly one genus
    assert sum(len(piece) for piece in split.values()) == len(f_t_12)


def test_genus_split_rejects_corruption():
    broken = FormalSeries("t", 3, {((0, 1),): 1})  # <tau_0> violates the rule
    with pytest.raises(ConsistencyError):
        genus_split(broken)
    with pytest.raises(UsageError):
        genus_split(FormalSeries("T", 3))


def test_correlator_genus():
    assert correlator_genus([0, 0, 0]) == 0
    assert correlator_genus([1]) == 1
    assert correlator_genus([4]) == 2
    assert correlator_genus([2, 3]) == 2
    with pytest.raises(SelectionRuleError):
        correlator_genus([0])
    with pytest.raises(SelectionRuleError):
        correlator_genus([0, 0])
    with pytest.raises(UsageError):
        correlator_genus([])
    with pytest.raises(UsageError):
        correlator_genus([-1, 2])


def test_intersection_examples(f_t_12):
    assert intersection([0, 0, 0], f_t_12) == 1
    assert intersection([0, 0, 0, 1], f_t_12) == 1
    assert intersection([1], f_t_12) == F(1, 24)
    assert intersection([0, 2], f_t_12) == F(1, 24)
    assert intersection([4], f_t_12) == F(1, 1152)
    assert intersection([2, 3], f_t_12) == F(29, 5760)
    # multiplicity bookkeeping: coefficient 1/48 of t_1^2 times 2!
    assert intersection([1, 1], f_t_12) == F(1, 24)


def test_intersection_degree_guard(f_t_12):
    with pytest.raises(DegreeError):
        intersection([7], f_t_12)  # needs degree 15 > 12
    with pytest.raises(UsageError):
        intersection([1], FormalSeries("T", 12))


def test_one_point_tower():
    # <tau_{3g-2}>_g = 1 / (24^g g!), reachable up to genus 3 at degree 15.
    f = free_energy(z_in_family(15, "t"))
    fact = 1
    for g in (1, 2, 3):
        fact *= g
        assert intersection([3 * g - 2], f) == F(1, 24**g * fact)


def _string_equation_keys(max_degree):
    """All valid correlator keys containing tau_0 within the degree bound."""
    from wktau.partitions import partitions_of

    keys = []
    for d in range(1, max_degree + 1):
        for nu in partitions_of(d):
            if not all(p % 2 for p in nu.parts):
                continue
            indices = tuple(sorted((p - 1) // 2 for p in nu.parts))
            if 0 not in indices or indices == (0, 0, 0):
                continue
            total = sum(indices)
            if (total - len(indices) + 3) % 3 or total - len(indices) + 3 < 0:
                continue
            keys.append(indices)
    return keys


def test_string_equation(f_t_12):
    # <tau_0 tau_{a_1} ... tau_{a_n}> = sum_i <... tau_{a_i - 1} ...>
    keys = _string_equation_keys(12)
    assert keys  # the sweep is non-vacuous
    for key in keys:
        rest = list(key)
        rest.remove(0)
        lhs = intersection(key, f_t_12)
        rhs = F(0)
        for i, a in enumerate(rest):
            if a >= 1:
                reduced = rest[:i] + [a - 1] + rest[i + 1 :]
                rhs += intersection(reduced, f_t_12)
        assert lhs == rhs, key
