"""Verification suites behind the ``verify`` command.

Each check returns a JSON-ready report {check, params, pass, residuals};
residuals carry at most a handful of offending items as plain strings.
The suites pit independent routes against each other: closed form vs
recursion, Schur pipeline vs cut-and-join, determinants vs the fermionic
expansion, plus the exact identities satisfied by the b/B building blocks
and the Virasoro family.
"""

from fractions import Fraction

from . import amatrix
from .errors import UsageError
from .exactnum import SQRT_M2, double_factorial, factorial
from .fock import fock_exp
from .partitions import partitions_of
from .schur import a_mu
from .series import FormalSeries
from .tau import z_in_family
from .virasoro import build_L, virasoro_check, z_cutjoin

__all__ = ["SUITES", "available_suites", "run_suites"]

_MAX_RESIDUALS = 10


def _report(name, params, failures):
    return {
        "check": name,
        "params": params,
        "pass": not failures,
        "residuals": failures[:_MAX_RESIDUALS],
    }


def check_closed_vs_recursive(max_weight=30):
    bad = []
    for total in range(max_weight + 1):
        for m in range(total + 1):
            n = total - m
            if amatrix.a_closed(m, n) != amatrix.a_recursive(m, n):
                bad.append(f"({m},{n})")
    return _report("closed_vs_recursive", {"max_weight": max_weight}, bad)


def check_swap_symmetry(max_weight=30):
    # A[m, n] = (-1)^(m+n) A[n, m]; the sign depends on the parity of the
    # total weight, as the n-axis initial values force.
    bad = []
    for total in range(max_weight + 1):
        sign = -1 if total % 2 else 1
        for m in range(total + 1):
            n = total - m
            lhs = amatrix.a_closed(m, n)
            rhs = amatrix.a_closed(n, m)
            if sign < 0:
                rhs = -rhs
            if lhs != rhs:
                bad.append(f"({m},{n})")
    return _report("swap_symmetry", {"max_weight": max_weight}, bad)


def check_axis_initial_values(max_a=10):
    # The recursion is seeded on the m-axis only; the n-axis values it
    # produces must match the literal axis formula, sign included.
    bad = []
    for a in range(1, max_a + 1):
        n = 3 * a - 1
        if amatrix.a_recursive(0, n) != amatrix.axis_value_n(n):
            bad.append(f"(0,{n})")
    return _report("axis_initial_values", {"max_a": max_a}, bad)


def check_branch_consistency(max_a=5, max_b=5):
    # The recursion knows nothing about the closed form's branch equality
    # A[3a-1, 3b] = A[3a-3, 3b+2], so checking it there is non-vacuous.
    bad = []
    for a in range(1, max_a + 1):
        for b in range(max_b + 1):
            lhs = amatrix.a_recursive(3 * a - 1, 3 * b)
            rhs = amatrix.a_recursive(3 * a - 3, 3 * b + 2)
            if lhs != rhs:
                bad.append(f"a={a},b={b}")
    return _report(
        "branch_consistency", {"max_a": max_a, "max_b": max_b}, bad
    )


def check_b_recursion_one(max_n=12):
    bad = []
    for n in range(1, max_n + 1):
        expected = 36 * (6 * n - 1) * amatrix.b_const(n - 1) - Fraction(
            2**n * (6 * n - 1) * double_factorial(6 * n - 1), factorial(2 * n)
        )
        if amatrix.b_const(n) != expected:
            bad.append(f"n={n}")
    return _report("b_recursion_one", {"max_n": max_n}, bad)


def check_b_recursion_two(max_n=12):
    bad = []
    for m in range(1, max_n + 1):
        expected = Fraction(3 * (6 * m + 1) * (6 * m - 1), m) * amatrix.b_const(m - 1)
        if amatrix.b_const(m) != expected:
            bad.append(f"m={m}")
    return _report("b_recursion_two", {"max_n": max_n}, bad)


def check_B_recursion(max_n=8):
    bad = []
    for n in range(1, max_n + 1):
        if amatrix.b_poly(n) != amatrix.b_poly_recursive(n):
            bad.append(f"n={n}")
    return _report("B_recursion", {"max_n": max_n}, bad)


def _rec_sample_points(count=20):
    # Rational thirds: positive, and never a pole of the three recursions
    # (poles sit at 0, +-1/6, 5/6, 7/6 and at nonpositive integers).
    return [Fraction(k, 3) for k in range(1, count + 1)]


def _bracket(n, x, denom):
    # B_n(x) + b_n / denom, with the denominator given literally.
    return amatrix.b_poly(n)(x) + amatrix.b_const(n) / denom


def check_rec_one(max_n=6):
    bad = []
    for n in range(1, max_n + 1):
        dfac = Fraction(double_factorial(6 * n - 1), factorial(2 * n))
        for x in _rec_sample_points():
            lhs = _bracket(n, x, 6 * x + 1)
            rhs = (
                -3 * _bracket(n - 1, x + 1, 6 * x + 7) * (6 * x + 5) * (6 * x + 7) / x
                + Fraction(2**n) * (x + n) / (6 * x + 1) * dfac / x
                + 216 * (x + n) * _bracket(n - 1, x, 6 * x + 1)
            )
            if lhs != rhs:
                bad.append(f"n={n},x={x}")
    return _report("rec_one", {"max_n": max_n, "points": 20}, bad)


def check_rec_two(max_n=6):
    bad = []
    for n in range(1, max_n + 1):
        for x in _rec_sample_points():
            lhs = _bracket(n, x, 6 * x - 1)
            rhs = (
                -_bracket(n, x, 6 * x + 1)
                + Fraction(12)
                * (x + n)
                * (x - 1)
                * (6 * x - 5)
                / ((x + n - 1) * (6 * x + 1) * (6 * x - 1))
                * _bracket(n, x - 1, 6 * x - 5)
                + 18
                * (6 * n - 1)
                * 2
                * (x + n)
                / (x + n - 1)
                * _bracket(n - 1, x, 6 * x - 1)
            )
            if lhs != rhs:
                bad.append(f"n={n},x={x}")
    return _report("rec_two", {"max_n": max_n, "points": 20}, bad)


def check_rec_three(max_n=6):
    bad = []
    for n in range(1, max_n + 1):
        for x in _rec_sample_points():
            lhs = _bracket(n, x, 6 * x + 1)
            rhs = (
                -_bracket(n, x, 6 * x - 1)
                + Fraction(12)
                * (x + n)
                * (x - 1)
                * (6 * x - 7)
                / ((x + n - 1) * (6 * x + 1) * (6 * x - 1))
                * _bracket(n, x - 1, 6 * x - 7)
                + 18
                * (6 * n + 1)
                * 2
                * (x + n)
                / (x + n - 1)
                * _bracket(n - 1, x, 6 * x + 1)
            )
            if lhs != rhs:
                bad.append(f"n={n},x={x}")
    return _report("rec_three", {"max_n": max_n, "points": 20}, bad)


def check_l0_scalar():
    total = (
        amatrix.a_closed(2, 0) + amatrix.a_closed(1, 1) + amatrix.a_closed(0, 2)
    )
    ok = SQRT_M2 * total == Fraction(1, 16)
    return _report("l0_scalar_identity", {}, [] if ok else [str(SQRT_M2 * total)])


def check_virasoro_annihilation(degree=12, orders=(-1, 0, 1, 2, 3, 4)):
    z = z_in_family(degree, "T")
    bad = []
    for n in orders:
        out_degree = degree - (2 * n + 3)
        if out_degree < 0:
            continue
        passed, residuals = virasoro_check(n, z, out_degree)
        if not passed:
            bad.append(f"L_{n}: {len(residuals)} residual monomials")
    return _report(
        "virasoro_annihilation", {"degree": degree, "orders": list(orders)}, bad
    )


def check_commutators(max_degree=9, orders=(-1, 0, 1, 2)):
    # [L_m, L_n] = (m - n) L_{m+n} on every monomial of degree <= max_degree.
    # Operators may raise degree by 2 per application, so a generous cap
    # and bound keep the comparison truncation-free.
    cap = max_degree + 4
    ops = {n: build_L(n, cap) for n in range(min(orders), max(orders) * 2 + 1)}
    basis = _odd_monomials(max_degree)
    bad = []
    for m in orders:
        for n in orders:
            if m + n < -1:
                continue
            lhs_op_m, lhs_op_n = ops[m], ops[n]
            target = ops[m + n]
            for mono in basis:
                x = FormalSeries("T", cap, {mono: 1})
                lhs = lhs_op_m.apply(lhs_op_n.apply(x)) - lhs_op_n.apply(
                    lhs_op_m.apply(x)
                )
                rhs = target.apply(x) * (m - n)
                if lhs != rhs:
                    bad.append(f"[L_{m},L_{n}] on {mono}")
    return _report(
        "virasoro_commutators",
        {"max_degree": max_degree, "orders": list(orders)},
        bad,
    )


def _odd_monomials(max_degree):
    """All monomials in odd T-variables of degree <= max_degree."""
    out = [()]
    for d in range(1, max_degree + 1):
        for nu in partitions_of(d):
            if all(p % 2 for p in nu.parts):
                out.append(tuple(sorted(nu.multiplicities().items())))
    return out


def check_cutjoin(degree=12):
    lhs = z_cutjoin(degree)
    rhs = z_in_family(degree, "T")
    bad = []
    if lhs != rhs:
        for key, coeff in (lhs - rhs).terms():
            bad.append(f"{key}: {coeff}")
    return _report("cutjoin_equivalence", {"degree": degree}, bad)


def check_fock(degree=9):
    vec = fock_exp(None, degree)
    bad = []
    for d in range(0, degree + 1, 3):
        for mu in partitions_of(d):
            if vec.coefficient(mu) != a_mu(mu):
                bad.append(str(mu))
    return _report("fock_vs_determinant", {"degree": degree}, bad)


SUITES = {
    "recursion": (
        check_closed_vs_recursive,
        check_swap_symmetry,
        check_axis_initial_values,
        check_branch_consistency,
    ),
    "identities": (
        check_b_recursion_one,
        check_b_recursion_two,
        check_B_recursion,
        check_rec_one,
        check_rec_two,
        check_rec_three,
        check_l0_scalar,
    ),
    "virasoro": (check_virasoro_annihilation, check_commutators),
    "cutjoin": (check_cutjoin,),
    "fock": (check_fock,),
}


def available_suites():
    return sorted(SUITES) + ["all"]


def run_suites(names, degree=12, max_weight=30):
    """Run the named suites; returns {"pass": bool, "checks": [...]}."""
    picked = []
    for name in names:
        if name == "all":
            picked = [fn for suite in SUITES.values() for fn in suite]
            break
        if name not in SUITES:
            raise UsageError(
                f"unknown suite {name!r}; choose from {available_suites()}"
            )
        picked.extend(SUITES[name])
    reports = []
    for fn in picked:
        if fn is check_closed_vs_recursive or fn is check_swap_symmetry:
            reports.append(fn(max_weight=max_weight))
        elif fn is check_virasoro_annihilation:
            reports.append(fn(degree=degree))
        elif fn is check_cutjoin:
            reports.append(fn(degree=degree))
        elif fn is check_fock:
            reports.append(fn(degree=min(degree, 9)))
        else:
            reports.append(fn())
    return {"pass": all(r["pass"] for r in reports), "checks": reports}
