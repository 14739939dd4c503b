"""Assembly of the tau-function series and everything derived from it.

The pipeline is: Schur coefficients (signed determinants over the A-table)
-> power-sum series -> linear coordinate changes between the four variable
families -> logarithm (free energy) -> genus split -> intersection
numbers.  The T-family is the hub for coordinate changes:

    p_n = n T_n
    t_a = (-1)^a s (2a+1)!!/2^(a+1) * T_{2a+1}
    u_a = (-1)^a s/2 * T_{2a+1}

All changes are diagonal and degree-preserving; converting even-indexed
p/T content to t or u is a consistency failure, not a silent drop.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, DegreeError, SelectionRuleError, UsageError
from .exactnum import ONE, SQRT_M2, double_factorial
from .partitions import partitions_of
from .schur import a_mu, schur_to_p
from .series import FormalSeries

__all__ = [
    "z_schur",
    "z_p",
    "change_coords",
    "z_in_family",
    "free_energy",
    "genus_split",
    "correlator_genus",
    "intersection",
]


def z_schur(degree, table=None):
    """Schur coefficients of the tau-function up to the given degree.

    Returns (partition, coefficient) pairs for every partition of weight
    <= degree and = 0 (mod 3), zeros included, in ascending weight and
    reverse lexicographic order within each weight.
    """
    if degree < 0:
        raise UsageError("degree must be >= 0")
    out = []
    for d in range(0, degree + 1, 3):
        for mu in partitions_of(d):
            out.append((mu, a_mu(mu, table)))
    return out


def z_p(degree):
    """The tau-function as a power-sum series, truncated at the bound."""
    total = FormalSeries("p", degree)
    for mu, coeff in z_schur(degree):
        if not coeff:
            continue
        total = total + schur_to_p(mu).with_bound(degree) * coeff
    return total


def _t_scale(a):
    # t_a = scale * T_{2a+1}
    scale = SQRT_M2 * Fraction(double_factorial(2 * a + 1), 2 ** (a + 1))
    return -scale if a % 2 else scale


def _u_scale(a):
    scale = SQRT_M2 * Fraction(1, 2)
    return -scale if a % 2 else scale


def _to_hub(series):
    family = series.family
    if family == "T":
        return series
    if family == "p":
        return series.map_variables("T", lambda i: (i, i))
    if family == "t":
        return series.map_variables("T", lambda a: (2 * a + 1, _t_scale(a)))
    return series.map_variables("T", lambda a: (2 * a + 1, _u_scale(a)))


def _from_hub(series, target):
    if target == "T":
        return series
    if target == "p":
        return series.map_variables("p", lambda i: (i, Fraction(1, i)))
    evens = [i for i in series.variables() if i % 2 == 0]
    if evens:
        raise ConsistencyError(
            f"even-indexed support {evens} cannot be expressed in family {target!r}"
        )
    if target == "t":
        return series.map_variables(
            "t", lambda i: ((i - 1) // 2, _t_scale((i - 1) // 2).inverse())
        )
    return series.map_variables(
        "u", lambda i: ((i - 1) // 2, _u_scale((i - 1) // 2).inverse())
    )


def change_coords(series, target):
    """Rewrite a series in another variable family (exact, invertible)."""
    if target not in ("p", "T", "t", "u"):
        raise UsageError(f"unknown target family {target!r}")
    if series.family == target:
        return series
    return _from_hub(_to_hub(series), target)


@lru_cache(maxsize=None)
def z_in_family(degree, family):
    """Cached tau-function series in the requested family."""
    z = z_p(degree)
    return change_coords(z, family)


def free_energy(z):
    """log of a series with constant term 1, exact to the series bound."""
    if z.constant_term != ONE:
        raise UsageError("free_energy needs a series with constant term 1")
    w = z - 1
    total = FormalSeries(z.family, z.degree_bound)
    power = FormalSeries.constant(z.family, z.degree_bound, 1)
    k = 1
    while True:
        power = power * w
        if not power:
            break
        sign = 1 if k % 2 else -1
        total = total + power * Fraction(sign, k)
        k += 1
    return total


def correlator_genus(indices):
    """Genus assigned by the selection rule sum(a_i) = 3g - 3 + n."""
    indices = list(indices)
    if not indices:
        raise UsageError("a correlator needs at least one insertion")
    if any((not isinstance(a, int)) or a < 0 for a in indices):
        raise UsageError("correlator indices must be nonnegative integers")
    numerator = sum(indices) - len(indices) + 3
    if numerator < 0 or numerator % 3:
        raise SelectionRuleError(
            f"indices {sorted(indices)} violate the selection rule"
        )
    return numerator // 3


def _key_genus(key):
    n = sum(e for _, e in key)
    total = sum(a * e for a, e in key)
    numerator = total - n + 3
    if numerator < 0 or numerator % 3:
        return None
    return numerator // 3


def genus_split(f):
    """Split a t-series by genus; every monomial must satisfy the rule."""
    if f.family != "t":
        raise UsageError("genus_split expects a series in t-variables")
    buckets = {}
    for key, coeff in f.terms():
        if not key:
            continue
        g = _key_genus(key)
        if g is None:
            raise ConsistencyError(
                f"monomial {key} violates the selection rule with a nonzero "
                f"coefficient {coeff}"
            )
        buckets.setdefault(g, {})[key] = coeff
    return {
        g: FormalSeries("t", f.degree_bound, terms)
        for g, terms in sorted(buckets.items())
    }


def intersection(indices, f):
    """Intersection number for the given insertion indices.

    The value is (prod of multiplicities factorial) times the coefficient
    of the matching t-monomial of the free energy; it must come out purely
    rational.
    """
    if f.family != "t":
        raise UsageError("intersection extraction expects a t-series")
    genus = correlator_genus(indices)  # validates the key
    del genus
    counts = {}
    for a in indices:
        counts[a] = counts.get(a, 0) + 1
    key = tuple(sorted(counts.items()))
    needed = sum((2 * a + 1) * e for a, e in key)
    if needed > f.degree_bound:
        raise DegreeError(
            f"monomial degree {needed} exceeds the series bound "
            f"{f.degree_bound}; increase the degree"
        )
    coeff = f.coefficient(key)
    if coeff.im != 0:
        raise ConsistencyError(
            f"intersection number for {sorted(indices)} is not rational: {coeff}"
        )
    value = coeff.re
    for e in counts.values():
        for i in range(2, e + 1):
            value *= i
    return value
