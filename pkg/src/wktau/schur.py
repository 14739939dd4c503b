"""Symmetric-group characters and the Schur-function layer.

Characters are evaluated with the Murnaghan-Nakayama border-strip rule on
beta sets (first-column hook lengths) and memoized globally; cache fills
are idempotent so concurrent use is harmless.  Schur functions enter the
pipeline in two ways: through their power-sum expansion
s_mu = sum_nu chi^mu_nu / z_nu * p_nu, and through the signed determinant
over the coefficient table that assigns a scalar to each partition.
"""

from fractions import Fraction

from .amatrix import a_closed
from .errors import UsageError
from .exactnum import ExactScalar, ONE
from .partitions import partitions_of, z_order
from .series import FormalSeries

__all__ = ["character", "schur_to_p", "det_exact", "a_mu"]

_char_cache = {}


def _strip_removals(parts, length):
    """All ways to remove a border strip of the given length.

    Returns (new_parts, sign) pairs, where sign = (-1)^(height-1) with
    height the number of rows the strip occupies.  Implemented on the beta
    set beta_i = parts_i + (rows - 1 - i): removing a strip moves one bead
    down by `length`; the sign counts the beads jumped over.
    """
    rows = len(parts)
    if rows == 0:
        return []
    beta = [parts[i] + (rows - 1 - i) for i in range(rows)]
    occupied = set(beta)
    out = []
    for b in beta:
        c = b - length
        if c < 0 or c in occupied:
            continue
        jumped = sum(1 for x in beta if c < x < b)
        sign = -1 if jumped % 2 else 1
        new_beta = sorted((occupied - {b}) | {c}, reverse=True)
        new_parts = tuple(new_beta[i] - (rows - 1 - i) for i in range(rows))
        new_parts = tuple(p for p in new_parts if p > 0)
        out.append((new_parts, sign))
    return out


def _char(mu_parts, nu_parts):
    if not nu_parts:
        return 1
    key = (mu_parts, nu_parts)
    cached = _char_cache.get(key)
    if cached is not None:
        return cached
    head, rest = nu_parts[0], nu_parts[1:]
    total = 0
    for smaller, sign in _strip_removals(mu_parts, head):
        total += sign * _char(smaller, rest)
    _char_cache[key] = total
    return total


def character(mu, nu):
    """chi^mu_nu, the symmetric-group character value; always an integer.

    Strips are removed for the parts of nu from largest to smallest, which
    maximizes memo hits across a whole degree block.
    """
    if mu.weight != nu.weight:
        raise UsageError(
            f"character needs |mu| = |nu|, got {mu.weight} and {nu.weight}"
        )
    return _char(mu.parts, nu.parts)


def schur_to_p(mu):
    """Expansion of s_mu in power sums: sum_nu chi^mu_nu / z_nu * p_nu.

    The result is homogeneous of degree |mu| under deg p_k = k.
    """
    n = mu.weight
    acc = {}
    for nu in partitions_of(n):
        chi = _char(mu.parts, nu.parts)
        if chi == 0:
            continue
        key = tuple(sorted(nu.multiplicities().items()))
        acc[key] = ExactScalar(Fraction(chi, z_order(nu)))
    return FormalSeries("p", n, acc)


def _det_cofactor(rows):
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = None
    sign = 1
    for j in range(n):
        pivot = rows[0][j]
        if pivot:
            minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
            contrib = pivot * _det_cofactor(minor)
            if sign < 0:
                contrib = -contrib
            total = contrib if total is None else total + contrib
        sign = -sign
    return total if total is not None else ONE * 0


def _det_bareiss(rows):
    # Fraction-free elimination; divisions are exact at every step.
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ONE * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    value = m[n - 1][n - 1]
    return value if sign > 0 else -value


def det_exact(rows):
    """Exact determinant over Q(sqrt(-2)).

    Cofactor expansion for orders <= 4 (the typical hook-matrix size at
    desk scale), fraction-free elimination above that.
    """
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise UsageError("determinant needs a square matrix")
    if size <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def a_mu(mu, table=None):
    """Schur coefficient: (-1)^(sum of legs) det(A[arm_i, leg_j]).

    The empty partition gets the empty determinant 1.  When a table is
    given it must cover every needed (arm, leg) pair; otherwise values come
    from the closed form directly.
    """
    arms, legs = mu.frobenius()
    k = len(arms)
    if k == 0:
        return ONE
    lookup = table.value if table is not None else a_closed
    rows = [[lookup(arms[i], legs[j]) for j in range(k)] for i in range(k)]
    det = det_exact(rows)
    return -det if sum(legs) % 2 else det
