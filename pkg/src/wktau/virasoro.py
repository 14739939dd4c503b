"""Ladder-operator calculus on T-series.

gamma_n acts on the polynomial ring in T_1, T_3, ... as multiplication by
(-n) T_{-n} for n < 0 and as d/dT_n for n > 0.  The Virasoro family is

    L_n = (-1)^(n+1) s gamma_{2n+3}
          + (-1)^n / 4 * sum_{a+b=n-1} :gamma_{2a+1} gamma_{2b+1}:
          + 1/16 [n = 0],        n >= -1,

and the degree-raising cut-and-join operator is

    W = -(s/24) sum_{k>=0} gamma_{-(2k+1)}
          (sum_{a+b=k-2} :gamma_{2a+1} gamma_{2b+1}: + 1/4 [k = 1]).

Normal ordering (multiplications left of derivatives) is resolved once at
construction into a finite term list bounded by the degree cap, so
applying an operator to a truncated series is a finite exact computation.
Every term of L_n changes degree by -2n (T d/dT and d^2 terms) or by
-(2n+3) (the single pure derivative); every term of W raises degree by
exactly 3.
"""

from fractions import Fraction

from .errors import ConsistencyError, DegreeError, UsageError
from .exactnum import ExactScalar, SQRT_M2
from .series import FormalSeries, monomial_degree

__all__ = [
    "LadderOperator",
    "gamma_apply",
    "build_L",
    "build_W",
    "virasoro_check",
    "cutjoin_step",
    "z_cutjoin",
]


class LadderOperator:
    """A finite sum of (coefficient, multiply-by, differentiate-by) words.

    Each term multiplies by the listed T-variables after differentiating
    by the listed ones; numeric factors from gamma_{-k} = k T_k are folded
    into the coefficient.  Terms with matching words are merged.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms):
        merged = {}
        for coeff, mult, deriv in terms:
            if not isinstance(coeff, ExactScalar):
                coeff = ExactScalar(coeff)
            key = (tuple(sorted(mult)), tuple(sorted(deriv)))
            prev = merged.get(key)
            total = coeff if prev is None else prev + coeff
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        self._terms = tuple(
            (coeff, mult, deriv) for (mult, deriv), coeff in sorted(
                merged.items(), key=lambda kv: kv[0]
            )
        )

    @property
    def terms(self):
        return self._terms

    def __len__(self):
        return len(self._terms)

    def apply(self, series, out_bound=None):
        """Apply to a T-series; output truncated at out_bound (default: the
        input bound, so raising terms may drop overflow monomials)."""
        if series.family != "T":
            raise UsageError("ladder operators act on T-series")
        bound = series.degree_bound if out_bound is None else out_bound
        acc = {}
        for coeff, mult, deriv in self._terms:
            for mono, c in series.terms():
                exps = dict(mono)
                value = c
                dead = False
                for d in deriv:
                    e = exps.get(d, 0)
                    if not e:
                        dead = True
                        break
                    value = value * e
                    if e == 1:
                        del exps[d]
                    else:
                        exps[d] = e - 1
                if dead:
                    continue
                for v in mult:
                    exps[v] = exps.get(v, 0) + 1
                key = tuple(sorted(exps.items()))
                if monomial_degree("T", key) > bound:
                    continue
                value = value * coeff
                prev = acc.get(key)
                total = value if prev is None else prev + value
                acc[key] = total
        return FormalSeries("T", bound, acc)

    def __repr__(self):
        return f"LadderOperator({len(self._terms)} terms)"


def gamma_apply(n, series):
    """Apply a single gamma generator to a T-series."""
    if not isinstance(n, int) or n == 0 or n % 2 == 0:
        raise UsageError(f"gamma index must be a nonzero odd integer, got {n}")
    if series.family != "T":
        raise UsageError("gamma generators act on T-series")
    if n > 0:
        return series.differentiate(n)
    return series.multiply_monomial(((-n, 1),), ExactScalar(-n))


def _parity_sign(n):
    return -1 if n % 2 else 1


def build_L(n, degree_cap):
    """The Virasoro operator L_n, truncated to act on degree <= degree_cap."""
    if not isinstance(n, int) or n < -1:
        raise UsageError(f"L_n is defined for n >= -1, got {n}")
    if degree_cap < 0:
        raise UsageError("degree_cap must be >= 0")
    sgn = _parity_sign(n)
    quarter = Fraction(sgn, 4)
    terms = []
    # Pure derivative (-1)^(n+1) s d/dT_{2n+3}.
    terms.append((SQRT_M2 * (-sgn), (), (2 * n + 3,)))
    # Two derivatives: ordered pairs a + b = n - 1 with a, b >= 0.
    for a in range(0, n):
        b = n - 1 - a
        terms.append((quarter, (), (2 * a + 1, 2 * b + 1)))
    # Mixed: (2k+1) T_{2k+1} d/dT_{2k+2n+1}; both orders of the pair give
    # the same normal-ordered word, hence the factor 2.
    k = max(0, -n)
    while 2 * k + 2 * n + 1 <= degree_cap:
        coeff = Fraction(2 * (2 * k + 1), 1) * quarter
        terms.append((coeff, (2 * k + 1,), (2 * k + 2 * n + 1,)))
        k += 1
    # Two multiplications arise only for n = -1: the pair (-1, -1).
    if n == -1:
        terms.append((quarter, (1, 1), ()))
    if n == 0:
        terms.append((Fraction(1, 16), (), ()))
    return LadderOperator(terms)


def build_W(degree_cap):
    """The cut-and-join operator, truncated to outputs of degree <= cap."""
    if degree_cap < 0:
        raise UsageError("degree_cap must be >= 0")
    s = SQRT_M2
    terms = [
        (s * Fraction(-1, 24), (1, 1, 1), ()),
        (s * Fraction(-3, 96), (3,), ()),
    ]
    # T T d: gamma_{-(2k+1)} gamma_{-(2j+1)} gamma_{2k+2j-1}, k + j >= 1.
    k = 0
    while 2 * k + 1 <= degree_cap:
        j = 0
        while 2 * k + 2 * j - 1 <= degree_cap:
            if k + j >= 1:
                coeff = s * Fraction(-(2 * k + 1) * (2 * j + 1), 12)
                terms.append((coeff, (2 * k + 1, 2 * j + 1), (2 * k + 2 * j - 1,)))
            j += 1
        k += 1
    # T d d: gamma_{-(2k+2j+5)} gamma_{2k+1} gamma_{2j+1}.
    k = 0
    while 2 * k + 5 <= degree_cap:
        j = 0
        while 2 * k + 2 * j + 5 <= degree_cap:
            coeff = s * Fraction(-(2 * k + 2 * j + 5), 24)
            terms.append((coeff, (2 * k + 2 * j + 5,), (2 * k + 1, 2 * j + 1)))
            j += 1
        k += 1
    return LadderOperator(terms)


def virasoro_check(n, z, out_degree):
    """Check that L_n annihilates the series up to the output degree.

    The input must be computed far enough: degree_bound >= out_degree +
    2n + 3.  Returns (passed, residuals) where residuals lists the
    offending monomials of L_n(z) at degree <= out_degree.
    """
    if z.family != "T":
        raise UsageError("virasoro_check expects a T-series")
    if out_degree < 0:
        raise UsageError("out_degree must be >= 0")
    if z.degree_bound < out_degree + 2 * n + 3:
        raise DegreeError(
            f"series bound {z.degree_bound} too small for L_{n} residuals at "
            f"degree {out_degree}; increase the degree to "
            f"{out_degree + 2 * n + 3}"
        )
    residual = build_L(n, z.degree_bound).apply(z)
    offending = [
        (key, coeff)
        for key, coeff in residual.terms()
        if monomial_degree("T", key) <= out_degree
    ]
    return not offending, offending


def cutjoin_step(zk, k, out_bound=None):
    """One grading step: maps the degree-3k slice to the degree-3(k+1) one."""
    if zk.family != "T":
        raise UsageError("cutjoin_step expects a T-series")
    if not zk.is_homogeneous(3 * k):
        raise UsageError(f"input must be homogeneous of degree {3 * k}")
    bound = 3 * (k + 1) if out_bound is None else out_bound
    out = build_W(bound).apply(zk, out_bound=bound) * Fraction(1, k + 1)
    if not out.is_homogeneous(3 * (k + 1)):
        raise ConsistencyError("cut-and-join step produced inhomogeneous output")
    return out


def z_cutjoin(degree):
    """The tau-function as exp(W) 1, built slice by slice in T-variables."""
    if degree < 0:
        raise UsageError("degree must be >= 0")
    total = FormalSeries.constant("T", degree, 1)
    slice_k = FormalSeries.constant("T", 0, 1)
    k = 0
    while 3 * (k + 1) <= degree:
        slice_k = cutjoin_step(slice_k, k)
        total = total + slice_k.with_bound(degree)
        k += 1
    return total
