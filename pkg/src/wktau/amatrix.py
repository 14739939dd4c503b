"""The Bogoliubov coefficient table A[m, n], computed two independent ways.

The support is m + n = 2 (mod 3).  The closed form evaluates a product of
double factorials, the polynomial family B_n and the constants
b_n = 2^n (6n+1)!! / (2n)!.  The recursive route iterates the
lowering-operator recursion

    A[m, n+1] = A[m+1, n] - A[m, 0] A[0, n]
                - (d[m,1] d[n,0] - d[m,0] d[n,1]
                   + (2m-1) A[m-2, n] + (2n-1) A[m, n-2]) / (4 s)

from closed initial data on the m-axis only; any entry with a negative
index is zero.  Agreement of the two routes on the whole support is one of
the package's primary oracles.
"""

from fractions import Fraction

from .errors import UsageError
from .exactnum import ExactScalar, SQRT_M2, ZERO, double_factorial, factorial

__all__ = [
    "falling_factorial",
    "b_const",
    "BPoly",
    "b_poly",
    "b_poly_recursive",
    "on_support",
    "a_closed",
    "a_recursive",
    "axis_value_m",
    "axis_value_n",
    "CoeffMatrix",
    "a_block",
]

# -s/144, the base of the power prefactor in the closed form.
_BASE = ExactScalar(0, Fraction(-1, 144))
# 1/(4s) = -s/8, the denominator of the recursion's correction terms.
_INV_4S = (SQRT_M2 * 4).inverse()


def falling_factorial(a, j):
    """(a)_[j] = a (a-1) ... (a-j+1), with (a)_[0] = 1."""
    if j < 0:
        raise UsageError("falling factorial needs j >= 0")
    out = Fraction(1)
    for i in range(j):
        out *= a - i
    return out


def b_const(n):
    """b_n = 2^n (6n+1)!! / (2n)! as an exact rational."""
    if n < 0:
        raise UsageError("b_const needs n >= 0")
    return Fraction(2**n * double_factorial(6 * n + 1), factorial(2 * n))


class BPoly:
    """Dense univariate polynomial with rational coefficients.

    Coefficients are stored low degree first with trailing zeros trimmed;
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return BPoly(merged)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BPoly(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"BPoly({self.coeffs!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        chunks = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                chunks.append(str(c))
            elif e == 1:
                chunks.append(f"{c}*x")
            else:
                chunks.append(f"{c}*x^{e}")
        return " + ".join(chunks)


def _x_plus(c):
    return BPoly((Fraction(c), Fraction(1)))


_b_poly_cache = {}


def b_poly(n):
    """B_n(x) = (1/6) sum_{j=1..n} 108^j b_{n-j} (x+n)_[j-1]; degree n-1, B_0 = 0."""
    if n < 0:
        raise UsageError("b_poly needs n >= 0")
    if n in _b_poly_cache:
        return _b_poly_cache[n]
    total = BPoly()
    for j in range(1, n + 1):
        # (x+n)_[j-1] as a polynomial in x.
        ff = BPoly((Fraction(1),))
        for i in range(j - 1):
            ff = ff * _x_plus(n - i)
        total = total + ff * (Fraction(108) ** j * b_const(n - j))
    result = total * Fraction(1, 6)
    _b_poly_cache[n] = result
    return result


def b_poly_recursive(n):
    """Same polynomial via B_n = 108 (x+n) B_{n-1} + 18 b_{n-1}, for cross-checks."""
    if n < 0:
        raise UsageError("b_poly_recursive needs n >= 0")
    poly = BPoly()
    for k in range(1, n + 1):
        poly = _x_plus(k) * poly * 108 + BPoly((18 * b_const(k - 1),))
    return poly


def on_support(m, n):
    """True iff A[m, n] is allowed to be nonzero."""
    return m >= 0 and n >= 0 and (m + n) % 3 == 2


def _closed_branch(a, b, plus):
    """Closed-form kernel.

    With plus=True this is the value of A[3a-1, 3b] (equivalently
    A[3a-3, 3b+2]); with plus=False the value of A[3a-2, 3b+1].
    """
    sign = 1 if b % 2 == 0 else -1
    if not plus:
        sign = -sign
    prefactor = Fraction(double_factorial(6 * a + 1), factorial(2 * (a + b)))
    for j in range(b):
        prefactor *= a + j
    for j in range(1, b + 1):
        prefactor *= 2 * a + 2 * j - 1
    denom = 6 * a + 1 if plus else 6 * a - 1
    bracket = b_poly(b)(Fraction(a)) + b_const(b) / denom
    return (_BASE ** (a + b)) * (sign * prefactor * bracket)


_closed_cache = {}


def a_closed(m, n):
    """A[m, n] from the closed form (zero off the support)."""
    if not on_support(m, n):
        return ZERO
    key = (m, n)
    if key in _closed_cache:
        return _closed_cache[key]
    r = m % 3
    if r == 2:
        value = _closed_branch((m + 1) // 3, n // 3, plus=True)
    elif r == 1:
        value = _closed_branch((m + 2) // 3, (n - 1) // 3, plus=False)
    else:
        value = _closed_branch(m // 3 + 1, (n - 2) // 3, plus=True)
    _closed_cache[key] = value
    return value


def axis_value_m(m):
    """Initial data on the m-axis: A[3a-1, 0] = (-s/144)^a (6a-1)!!/(2a)!."""
    if not on_support(m, 0):
        return ZERO
    a = (m + 1) // 3
    return (_BASE**a) * Fraction(double_factorial(6 * a - 1), factorial(2 * a))


def axis_value_n(n):
    """The n-axis values (-1)^(3a-1) (-s/144)^a (6a-1)!!/(2a)! with the
    literal sign, i.e. -1 exactly when a is even.  The recursion is seeded
    on the m-axis only; this formula is what it must reproduce at m = 0."""
    if not on_support(0, n):
        return ZERO
    a = (n + 1) // 3
    value = (_BASE**a) * Fraction(double_factorial(6 * a - 1), factorial(2 * a))
    return -value if (3 * a - 1) % 2 else value


_rec_cache = {}


def a_recursive(m, n):
    """A[m, n] from the lowering-operator recursion, seeded on the m-axis."""
    if m < 0 or n < 0 or not on_support(m, n):
        return ZERO
    key = (m, n)
    if key in _rec_cache:
        return _rec_cache[key]
    if n == 0:
        value = axis_value_m(m)
    else:
        mm, nn = m, n - 1
        value = a_recursive(mm + 1, nn) - a_recursive(mm, 0) * a_recursive(0, nn)
        corr = ZERO
        if mm == 1 and nn == 0:
            corr = corr + 1
        if mm == 0 and nn == 1:
            corr = corr - 1
        corr = corr + (2 * mm - 1) * a_recursive(mm - 2, nn)
        corr = corr + (2 * nn - 1) * a_recursive(mm, nn - 2)
        value = value - _INV_4S * corr
    _rec_cache[key] = value
    return value


class CoeffMatrix:
    """A filled rectangular block of A-values with per-entry provenance."""

    def __init__(self):
        self._values = {}
        self._provenance = {}
        self.max_m = -1
        self.max_n = -1

    @classmethod
    def closed_block(cls, max_m, max_n):
        return cls._fill(max_m, max_n, a_closed, "closed-form")

    @classmethod
    def recursive_block(cls, max_m, max_n):
        return cls._fill(max_m, max_n, a_recursive, "recursion")

    @classmethod
    def _fill(cls, max_m, max_n, fn, tag):
        if max_m < 0 or max_n < 0:
            raise UsageError("block extents must be >= 0")
        table = cls()
        table.max_m = max_m
        table.max_n = max_n
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                table._values[(m, n)] = fn(m, n)
                table._provenance[(m, n)] = tag
        return table

    def __contains__(self, key):
        return key in self._values

    def value(self, m, n):
        try:
            return self._values[(m, n)]
        except KeyError:
            raise UsageError(f"table does not cover entry ({m}, {n})") from None

    def provenance(self, m, n):
        return self._provenance[(m, n)]

    def entries(self):
        """All (m, n, value) triples in row-major order."""
        for m in range(self.max_m + 1):
            for n in range(self.max_n + 1):
                yield m, n, self._values[(m, n)]

    def nonzero_entries(self):
        return [(m, n, v) for m, n, v in self.entries() if v]


def a_block(max_m, max_n):
    """Closed-form block covering 0 <= m <= max_m, 0 <= n <= max_n."""
    return CoeffMatrix.closed_block(max_m, max_n)
