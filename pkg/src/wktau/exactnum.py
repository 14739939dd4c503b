"""Exact arithmetic over Q and over the quadratic field Q(sqrt(-2)).

Every coefficient in this package is an element ``re + im*s`` where ``s``
is a formal square root of -2 (so ``s*s = -2``) and ``re``, ``im`` are
arbitrary-precision rationals kept reduced.  There is no floating-point
mode anywhere; the final intersection numbers must come out with ``im``
exactly zero, which the pipeline checks rather than assumes.
"""

from fractions import Fraction
from math import factorial as _factorial

__all__ = [
    "Rational",
    "ExactScalar",
    "ZERO",
    "ONE",
    "SQRT_M2",
    "factorial",
    "double_factorial",
]

# Arbitrary-precision rationals, always reduced, denominator > 0.
Rational = Fraction


def factorial(n):
    """n! as an exact integer."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return _factorial(n)


def double_factorial(n):
    """n!! for odd n >= -1, with the empty-product convention (-1)!! = 1."""
    if n == -1:
        return 1
    if n < 0 or n % 2 == 0:
        raise ValueError(f"double factorial needs an odd n >= -1, got {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class ExactScalar:
    """An element re + im*s of Q(sqrt(-2)).

    Instances are immutable by convention: no method mutates self, every
    operation returns a fresh value with both components reduced.  The
    canonical zero is (0, 0) and equality is componentwise, so values are
    safe as dict keys and across threads.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactScalar(x)
        return None

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b s)(c + d s) = (ac - 2bd) + (ad + bc) s
        return ExactScalar(
            self.re * o.re - 2 * self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; exists iff the value is nonzero."""
        norm = self.re * self.re + 2 * self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(-2))")
        return ExactScalar(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("pow expects a nonnegative integer exponent")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """The image under s -> -s."""
        return ExactScalar(self.re, -self.im)

    # -- predicates / hashing ----------------------------------------------

    @property
    def is_rational(self):
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        # Canonical textual form: "a/b", "c/d*s" or "a/b + c/d*s".
        if not self.im:
            return str(self.re)
        s_part = f"{self.im}*s"
        if not self.re:
            return s_part
        return f"{self.re} + {s_part}"

    def __repr__(self):
        return f"ExactScalar({self.re!r}, {self.im!r})"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
SQRT_M2 = ExactScalar(0, 1)
