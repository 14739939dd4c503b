"""Sparse truncated multivariate series over Q(sqrt(-2)).

A series carries a variable-family tag ("p", "T", "t" or "u"), a hard
degree bound, and a map from monomials to nonzero coefficients.  Monomials
are tuples ((index, exponent), ...) sorted by index.  The grading is
deg p_k = k, deg T_k = k and deg t_a = deg u_a = 2a + 1, so linear
coordinate changes between the families preserve degree.

Truncation is a hard invariant: every constructor and every operation
drops monomials above the bound eagerly, so a bound-D series can never
silently carry content above D.
"""

from fractions import Fraction

from .errors import UsageError
from .exactnum import ExactScalar, ZERO, ONE

__all__ = ["FAMILIES", "monomial_degree", "FormalSeries"]

FAMILIES = ("p", "T", "t", "u")


def monomial_degree(family, key):
    """Graded degree of a monomial key under the family's grading."""
    if family in ("p", "T"):
        return sum(i * e for i, e in key)
    return sum((2 * i + 1) * e for i, e in key)


def _min_index(family):
    return 1 if family in ("p", "T") else 0


def _canonical_key(family, key):
    lo = _min_index(family)
    merged = {}
    for i, e in key:
        if not isinstance(i, int) or i < lo:
            raise UsageError(f"variable index {i!r} invalid for family {family!r}")
        if not isinstance(e, int) or e <= 0:
            raise UsageError(f"exponent {e!r} must be a positive integer")
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


class FormalSeries:
    """Truncated series: family tag, degree bound, sparse term map."""

    __slots__ = ("family", "degree_bound", "_terms")

    def __init__(self, family, degree_bound, terms=None):
        if family not in FAMILIES:
            raise UsageError(f"unknown variable family {family!r}")
        if not isinstance(degree_bound, int) or degree_bound < 0:
            raise UsageError("degree_bound must be a nonnegative integer")
        self.family = family
        self.degree_bound = degree_bound
        data = {}
        if terms:
            for key, coeff in terms.items():
                key = _canonical_key(family, key)
                if monomial_degree(family, key) > degree_bound:
                    continue
                if not isinstance(coeff, ExactScalar):
                    coeff = ExactScalar(coeff)
                if coeff:
                    prev = data.get(key)
                    total = coeff if prev is None else prev + coeff
                    if total:
                        data[key] = total
                    else:
                        data.pop(key, None)
        self._terms = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, family, degree_bound, value=1):
        return cls(family, degree_bound, {(): value})

    @classmethod
    def variable(cls, family, index, degree_bound, coeff=1):
        return cls(family, degree_bound, {((index, 1),): coeff})

    def with_bound(self, degree_bound):
        """Copy with a new bound (truncating if it shrinks)."""
        return FormalSeries(self.family, degree_bound, self._terms)

    # -- inspection ----------------------------------------------------------

    def terms(self):
        """Terms in canonical order: by degree, then by monomial key."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (monomial_degree(self.family, kv[0]), kv[0]),
        )

    def coefficient(self, key):
        key = _canonical_key(self.family, key)
        return self._terms.get(key, ZERO)

    @property
    def constant_term(self):
        return self._terms.get((), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def max_degree(self):
        return max(
            (monomial_degree(self.family, k) for k in self._terms), default=0
        )

    def is_homogeneous(self, degree=None):
        degrees = {monomial_degree(self.family, k) for k in self._terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def degree_slice(self, degree):
        picked = {
            k: c
            for k, c in self._terms.items()
            if monomial_degree(self.family, k) == degree
        }
        return FormalSeries(self.family, self.degree_bound, picked)

    def variables(self):
        """Sorted set of variable indices that actually occur."""
        out = set()
        for key in self._terms:
            for i, _ in key:
                out.add(i)
        return sorted(out)

    # -- arithmetic ------------------------------------------------------------

    def _check_family(self, other):
        if self.family != other.family:
            raise UsageError(
                f"family mismatch: {self.family!r} vs {other.family!r}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            other = FormalSeries.constant(self.family, self.degree_bound, other)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        self._check_family(other)
        bound = min(self.degree_bound, other.degree_bound)
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            prev = merged.get(key)
            merged[key] = coeff if prev is None else prev + coeff
        return FormalSeries(self.family, bound, merged)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries(
            self.family, self.degree_bound, {k: -c for k, c in self._terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            other = FormalSeries.constant(self.family, self.degree_bound, other)
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            return FormalSeries(
                self.family,
                self.degree_bound,
                {k: c * other for k, c in self._terms.items()},
            )
        if not isinstance(other, FormalSeries):
            return NotImplemented
        self._check_family(other)
        bound = min(self.degree_bound, other.degree_bound)
        acc = {}
        for k1, c1 in self._terms.items():
            d1 = monomial_degree(self.family, k1)
            e1 = dict(k1)
            for k2, c2 in other._terms.items():
                if d1 + monomial_degree(self.family, k2) > bound:
                    continue
                merged = dict(e1)
                for i, e in k2:
                    merged[i] = merged.get(i, 0) + e
                key = tuple(sorted(merged.items()))
                c = c1 * c2
                prev = acc.get(key)
                acc[key] = c if prev is None else prev + c
        return FormalSeries(self.family, bound, acc)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = ExactScalar(scalar)
        if not isinstance(scalar, ExactScalar):
            return NotImplemented
        return self * scalar.inverse()

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise UsageError("series power expects a nonnegative integer")
        out = FormalSeries.constant(self.family, self.degree_bound, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.family == other.family and self._terms == other._terms

    def __hash__(self):
        return hash((self.family, tuple(self.terms())))

    # -- calculus helpers ---------------------------------------------------

    def differentiate(self, index):
        """Partial derivative with respect to the variable of given index."""
        if index < _min_index(self.family):
            raise UsageError(f"bad variable index {index}")
        acc = {}
        for key, coeff in self._terms.items():
            e = dict(key)
            if index not in e:
                continue
            c = coeff * e[index]
            if e[index] == 1:
                del e[index]
            else:
                e[index] -= 1
            acc[tuple(sorted(e.items()))] = c
        return FormalSeries(self.family, self.degree_bound, acc)

    def multiply_monomial(self, key, coeff=ONE, degree_bound=None):
        """Multiply by coeff * monomial(key), truncating at the bound."""
        key = _canonical_key(self.family, key)
        bound = self.degree_bound if degree_bound is None else degree_bound
        shift = monomial_degree(self.family, key)
        acc = {}
        for mono, c in self._terms.items():
            if monomial_degree(self.family, mono) + shift > bound:
                continue
            e = dict(mono)
            for i, k in key:
                e[i] = e.get(i, 0) + k
            acc[tuple(sorted(e.items()))] = c * coeff
        return FormalSeries(self.family, bound, acc)

    def map_variables(self, target_family, mapping):
        """Monomial-wise linear substitution x_i -> scalar * y_j.

        ``mapping(index) -> (new_index, scalar)``; each coefficient picks up
        scalar**exponent.  Degree must be preserved by the mapping, which
        holds for all coordinate changes used in this package.
        """
        acc = {}
        for key, coeff in self._terms.items():
            c = coeff
            e = {}
            for i, k in key:
                j, scalar = mapping(i)
                if not isinstance(scalar, ExactScalar):
                    scalar = ExactScalar(scalar)
                c = c * scalar**k
                e[j] = e.get(j, 0) + k
            new_key = tuple(sorted(e.items()))
            prev = acc.get(new_key)
            acc[new_key] = c if prev is None else prev + c
        return FormalSeries(target_family, self.degree_bound, acc)

    # -- rendering ------------------------------------------------------------

    def to_terms(self):
        """JSON-ready list of terms in canonical order."""
        return [
            {
                "monomial": [[i, e] for i, e in key],
                "re": str(coeff.re),
                "im": str(coeff.im),
            }
            for key, coeff in self.terms()
        ]

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for key, coeff in self.terms():
            mono = "*".join(
                f"{self.family}{i}" + (f"^{e}" if e > 1 else "") for i, e in key
            )
            if mono:
                chunks.append(f"({coeff})*{mono}")
            else:
                chunks.append(f"({coeff})")
        return " + ".join(chunks)

    def __repr__(self):
        return (
            f"FormalSeries({self.family!r}, {self.degree_bound}, "
            f"{len(self._terms)} terms)"
        )
