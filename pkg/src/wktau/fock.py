"""A miniature charge-zero fermionic Fock engine.

Basis states |mu> are labelled by partitions through Frobenius
coordinates: the state has particles at arm + 1/2 and holes at
-(leg + 1/2) in the Dirac sea.  The only operator needed here is the
quadratic pure-creation operator built from a coefficient table,

    A = sum A[m, n] psi_{-m-1/2} psi*_{-n-1/2},

whose exponential on the vacuum is expanded exactly in the |mu> basis.
Creation signs follow from wedge reordering: inserting a particle at
m + 1/2 jumps the particles above it; removing the sea entry -(n + 1/2)
jumps every particle plus the sea entries above it.
"""

from fractions import Fraction

from .amatrix import a_block, on_support
from .errors import UsageError
from .exactnum import ExactScalar, ONE, ZERO
from .partitions import Partition

__all__ = ["FockVector", "pair_create", "fock_exp"]


class FockVector:
    """A finite linear combination of |mu> basis vectors."""

    __slots__ = ("degree_bound", "_coeffs")

    def __init__(self, degree_bound, coeffs=None):
        if degree_bound < 0:
            raise UsageError("degree_bound must be >= 0")
        self.degree_bound = degree_bound
        data = {}
        if coeffs:
            for mu, c in coeffs.items():
                if not isinstance(mu, Partition):
                    mu = Partition(mu)
                if mu.weight > degree_bound:
                    continue
                if not isinstance(c, ExactScalar):
                    c = ExactScalar(c)
                if c:
                    data[mu] = c
        self._coeffs = data

    @classmethod
    def vacuum(cls, degree_bound):
        return cls(degree_bound, {Partition(): ONE})

    def coefficient(self, mu):
        if not isinstance(mu, Partition):
            mu = Partition(mu)
        return self._coeffs.get(mu, ZERO)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0].weight, kv[0]))

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        bound = min(self.degree_bound, other.degree_bound)
        merged = dict(self._coeffs)
        for mu, c in other._coeffs.items():
            prev = merged.get(mu)
            merged[mu] = c if prev is None else prev + c
        return FockVector(bound, merged)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = ExactScalar(scalar)
        if not isinstance(scalar, ExactScalar):
            return NotImplemented
        return FockVector(
            self.degree_bound, {mu: c * scalar for mu, c in self._coeffs.items()}
        )

    __rmul__ = __mul__

    def __repr__(self):
        return f"FockVector({len(self._coeffs)} states, bound {self.degree_bound})"


def pair_create(mu, m, n):
    """Apply psi_{-m-1/2} psi*_{-n-1/2} to |mu>.

    Returns (partition, sign) or None when the operator annihilates the
    state (particle slot m or hole slot n already taken).  The hole is
    created first: its position index counts all particles plus the sea
    entries above -(n + 1/2) that are still occupied.
    """
    arms, legs = mu.frobenius()
    if n in legs:
        return None
    holes_below = sum(1 for x in legs if x < n)
    sign = -1 if (len(arms) + n - holes_below) % 2 else 1
    if m in arms:
        return None
    if sum(1 for x in arms if x > m) % 2:
        sign = -sign
    new_arms = tuple(sorted(arms + (m,), reverse=True))
    new_legs = tuple(sorted(legs + (n,), reverse=True))
    return Partition.from_frobenius(new_arms, new_legs), sign


def _apply_quadratic(entries, vec):
    acc = {}
    bound = vec.degree_bound
    for mu, c in vec._coeffs.items():
        budget = bound - mu.weight
        for m, n, value in entries:
            if m + n + 1 > budget:
                continue
            created = pair_create(mu, m, n)
            if created is None:
                continue
            target, sign = created
            contrib = c * value
            if sign < 0:
                contrib = -contrib
            prev = acc.get(target)
            total = contrib if prev is None else prev + contrib
            acc[target] = total
    return FockVector(bound, acc)


def fock_exp(table, degree):
    """Expand exp(A)|0> in the |mu> basis, truncated at |mu| <= degree.

    The table must cover every support entry with m + n + 1 <= degree;
    pass None to fill a closed-form block automatically.
    """
    if degree < 0:
        raise UsageError("degree must be >= 0")
    if table is None:
        table = a_block(max(degree - 1, 0), max(degree - 1, 0))
    entries = []
    for m in range(degree):
        for n in range(degree - m):
            if not on_support(m, n):
                continue
            value = table.value(m, n)  # raises UsageError if not covered
            if value:
                entries.append((m, n, value))
    result = FockVector.vacuum(degree)
    term = FockVector.vacuum(degree)
    k = 1
    while True:
        term = _apply_quadratic(entries, term) * Fraction(1, k)
        if not term:
            break
        result = result + term
        k += 1
    return result
