"""Integer partitions: conjugation, Frobenius coordinates, enumeration and
centralizer orders.

Partitions are immutable and hashable.  Enumeration order is reverse
lexicographic, e.g. for n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1); that
order is relied on for reproducible output everywhere downstream.
"""

from .errors import UsageError

__all__ = ["Partition", "partitions_of", "z_order"]


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise UsageError(f"parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < p:
                raise UsageError(f"parts must be weakly decreasing, got {parts!r}")
        self.parts = parts

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        # Reverse lexicographic: larger leading parts come first.
        return self.parts > other.parts

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def multiplicities(self):
        """Map part value -> multiplicity."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        cols = []
        for j in range(1, self.parts[0] + 1):
            cols.append(sum(1 for p in self.parts if p >= j))
        return Partition(cols)

    def diagonal(self):
        """Number of boxes on the main diagonal of the Young diagram."""
        return sum(1 for i, p in enumerate(self.parts) if p >= i + 1)

    def frobenius(self):
        """Frobenius coordinates (arms, legs), both strictly decreasing.

        arms[i] = parts[i] - i - 1 counted along rows, legs from the
        conjugate; both tuples have length equal to the diagonal.
        """
        k = self.diagonal()
        arms = tuple(self.parts[i] - i - 1 for i in range(k))
        conj = self.conjugate().parts
        legs = tuple(conj[i] - i - 1 for i in range(k))
        return arms, legs

    @classmethod
    def from_frobenius(cls, arms, legs):
        """Rebuild the partition from Frobenius coordinates."""
        arms = tuple(arms)
        legs = tuple(legs)
        if len(arms) != len(legs):
            raise UsageError("arms and legs must have equal length")
        for seq in (arms, legs):
            for i, v in enumerate(seq):
                if not isinstance(v, int) or v < 0:
                    raise UsageError("Frobenius coordinates must be >= 0")
                if i and seq[i - 1] <= v:
                    raise UsageError("Frobenius coordinates must strictly decrease")
        k = len(arms)
        if k == 0:
            return cls()
        rows = [arms[i] + i + 1 for i in range(k)]
        # Rows below the diagonal square are read off the conjugate rows
        # legs[j] + j + 1: row i (1-based, i > k) has length #{j: conj_j >= i}.
        conj_rows = [legs[j] + j + 1 for j in range(k)]
        i = k + 1
        while True:
            length = sum(1 for c in conj_rows if c >= i)
            if length == 0:
                break
            rows.append(length)
            i += 1
        return cls(rows)

    def frobenius_str(self):
        """Textual Frobenius form, e.g. "(2,0|1,0)"."""
        arms, legs = self.frobenius()
        return "({}|{})".format(
            ",".join(str(a) for a in arms), ",".join(str(b) for b in legs)
        )


def partitions_of(n):
    """Yield all partitions of n exactly once, in reverse lexicographic order."""
    if n < 0:
        raise UsageError("cannot partition a negative integer")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for head in range(min(cap, remaining), 0, -1):
            for tail in gen(remaining - head, head):
                yield (head,) + tail

    for parts in gen(n, n):
        yield Partition(parts)


def z_order(nu):
    """Centralizer order prod_k k**m_k * m_k! for part multiplicities m_k."""
    out = 1
    for k, m in nu.multiplicities().items():
        out *= k**m
        for i in range(2, m + 1):
            out *= i
    return out
