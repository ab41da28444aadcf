"""The p-abacus and the parameters that describe p-core partitions on it.

Position ``(j - 1) * p + i`` is runner ``i`` of row ``j``; a bead at position
x encodes a part equal to the number of gaps below x. Abaci are normalized
with a gap at position 0, which makes the encoding one-to-one.

A p-core has every bead at the top of its runner, so it is determined by its
bead multiplicities ``b_i`` (beads on runner i, 1 <= i <= p-1). When the beads
are also rightmost within their rows, ``b`` is weakly increasing and its
successive differences are the row multiplicities ``m_i``: the number of rows
with exactly i gaps.
"""
from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidModulus, InvariantViolation, NotPCore, NotPPrime, PreconditionFailed
from .partitions import Partition, as_partition, check_modulus, is_p_core, is_p_prime_partition, size


@dataclass(frozen=True)
class Abacus:
    p: int
    beads: frozenset = frozenset()

    def __post_init__(self):
        check_modulus(self.p)
        beads = frozenset(self.beads)
        if any(not isinstance(x, int) or x < 0 for x in beads):
            raise ValueError("bead positions must be nonnegative ints")
        if 0 in beads:
            raise ValueError("position 0 must be a gap")
        object.__setattr__(self, "beads", beads)

    @property
    def rows(self):
        return (max(self.beads) + self.p) // self.p if self.beads else 0

    def runner_counts(self):
        counts = [0] * self.p
        for x in self.beads:
            counts[x % self.p] += 1
        return counts

    def beads_at_top(self):
        """Abacus criterion for a p-core: every bead sits on top of a bead or the runner's start."""
        return all(x < self.p or x - self.p in self.beads for x in self.beads)


@dataclass(frozen=True)
class _Multiplicities:
    """A length-(p-1) tuple of nonnegative ints, indexed from 1."""

    p: int
    values: tuple

    def __post_init__(self):
        check_modulus(self.p)
        values = tuple(self.values)
        if len(values) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} entries for p={self.p}, got {len(values)}")
        if any(not isinstance(v, int) or v < 0 for v in values):
            raise ValueError(f"entries must be nonnegative ints: {values}")
        object.__setattr__(self, "values", values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        if not 1 <= i <= self.p - 1:
            raise IndexError(i)
        return self.values[i - 1]


class BeadMultiplicities(_Multiplicities):
    pass


class RowMultiplicities(_Multiplicities):
    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * (p - 1))


def partition_to_abacus(partition, p):
    lam = as_partition(partition)
    return Abacus(p, frozenset(lam.beta_numbers()))


def abacus_to_partition(abacus):
    parts = [x - k for k, x in enumerate(sorted(abacus.beads))]
    return Partition(tuple(reversed(parts)))


def bead_multiplicities(partition, p):
    a = partition_to_abacus(partition, p)
    if not a.beads_at_top():
        raise NotPCore(f"{as_partition(partition)} is not a {p}-core")
    counts = a.runner_counts()
    if counts[0]:
        raise InvariantViolation("p-core abacus with a gap at 0 has a bead on runner 0")
    return BeadMultiplicities(p, tuple(counts[1:]))


def abacus_from_bead_multiplicities(b):
    p = b.p
    return Abacus(p, frozenset(j * p + i for i, count in enumerate(b.values, 1) for j in range(count)))


def size_from_bead_multiplicities(b):
    """|λ| = ℓ(1 - ℓ - p)/2 + (p/2) Σ b_i² + Σ i b_i, with ℓ = Σ b_i."""
    p = b.p
    ell = sum(b.values)
    twice = ell * (1 - ell - p) + p * sum(v * v for v in b.values)
    if twice % 2:
        raise InvariantViolation(f"size formula gave a half-integer for {b}")
    return twice // 2 + sum(i * v for i, v in enumerate(b.values, 1))


def row_multiplicities_to_bead_multiplicities(m):
    return BeadMultiplicities(m.p, tuple(accumulate(m.values)))


def bead_multiplicities_to_row_multiplicities(b):
    values = b.values
    diffs = tuple(v - (values[k - 1] if k else 0) for k, v in enumerate(values))
    if any(d < 0 for d in diffs):
        raise PreconditionFailed(f"bead multiplicities {values} are not weakly increasing")
    return RowMultiplicities(b.p, diffs)


def _rows_by_gap_count(m):
    # rows top to bottom, gap counts weakly increasing (the ordering of a rightmost abacus)
    for gaps, count in enumerate(m.values, 1):
        for _ in range(count):
            yield gaps


def partition_from_row_multiplicities(m):
    """The rightmost-bead p-core with row multiplicities ``m``.

    A row with g gaps contributes ``p - g`` equal parts, each equal to the
    number of gaps in that row and every row above it.
    """
    parts = []
    gaps_so_far = 0
    for gaps in _rows_by_gap_count(m):
        gaps_so_far += gaps
        parts.extend([gaps_so_far] * (m.p - gaps))
    parts.reverse()
    return Partition(tuple(parts))


def abacus_from_row_multiplicities(m):
    p = m.p
    return Abacus(p, frozenset(
        row * p + col for row, gaps in enumerate(_rows_by_gap_count(m)) for col in range(gaps, p)
    ))


def residue_sequence(m):
    """Part sizes of successive rows mod p: add i to the previous term ``m_i`` times."""
    p = m.p
    seq = []
    prev = 0
    for i, count in enumerate(m.values, 1):
        for _ in range(count):
            prev = (prev + i) % p
            seq.append(prev)
    return tuple(seq)


def is_p_prime_multiplicities(m):
    return 0 not in residue_sequence(m)


def push_beads_rightmost(partition, p):
    """Turn a p-core p'-partition into one, at least as large, with beads rightmost in rows.

    If runner p-1 already carries the (joint) most beads, sliding every bead
    as far right as its row allows gives a larger p-core without creating a
    part divisible by p. Otherwise the same partition is redrawn with an
    extra bead at position 0 and every other bead moved one place right,
    which rotates the runners; after at most p-1 such redraws runner p-1 is
    the fullest and the slide can happen.
    """
    check_modulus(p)
    if p < 3 or p % 2 == 0:
        raise InvalidModulus(f"p must be an odd integer >= 3, got {p}")
    lam = as_partition(partition)
    if not is_p_core(lam, p):
        raise NotPCore(f"{lam} is not a {p}-core")
    if not is_p_prime_partition(lam, p):
        raise NotPPrime(f"{lam} has a part divisible by {p}")

    beads = set(partition_to_abacus(lam, p).beads)
    for _ in range(p):
        counts = [0] * p
        for x in beads:
            counts[x % p] += 1
        if counts[p - 1] == max(counts):
            break
        beads = {0} | {x + 1 for x in beads}
    else:
        raise InvariantViolation("runner p-1 never became the fullest runner")

    per_row = {}
    for x in beads:
        per_row[x // p] = per_row.get(x // p, 0) + 1
    beads = {row * p + col for row, count in per_row.items() for col in range(p - count, p)}

    first_gap = 0
    while first_gap in beads:
        first_gap += 1
    result = abacus_to_partition(Abacus(p, frozenset(x - first_gap for x in beads if x > first_gap)))

    if not (is_p_core(result, p) and is_p_prime_partition(result, p)) or size(result) < size(lam):
        raise InvariantViolation(f"pushing beads right turned {lam} into {result}")
    return result


def apply_row_replacement(m, i, kind):
    """Swap i rows for i+1 rows, which always makes the partition larger.

    ``kind="gaps"``: i rows with i+1 gaps become i+1 rows with i gaps.
    ``kind="beads"``: i rows with i+1 beads (p-i-1 gaps) become i+1 rows
    with i beads (p-i gaps).
    """
    p = m.p
    if kind == "gaps":
        src, dst = i + 1, i
    elif kind == "beads":
        src, dst = p - i - 1, p - i
    else:
        raise ValueError(f"kind must be 'gaps' or 'beads', got {kind!r}")
    if not 1 <= i <= p - 2:
        raise PreconditionFailed(f"i must lie in [1, {p - 2}] for p={p}, got {i}")
    values = list(m.values)
    if values[src - 1] < i:
        raise PreconditionFailed(f"need at least {i} rows with {src} gaps, have {values[src - 1]}")
    values[src - 1] -= i
    values[dst - 1] += i + 1
    return RowMultiplicities(p, tuple(values))


def render_abacus(abacus, rows=None):
    """One string per row, ``.`` for a gap and ``o`` for a bead."""
    p = abacus.p
    n = abacus.rows if rows is None else rows
    return ["".join("o" if r * p + c in abacus.beads else "." for c in range(p)) for r in range(n)]
