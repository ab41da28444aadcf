"""Restricted walks on the additive residue graph and the largest p-core p'-partition.

The graph has the residues mod p as vertices and an edge labelled i from r to
r + i for every 1 <= i <= p-1. It is never built: every edge is one addition.
A restricted walk starts at 0, uses labels in weakly increasing order and
never comes back to 0. Reading a rightmost-bead p-core's residue sequence as
the vertices of such a walk is a bijection with the p-core p'-partitions
whose beads are rightmost, the i-th row multiplicity counting the i-edges.

The largest partition comes from the longest walk that touches p-1 with
every label. That walk splits into runs: 1-edges from 0 up to p-1; for each
middle label i a loop from p-1 out to some residue r on i-edges and back to
p-1 on (i+1)-edges; and a final descent on (p-1)-edges. Each loop can be
maximized on its own, which gives an O(p²) solver.
"""
from dataclasses import dataclass
from functools import cached_property

from .abacus import (
    RowMultiplicities,
    partition_from_row_multiplicities,
    residue_sequence,
    row_multiplicities_to_bead_multiplicities,
    size_from_bead_multiplicities,
)
from .errors import InvalidModulus, InvariantViolation, NotOdd, NotPrime, RevisitsZero


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_odd_prime(p):
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"p must be an int, got {type(p).__name__}")
    if p < 2:
        raise InvalidModulus(f"p must be an odd prime, got {p}")
    if p % 2 == 0:
        raise NotOdd(f"p must be an odd prime, got even {p}")
    if not is_prime(p):
        raise NotPrime(f"p must be an odd prime, got composite {p}")
    return p


@dataclass(frozen=True)
class Walk:
    p: int
    vertices: tuple = (0,)
    labels: tuple = ()

    def __post_init__(self):
        p = self.p
        vertices, labels = tuple(self.vertices), tuple(self.labels)
        if not vertices or vertices[0] != 0:
            raise ValueError("a walk starts at 0")
        if len(vertices) != len(labels) + 1:
            raise ValueError("need exactly one label per step")
        for k, label in enumerate(labels):
            if not 1 <= label <= p - 1:
                raise ValueError(f"label {label} outside [1, {p - 1}]")
            if k and label < labels[k - 1]:
                raise ValueError("labels must be weakly increasing")
            if vertices[k + 1] != (vertices[k] + label) % p:
                raise ValueError(f"step {k}: {vertices[k]} + {label} != {vertices[k + 1]} mod {p}")
            if vertices[k + 1] == 0:
                raise RevisitsZero(f"walk returns to 0 at step {k + 1}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    def steps(self):
        """Yield ``(source, label, target)`` for each edge in order."""
        for k, label in enumerate(self.labels):
            yield self.vertices[k], label, self.vertices[k + 1]

    def row_multiplicities(self):
        counts = [0] * (self.p - 1)
        for label in self.labels:
            counts[label - 1] += 1
        return RowMultiplicities(self.p, tuple(counts))


@dataclass(frozen=True)
class ClosedSegmentChoice:
    """Loop from p-1 to ``r`` on ``x`` i-edges, then back on ``y`` (i+1)-edges."""

    i: int
    r: int
    x: int
    y: int

    @property
    def length(self):
        return self.x + self.y


def walk_from_row_multiplicities(m):
    seq = residue_sequence(m)
    if 0 in seq:
        raise RevisitsZero(f"row multiplicities {m.values} give a walk through 0")
    labels = tuple(i for i, count in enumerate(m.values, 1) for _ in range(count))
    return Walk(m.p, (0,) + seq, labels)


def is_recurrent(walk):
    """True iff every label 1..p-1 has an edge with p-1 at one end."""
    top = walk.p - 1
    touching = {label for src, label, dst in walk.steps() if src == top or dst == top}
    return len(touching) == walk.p - 1


def labels_used(walk):
    return set(walk.labels)


def steps_on_label(p, start, i, end):
    """Number of i-edges from ``start`` to ``end`` without visiting 0, or None."""
    v = start
    for x in range(p):
        if v == end:
            return x
        v = (v + i) % p
        if v == 0:
            return None
    return None


def _forward_counts(p, start, i):
    # residue -> steps to reach it from start on i-edges, stopping before 0
    reach = {}
    v, x = start, 0
    while v != 0 and v not in reach:
        reach[v] = x
        v = (v + i) % p
        x += 1
    return reach


def _backward_counts(p, end, i):
    # residue -> steps from it to end on i-edges, every vertex after the start nonzero
    reach = {}
    v, y = end, 0
    while v != 0 and v not in reach:
        reach[v] = y
        v = (v - i) % p
        y += 1
    return reach


def best_closed_segment(p, i):
    """The longest loop at p-1 that uses i-edges and then (i+1)-edges.

    Raises InvariantViolation if two transition residues tie, which cannot
    happen for prime p.
    """
    if not 2 <= i <= p - 2:
        raise ValueError(f"label {i} outside [2, {p - 2}]")
    top = p - 1
    out = _forward_counts(p, top, i)
    back = _backward_counts(p, top, i + 1)
    best = None
    tied = False
    for r, x in out.items():
        y = back.get(r)
        if y is None:
            continue
        if best is None or x + y > best.length:
            best = ClosedSegmentChoice(i, r, x, y)
            tied = False
        elif x + y == best.length:
            tied = True
    if tied:
        raise InvariantViolation(f"two transition residues give the longest loop for p={p}, i={i}")
    return best


def solve_row_multiplicities(p):
    """Row multiplicities of the largest p-core p'-partition, in O(p²) time."""
    check_odd_prime(p)
    m = [0] * (p - 1)
    m[0] = p - 1
    carry = 0
    for i in range(2, p - 1):
        seg = best_closed_segment(p, i)
        m[i - 1] = carry + seg.x
        carry = seg.y
    # final run of (p-1)-edges walks p-1, p-2, ..., 1
    m[p - 2] = carry + (p - 2)
    return RowMultiplicities(p, tuple(m))


@dataclass(frozen=True)
class LargestPartition:
    p: int
    row_multiplicities: RowMultiplicities
    size: int

    @cached_property
    def bead_multiplicities(self):
        return row_multiplicities_to_bead_multiplicities(self.row_multiplicities)

    @cached_property
    def partition(self):
        return partition_from_row_multiplicities(self.row_multiplicities)

    @cached_property
    def walk(self):
        return walk_from_row_multiplicities(self.row_multiplicities)

    @property
    def length(self):
        return sum(self.bead_multiplicities.values)


def largest_partition(p):
    """The unique largest p-core p'-partition.

    The partition itself can have p³ parts, so it is built lazily on first
    access to ``.partition``.
    """
    m = solve_row_multiplicities(p)
    size = size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m))
    return LargestPartition(p, m, size)


def chartable_zero_threshold(p):
    """Largest n with a p-core p'-partition; beyond it the p-core rows of the S_n character table vanish on p'-classes."""
    return largest_partition(p).size


def check_lemma_unreachable(walk):
    """True iff, for each label i used, s+1 is unreachable on i-edges from the end s of the last i-edge."""
    p = walk.p
    last_end = {}
    for _, label, dst in walk.steps():
        last_end[label] = dst
    for label, s in last_end.items():
        target = (s + 1) % p
        if target != 0 and steps_on_label(p, s, label, target) is not None:
            return False
    return True
