"""Exhaustive search over restricted walks, used to check the fast solver.

Nothing here uses the loop decomposition behind ``walk.largest_partition``:
every walk is generated and scored by the bead multiplicity size formula.
The search prunes only on visits to 0. Size is not monotone in walk length,
so no size-based pruning is sound.
"""
from dataclasses import dataclass

from ._backend import get_kernels
from .abacus import (
    RowMultiplicities,
    partition_from_row_multiplicities,
    row_multiplicities_to_bead_multiplicities,
    size_from_bead_multiplicities,
)
from .errors import FeasibilityRefused, InvariantViolation
from .partitions import first_hook_divisible_by, is_p_prime_partition, size
from .walk import check_odd_prime

FEASIBLE_MAX_P = 11
# int64 accumulators in the compiled search stay exact well past this
_KERNEL_MAX_P = 1000


def _check_feasible(p, override):
    check_odd_prime(p)
    if p > FEASIBLE_MAX_P and not override:
        raise FeasibilityRefused(
            f"exhaustive search for p={p} is refused above p={FEASIBLE_MAX_P}; pass override=True to force it"
        )
    if p > _KERNEL_MAX_P:
        raise FeasibilityRefused(f"p={p} is beyond any exhaustive search")


@dataclass(frozen=True)
class SearchState:
    """A node of the depth-first search: at ``vertex`` about to take ``label``-edges."""

    vertex: int
    label: int
    counts: tuple = ()

    def __post_init__(self):
        if self.counts and any(self.counts) and self.vertex == 0:
            raise InvariantViolation("search state sits on 0 after taking a step")


@dataclass(frozen=True)
class BruteForceResult:
    p: int
    row_multiplicities: RowMultiplicities
    size: int
    walks_searched: int
    maximizers: int = 1


def brute_force_largest(p, override=False, backend=None):
    """Score every restricted walk mod ``p`` and return the unique largest.

    Refuses p > 11 unless ``override`` is set. For p = 11 there are about
    7.8e7 walks, which the compiled kernel handles in seconds.
    """
    _check_feasible(p, override)
    count, best, n_best, best_m = get_kernels(backend).search_walks(p, -1)
    if n_best != 1:
        raise InvariantViolation(f"{n_best} walks share the largest size {best} for p={p}")
    m = RowMultiplicities(p, tuple(best_m))
    if size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m)) != best:
        raise InvariantViolation("search kernel score disagrees with the size formula")
    return BruteForceResult(p, m, best, count, n_best)


def count_walks(p, max_walk_length=None, override=False, backend=None):
    _check_feasible(p, override)
    limit = -1 if max_walk_length is None else max_walk_length
    return get_kernels(backend).search_walks(p, limit)[0]


def iter_search_states(p, max_walk_length=None):
    """Depth-first over ``SearchState``, one per completed label choice."""
    stack = [SearchState(0, 1, ())]
    while stack:
        state = stack.pop()
        yield state
        i = state.label
        if i == p:
            continue
        steps = sum(state.counts)
        children = []
        x, v = 0, state.vertex
        while max_walk_length is None or steps + x <= max_walk_length:
            children.append(SearchState(v, i + 1, state.counts + (x,)))
            v = (v + i) % p
            x += 1
            if v == 0 or x >= p:
                break
        stack.extend(reversed(children))


def enumerate_p_core_p_prime(p, max_walk_length=None, override=False):
    """Yield the row multiplicities of every restricted walk with at most ``max_walk_length`` steps.

    These are exactly the p-core p'-partitions with beads rightmost in their
    rows, each produced once.
    """
    _check_feasible(p, override)
    for state in iter_search_states(p, max_walk_length):
        if state.label == p:
            yield RowMultiplicities(p, state.counts)


@dataclass
class CrossCheckReport:
    p: int
    checked: int = 0
    first_mismatch: dict | None = None

    @property
    def ok(self):
        return self.first_mismatch is None


def cross_check_sizes(p, max_walk_length=None, override=False):
    """For each enumerated walk compare the size formula with summing parts, and recheck core and p' status.

    Stops at the first disagreement and records it in ``first_mismatch``.
    """
    report = CrossCheckReport(p)
    for m in enumerate_p_core_p_prime(p, max_walk_length, override):
        lam = partition_from_row_multiplicities(m)
        by_formula = size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(m))
        by_parts = size(lam)
        report.checked += 1
        witness = None
        if by_formula != by_parts:
            witness = {"check": "size", "formula": by_formula, "parts_sum": by_parts}
        else:
            hook = first_hook_divisible_by(lam, p)
            if hook is not None:
                witness = {"check": "p-core", "cell": hook}
            elif not is_p_prime_partition(lam, p):
                witness = {"check": "p'-partition"}
        if witness is not None:
            witness.update(row_multiplicities=m.values, parts=lam.parts)
            report.first_mismatch = witness
            break
    return report
