"""Named invariant checks for one prime, shared by ``pcore verify`` and the tests."""
from dataclasses import dataclass

from .abacus import is_p_prime_multiplicities, size_from_bead_multiplicities
from .bounds import (
    explicit_family,
    explicit_family_size,
    mcspirit_ono_bound,
    sharpened_upper_bound,
    upper_bound_bead_multiplicities,
)
from .oracle import brute_force_largest
from .partitions import first_hook_divisible_by, is_p_prime_partition
from .tables import PUBLISHED_ROW_MULTIPLICITIES, complete_from_first_half
from .walk import (
    best_closed_segment,
    check_lemma_unreachable,
    is_recurrent,
    labels_used,
    largest_partition,
)


@dataclass(frozen=True)
class CheckResult:
    p: int
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status} p={self.p} {self.name}{tail}"


def _symmetric(m):
    p = m.p
    return all(m[i] == m[p - i] for i in range(2, p - 1)) and m[1] == m[p - 1] + 1


def property_checks(p):
    """Yield a ``CheckResult`` for every invariant of the solver output at ``p``."""
    lp = largest_partition(p)
    m = lp.row_multiplicities
    lam = lp.partition
    walk = lp.walk

    hook = first_hook_divisible_by(lam, p)
    yield CheckResult(p, "p-core (hook lengths)", hook is None, f"hook at {hook}" if hook else "")
    yield CheckResult(p, "p'-partition (parts)", is_p_prime_partition(lam, p))
    yield CheckResult(p, "size formula matches part sum", sum(lam.parts) == lp.size, f"size {lp.size}")
    yield CheckResult(p, "walk is (p-1)-recurrent", is_recurrent(walk))
    yield CheckResult(p, "walk uses every label", labels_used(walk) == set(range(1, p)))
    yield CheckResult(p, "final i-edge cannot reach s+1", check_lemma_unreachable(walk))
    yield CheckResult(p, "row multiplicities symmetric", _symmetric(m), str(m.values) if not _symmetric(m) else "")

    congruent = all(
        (seg.x * i + seg.y * (i + 1)) % p == 0 for i in range(2, p - 1) for seg in [best_closed_segment(p, i)]
    )
    yield CheckResult(p, "loop counts satisfy x*i + y*(i+1) = 0 mod p", congruent)

    explicit = explicit_family_size(p)
    upper = sharpened_upper_bound(p)
    ordered = explicit <= lp.size <= upper <= mcspirit_ono_bound(p)
    yield CheckResult(p, "explicit <= largest <= sharpened <= McSpirit-Ono", ordered,
                      f"{explicit}, {lp.size}, {upper}, {mcspirit_ono_bound(p)}")
    yield CheckResult(p, "explicit family is a p'-partition", is_p_prime_multiplicities(explicit_family(p)))
    yield CheckResult(p, "sharpened bound equals size formula at b_i=(p-2)i+1",
                      size_from_bead_multiplicities(upper_bound_bead_multiplicities(p)) == upper)

    if p in PUBLISHED_ROW_MULTIPLICITIES:
        expected = complete_from_first_half(p, PUBLISHED_ROW_MULTIPLICITIES[p])
        yield CheckResult(p, "row multiplicities match published table", m.values == expected)


def oracle_checks(p, override=False):
    lp = largest_partition(p)
    bf = brute_force_largest(p, override=override)
    same = bf.row_multiplicities == lp.row_multiplicities and bf.size == lp.size
    yield CheckResult(p, "exhaustive search agrees with solver", same,
                      f"{bf.walks_searched} walks, unique maximizer of size {bf.size}")
