"""Largest p-core p'-partitions via restricted walks on the additive residue graph."""
from ._backend import BACKEND
from .abacus import (
    Abacus,
    BeadMultiplicities,
    RowMultiplicities,
    abacus_to_partition,
    apply_row_replacement,
    bead_multiplicities,
    is_p_prime_multiplicities,
    partition_from_row_multiplicities,
    partition_to_abacus,
    push_beads_rightmost,
    residue_sequence,
    row_multiplicities_to_bead_multiplicities,
    size_from_bead_multiplicities,
)
from .bounds import (
    bounds_report,
    explicit_family,
    explicit_family_size,
    mcspirit_ono_bound,
    sharpened_upper_bound,
    symmetrize_family,
)
from .oracle import brute_force_largest, cross_check_sizes, enumerate_p_core_p_prime
from .partitions import Partition, hook_lengths, is_p_core, is_p_prime_partition, size
from .walk import Walk, best_closed_segment, chartable_zero_threshold, largest_partition, steps_on_label

__version__ = "0.1.0"
