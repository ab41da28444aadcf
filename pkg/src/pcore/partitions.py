"""Integer partitions: size, hook lengths, and the p-core / p'-partition tests.

These functions work straight from the parts and the Young diagram, without
going through the abacus, so that the abacus code can be checked against them.
"""
from dataclasses import dataclass

from ._backend import kernels
from .errors import InvalidModulus


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for k, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool):
                raise TypeError(f"part {part!r} is not an int")
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if k and part > parts[k - 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts[k - 1]} < {part}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __str__(self):
        if not self.parts:
            return "()"
        runs = []
        for part in self.parts:
            if runs and runs[-1][0] == part:
                runs[-1][1] += 1
            else:
                runs.append([part, 1])
        return "(" + ",".join(str(v) if c == 1 else f"{v}^{c}" for v, c in runs) + ")"

    @property
    def length(self):
        return len(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for part in self.parts if part >= c) for c in range(1, self.parts[0] + 1)))

    def beta_numbers(self):
        """First-column hook lengths, ``λ_k + ℓ - k``, largest first."""
        n = len(self.parts)
        return tuple(part + n - k for k, part in enumerate(self.parts, 1))


def as_partition(parts):
    return parts if isinstance(parts, Partition) else Partition(tuple(parts))


def check_modulus(p):
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"p must be an int, got {type(p).__name__}")
    if p < 2:
        raise InvalidModulus(f"p must be at least 2, got {p}")
    return p


def size(partition):
    return sum(as_partition(partition).parts)


def hook_lengths(partition):
    """Hook length of every cell, as a list of rows.

    Cell (r, c), 1-based, gets arm + leg + 1 = λ_r - c + λ'_c - r + 1.
    Builds the whole grid, so only use it on partitions of modest size;
    ``is_p_core`` scans hooks without materializing them.
    """
    lam = as_partition(partition)
    conj = lam.conjugate().parts
    return [[part - c + conj[c - 1] - r + 1 for c in range(1, part + 1)] for r, part in enumerate(lam.parts, 1)]


def first_hook_divisible_by(partition, p):
    """1-based (row, col) of the first cell whose hook length is a multiple of p, or None."""
    check_modulus(p)
    return kernels.first_hook_multiple(as_partition(partition).beta_numbers(), p)


def is_p_core(partition, p):
    """True iff no hook length of ``partition`` is divisible by ``p``."""
    return first_hook_divisible_by(partition, p) is None


def is_p_prime_partition(partition, p):
    """True iff no part of ``partition`` is divisible by ``p``."""
    check_modulus(p)
    return all(part % p for part in as_partition(partition).parts)
