"""Closed-form bounds and the explicit family of large p-core p'-partitions."""
from dataclasses import dataclass
from fractions import Fraction

from .abacus import (
    BeadMultiplicities,
    RowMultiplicities,
    is_p_prime_multiplicities,
    row_multiplicities_to_bead_multiplicities,
    size_from_bead_multiplicities,
)
from .errors import InvariantViolation, NotPPrime, PreconditionFailed
from .partitions import check_modulus
from .walk import check_odd_prime, is_prime, largest_partition

# Size of the explicit family as printed: 1/96 (p^6 + 6p^4 - 12p^3 + 89p^2 - 120p - 48).
PRINTED_FAMILY_COEFFS = (1, 0, 6, -12, 89, -120, -48)
# Same with -24 on p^3; this one agrees with the construction at every prime.
CORRECTED_FAMILY_COEFFS = (1, 0, 6, -24, 89, -120, -48)


def _poly(coeffs, p):
    value = 0
    for c in coeffs:
        value = value * p + c
    return value


def mcspirit_ono_bound(p):
    """(p^6 - 2p^5 + 2p^4 - 3p^2 + 2p) / 24, valid for every integer p >= 2."""
    check_modulus(p)
    num = _poly((1, -2, 2, 0, -3, 2, 0), p)
    if num % 24:
        raise InvariantViolation(f"McSpirit-Ono numerator {num} not divisible by 24")
    return num // 24


def sharpened_upper_bound(p):
    """(p^6 - 4p^5 + 5p^4 + 12p^3 - 42p^2 + 52p - 24) / 24."""
    check_modulus(p)
    num = _poly((1, -4, 5, 12, -42, 52, -24), p)
    if num % 24:
        raise InvariantViolation(f"sharpened bound numerator {num} not divisible by 24")
    return num // 24


def upper_bound_bead_multiplicities(p):
    """Bead multiplicities b_i = (p-2)i + 1 from row multiplicities (p-1, p-2, ..., p-2)."""
    check_modulus(p)
    return BeadMultiplicities(p, tuple((p - 2) * i + 1 for i in range(1, p)))


def explicit_family(p):
    """Row multiplicities (p-1, 2, p-2, 2, p-2, ..., 2, p-2, 1)."""
    check_odd_prime(p)
    middle = tuple(2 if k % 2 == 0 else p - 2 for k in range(p - 3))
    m = RowMultiplicities(p, (p - 1,) + middle + (1,))
    if not is_p_prime_multiplicities(m):
        raise InvariantViolation(f"explicit family for p={p} is not a p'-partition")
    return m


def explicit_family_size(p):
    """Size of the explicit family, computed from its bead multiplicities."""
    return size_from_bead_multiplicities(row_multiplicities_to_bead_multiplicities(explicit_family(p)))


def explicit_family_bead_multiplicities(p):
    """Closed-form bead multiplicities of the explicit family.

    (i+1)p/2 - 1 for odd i, ip/2 + 1 for even i < p-1, and p(p-1)/2 at i = p-1.
    """
    check_odd_prime(p)
    b = []
    for i in range(1, p):
        if i == p - 1:
            b.append(p * (p - 1) // 2)
        elif i % 2:
            b.append((i + 1) * p // 2 - 1)
        else:
            b.append(i * p // 2 + 1)
    return BeadMultiplicities(p, tuple(b))


@dataclass(frozen=True)
class FamilyPolynomialReport:
    p: int
    direct: int
    printed: Fraction
    corrected: Fraction

    @property
    def printed_agrees(self):
        return self.printed == self.direct

    @property
    def corrected_agrees(self):
        return self.corrected == self.direct


def family_polynomial_report(p):
    """Compare the constructed family size with both candidate polynomials."""
    return FamilyPolynomialReport(
        p,
        explicit_family_size(p),
        Fraction(_poly(PRINTED_FAMILY_COEFFS, p), 96),
        Fraction(_poly(CORRECTED_FAMILY_COEFFS, p), 96),
    )


def agreeing_family_polynomial(primes):
    """Name of the single polynomial matching the construction at every prime given.

    Returns "printed" or "corrected"; raises if neither or both match everywhere.
    """
    reports = [family_polynomial_report(p) for p in primes]
    printed = all(r.printed_agrees for r in reports)
    corrected = all(r.corrected_agrees for r in reports)
    if printed == corrected:
        raise InvariantViolation(f"expected exactly one matching polynomial (printed={printed}, corrected={corrected})")
    return "printed" if printed else "corrected"


SYMMETRIZE_DIRECTIONS = ("first_onto_second", "second_onto_first")


def symmetrize_family(m, direction, check=True):
    """Make ``m`` symmetric about its midpoint.

    ``second_onto_first`` overwrites the second half with the reversed first
    half and sets ``m_{p-1} = m_1 - 1``. ``first_onto_second`` overwrites the
    first half with the reversed second half and sets ``m_1 = m_{p-1} + 1``.
    Either way the result has m_i = m_{p-i} for 2 <= i <= p-2 and
    m_1 = m_{p-1} + 1. With ``check`` the result must still be a p'-partition.
    """
    p = m.p
    values = list(m.values)
    half = (p - 1) // 2
    if direction == "second_onto_first":
        for i in range(2, half + 1):
            values[p - i - 1] = values[i - 1]
        values[p - 2] = values[0] - 1
    elif direction == "first_onto_second":
        for i in range(2, half + 1):
            values[i - 1] = values[p - i - 1]
        values[0] = values[p - 2] + 1
    else:
        raise ValueError(f"direction must be one of {SYMMETRIZE_DIRECTIONS}, got {direction!r}")
    if values[p - 2] < 0:
        raise PreconditionFailed(f"cannot lower m_1 = {m.values[0]} below zero")
    result = RowMultiplicities(p, tuple(values))
    if check and not is_p_prime_multiplicities(result):
        raise NotPPrime(f"symmetrized {m.values} -> {result.values} hits residue 0")
    return result


@dataclass(frozen=True)
class BoundsReport:
    p: int
    explicit_size: int | None
    largest_size: int | None
    sharpened_upper: int
    mcspirit_ono_upper: int

    def __post_init__(self):
        chain = [v for v in (self.explicit_size, self.largest_size, self.sharpened_upper, self.mcspirit_ono_upper)
                 if v is not None]
        if chain != sorted(chain):
            raise InvariantViolation(f"bounds out of order for p={self.p}: {chain}")


def bounds_report(p):
    """One row of the size table; family and largest columns only for odd primes."""
    check_modulus(p)
    explicit = largest = None
    if p > 2 and is_prime(p):
        explicit = explicit_family_size(p)
        largest = largest_partition(p).size
    return BoundsReport(p, explicit, largest, sharpened_upper_bound(p), mcspirit_ono_bound(p))
