"""Operators on the N-dimensional Hilbert space attached to a discrete phase lattice.

Basis states are indexed canonically by {0, ..., N-1}; the symmetric index
range around zero used in some displays is a view, not a storage convention.
Every phase exponent is computed as an exact integer modulo N (odd lattices)
or modulo 2N (even lattices) and only then mapped through a precomputed table
of roots of unity, so matrices carry no accumulated floating-point phase drift.

Odd lattices (N odd) use the N x N grid of integer points (m, n). Even
lattices (N even) interpose ghost points halfway between integer sites: the
grid is 2N x 2N, addressed here by doubled integer coordinates (j, k) = (2m, 2n)
so that half-integer points have odd j or odd k and all arithmetic stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

import numpy as np

from .modring import _check_modulus

ODD = "odd"
EVEN = "even"
PARITIES = (ODD, EVEN)


class ParityError(ValueError):
    """Hilbert-space dimension does not match the requested lattice parity."""


def check_parity(n: int, parity: str) -> None:
    if parity not in PARITIES:
        raise ParityError(f"parity must be 'odd' or 'even', got {parity!r}")
    if n < 2:
        raise ParityError(f"dimension must be >= 2, got {n}")
    if parity == ODD and n % 2 == 0:
        raise ParityError(f"dimension {n} is even, expected odd")
    if parity == EVEN and n % 2 == 1:
        raise ParityError(f"dimension {n} is odd, expected even")


def lattice_modulus(n: int, parity: str) -> int:
    """Index modulus of the phase lattice: N for odd parity, 2N for even."""
    check_parity(n, parity)
    return n if parity == ODD else 2 * n


@lru_cache(maxsize=None)
def unit_roots(m: int) -> np.ndarray:
    """Table of the m-th roots of unity, exp(2 pi i k / m) for k = 0..m-1."""
    _check_modulus(m)
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    roots.flags.writeable = False
    return roots


def phase_op(n: int) -> np.ndarray:
    """Q = diag(w^k), w = exp(2 pi i / N)."""
    return np.diag(unit_roots(n))


def shift_op(n: int) -> np.ndarray:
    """P maps |k> to |k-1> (indices mod N)."""
    p = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    p[(cols - 1) % n, cols] = 1.0
    return p


def inversion_op(n: int) -> np.ndarray:
    """T maps |k> to |-k> (indices mod N); an involutive permutation."""
    t = np.zeros((n, n), dtype=complex)
    cols = np.arange(n)
    t[(-cols) % n, cols] = 1.0
    return t


def half_exponent(n: int) -> int:
    """The residue playing the role of 1/2 mod odd N, i.e. (N+1)/2."""
    if n % 2 == 0:
        raise ParityError(f"1/2 has no residue representative mod even {n}")
    return (n + 1) // 2


def weyl_cohendet(n: int, m: int, nn: int) -> np.ndarray:
    """Odd-lattice Weyl operator w^(-2 m nn) Q^(2 nn) P^(-2 m).

    Column t carries w^(2 nn (t + m)) in row (t + 2m) mod N.
    """
    check_parity(n, ODD)
    roots = unit_roots(n)
    cols = np.arange(n)
    w = np.zeros((n, n), dtype=complex)
    w[(cols + 2 * m) % n, cols] = roots[(2 * nn * (cols + m)) % n]
    return w


def weyl_symmetric(n: int, m: int, nn: int) -> np.ndarray:
    """Odd-lattice Weyl operator in the symmetric normalization.

    w^(-m nn / 2) Q^nn P^(-m), with the half exponent realized as the
    residue (N+1)/2. Conjugating the inversion kernel by this operator
    translates phase points one step per unit of (m, nn).
    """
    check_parity(n, ODD)
    roots = unit_roots(n)
    half = half_exponent(n)
    cols = np.arange(n)
    w = np.zeros((n, n), dtype=complex)
    w[(cols + m) % n, cols] = roots[(nn * (cols + m) - m * nn * half) % n]
    return w


def delta_cohendet(n: int, m: int, nn: int) -> np.ndarray:
    """Odd-lattice phase point operator at (m, nn).

    One nonzero entry per row: row i, column (2m - i) mod N carries
    w^(2 nn (i - m)). Hermitian with unit trace.
    """
    check_parity(n, ODD)
    roots = unit_roots(n)
    rows = np.arange(n)
    delta = np.zeros((n, n), dtype=complex)
    delta[rows, (2 * m - rows) % n] = roots[(2 * nn * (rows - m)) % n]
    return delta


def weyl_leonhardt(n: int, j: int, k: int) -> np.ndarray:
    """Even-lattice Weyl operator at the doubled-coordinate point (j, k).

    Equals wt^(j k) Q^(-j) P^(-k) with wt = exp(2 pi i / 2N); column t
    carries wt^(j k - 2 j (t + k)) in row (t + k) mod N.
    """
    check_parity(n, EVEN)
    roots = unit_roots(2 * n)
    cols = np.arange(n)
    w = np.zeros((n, n), dtype=complex)
    w[(cols + k) % n, cols] = roots[(j * k - 2 * j * (cols + k)) % (2 * n)]
    return w


def delta_leonhardt(n: int, j: int, k: int) -> np.ndarray:
    """Even-lattice phase point operator at the doubled-coordinate point (j, k).

    Row i, column (j - i) mod N carries wt^(2 k i - k j). Points with odd j
    or odd k sit between the integer lattice sites (ghost points). Hermitian
    at every point of the doubled grid.
    """
    check_parity(n, EVEN)
    roots = unit_roots(2 * n)
    rows = np.arange(n)
    delta = np.zeros((n, n), dtype=complex)
    delta[rows, (j - rows) % n] = roots[(2 * k * rows - k * j) % (2 * n)]
    return delta


def delta_at(n: int, parity: str, point: tuple[int, int]) -> np.ndarray:
    """Phase point operator at ``point`` for either lattice parity."""
    if parity == ODD:
        return delta_cohendet(n, point[0], point[1])
    return delta_leonhardt(n, point[0], point[1])


def phase_points(n: int, parity: str) -> list[tuple[int, int]]:
    """All lattice points in canonical row-major order.

    Odd: (m, nn) over Z_N x Z_N. Even: doubled coordinates (j, k) over
    Z_2N x Z_2N, covering integer and ghost points alike.
    """
    modulus = lattice_modulus(n, parity)
    return [(x, y) for x in range(modulus) for y in range(modulus)]


@lru_cache(maxsize=None)
def delta_family(n: int, parity: str):
    """Read-only map from every phase point to its phase point operator."""
    family = {}
    for point in phase_points(n, parity):
        delta = delta_at(n, parity, point)
        delta.flags.writeable = False
        family[point] = delta
    return MappingProxyType(family)


@dataclass(frozen=True)
class PhasePoint:
    """A lattice point with its index modulus (N odd, 2N even doubled)."""

    m: int
    n: int
    modulus: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        object.__setattr__(self, "m", int(self.m) % self.modulus)
        object.__setattr__(self, "n", int(self.n) % self.modulus)

    @property
    def coords(self) -> tuple[int, int]:
        return (self.m, self.n)
