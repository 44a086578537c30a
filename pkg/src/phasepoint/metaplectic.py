"""Projective unitary representation of Sp_M covariant with the phase point operators.

The defining relation is U(S) Delta_p U(S)^dag = Delta_(S.p) at every lattice
point p. The generators have closed forms: on odd lattices

    U(h+)[i, k] = w^((i-k)(i-k+N)/2) / sqrt(N),   U(h-) = diag w^(i(i+N)/2),

with all exponents exact integers mod N, and on even lattices

    U(h+)[i, k] = wt^((i-k)^2) / sqrt(N),         U(h-) = diag wt^(i^2),

with wt = exp(2 pi i / 2N) and exponents mod 2N. For even lattices the
unitaries act on the N-dimensional space while the symplectic indices live
mod 2N; the doubled modulus is pure phase-point bookkeeping. Arbitrary
elements are represented through their generator words, which fixes U(S)
only up to a global phase; no phase gauge is imposed, and comparisons go
through equal_up_to_phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .qops import (
    EVEN,
    ODD,
    PhasePoint,
    check_parity,
    delta_family,
    lattice_modulus,
    unit_roots,
)
from .modring import ModulusMismatch
from .symplectic import SympMat, decompose


class ParityMismatch(ValueError):
    """Dimension, modulus and lattice parity are inconsistent."""


class DimensionMismatch(ValueError):
    """Matrix or state dimensions disagree."""


@dataclass(frozen=True, eq=False)
class ProjUnitary:
    """A unitary defined up to global phase, tagged with its lattice bookkeeping."""

    matrix: np.ndarray
    parity: str
    modulus: int

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def unitarity_defect(self) -> float:
        product = self.matrix.conj().T @ self.matrix
        return float(np.abs(product - np.eye(self.dim)).max())


def hilbert_dim(modulus: int, parity: str) -> int:
    """Hilbert-space dimension for a symplectic modulus: N odd, or N = modulus/2 even."""
    if parity == ODD:
        if modulus % 2 == 0:
            raise ParityMismatch(f"odd parity needs an odd modulus, got {modulus}")
        return modulus
    if parity == EVEN:
        # N even and modulus = 2N forces modulus divisible by 4.
        if modulus % 4 != 0:
            raise ParityMismatch(
                f"even parity needs a doubled modulus 2N with N even, got {modulus}"
            )
        return modulus // 2
    raise ParityMismatch(f"parity must be 'odd' or 'even', got {parity!r}")


def u_hplus(n: int, parity: str) -> ProjUnitary:
    """Closed-form representative of the upper triangular generator."""
    check_parity(n, parity)
    i = np.arange(n).reshape(-1, 1)
    k = np.arange(n).reshape(1, -1)
    diff = i - k
    if parity == ODD:
        # diff and diff+N have opposite parity, so the product is even.
        exponents = (diff * (diff + n)) // 2 % n
        matrix = unit_roots(n)[exponents] / np.sqrt(n)
    else:
        exponents = (diff * diff) % (2 * n)
        matrix = unit_roots(2 * n)[exponents] / np.sqrt(n)
    return ProjUnitary(matrix, parity, lattice_modulus(n, parity))


def u_hminus(n: int, parity: str) -> ProjUnitary:
    """Closed-form representative of the lower triangular generator (diagonal)."""
    check_parity(n, parity)
    i = np.arange(n)
    if parity == ODD:
        exponents = (i * (i + n)) // 2 % n
        matrix = np.diag(unit_roots(n)[exponents])
    else:
        exponents = (i * i) % (2 * n)
        matrix = np.diag(unit_roots(2 * n)[exponents])
    return ProjUnitary(matrix, parity, lattice_modulus(n, parity))


def u_ht(n: int, parity: str) -> ProjUnitary:
    """Representative of the row swap, built as U(h+) U(h-)^(-1) U(h+)."""
    up = u_hplus(n, parity).matrix
    um = u_hminus(n, parity).matrix
    return ProjUnitary(up @ um.conj().T @ up, parity, lattice_modulus(n, parity))


def u_of(s: SympMat, parity: str, method: str = "auto") -> ProjUnitary:
    """Representative of an arbitrary symplectic element via its generator word.

    The word comes from decompose(); any two words for the same element give
    matrices that agree up to a single global phase.
    """
    n = hilbert_dim(s.modulus, parity)
    word = decompose(s, method=method)
    up = u_hplus(n, parity).matrix
    um = u_hminus(n, parity).matrix
    matrix = np.eye(n, dtype=complex)
    for sign, exponent in word.factors:
        base = up if sign == "+" else um
        matrix = matrix @ np.linalg.matrix_power(base, exponent)
    return ProjUnitary(matrix, parity, s.modulus)


class PhaseMatch(NamedTuple):
    equivalent: bool
    phase: complex | None


def _as_matrix(a) -> np.ndarray:
    if isinstance(a, ProjUnitary):
        return a.matrix
    return np.asarray(a, dtype=complex)


def equal_up_to_phase(a, b, tol: float = 1e-10) -> PhaseMatch:
    """Test whether a = phase * b for a unit-modulus scalar phase.

    Both arguments must be unitary for the test to be meaningful: it checks
    that a b^dag is within ``tol`` of phase * identity and returns the phase.
    """
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {a.shape} and {b.shape}")
    product = a @ b.conj().T
    phase = complex(np.trace(product) / a.shape[0])
    if abs(abs(phase) - 1.0) > tol:
        return PhaseMatch(False, None)
    defect = np.abs(product - phase * np.eye(a.shape[0])).max()
    if defect > tol:
        return PhaseMatch(False, None)
    return PhaseMatch(True, phase)


def phase_defect(a, b) -> float:
    """Distance from 'equal up to a unit phase': max of the residual matrix
    norm against the best phase and the phase's deviation from unit modulus."""
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"incompatible shapes {a.shape} and {b.shape}")
    product = a @ b.conj().T
    phase = complex(np.trace(product) / a.shape[0])
    residual = float(np.abs(product - phase * np.eye(a.shape[0])).max())
    return max(residual, abs(abs(phase) - 1.0))


def act(s: SympMat, point: PhasePoint) -> PhasePoint:
    """Linear action of a symplectic element on a phase point, mod the shared modulus."""
    if s.modulus != point.modulus:
        raise ModulusMismatch(
            f"moduli differ: matrix {s.modulus}, point {point.modulus}"
        )
    return PhasePoint(
        s.a * point.m + s.b * point.n,
        s.c * point.m + s.d * point.n,
        s.modulus,
    )


def apply_point(s: SympMat, point: tuple[int, int]) -> tuple[int, int]:
    m, n = point
    return ((s.a * m + s.b * n) % s.modulus, (s.c * m + s.d * n) % s.modulus)


def covariance_residual(u, s: SympMat, parity: str) -> float:
    """Worst-case covariance defect of ``u`` against ``s`` over all phase points.

    Returns max over points p of the entrywise norm of
    U Delta_p U^dag - Delta_(s.p).
    """
    matrix = _as_matrix(u)
    n = hilbert_dim(s.modulus, parity)
    if matrix.shape != (n, n):
        raise DimensionMismatch(
            f"unitary is {matrix.shape}, expected {(n, n)} for modulus {s.modulus}"
        )
    family = delta_family(n, parity)
    adjoint = matrix.conj().T
    worst = 0.0
    for point, delta in family.items():
        moved = family[apply_point(s, point)]
        defect = np.abs(matrix @ delta @ adjoint - moved).max()
        if defect > worst:
            worst = float(defect)
    return worst


def default_tolerance(n: int) -> float:
    """Covariance residual tolerance: 1e-10 up to N = 16, scaled by sqrt(N/16) above."""
    if n <= 16:
        return 1e-10
    return 1e-10 * float(np.sqrt(n / 16))
