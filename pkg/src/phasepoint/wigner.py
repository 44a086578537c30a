"""Discrete Wigner functions, marginals, characteristic functions, quantization.

An odd-lattice table is N x N over integer points; an even-lattice table is
2N x 2N over the doubled grid (state vectors have no amplitude on the ghost
points, but the quasi-distribution does). Tables are real and sum to one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .metaplectic import DimensionMismatch
from .qops import (
    EVEN,
    ODD,
    check_parity,
    delta_at,
    lattice_modulus,
    unit_roots,
    weyl_leonhardt,
)

NORM_TOL = 1e-8


class NotNormalized(ValueError):
    """State amplitudes deviate from unit norm beyond tolerance."""


@dataclass(frozen=True, eq=False)
class QuantumState:
    """A pure state as a unit-norm complex amplitude vector."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1).copy()
        if amps.size < 2:
            raise DimensionMismatch("state needs dimension >= 2")
        deviation = abs(np.linalg.norm(amps) - 1.0)
        if deviation > NORM_TOL:
            raise NotNormalized(f"norm deviates from 1 by {deviation:.3e}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def basis(cls, n: int, k: int) -> "QuantumState":
        amps = np.zeros(n, dtype=complex)
        amps[k % n] = 1.0
        return cls(amps)

    @classmethod
    def normalized(cls, vector) -> "QuantumState":
        vec = np.asarray(vector, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise NotNormalized("cannot normalize the zero vector")
        return cls(vec / norm)


@dataclass(frozen=True, eq=False)
class WignerTable:
    """Real quasi-distribution over the phase lattice.

    ``values[x, y]`` is indexed by the first (position-like) coordinate x and
    the second (momentum-like) coordinate y, both canonical mod ``modulus``.
    ``imag_residual`` records the largest imaginary part discarded when the
    table was computed.
    """

    parity: str
    values: np.ndarray
    imag_residual: float = 0.0

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2 or vals.shape[0] != vals.shape[1]:
            raise DimensionMismatch(f"table must be square, got {vals.shape}")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def modulus(self) -> int:
        return self.values.shape[0]

    @property
    def dim(self) -> int:
        """Hilbert-space dimension behind the table."""
        return self.modulus if self.parity == ODD else self.modulus // 2

    @property
    def total(self) -> float:
        return float(self.values.sum())


class Marginals(NamedTuple):
    position: np.ndarray
    momentum: np.ndarray


def wigner_of(state: QuantumState, parity: str, imag_tol: float = 1e-8) -> WignerTable:
    """Wigner table of a pure state.

    Odd: W[m, n] = <psi| Delta_(m,n) |psi> / N over the N x N integer grid.
    Even: W[j, k] = <psi| Delta_(j,k) |psi> / 2N over the 2N x 2N doubled
    grid. Entries are real up to rounding; the discarded imaginary parts are
    tracked and must stay below ``imag_tol``.
    """
    n = state.dim
    check_parity(n, parity)
    modulus = lattice_modulus(n, parity)
    amps = state.amplitudes
    conj = amps.conj()
    idx = np.arange(n)
    table = np.empty((modulus, modulus))
    worst_imag = 0.0
    if parity == ODD:
        roots = unit_roots(n)
        for m in range(n):
            base = conj * amps[(2 * m - idx) % n]
            for nn in range(n):
                value = (roots[(2 * nn * (idx - m)) % n] * base).sum() / n
                worst_imag = max(worst_imag, abs(value.imag))
                table[m, nn] = value.real
    else:
        roots = unit_roots(2 * n)
        for j in range(modulus):
            base = conj * amps[(j - idx) % n]
            for k in range(modulus):
                value = (roots[(2 * k * idx - k * j) % (2 * n)] * base).sum() / modulus
                worst_imag = max(worst_imag, abs(value.imag))
                table[j, k] = value.real
    if worst_imag > imag_tol:
        raise ValueError(f"Wigner entries not real: max imaginary part {worst_imag:.3e}")
    total = table.sum()
    if abs(total - 1.0) > 1e-8:
        raise ValueError(f"Wigner table sums to {total!r}, expected 1")
    return WignerTable(parity, table, worst_imag)


def marginals(table: WignerTable) -> Marginals:
    """Row sums (position distribution) and column sums (momentum distribution).

    For even parity both vectors live on the doubled grid: entries at even
    doubled coordinates reproduce the integer-point distributions and the
    ghost (odd) entries vanish for physical states.
    """
    return Marginals(
        position=table.values.sum(axis=1),
        momentum=table.values.sum(axis=0),
    )


def characteristic_fn(state: QuantumState, j: int, k: int) -> complex:
    """Even-lattice characteristic function at doubled coordinates (j, k).

    Equals the expectation value of the even-lattice Weyl operator; the
    Wigner table is its double inverse Fourier transform over the grid.
    """
    n = state.dim
    check_parity(n, EVEN)
    amps = state.amplitudes
    return complex(amps.conj() @ (weyl_leonhardt(n, j, k) @ amps))


def weyl_quantize(grid, parity: str) -> np.ndarray:
    """Operator for a classical lattice observable, in symmetric ordering.

    Computes sum over points of H(point) * Delta_point / D with D = N (odd)
    or 2N (even). Real grids quantize to Hermitian operators; a constant
    grid c quantizes to c times the identity.
    """
    values = np.asarray(grid, dtype=float)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise DimensionMismatch(f"grid must be square, got {values.shape}")
    modulus = values.shape[0]
    if parity == ODD:
        n = modulus
    else:
        if modulus % 4 != 0:
            raise DimensionMismatch(
                f"even-parity grid edge must be twice an even dimension, got {modulus}"
            )
        n = modulus // 2
    check_parity(n, parity)
    operator = np.zeros((n, n), dtype=complex)
    for x in range(modulus):
        for y in range(modulus):
            if values[x, y] != 0.0:
                operator += values[x, y] * delta_at(n, parity, (x, y))
    return operator / modulus
