import numpy as np
import pytest
from numpy.linalg import matrix_power

from conftest import random_symplectic
from phasepoint.metaplectic import (
    DimensionMismatch,
    ParityMismatch,
    act,
    covariance_residual,
    default_tolerance,
    equal_up_to_phase,
    hilbert_dim,
    phase_defect,
    u_hminus,
    u_hplus,
    u_ht,
    u_of,
)
from phasepoint.modring import ModulusMismatch
from phasepoint.qops import EVEN, ODD, ParityError, PhasePoint, unit_roots
from phasepoint.symplectic import SympMat, enumerate_group, generator, h_t


def symmetric_order(n):
    return sorted(range(n), key=lambda v: v - n if v > n // 2 else v)


def test_u_hminus_small_odd_cases():
    w = unit_roots(3)
    order = symmetric_order(3)
    diag = np.diag(u_hminus(3, ODD).matrix)[order]
    assert np.abs(diag - np.array([w[2], 1, w[2]])).max() < 1e-12


def test_u_hplus_even_dimension_two():
    expected = np.array([[1, 1j], [1j, 1]]) / np.sqrt(2)
    assert np.abs(u_hplus(2, EVEN).matrix - expected).max() < 1e-12


def test_u_hminus_even_dimension_two():
    assert np.abs(u_hminus(2, EVEN).matrix - np.diag([1, 1j])).max() < 1e-12


def test_fourth_power_at_dimension_two_is_minus_identity():
    u = u_hplus(2, EVEN).matrix
    match = equal_up_to_phase(matrix_power(u, 4), np.eye(2))
    assert match.equivalent
    assert abs(match.phase - (-1)) < 1e-12
    # while the square is not proportional to the identity
    assert not equal_up_to_phase(matrix_power(u, 2), np.eye(2)).equivalent


@pytest.mark.parametrize("n,parity", [(3, ODD), (5, ODD), (2, EVEN), (4, EVEN)])
def test_generator_unitaries_are_unitary(n, parity):
    for build in (u_hplus, u_hminus, u_ht):
        assert build(n, parity).unitarity_defect() < 1e-12


@pytest.mark.parametrize("n,parity", [(3, ODD), (5, ODD), (7, ODD), (2, EVEN), (4, EVEN)])
def test_generator_covariance(n, parity):
    modulus = n if parity == ODD else 2 * n
    pairs = [
        (u_hplus(n, parity), generator("+", modulus)),
        (u_hminus(n, parity), generator("-", modulus)),
        (u_ht(n, parity), h_t(modulus)),
    ]
    for unitary, mat in pairs:
        assert covariance_residual(unitary.matrix, mat, parity) < 1e-10


def test_parity_mismatch_rejected():
    with pytest.raises(ParityError):
        u_hplus(4, ODD)
    with pytest.raises(ParityError):
        u_hminus(5, EVEN)
    with pytest.raises(ParityMismatch):
        hilbert_dim(4, ODD)
    with pytest.raises(ParityMismatch):
        hilbert_dim(6, EVEN)  # modulus 2N with N even must be divisible by 4
    assert hilbert_dim(7, ODD) == 7
    assert hilbert_dim(8, EVEN) == 4


def test_u_of_identity_and_generator():
    ident = u_of(SympMat.identity(7), ODD)
    assert equal_up_to_phase(ident.matrix, np.eye(7)).equivalent
    rep = u_of(generator("+", 7), ODD)
    assert np.abs(rep.matrix - u_hplus(7, ODD).matrix).max() < 1e-12


def test_u_of_random_covariance(rng):
    for _ in range(20):
        s = random_symplectic(5, rng)
        rep = u_of(s, ODD)
        assert covariance_residual(rep.matrix, s, ODD) < 1e-10


def test_u_of_path_independence(rng):
    # Euclid and BFS words differ, but their products agree up to phase.
    for _ in range(10):
        s = random_symplectic(5, rng)
        a = u_of(s, ODD, method="euclid")
        b = u_of(s, ODD, method="bfs")
        assert equal_up_to_phase(a.matrix, b.matrix, tol=1e-10).equivalent


@pytest.mark.parametrize(
    "n,parity,modulus",
    [
        (3, ODD, 3),
        (5, ODD, 5),
        (7, ODD, 7),
        (9, ODD, 9),
        (15, ODD, 15),
        (2, EVEN, 4),
        (4, EVEN, 8),
        (6, EVEN, 12),
    ],
)
def test_generator_power_order(n, parity, modulus):
    # h+ and h- have order M in the group, so their representatives return
    # to the identity up to a phase after M steps.
    for build in (u_hplus, u_hminus):
        u = build(n, parity).matrix
        assert equal_up_to_phase(matrix_power(u, modulus), np.eye(n)).equivalent


def test_projectivity_on_small_group(rng):
    reps = {s: u_of(s, ODD).matrix for s in enumerate_group(3)}
    elements = list(reps)
    for _ in range(50):
        s1, s2 = (elements[int(rng.integers(len(elements)))] for _ in range(2))
        assert phase_defect(reps[s1 @ s2], reps[s1] @ reps[s2]) < 1e-10


def test_equal_up_to_phase_examples():
    a = np.diag([1.0, 1j])
    match = equal_up_to_phase(np.exp(1j * np.pi / 5) * a, a)
    assert match.equivalent
    assert abs(match.phase - np.exp(1j * np.pi / 5)) < 1e-12
    assert not equal_up_to_phase(np.eye(2), np.diag([1.0, -1.0])).equivalent
    with pytest.raises(DimensionMismatch):
        equal_up_to_phase(np.eye(2), np.eye(3))


def test_act_on_phase_points():
    m, n = 2, 3
    assert act(generator("+", 5), PhasePoint(m, n, 5)) == PhasePoint(m + n, n, 5)
    assert act(generator("-", 5), PhasePoint(m, n, 5)) == PhasePoint(m, m + n, 5)
    assert act(SympMat.identity(5), PhasePoint(m, n, 5)) == PhasePoint(m, n, 5)
    with pytest.raises(ModulusMismatch):
        act(SympMat.identity(5), PhasePoint(0, 0, 7))


def test_default_tolerance_scaling():
    assert default_tolerance(7) == 1e-10
    assert default_tolerance(16) == 1e-10
    assert default_tolerance(64) == pytest.approx(2e-10)


def test_even_phase_root_branch_is_forced():
    # Only exp(+2 pi i / 2N) works: the conjugate square root of the basic
    # phase breaks covariance already at dimension two.
    good = u_hminus(2, EVEN).matrix
    wrong = np.conj(good)
    assert covariance_residual(good, generator("-", 4), EVEN) < 1e-12
    assert covariance_residual(wrong, generator("-", 4), EVEN) > 0.5
