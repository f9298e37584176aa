import itertools

import numpy as np
import pytest

from contact_bethe.bethe import one_sided_data
from contact_bethe.errors import DomainError
from contact_bethe.spectra import (
    EpsilonPattern,
    all_patterns,
    bound_energy,
    bound_momenta,
    bound_wavefunction,
    degeneracy_table,
    spin_eigenspace,
    verify_bound_state,
)
from contact_bethe.spinspace import SpinSystem, statistics_operator


@pytest.mark.parametrize("h", [-1.0, -0.35, 2.0])
def test_ladders(h):
    assert np.allclose(bound_momenta(2, h).k, [1j * h, -1j * h])
    assert np.allclose(bound_momenta(3, h).k, [2j * h, 0, -2j * h])
    k4 = bound_momenta(4, h).k
    assert np.allclose(k4, [3j * h, 1j * h, -1j * h, -3j * h])
    assert np.sum(k4**2) == pytest.approx(-20 * h * h)


def test_ladder_errors():
    with pytest.raises(DomainError):
        bound_momenta(1, -1.0)
    with pytest.raises(DomainError):
        bound_energy(0, -1.0)


def test_energy_values():
    assert bound_energy(2, -1) == -2
    assert bound_energy(3, -1) == -8
    assert bound_energy(1, -3.3) == 0


@pytest.mark.parametrize("N", range(2, 7))
@pytest.mark.parametrize("h", [-0.5, -1.0, -2.7])
def test_energy_is_ladder_sum(N, h):
    k = bound_momenta(N, h).k
    assert abs(np.sum(k**2).real - bound_energy(N, h)) <= 1e-12 * abs(bound_energy(N, h))


def test_pattern_parsing():
    p = EpsilonPattern.from_string(3, "+,-,+")
    assert p[(2, 1)] == 1 and p[(1, 3)] == -1 and p[(3, 2)] == 1
    assert p.to_string() == "+,-,+"
    assert EpsilonPattern.uniform(3, -1).to_string() == "-,-,-"
    with pytest.raises(DomainError):
        EpsilonPattern.from_string(3, "+,-")
    with pytest.raises(DomainError):
        EpsilonPattern.from_string(2, "x")
    with pytest.raises(DomainError):
        EpsilonPattern(2, {(2, 1): 0})


@pytest.mark.parametrize("N", [2, 3, 4])
def test_pattern_count(N):
    assert len(list(all_patterns(N))) == 2 ** (N * (N - 1) // 2)


def test_eigenspace_examples():
    assert len(spin_eigenspace(SpinSystem(2, 1), EpsilonPattern.uniform(2, 1))) == 1
    assert spin_eigenspace(SpinSystem(2, 1), EpsilonPattern.uniform(2, -1)) == []
    assert len(spin_eigenspace(SpinSystem(2, 2), EpsilonPattern.uniform(2, -1))) == 1
    assert len(spin_eigenspace(SpinSystem(2, 2), EpsilonPattern.uniform(2, 1))) == 3
    # fermions flip the roles of the two parities
    assert len(spin_eigenspace(SpinSystem(2, 2, "fermion"), EpsilonPattern.uniform(2, 1))) == 1


def test_eigenspace_vectors_are_orthonormal_eigenvectors():
    sy = SpinSystem(3, 2)
    vecs = spin_eigenspace(sy, EpsilonPattern.uniform(3, 1))
    V = np.array(vecs).T
    assert np.allclose(V.conj().T @ V, np.eye(len(vecs)))
    for i, j in itertools.combinations(range(1, 4), 2):
        assert np.allclose(statistics_operator(sy, i, j) @ V, V)


def test_three_particle_degeneracy_is_reported():
    table = degeneracy_table(SpinSystem(3, 2))
    assert len(table) == 8
    assert table == {p: (4 if p == "+,+,+" else 0) for p in table}
    assert degeneracy_table(SpinSystem(3, 3))["+,+,+"] == 10


def test_two_body_parities():
    h = -0.8
    for sign, stats, n in ((1, "boson", 1), (-1, "fermion", 1)):
        sy = SpinSystem(2, n, stats)
        pat = EpsilonPattern.uniform(2, sign)
        psi = bound_wavefunction(sy, h, pat, spin_eigenspace(sy, pat)[0])
        v0 = psi.spin[0]
        for x in (-1.3, -0.2, 0.4, 2.0):
            expected = (1 if x > 0 else sign) * np.exp(h * abs(x)) * v0
            assert psi([0.0, x])[0] == pytest.approx(expected)


def test_two_body_relative_eigenvalue():
    h = -1.25
    psi = bound_wavefunction(SpinSystem(2, 1), h, EpsilonPattern.uniform(2, 1), [1.0])
    # relative Hamiltonian -d^2/dx^2 in x = x2 - x1 equals half the two-particle Laplacian
    for order in ([0, 1], [1, 0]):
        assert psi.laplacian_eigenvalue(order) / 2 == pytest.approx(-(h**2))
    assert psi.energy == pytest.approx(-2 * h * h)


def test_finite_difference_oracle():
    sy = SpinSystem(3, 2)
    pat = EpsilonPattern.uniform(3, 1)
    psi = bound_wavefunction(sy, -0.7, pat, spin_eigenspace(sy, pat)[1])
    x = np.array([-0.4, 0.5, 0.1])
    t = 1e-3
    lap = sum((psi(x + t * e) - 2 * psi(x) + psi(x - t * e)) / t**2 for e in np.eye(3))
    assert np.allclose(-lap, psi.energy * psi(x), atol=1e-5)
    # Robin condition psi' = h psi from the x_1 < x_3 side of the (1, 3) plane
    base = [0.2, 1.0, 0.2]
    d = one_sided_data(psi, (1, 3), base)
    step = np.array([-0.5, 0.0, 0.5]) * 1e-6
    fd = (psi(base + step) - d.plus) / 1e-6
    assert np.allclose(fd, d.dplus, atol=1e-5)
    assert np.allclose(d.dplus, -0.7 * d.plus, atol=1e-12)


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("h", [-0.5, -1.0])
def test_every_nonempty_pattern_verifies(N, h):
    sy = SpinSystem(N, 2)
    checked = 0
    for pat in all_patterns(N):
        for v in spin_eigenspace(sy, pat):
            report = verify_bound_state(bound_wavefunction(sy, h, pat, v), trials=50)
            assert report.passed, report.as_dict()
            assert report.boundary_residual <= 1e-10
            checked += 1
    assert checked == (4 if N == 2 else 4)


def test_preconditions():
    sy = SpinSystem(2, 2)
    pat = EpsilonPattern.uniform(2, -1)
    singlet = spin_eigenspace(sy, pat)[0]
    with pytest.raises(DomainError):
        bound_wavefunction(sy, 0.5, pat, singlet)
    with pytest.raises(DomainError):
        bound_wavefunction(sy, -0.5, pat, np.eye(4)[0])
    with pytest.raises(DomainError):
        bound_wavefunction(sy, -0.5, pat, np.zeros(4))
    with pytest.raises(DomainError):
        bound_wavefunction(sy, -0.5, pat, np.ones(3))
