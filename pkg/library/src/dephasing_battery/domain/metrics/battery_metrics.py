"""Thermodynamic figures of merit of a battery state: stored energy, ergotropy and von Neumann entropy."""
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import entr

from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, as_operator, expect, herm_eig

ENTROPY_EIGENVALUE_FLOOR = 1e-14


def energy(rho_b: ComplexMatrix, h_b: ComplexMatrix) -> float:
    return float(np.real(expect(h_b, rho_b)))


def passive_state(rho_b: ComplexMatrix, h_b: ComplexMatrix) -> ComplexMatrix:
    populations = herm_eig(rho_b).eigenvalues[::-1]
    energy_basis = herm_eig(h_b).eigenvectors

    return as_operator((energy_basis * populations) @ energy_basis.conj().T)


def extraction_unitary(rho_b: ComplexMatrix, h_b: ComplexMatrix) -> ComplexMatrix:
    state_basis = herm_eig(rho_b).eigenvectors[:, ::-1]
    energy_basis = herm_eig(h_b).eigenvectors

    return as_operator(energy_basis @ state_basis.conj().T)


def ergotropy(rho_b: ComplexMatrix, h_b: ComplexMatrix) -> float:
    extractable = energy(rho_b, h_b) - energy(passive_state(rho_b, h_b), h_b)
    return max(extractable, 0.0)


def entropy(rho_b: ComplexMatrix) -> float:
    populations = herm_eig(rho_b).eigenvalues
    populations = populations[populations > ENTROPY_EIGENVALUE_FLOOR]

    return float(np.sum(entr(populations)))


def tls_ergotropy_from_moments(sigma_z: ArrayLike, sigma_minus: ArrayLike, omega_b: float) -> NDArray:
    z = np.asarray(sigma_z, dtype=np.float64)
    bloch_length = np.sqrt(z ** 2 + 4 * np.abs(np.asarray(sigma_minus)) ** 2)

    return omega_b / 2 * (z + bloch_length)


def entropy_from_energy_and_ergotropy(battery_energy: ArrayLike, battery_ergotropy: ArrayLike,
                                      omega_b: float) -> NDArray:
    passive_population = np.clip(
        (np.asarray(battery_energy, dtype=np.float64) - np.asarray(battery_ergotropy, dtype=np.float64)) / omega_b,
        0.0, 1.0
    )

    return entr(passive_population) + entr(1 - passive_population)
