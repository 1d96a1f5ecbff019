"""Finite-interval Gaussian measurement of the dephasing operator.

Averaging the measurement over its outcomes damps every coherence between jump eigenvalues
lambda_m and lambda_n by exp(-gamma dt (lambda_m - lambda_n)^2 / 2), which generates the dephasing
dissipator as dt goes to zero.
"""
import numpy as np

from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, as_operator, herm_eig


def povm_average_channel(rho: ComplexMatrix, jump: ComplexMatrix, gamma: float, dt: float) -> ComplexMatrix:
    _require_non_negative_strength(gamma, dt)

    decomposition = herm_eig(jump)
    basis = decomposition.eigenvectors
    separations = np.subtract.outer(decomposition.eigenvalues, decomposition.eigenvalues)

    in_jump_basis = basis.conj().T @ rho @ basis
    damped = in_jump_basis * np.exp(-gamma * dt * separations ** 2 / 2)

    return as_operator(basis @ damped @ basis.conj().T)


def povm_operator(jump: ComplexMatrix, gamma: float, dt: float, alpha: float) -> ComplexMatrix:
    _require_positive_strength(gamma, dt)

    decomposition = herm_eig(jump)
    basis = decomposition.eigenvectors
    weights = (2 * gamma * dt / np.pi) ** 0.25 * np.exp(-gamma * dt * (decomposition.eigenvalues - alpha) ** 2)

    return as_operator((basis * weights) @ basis.conj().T)


def sample_povm_outcome(rho: ComplexMatrix, jump: ComplexMatrix, gamma: float, dt: float,
                        rng: np.random.Generator) -> float:
    _require_positive_strength(gamma, dt)

    decomposition = herm_eig(jump)
    basis = decomposition.eigenvectors
    probabilities = np.clip(np.real(np.einsum('im,ij,jm->m', basis.conj(), rho, basis)), 0.0, None)

    branch = rng.choice(len(probabilities), p=probabilities / probabilities.sum())
    return float(rng.normal(decomposition.eigenvalues[branch], 1 / np.sqrt(4 * gamma * dt)))


def apply_povm_outcome(rho: ComplexMatrix, jump: ComplexMatrix, gamma: float, dt: float,
                       alpha: float) -> ComplexMatrix:
    element = povm_operator(jump, gamma, dt, alpha)
    updated = element @ rho @ element

    return as_operator(updated / np.trace(updated))


def _require_non_negative_strength(gamma: float, dt: float) -> None:
    if gamma * dt < 0:
        raise InvalidParametersException('gamma', f'strength gamma*dt must be non-negative, got {gamma * dt}')


def _require_positive_strength(gamma: float, dt: float) -> None:
    if gamma <= 0 or dt <= 0:
        raise InvalidParametersException('gamma', f'sampled measurements need gamma > 0 and dt > 0, got {gamma}, {dt}')
