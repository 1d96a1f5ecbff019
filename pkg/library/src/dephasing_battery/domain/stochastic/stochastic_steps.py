"""Euler-Maruyama steps of the two unravellings of the dephasing master equation.

States are rows: a single vector of shape (dim,) or a batch of shape (n, dim) with one Wiener
increment per row.
"""
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.operator_algebra import StateVector

type StateBatch = NDArray[np.complex128]


def sse_step_measurement(psi: StateVector, model: ModelSpec, dt: float, dw: ArrayLike) -> StateVector:
    states, increments = _as_batch(psi, dw)
    return _restore_shape(psi, normalize(measurement_update(states, model, dt, increments)))


def sse_step_noise(psi: StateVector, model: ModelSpec, dt: float, dw: ArrayLike) -> StateVector:
    states, increments = _as_batch(psi, dw)
    return _restore_shape(psi, normalize(noise_update(states, model, dt, increments)))


def measurement_update(states: StateBatch, model: ModelSpec, dt: float, increments: NDArray) -> StateBatch:
    """Unnormalised step of the continuous-measurement equation."""
    gamma = model.params.gamma_c
    jump_t = model.jump.T

    jumped = states @ jump_t
    mean = np.real(np.sum(states.conj() * jumped, axis=1, keepdims=True))
    centred = jumped - mean * states
    centred_twice = centred @ jump_t - mean * centred

    drift = -1j * (states @ model.hamiltonian.T) - gamma / 2 * centred_twice
    return states + drift * dt + np.sqrt(gamma) * centred * increments[:, None]


def noise_update(states: StateBatch, model: ModelSpec, dt: float, increments: NDArray) -> StateBatch:
    """Unnormalised step of the linear equation driven by classical white noise on the charger frequency."""
    gamma = model.params.gamma_c
    jumped = states @ model.jump.T

    drift = -1j * (states @ model.hamiltonian.T) - gamma / 2 * (jumped @ model.jump.T)
    return states + drift * dt - 1j * np.sqrt(gamma) * jumped * increments[:, None]


def normalize(states: StateBatch) -> StateBatch:
    return states / np.linalg.norm(states, axis=1, keepdims=True)


def _as_batch(psi: StateVector, dw: ArrayLike) -> Tuple[StateBatch, NDArray]:
    states = np.atleast_2d(np.asarray(psi, dtype=np.complex128))
    increments = np.atleast_1d(np.asarray(dw, dtype=np.float64))

    return states, np.broadcast_to(increments, (states.shape[0],))


def _restore_shape(psi: StateVector, states: StateBatch) -> StateVector:
    return states[0] if np.ndim(psi) == 1 else states
