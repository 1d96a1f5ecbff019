import numpy as np
from numpy.random import Generator

from dephasing_battery.domain.operators.operator_algebra import as_operator

DEFAULT_SEED = 1234


def a_random_generator(seed: int = DEFAULT_SEED) -> Generator:
    return np.random.default_rng(seed)


def a_random_density_matrix(dimension: int, rng: Generator, rank: int | None = None) -> np.ndarray:
    columns = rank or dimension
    amplitudes = rng.normal(size=(dimension, columns)) + 1j * rng.normal(size=(dimension, columns))
    rho = amplitudes @ amplitudes.conj().T

    return as_operator(rho / np.trace(rho))


def a_random_pure_state(dimension: int, rng: Generator) -> np.ndarray:
    vector = rng.normal(size=dimension) + 1j * rng.normal(size=dimension)
    return vector / np.linalg.norm(vector)


def a_random_hamiltonian(dimension: int, rng: Generator) -> np.ndarray:
    entries = rng.normal(size=(dimension, dimension)) + 1j * rng.normal(size=(dimension, dimension))
    return as_operator((entries + entries.conj().T) / 2)
