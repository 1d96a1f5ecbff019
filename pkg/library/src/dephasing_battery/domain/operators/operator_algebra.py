"""Dense operator algebra on small composite Hilbert spaces.

Basis conventions: the charger factor comes first, battery factors after it. Within a two-level
factor index 0 is the excited state, so ``sigma_plus()[0, 1] == 1``. Within an oscillator factor
the index is the photon number.
"""
from functools import reduce
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import gammaln

from dephasing_battery.domain.operators.dimension_mismatch_exception import DimensionMismatchException
from dephasing_battery.domain.operators.not_hermitian_exception import NotHermitianException
from dephasing_battery.domain.operators.spectral_decomposition import SpectralDecomposition
from dephasing_battery.domain.operators.unphysical_state_exception import UnphysicalStateException

type ComplexMatrix = NDArray[np.complex128]
type StateVector = NDArray[np.complex128]

CONSTRUCTION_HERMITICITY_TOLERANCE = 1e-12
RUNTIME_HERMITICITY_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-8


def as_operator(entries: ArrayLike) -> ComplexMatrix:
    matrix = np.array(entries, dtype=np.complex128)

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
        raise DimensionMismatchException(f'Operators must be non-empty square matrices, got shape {matrix.shape}')

    matrix.flags.writeable = False
    return matrix


def identity(dim: int) -> ComplexMatrix:
    return as_operator(np.eye(dim))


def sigma_plus() -> ComplexMatrix:
    return as_operator([[0, 1], [0, 0]])


def sigma_minus() -> ComplexMatrix:
    return as_operator([[0, 0], [1, 0]])


def sigma_z() -> ComplexMatrix:
    return as_operator([[1, 0], [0, -1]])


def sigma_x() -> ComplexMatrix:
    return as_operator([[0, 1], [1, 0]])


def excited_projector() -> ComplexMatrix:
    return as_operator([[1, 0], [0, 0]])


def destroy(cutoff: int) -> ComplexMatrix:
    return as_operator(np.diag(np.sqrt(np.arange(1, cutoff)), k=1))


def number(cutoff: int) -> ComplexMatrix:
    return as_operator(np.diag(np.arange(cutoff)))


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    return as_operator(a.conj().T)


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    _require_same_dimension(a, b)
    return as_operator(a @ b - b @ a)


def hermitize(a: ComplexMatrix) -> ComplexMatrix:
    return as_operator((a + a.conj().T) / 2)


def is_hermitian(a: ComplexMatrix, tolerance: float = CONSTRUCTION_HERMITICITY_TOLERANCE) -> bool:
    return bool(np.max(np.abs(a - a.conj().T)) <= tolerance)


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return as_operator(np.kron(as_operator(a), as_operator(b)))


def kron_all(factors: Sequence[ComplexMatrix]) -> ComplexMatrix:
    return reduce(kron, factors)


def embed(op: ComplexMatrix, dims: Sequence[int], position: int) -> ComplexMatrix:
    if not 0 <= position < len(dims):
        raise DimensionMismatchException(f'Subsystem {position} does not exist in dims {list(dims)}')

    if op.shape[0] != dims[position]:
        raise DimensionMismatchException(
            f'Operator of dimension {op.shape[0]} cannot act on subsystem {position} of dimension {dims[position]}'
        )

    return kron_all([op if index == position else identity(dim) for index, dim in enumerate(dims)])


def herm_eig(a: ComplexMatrix) -> SpectralDecomposition:
    if not is_hermitian(a, RUNTIME_HERMITICITY_TOLERANCE):
        raise NotHermitianException(
            f'Matrix deviates from its adjoint by {np.max(np.abs(a - a.conj().T)):.3e}'
        )

    eigenvalues, eigenvectors = np.linalg.eigh((a + a.conj().T) / 2)
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def expect(op: ComplexMatrix, rho: ComplexMatrix) -> complex:
    _require_same_dimension(op, rho)

    trace = np.trace(rho)
    if abs(trace - 1) > TRACE_TOLERANCE:
        raise UnphysicalStateException(f'Density matrix has trace {trace:.12g}, expected 1')

    return complex(np.einsum('ij,ji->', rho, op))


def partial_trace(rho: ComplexMatrix, dims: Sequence[int], keep: int) -> ComplexMatrix:
    if int(np.prod(dims)) != rho.shape[0]:
        raise DimensionMismatchException(f'Subsystem dims {list(dims)} do not multiply to {rho.shape[0]}')

    if not 0 <= keep < len(dims):
        raise DimensionMismatchException(f'Subsystem {keep} does not exist in dims {list(dims)}')

    before = int(np.prod(dims[:keep]))
    after = int(np.prod(dims[keep + 1:]))
    kept = dims[keep]

    blocks = rho.reshape(before, kept, after, before, kept, after)
    return as_operator(np.einsum('aibajb->ij', blocks))


def ket(dim: int, index: int) -> StateVector:
    vector = np.zeros(dim, dtype=np.complex128)
    vector[index] = 1
    return vector


def projector(vector: StateVector) -> ComplexMatrix:
    return as_operator(np.outer(vector, vector.conj()))


def coherent_state(alpha: complex, cutoff: int) -> StateVector:
    photon_numbers = np.arange(cutoff)
    magnitudes = np.exp(-abs(alpha) ** 2 / 2 - gammaln(photon_numbers + 1) / 2)

    return magnitudes * np.power(complex(alpha), photon_numbers)


def _require_same_dimension(a: ComplexMatrix, b: ComplexMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchException(f'Operator shapes {a.shape} and {b.shape} differ')
