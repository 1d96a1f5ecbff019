from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: NDArray[np.float64]
    eigenvectors: NDArray[np.complex128]

    def reconstruct(self) -> NDArray[np.complex128]:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T

    def projector(self, index: int) -> NDArray[np.complex128]:
        column = self.eigenvectors[:, index]
        return np.outer(column, column.conj())
