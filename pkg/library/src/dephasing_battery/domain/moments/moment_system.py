from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.operators.dimension_mismatch_exception import DimensionMismatchException

type RealMatrix = NDArray[np.float64]
type RealVector = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class MomentSystem:
    """Linear system dV/dt = M V + W of real moment components, named by labels."""
    matrix: RealMatrix
    inhomogeneity: RealVector
    v0: RealVector
    labels: Tuple[str, ...]

    def __post_init__(self) -> None:
        size = len(self.labels)

        if self.matrix.shape != (size, size) or self.inhomogeneity.shape != (size,) or self.v0.shape != (size,):
            raise DimensionMismatchException(
                f'Moment system with {size} labels got matrix {self.matrix.shape}, '
                f'inhomogeneity {self.inhomogeneity.shape} and initial vector {self.v0.shape}'
            )

        for array in (self.matrix, self.inhomogeneity, self.v0):
            array.flags.writeable = False

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def is_homogeneous(self) -> bool:
        return not np.any(self.inhomogeneity)

    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def component(self, series: TimeSeries, label: str) -> NDArray:
        if label not in self.labels:
            raise KeyError(f'Moment system has no component {label}')

        return series.observable(label)
