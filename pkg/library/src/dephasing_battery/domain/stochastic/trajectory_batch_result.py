from dataclasses import dataclass
from typing import Dict

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, eq=False)
class TrajectoryBatchResult:
    """Per-sample sums over the trajectories of one batch."""
    count: int
    sums: Dict[str, NDArray[np.float64]]
    squared_sums: Dict[str, NDArray[np.float64]]
    density_sums: NDArray[np.complex128]
