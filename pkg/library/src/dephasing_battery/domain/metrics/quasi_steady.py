from typing import Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from numpy.typing import ArrayLike

from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException

PLATEAU_TOLERANCE = 1e-3
TAIL_FRACTION = 0.05


def quasi_steady_value(times: ArrayLike, values: ArrayLike, window: float,
                       tolerance: float = PLATEAU_TOLERANCE) -> Tuple[float, float]:
    """First (t, value) whose trailing window of the given width varies by less than tolerance, relatively."""
    grid = np.asarray(times, dtype=np.float64)
    samples = np.asarray(values, dtype=np.float64)

    spacing = float(np.median(np.diff(grid)))
    width = int(round(window / spacing)) + 1
    if width > len(samples):
        raise NotConvergedException(f'Series of length {grid[-1] - grid[0]:.6g} is shorter than the window {window}')

    windows = sliding_window_view(samples, width)
    spread = windows.max(axis=1) - windows.min(axis=1)
    scale = np.abs(windows.mean(axis=1))

    settled = np.nonzero(spread < tolerance * np.where(scale > 0, scale, np.inf))[0]
    if settled.size == 0:
        raise NotConvergedException(f'No plateau with relative variation below {tolerance} within t = {grid[-1]:.6g}')

    end = int(settled[0]) + width - 1
    return float(grid[end]), float(samples[end])


def tail_average(values: ArrayLike, fraction: float = TAIL_FRACTION) -> float:
    samples = np.asarray(values, dtype=np.float64)
    count = max(1, int(round(len(samples) * fraction)))

    return float(np.mean(samples[-count:]))
