import numpy as np
from numpy.typing import ArrayLike
from numpy.testing import assert_allclose

from dephasing_battery.domain.lindblad.time_series import TimeSeries

STATE_TOLERANCE = 1e-9


def assert_density_matrix(rho: ArrayLike, tolerance: float = STATE_TOLERANCE) -> None:
    matrix = np.asarray(rho)

    assert matrix.ndim == 2 and matrix.shape[0] == matrix.shape[1], f'not a square matrix: shape {matrix.shape}'
    assert_allclose(matrix, matrix.conj().T, atol=tolerance, err_msg='density matrix is not Hermitian')
    assert abs(np.trace(matrix) - 1) <= tolerance, f'trace is {np.trace(matrix)}'

    smallest = float(np.min(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)))
    assert smallest >= -tolerance, f'negative eigenvalue {smallest}'


def assert_observable_close(actual: TimeSeries, expected: TimeSeries, name: str, tolerance: float) -> None:
    assert_allclose(actual.times, expected.times, atol=1e-12, err_msg='series sampled on different grids')
    assert_allclose(
        np.real(actual.observable(name)),
        np.real(expected.observable(name)),
        rtol=0,
        atol=tolerance,
        err_msg=f'{name} differs by more than {tolerance}'
    )


def assert_within_standard_errors(actual: TimeSeries, expected: TimeSeries, name: str, sigmas: float = 3.0,
                                  floor: float = 1e-12) -> None:
    """Compare a trajectory average to a reference, allowing sigmas standard errors plus a discretisation floor."""
    errors = actual.error(name)
    assert errors is not None, f'{name} carries no standard error'

    deviation = np.abs(np.real(actual.observable(name)) - np.real(expected.observable(name)))
    allowed = sigmas * errors + floor
    worst = int(np.argmax(deviation - allowed))

    assert np.all(deviation <= allowed), (
        f'{name} at t = {actual.times[worst]} deviates by {deviation[worst]:.3e}, allowed {allowed[worst]:.3e}'
    )
