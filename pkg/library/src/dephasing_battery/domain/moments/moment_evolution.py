from logging import getLogger

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import solve_ivp
from scipy.linalg import expm, solve

from dephasing_battery.domain.lindblad.step_size_underflow_exception import StepSizeUnderflowException
from dephasing_battery.domain.lindblad.time_series import TimeSeries, validate_time_grid
from dephasing_battery.domain.moments.moment_propagation import MomentPropagation
from dephasing_battery.domain.moments.moment_system import MomentSystem
from dephasing_battery.domain.moments.singular_matrix_exception import SingularMatrixException

LOGGER = getLogger(__name__)

CONDITION_LIMIT = 1e12
ODE_RELATIVE_TOLERANCE = 1e-12
ODE_ABSOLUTE_TOLERANCE = 1e-14


def evolve_moments(system: MomentSystem, t_grid: ArrayLike,
                   propagation: MomentPropagation = MomentPropagation.AUTOMATIC) -> TimeSeries:
    times = validate_time_grid(t_grid)

    if propagation is MomentPropagation.ODE:
        values = _ode_values(system, times)
    elif system.is_homogeneous:
        values = _exponential_values(system, times)
    else:
        try:
            values = _inhomogeneous_values(system, times)
        except SingularMatrixException as e:
            LOGGER.debug(f'{e}; integrating the moment equations instead')
            values = _ode_values(system, times)

    return TimeSeries(times=times, moments={label: values[:, index] for index, label in enumerate(system.labels)})


def inhomogeneous_closed_form(system: MomentSystem, t_grid: ArrayLike) -> NDArray:
    return _inhomogeneous_values(system, validate_time_grid(t_grid))


def _exponential_values(system: MomentSystem, times: NDArray) -> NDArray:
    return np.array([expm(system.matrix * t) @ system.v0 for t in times])


def _inhomogeneous_values(system: MomentSystem, times: NDArray) -> NDArray:
    condition = np.linalg.cond(system.matrix)
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise SingularMatrixException(f'Moment matrix has condition number {condition:.3e}')

    identity = np.eye(system.dimension)
    values = []
    for t in times:
        propagator = expm(system.matrix * t)
        values.append(propagator @ system.v0 + solve(system.matrix, (propagator - identity) @ system.inhomogeneity))

    return np.array(values)


def _ode_values(system: MomentSystem, times: NDArray) -> NDArray:
    if times[-1] == 0:
        return np.array([system.v0])

    solution = solve_ivp(
        lambda _, v: system.matrix @ v + system.inhomogeneity,
        (0.0, float(times[-1])),
        system.v0,
        method='DOP853',
        t_eval=times,
        rtol=ODE_RELATIVE_TOLERANCE,
        atol=ODE_ABSOLUTE_TOLERANCE,
    )

    if not solution.success:
        raise StepSizeUnderflowException(last_good_time=float(solution.t[-1]), message=solution.message)

    return solution.y.T
