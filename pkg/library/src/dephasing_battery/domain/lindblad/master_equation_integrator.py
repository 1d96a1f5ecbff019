from logging import getLogger
from typing import Dict, List

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import RK45
from scipy.linalg import expm

from dephasing_battery.domain.lindblad.integration_method import IntegrationMethod
from dephasing_battery.domain.lindblad.liouvillian import liouvillian_rate, liouvillian_superoperator
from dephasing_battery.domain.lindblad.propagator_too_large_exception import PropagatorTooLargeException
from dephasing_battery.domain.lindblad.state_validation import require_physical_state
from dephasing_battery.domain.lindblad.step_size_underflow_exception import StepSizeUnderflowException
from dephasing_battery.domain.lindblad.time_series import TimeSeries, validate_time_grid
from dephasing_battery.domain.metrics.battery_observables import series_from_states
from dephasing_battery.domain.models.model_builders import check_fock_cutoff
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.dimension_mismatch_exception import DimensionMismatchException
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, hermitize

LOGGER = getLogger(__name__)

RELATIVE_TOLERANCE = 1e-9
ABSOLUTE_TOLERANCE = 1e-11
MAX_PROPAGATOR_DIMENSION = 4096
PROPAGATOR_STEP_DIGITS = 12


def integrate(model: ModelSpec, rho0: ComplexMatrix, t_grid: ArrayLike,
              method: IntegrationMethod = IntegrationMethod.RUNGE_KUTTA, keep_states: bool = False) -> TimeSeries:
    times = validate_time_grid(t_grid)
    _require_model_shape(model, rho0)
    require_physical_state(rho0)

    if method is IntegrationMethod.EXPONENTIAL:
        states = propagate(model, rho0, times)
    else:
        states = _runge_kutta_states(model, rho0, times)

    for state in states:
        require_physical_state(state)

        if model.cutoff is not None:
            check_fock_cutoff(model, state)

    return series_from_states(model, times, states, keep_states=keep_states)


def propagate(model: ModelSpec, rho0: ComplexMatrix, t_grid: ArrayLike) -> List[ComplexMatrix]:
    times = validate_time_grid(t_grid)
    _require_model_shape(model, rho0)

    superoperator_dimension = model.dimension ** 2
    if superoperator_dimension > MAX_PROPAGATOR_DIMENSION:
        raise PropagatorTooLargeException(
            f'Superoperator of dimension {superoperator_dimension} exceeds {MAX_PROPAGATOR_DIMENSION}'
        )

    generator = liouvillian_superoperator(model)
    propagators: Dict[float, NDArray] = {}

    vector = np.asarray(rho0, dtype=np.complex128).ravel()
    states = [hermitize(vector.reshape(model.dimension, model.dimension))]
    for step in np.diff(times):
        key = round(float(step), PROPAGATOR_STEP_DIGITS)
        if key not in propagators:
            propagators[key] = expm(generator * step)

        vector = propagators[key] @ vector
        states.append(hermitize(vector.reshape(model.dimension, model.dimension)))

    return states


def evolve_to(model: ModelSpec, rho0: ComplexMatrix, duration: float) -> ComplexMatrix:
    if model.dimension ** 2 <= MAX_PROPAGATOR_DIMENSION:
        return propagate(model, rho0, [0.0, duration])[-1]

    return _runge_kutta_states(model, rho0, np.array([0.0, duration]))[-1]


def _runge_kutta_states(model: ModelSpec, rho0: ComplexMatrix, times: NDArray) -> List[ComplexMatrix]:
    dimension = model.dimension

    def rate(_: float, y: NDArray) -> NDArray:
        derivative = liouvillian_rate(model, y.reshape(dimension, dimension))
        return ((derivative + derivative.conj().T) / 2).ravel()

    states = [hermitize(rho0)]
    if len(times) == 1:
        return states

    solver = RK45(
        rate, times[0], np.array(rho0, dtype=np.complex128).ravel(), times[-1],
        rtol=RELATIVE_TOLERANCE, atol=ABSOLUTE_TOLERANCE
    )

    next_index = 1
    steps = 0
    largest_drift = 0.0

    while next_index < len(times):
        message = solver.step()
        steps += 1

        if solver.status == 'failed':
            raise StepSizeUnderflowException(last_good_time=float(solver.t), message=str(message))

        interpolant = solver.dense_output()
        while next_index < len(times) and times[next_index] <= solver.t:
            states.append(hermitize(interpolant(times[next_index]).reshape(dimension, dimension)))
            next_index += 1

        current = solver.y.reshape(dimension, dimension)
        largest_drift = max(largest_drift, float(np.max(np.abs(current - current.conj().T))))
        solver.y[:] = ((current + current.conj().T) / 2).ravel()

        if solver.status == 'finished':
            while next_index < len(times):
                states.append(hermitize(solver.y.reshape(dimension, dimension)))
                next_index += 1

    LOGGER.debug(f'Integrated to t = {times[-1]:.6g} in {steps} steps, largest hermiticity drift {largest_drift:.3e}')
    return states


def _require_model_shape(model: ModelSpec, rho: ComplexMatrix) -> None:
    if rho.shape != model.hamiltonian.shape:
        raise DimensionMismatchException(
            f'State of shape {rho.shape} does not match model dimension {model.dimension}'
        )
