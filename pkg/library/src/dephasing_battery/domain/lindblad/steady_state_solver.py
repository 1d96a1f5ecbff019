from logging import getLogger
from typing import Optional

import numpy as np
from scipy.linalg import null_space

from dephasing_battery.domain.lindblad.degenerate_steady_state_exception import DegenerateSteadyStateException
from dephasing_battery.domain.lindblad.liouvillian import liouvillian_superoperator
from dephasing_battery.domain.lindblad.master_equation_integrator import MAX_PROPAGATOR_DIMENSION, evolve_to
from dephasing_battery.domain.lindblad.propagator_too_large_exception import PropagatorTooLargeException
from dephasing_battery.domain.lindblad.state_validation import require_physical_state
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, hermitize

LOGGER = getLogger(__name__)

NULL_SPACE_RCOND = 1e-9
LONG_TIME_FACTOR = 50.0
MAX_DOUBLINGS = 6
CONVERGENCE_TOLERANCE = 1e-9
STEADY_STATE_POSITIVITY_TOLERANCE = 1e-9


def steady_state(model: ModelSpec, initial_state: Optional[ComplexMatrix] = None,
                 fallback: bool = True) -> ComplexMatrix:
    if model.params.gamma_c <= 0:
        raise InvalidParametersException('gamma_c', 'steady states need a positive dephasing rate')

    try:
        return unique_steady_state(model)
    except (DegenerateSteadyStateException, PropagatorTooLargeException) as e:
        if not fallback:
            raise

        LOGGER.warning(f'{e}; falling back to long-time propagation from the initial state')
        return long_time_state(model, model.initial_state if initial_state is None else initial_state)


def unique_steady_state(model: ModelSpec) -> ComplexMatrix:
    superoperator_dimension = model.dimension ** 2
    if superoperator_dimension > MAX_PROPAGATOR_DIMENSION:
        raise PropagatorTooLargeException(
            f'Superoperator of dimension {superoperator_dimension} is too large for a null space search'
        )

    kernel = null_space(liouvillian_superoperator(model), rcond=NULL_SPACE_RCOND)
    if kernel.shape[1] != 1:
        raise DegenerateSteadyStateException(kernel.shape[1])

    rho = kernel[:, 0].reshape(model.dimension, model.dimension)
    rho = hermitize(rho / np.trace(rho))

    require_physical_state(rho, STEADY_STATE_POSITIVITY_TOLERANCE)
    return rho


def long_time_state(model: ModelSpec, rho0: ComplexMatrix) -> ComplexMatrix:
    p = model.params
    timescales = [1 / p.gamma_c]
    if p.g > 0:
        timescales += [p.gamma_c / p.g ** 2, 1 / p.g]

    elapsed = LONG_TIME_FACTOR * max(timescales)
    state = evolve_to(model, rho0, elapsed)

    for _ in range(MAX_DOUBLINGS):
        later = evolve_to(model, state, elapsed)
        change = float(np.max(np.abs(later - state)))
        elapsed *= 2
        state = later

        if change <= CONVERGENCE_TOLERANCE:
            LOGGER.debug(f'Long-time state settled at t = {elapsed:.6g}')
            return state

    LOGGER.warning(f'Long-time state still changing at t = {elapsed:.6g}')
    return state
