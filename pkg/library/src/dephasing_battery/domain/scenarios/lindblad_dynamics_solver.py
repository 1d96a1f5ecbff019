from logging import Logger

from numpy.typing import NDArray

from dephasing_battery.domain.lindblad.integration_method import IntegrationMethod
from dephasing_battery.domain.lindblad.master_equation_integrator import MAX_PROPAGATOR_DIMENSION, integrate
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.cutoff_escalation import with_cutoff_escalation
from dephasing_battery.domain.scenarios.dynamics_solver import DynamicsSolver
from dephasing_battery.domain.scenarios.scenario import Scenario


class LindbladDynamicsSolver(DynamicsSolver):
    """Exact propagation while the superoperator fits in memory, adaptive Runge-Kutta beyond that."""

    def __init__(self, logger: Logger):
        self.__logger = logger

    def solve(self, scenario: Scenario, params: Params, times: NDArray) -> TimeSeries:
        series, notes = with_cutoff_escalation(
            scenario, params, lambda model: integrate(model, model.initial_state, times, integration_method(model)),
            self.__logger
        )

        return series.with_notes(*notes)


def integration_method(model: ModelSpec) -> IntegrationMethod:
    # long charging horizons at strong dephasing are too stiff for explicit steps
    if model.dimension ** 2 <= MAX_PROPAGATOR_DIMENSION:
        return IntegrationMethod.EXPONENTIAL

    return IntegrationMethod.RUNGE_KUTTA
