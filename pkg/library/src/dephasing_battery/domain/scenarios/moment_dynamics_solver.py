from numpy.typing import NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.moments.oscillator_moment_systems import oscillator_series_from_moments
from dephasing_battery.domain.moments.tls_moment_systems import tls_series_from_moments
from dephasing_battery.domain.scenarios.dynamics_solver import DynamicsSolver
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario


class MomentDynamicsSolver(DynamicsSolver):
    def solve(self, scenario: Scenario, params: Params, times: NDArray) -> TimeSeries:
        match scenario.model:
            case ModelKind.TWO_TLS:
                return tls_series_from_moments(params, times)
            case ModelKind.TWO_HO:
                return oscillator_series_from_moments(params, times)
            case _:
                raise InvalidScenarioException(
                    'solver', f'moment equations are not available for {scenario.model.value}'
                )
