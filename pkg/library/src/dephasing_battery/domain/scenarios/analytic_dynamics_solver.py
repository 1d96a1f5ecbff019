import numpy as np
from numpy.typing import NDArray

from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_closed_detuned, ho_energy_closed_resonant
from dephasing_battery.domain.analytic.oscillator_detuning import OscillatorDetuning
from dephasing_battery.domain.analytic.tls_closed_forms import tls_ergotropy_closed, tls_sigma_minus_closed, \
    tls_sigma_z_closed
from dephasing_battery.domain.lindblad.time_series import TimeSeries, validate_time_grid
from dephasing_battery.domain.metrics.battery_metrics import entropy_from_energy_and_ergotropy
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException
from dephasing_battery.domain.scenarios.dynamics_solver import DynamicsSolver
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario


class AnalyticDynamicsSolver(DynamicsSolver):
    def solve(self, scenario: Scenario, params: Params, times: NDArray) -> TimeSeries:
        grid = validate_time_grid(times)

        match scenario.model:
            case ModelKind.TWO_TLS:
                return self.__two_tls(params, grid)
            case ModelKind.TWO_HO:
                return TimeSeries(times=grid, energy=self.__two_ho_energy(params, grid))
            case _:
                raise InvalidScenarioException('solver', f'closed forms are not available for {scenario.model.value}')

    @staticmethod
    def __two_tls(params: Params, times: NDArray) -> TimeSeries:
        sigma_z = tls_sigma_z_closed(params, times)
        sigma_minus = tls_sigma_minus_closed(params, times)
        energy = params.omega_b / 2 * (sigma_z + 1)
        ergotropy = tls_ergotropy_closed(params, times)

        return TimeSeries(
            times=times,
            energy=energy,
            ergotropy=ergotropy,
            entropy=entropy_from_energy_and_ergotropy(energy, ergotropy, params.omega_b),
            moments=dict(
                sigma_z_b=sigma_z,
                sigma_minus_b_re=np.real(sigma_minus),
                sigma_minus_b_im=np.imag(sigma_minus),
            ),
        )

    @staticmethod
    def __two_ho_energy(params: Params, times: NDArray) -> NDArray:
        if params.is_resonant:
            return ho_energy_closed_resonant(params, times)

        if params.gamma_c == 0 and params.delta_cd == params.delta_bd:
            return ho_closed_detuned(params, times, OscillatorDetuning.DETUNED_DRIVE)

        if params.gamma_c == 0 and params.delta_bd == 0:
            return ho_closed_detuned(params, times, OscillatorDetuning.DETUNED_CB)

        raise RequiresResonanceException(
            'Oscillator closed forms cover resonance and the undamped detuned cases only'
        )
