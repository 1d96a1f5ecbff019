from dataclasses import dataclass
from logging import Logger
from typing import Optional, Tuple

from dephasing_battery.domain.analytic.tls_closed_forms import tls_steady
from dephasing_battery.domain.lindblad.steady_state_solver import steady_state
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.battery_metrics import energy, ergotropy
from dephasing_battery.domain.metrics.quasi_steady import TAIL_FRACTION, tail_average
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_builders import check_fock_cutoff
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.cutoff_escalation import with_cutoff_escalation
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.solver_exception import SolverException


@dataclass(frozen=True)
class SteadyValues:
    energy: float
    ergotropy: float
    notes: Tuple[str, ...] = ()

    @property
    def ratio(self) -> float:
        return self.ergotropy / self.energy if self.energy > 0 else float('nan')


def steady_values(scenario: Scenario, params: Params, logger: Logger) -> SteadyValues:
    """Long-time battery energy and ergotropy, from closed forms where they exist and the Liouvillian otherwise."""
    if scenario.model is ModelKind.TWO_TLS and params.is_resonant:
        battery_energy, battery_ergotropy = tls_steady(params)
        return SteadyValues(battery_energy, battery_ergotropy)

    (battery_energy, battery_ergotropy), notes = with_cutoff_escalation(
        scenario, params, _numerical_steady_values, logger
    )

    closed = _closed_steady_energy(scenario, params)
    return SteadyValues(battery_energy if closed is None else closed, battery_ergotropy, notes)


def steady_energy(scenario: Scenario, params: Params, logger: Logger,
                  series: Optional[TimeSeries] = None) -> Tuple[float, Tuple[str, ...]]:
    """Closed-form E_ss, else the solver steady state, else the tail average of series when one is given."""
    closed = _closed_steady_energy(scenario, params)
    if closed is not None:
        return closed, ()

    try:
        values = steady_values(scenario, params, logger)
    except (SolverException, InvalidParametersException) as e:
        if series is None:
            raise

        return _tail_energy(series, f'no solver steady state ({e})', logger)

    return values.energy, values.notes


def _tail_energy(series: TimeSeries, reason: str, logger: Logger) -> Tuple[float, Tuple[str, ...]]:
    if series.energy is None:
        raise InvalidScenarioException('observables', f'{reason} and no energy series to average')

    note = f'{reason}; e_ss is the mean of the last {TAIL_FRACTION:.0%} of the run up to t = {series.times[-1]:.6g}'
    logger.warning(note)
    return tail_average(series.energy), (note,)


def _closed_steady_energy(scenario: Scenario, params: Params) -> Optional[float]:
    if not params.is_resonant or params.g == 0 or params.gamma_c <= 0:
        return None

    match scenario.model:
        case ModelKind.TWO_TLS:
            return tls_steady(params)[0]
        case ModelKind.TWO_HO:
            return 1.5 * params.drive_ratio ** 2 * params.omega_b
        case _:
            return None


def _numerical_steady_values(model: ModelSpec) -> Tuple[float, float]:
    rho = steady_state(model)

    if model.cutoff is not None:
        check_fock_cutoff(model, rho)

    rho_b = model.battery_state(rho)
    return energy(rho_b, model.battery_hamiltonian), ergotropy(rho_b, model.battery_hamiltonian)
