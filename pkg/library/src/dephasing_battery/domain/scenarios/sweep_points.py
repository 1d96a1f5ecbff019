"""Evaluation of single sweep points; module-level so worker processes can unpickle them."""
import math
from dataclasses import dataclass
from logging import getLogger
from typing import Callable, List, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize_scalar

from dephasing_battery.domain.analytic.on_resonance_pole_exception import OnResonancePoleException
from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_closed_detuned_max
from dephasing_battery.domain.dephasing_battery_exception import DephasingBatteryException
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.charging_report import ChargingReport
from dephasing_battery.domain.metrics.charging_time import charging_time, closed_form_charging_time, default_horizon
from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException
from dephasing_battery.domain.metrics.quasi_steady import quasi_steady_value
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.dynamics_solvers import dynamics_solver_for
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import MOMENT_MODELS, Scenario
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.steady_values import steady_energy, steady_values
from dephasing_battery.domain.scenarios.sweep_table import Row
from dephasing_battery.domain.task_runner import TaskRunner

LOGGER = getLogger(__name__)

CHARGING_TIME_SAMPLES = 20001
CLOSED_CASE_WINDOW = 40.0
CLOSED_CASE_STEP = 0.01
CLOSED_CASE_MAX_SAMPLES = 100_000
PLATEAU_WINDOW = 10.0

CHARGING_TIME_COLUMNS = ('tau', 'n', 'e_ss', 'e_max_transient', 'gamma_c', 'converged', 'horizon')
STEADY_STATE_COLUMNS = ('energy', 'ergotropy', 'ergotropy_ratio')
DETUNING_COLUMNS = ('closed_energy_max', 'closed_ergotropy_max', 'dephased_energy', 'dephased_ergotropy')
FIRST_PEAK_COLUMN = 'closed_energy_first_peak'


@dataclass(frozen=True)
class SweepPoint:
    scenario: Scenario
    value: float
    params: Params
    task_runner: TaskRunner


@dataclass(frozen=True)
class SweepPointResult:
    rows: Tuple[Row, ...]
    notes: Tuple[str, ...] = ()


def sweep_columns(scenario: Scenario) -> Tuple[str, ...]:
    match scenario.analysis:
        case AnalysisKind.DYNAMICS:
            return ('t',) + scenario.observables + _error_columns(scenario)
        case AnalysisKind.CHARGING_TIME:
            return CHARGING_TIME_COLUMNS
        case AnalysisKind.STEADY_STATE:
            return STEADY_STATE_COLUMNS


def detuning_columns(scenario: Scenario) -> Tuple[str, ...]:
    if scenario.model is ModelKind.TWO_HO:
        return DETUNING_COLUMNS + (FIRST_PEAK_COLUMN,)

    return DETUNING_COLUMNS


def evaluate_sweep_point(point: SweepPoint) -> SweepPointResult:
    scenario, value = point.scenario, point.value

    try:
        match scenario.analysis:
            case AnalysisKind.DYNAMICS:
                series = dynamics_solver_for(scenario.solver, point.task_runner, LOGGER).solve(
                    scenario, point.params, scenario.t_grid
                )
                rows = tuple((value,) + row for row in dynamics_rows(scenario, series))
                notes = series.notes
            case AnalysisKind.CHARGING_TIME:
                report = _charging_report_or_partial(scenario, point.params, point.task_runner)
                rows = ((value,) + report_row(report),)
                notes = report.notes
            case AnalysisKind.STEADY_STATE:
                values = steady_values(scenario, point.params, LOGGER)
                rows = ((value, values.energy, values.ergotropy, values.ratio),)
                notes = values.notes
    except DephasingBatteryException as e:
        e.add_note(_context(scenario, value))
        raise

    LOGGER.info(f'{_context(scenario, value)} done')
    return SweepPointResult(rows=rows, notes=tuple(f'{_context(scenario, value)}: {note}' for note in notes))


def evaluate_detuning_point(point: SweepPoint) -> SweepPointResult:
    scenario, value, params = point.scenario, point.value, point.params
    notes: List[str] = []

    try:
        closed = params.with_changes(gamma_c=0.0)
        energy_max, ergotropy_max = closed_case_maxima(scenario, closed, point.task_runner)
        dephased_energy, dephased_ergotropy = _dephased_values(scenario, params, point.task_runner, notes)

        row: Row = (value, energy_max, ergotropy_max, dephased_energy, dephased_ergotropy)
        if scenario.model is ModelKind.TWO_HO:
            row += (_first_peak(closed, notes),)
    except DephasingBatteryException as e:
        e.add_note(_context(scenario, value))
        raise

    LOGGER.info(f'{_context(scenario, value)} done')
    return SweepPointResult(rows=(row,), notes=tuple(f'{_context(scenario, value)}: {note}' for note in notes))


def require_observables(scenario: Scenario, series: TimeSeries) -> TimeSeries:
    for name in scenario.observables:
        if not series.has_observable(name):
            raise InvalidScenarioException(
                'observables', f'{scenario.solver.value} does not provide {name} for {scenario.model.value}'
            )

    return series


def dynamics_rows(scenario: Scenario, series: TimeSeries) -> Tuple[Row, ...]:
    columns = [require_observables(scenario, series).times]

    for name in scenario.observables:
        columns.append(np.real(series.observable(name)))

    for name in scenario.observables if scenario.solver is SolverKind.STOCHASTIC else ():
        error = series.error(name)
        columns.append(np.full(len(series.times), np.nan) if error is None else error)

    return tuple(tuple(float(column[index]) for column in columns) for index in range(len(series.times)))


def charging_report(scenario: Scenario, params: Params, task_runner: TaskRunner) -> ChargingReport:
    if scenario.solver is SolverKind.ANALYTIC:
        return closed_form_charging_time(params, scenario.n, scenario.model)

    horizon = default_horizon(params, scenario.n, scenario.model)
    times = np.linspace(0.0, horizon, max(scenario.t_points, CHARGING_TIME_SAMPLES))

    series = dynamics_solver_for(scenario.solver, task_runner, LOGGER).solve(scenario, params, times)
    e_ss, steady_notes = steady_energy(scenario, params, LOGGER, series)
    report = charging_time(series, e_ss, scenario.n, gamma_c=params.gamma_c)

    return report.with_notes(*steady_notes, *series.notes)


def report_row(report: ChargingReport) -> Row:
    return (
        report.tau, float(report.n), report.e_ss, report.e_max_transient, report.gamma_c,
        float(report.converged), report.horizon
    )


def closed_case_maxima(scenario: Scenario, closed: Params, task_runner: TaskRunner) -> Tuple[float, float]:
    """Largest energy and ergotropy of the undamped dynamics over closed_case_window, refined by golden section."""
    solver = dynamics_solver_for(_deterministic_solver(scenario), task_runner, LOGGER)
    window = closed_case_window(closed)
    times = np.arange(0.0, window, max(CLOSED_CASE_STEP / closed.g, window / CLOSED_CASE_MAX_SAMPLES))
    series = solver.solve(scenario, closed, times)

    def value_at(name: str) -> Callable[[float], float]:
        def evaluate(t: float) -> float:
            if t <= 0:
                return float(np.real(series.observable(name)[0]))

            return float(np.real(solver.solve(scenario, closed, np.array([0.0, t])).observable(name)[-1]))

        return evaluate

    maxima = []
    for name in ('energy', 'ergotropy'):
        if not series.has_observable(name):
            maxima.append(math.nan)
            continue

        maxima.append(_refined_maximum(times, np.real(series.observable(name)), value_at(name)))

    return maxima[0], maxima[1]


def closed_case_window(closed: Params) -> float:
    # weak drives exchange charger and battery excitations at the slow rate F^2/g
    window = CLOSED_CASE_WINDOW / closed.g
    if closed.drive > 0:
        window = max(window, 2 * math.pi * closed.g / closed.drive ** 2)

    return window


def _refined_maximum(times: NDArray, values: NDArray, value_at: Callable[[float], float]) -> float:
    peak = int(np.argmax(values))
    grid_maximum = float(values[peak])

    if peak == 0 or peak == len(times) - 1:
        return grid_maximum

    if not (values[peak] > values[peak - 1] and values[peak] > values[peak + 1]):
        return grid_maximum

    result = minimize_scalar(
        lambda t: -value_at(t), bracket=(times[peak - 1], times[peak], times[peak + 1]), method='golden'
    )

    return max(grid_maximum, -float(result.fun))


def _dephased_values(scenario: Scenario, params: Params, task_runner: TaskRunner,
                     notes: List[str]) -> Tuple[float, float]:
    if params.delta_bd == 0:
        values = steady_values(scenario, params, LOGGER)
        notes.extend(values.notes)
        return values.energy, values.ergotropy

    # a drive detuned from the battery leaves a long-lived plateau before the true steady state
    solver = dynamics_solver_for(_deterministic_solver(scenario), task_runner, LOGGER)
    series = solver.solve(scenario, params, scenario.t_grid)
    notes.extend(series.notes)

    plateaus = []
    for name in ('energy', 'ergotropy'):
        if not series.has_observable(name):
            plateaus.append(math.nan)
            continue

        try:
            _, plateau = quasi_steady_value(series.times, series.observable(name), PLATEAU_WINDOW / params.g)
        except NotConvergedException as e:
            LOGGER.warning(f'{_context(scenario, params.delta_cd)}: no {name} plateau ({e})')
            notes.append(f'no {name} plateau: {e}')
            plateau = math.nan

        plateaus.append(plateau)

    return plateaus[0], plateaus[1]


def _first_peak(closed: Params, notes: List[str]) -> float:
    if closed.delta_cd != closed.delta_bd:
        return math.nan

    try:
        return ho_closed_detuned_max(closed)
    except OnResonancePoleException as e:
        notes.append(str(e))
        return math.nan


def _charging_report_or_partial(scenario: Scenario, params: Params, task_runner: TaskRunner) -> ChargingReport:
    try:
        return charging_report(scenario, params, task_runner)
    except NotConvergedException as e:
        LOGGER.warning(f'Charging did not converge: {e}')
        report = e.report or ChargingReport(
            tau=math.nan, n=scenario.n, e_ss=math.nan, e_max_transient=math.nan, gamma_c=params.gamma_c,
            converged=False, horizon=math.nan
        )
        return report.with_notes(f'not converged: {e}')


def _deterministic_solver(scenario: Scenario) -> SolverKind:
    if scenario.solver in (SolverKind.LINDBLAD, SolverKind.MOMENTS):
        return scenario.solver

    return SolverKind.MOMENTS if scenario.model in MOMENT_MODELS else SolverKind.LINDBLAD


def _error_columns(scenario: Scenario) -> Tuple[str, ...]:
    if scenario.solver is not SolverKind.STOCHASTIC:
        return ()

    return tuple(f'{name}_error' for name in scenario.observables)


def _context(scenario: Scenario, value: float) -> str:
    variable = scenario.sweep.variable if scenario.sweep else 'value'
    return f'scenario {scenario.name}, {variable} = {value!r}'
