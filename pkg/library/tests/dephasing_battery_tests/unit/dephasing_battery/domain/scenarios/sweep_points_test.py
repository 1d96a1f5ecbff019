import math

import numpy as np
import pytest

from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_closed_detuned_max
from dephasing_battery.domain.analytic.tls_closed_forms import tls_energy_closed
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.charging_report import ChargingReport
from dephasing_battery.domain.metrics.charging_time import closed_form_charging_time
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep_points import CHARGING_TIME_COLUMNS, DETUNING_COLUMNS, \
    FIRST_PEAK_COLUMN, STEADY_STATE_COLUMNS, SweepPoint, charging_report, closed_case_maxima, closed_case_window, \
    detuning_columns, dynamics_rows, evaluate_detuning_point, evaluate_sweep_point, report_row, sweep_columns
from dephasing_battery.domain.scenarios.trajectory_settings import TrajectorySettings
from dephasing_battery.domain.task_runner import TaskRunner
from dephasing_battery_tests.support.builders.params_builder import params_with, resonant_params_with
from dephasing_battery_tests.support.builders.scenario_builder import a_scenario_with, a_sweep_over


def a_point(scenario: Scenario, value: float, task_runner: TaskRunner) -> SweepPoint:
    return SweepPoint(scenario=scenario, value=value, params=scenario.sweep.apply(scenario.params, value),
                      task_runner=task_runner)


def test_dynamics_columns_follow_the_observables() -> None:
    assert sweep_columns(a_scenario_with(observables=('energy', 'sigma_z_b'))) == ('t', 'energy', 'sigma_z_b')


def test_stochastic_dynamics_columns_carry_standard_errors() -> None:
    scenario = a_scenario_with(solver=SolverKind.STOCHASTIC, trajectories=TrajectorySettings(n_traj=10, dt=0.01))

    assert sweep_columns(scenario) == ('t', 'energy', 'ergotropy', 'energy_error', 'ergotropy_error')


def test_analysis_columns() -> None:
    assert sweep_columns(a_scenario_with(analysis=AnalysisKind.CHARGING_TIME)) == CHARGING_TIME_COLUMNS
    assert sweep_columns(a_scenario_with(analysis=AnalysisKind.STEADY_STATE)) == STEADY_STATE_COLUMNS


def test_oscillator_detuning_sweeps_add_the_first_peak() -> None:
    assert detuning_columns(a_scenario_with(model=ModelKind.TWO_TLS)) == DETUNING_COLUMNS
    assert detuning_columns(a_scenario_with(model=ModelKind.TWO_HO)) == DETUNING_COLUMNS + (FIRST_PEAK_COLUMN,)


def test_dynamics_rows_need_every_requested_observable() -> None:
    scenario = a_scenario_with(model=ModelKind.TWO_HO, solver=SolverKind.ANALYTIC)
    series = TimeSeries(times=np.linspace(0.0, 1.0, 3), energy=np.zeros(3))

    with pytest.raises(InvalidScenarioException, match='analytic does not provide ergotropy for two_ho'):
        dynamics_rows(scenario, series)


def test_dynamics_rows_fill_missing_errors_with_nan() -> None:
    scenario = a_scenario_with(solver=SolverKind.STOCHASTIC, observables=('energy', 'sigma_z_b'),
                               trajectories=TrajectorySettings(n_traj=10, dt=0.01))
    series = TimeSeries(
        times=np.array([0.0, 1.0]), energy=np.array([0.0, 0.3]), moments=dict(sigma_z_b=np.array([-1.0, -0.4])),
        errors=dict(energy=np.array([0.0, 0.01])),
    )

    rows = dynamics_rows(scenario, series)

    assert [row[:4] for row in rows] == [(0.0, 0.0, -1.0, 0.0), (1.0, 0.3, -0.4, 0.01)]
    assert all(math.isnan(row[4]) for row in rows)


def test_report_row_flattens_a_report() -> None:
    report = ChargingReport(tau=4.0, n=3, e_ss=0.5, e_max_transient=0.6, gamma_c=1.0, converged=True, horizon=40.0)

    assert report_row(report) == (4.0, 3.0, 0.5, 0.6, 1.0, 1.0, 40.0)


def test_analytic_charging_report_uses_the_closed_form(serial_task_runner: TaskRunner) -> None:
    params = resonant_params_with(drive_ratio=0.5, gamma_c=1.15)
    scenario = a_scenario_with(params=params, solver=SolverKind.ANALYTIC, analysis=AnalysisKind.CHARGING_TIME, n=18)

    assert charging_report(scenario, params, serial_task_runner) == closed_form_charging_time(params, 18,
                                                                                            ModelKind.TWO_TLS)


def test_sweep_point_rows_start_with_the_swept_value(serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(solver=SolverKind.ANALYTIC, t_points=11, sweep=a_sweep_over('gamma_c', 0.5, 2.0))

    result = evaluate_sweep_point(a_point(scenario, 2.0, serial_task_runner))

    assert len(result.rows) == 11
    assert all(row[0] == 2.0 for row in result.rows)
    assert result.rows[-1][2] == pytest.approx(
        float(tls_energy_closed(params_with(gamma_c=2.0), [0.0, 5.0])[-1]), abs=1e-12
    )


def test_non_converged_charging_point_becomes_a_partial_row(serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(analysis=AnalysisKind.CHARGING_TIME, sweep=a_sweep_over('gamma_c', 0.0, 1.0))

    result = evaluate_sweep_point(a_point(scenario, 0.0, serial_task_runner))

    ((value, tau, n, e_ss, e_max, gamma_c, converged, horizon),) = result.rows
    assert (value, n, gamma_c, converged) == (0.0, 1.0, 0.0, 0.0)
    assert all(math.isnan(entry) for entry in (tau, e_ss, e_max, horizon))
    assert result.notes[0].startswith('scenario any-scenario, gamma_c = 0.0: not converged')


def test_failing_sweep_point_is_annotated_with_its_value(serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(model=ModelKind.TWO_HO, solver=SolverKind.ANALYTIC, observables=('energy',),
                               params=params_with(delta_cd=0.1), sweep=a_sweep_over('gamma_c', 1.0))

    with pytest.raises(RequiresResonanceException) as exception_info:
        evaluate_sweep_point(a_point(scenario, 1.0, serial_task_runner))

    assert 'scenario any-scenario, gamma_c = 1.0' in exception_info.value.__notes__


def test_closed_case_maximum_is_refined_beyond_the_grid(serial_task_runner: TaskRunner) -> None:
    closed = resonant_params_with(drive_ratio=0.5, gamma_c=0.0)
    scenario = a_scenario_with(params=closed, solver=SolverKind.MOMENTS)
    fine = np.max(tls_energy_closed(closed, np.linspace(0.0, 40.0, 400001)))
    coarse = np.max(tls_energy_closed(closed, np.arange(0.0, 40.0, 0.01)))

    energy_max, ergotropy_max = closed_case_maxima(scenario, closed, serial_task_runner)

    assert coarse - 1e-8 <= energy_max <= fine + 1e-8
    assert energy_max == pytest.approx(fine, abs=1e-4)
    assert 0.0 < ergotropy_max <= energy_max + 1e-12


def test_dephasing_beats_the_closed_case_off_resonance(serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(params=params_with(drive=0.1, g=1.0, gamma_c=0.1), solver=SolverKind.MOMENTS,
                               sweep=a_sweep_over('delta_cb', -0.03, 0.03))

    result = evaluate_detuning_point(a_point(scenario, 0.03, serial_task_runner))

    ((value, closed_energy, _, dephased_energy, _),) = result.rows
    assert value == 0.03
    assert dephased_energy == pytest.approx(0.5, abs=1e-6)
    assert closed_energy < dephased_energy


def test_oscillator_detuning_point_reports_the_closed_first_peak(serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(model=ModelKind.TWO_HO, params=params_with(drive=0.1, g=1.0, gamma_c=0.1),
                               solver=SolverKind.MOMENTS, t_max=20.0, t_points=201,
                               sweep=a_sweep_over('delta_drive', 0.5))

    result = evaluate_detuning_point(a_point(scenario, 0.5, serial_task_runner))

    (row,) = result.rows
    assert len(row) == 6
    assert row[5] == ho_closed_detuned_max(params_with(drive=0.1, g=1.0, gamma_c=0.0, delta_cd=0.5, delta_bd=0.5))
    assert row[1] >= row[5] * (1 - 1e-4)


def test_closed_case_window_covers_the_slow_exchange_of_weak_drives() -> None:
    assert closed_case_window(params_with(drive=0.5, g=1.0)) == 40.0
    assert closed_case_window(params_with(drive=0.0, g=2.0)) == 20.0
    assert closed_case_window(params_with(drive=0.1, g=1.0)) == pytest.approx(200 * math.pi)


def test_weak_drive_closed_case_charges_fully_on_resonance(serial_task_runner: TaskRunner) -> None:
    closed = params_with(drive=0.1, g=1.0, gamma_c=0.0)
    scenario = a_scenario_with(params=closed, solver=SolverKind.MOMENTS)

    energy_max, _ = closed_case_maxima(scenario, closed, serial_task_runner)

    assert energy_max > 0.9
