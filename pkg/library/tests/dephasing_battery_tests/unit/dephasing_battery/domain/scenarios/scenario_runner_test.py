from logging import Logger

import pytest
from numpy.testing import assert_allclose

from dephasing_battery.domain.analytic.tls_closed_forms import tls_energy_closed, tls_steady
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.charging_time import closed_form_charging_time
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario_runner import ScenarioRunner
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep_points import CHARGING_TIME_COLUMNS, DETUNING_COLUMNS, \
    STEADY_STATE_COLUMNS
from dephasing_battery.domain.scenarios.sweep_table import SweepTable
from dephasing_battery.domain.task_runner import TaskRunner
from dephasing_battery_test_support.mocking import inline_task_runner, verify
from dephasing_battery_tests.support.builders.params_builder import params_with, resonant_params_with
from dephasing_battery_tests.support.builders.scenario_builder import a_scenario_with, a_sweep_over


def test_runs_single_dynamics_scenarios_in_process(logger: Logger) -> None:
    task_runner = inline_task_runner()
    scenario = a_scenario_with(solver=SolverKind.ANALYTIC, t_points=21)

    series = ScenarioRunner(task_runner, logger).run_scenario(scenario)

    assert isinstance(series, TimeSeries)
    assert_allclose(series.energy, tls_energy_closed(scenario.params, scenario.t_grid), atol=1e-14)
    verify(task_runner.map).was_not_called()


def test_rejects_observables_the_solver_cannot_provide(logger: Logger, serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(model=ModelKind.TWO_HO, params=resonant_params_with(drive_ratio=0.5, gamma_c=1.0),
                               solver=SolverKind.ANALYTIC, observables=('energy', 'ergotropy'))

    with pytest.raises(InvalidScenarioException, match='^observables: analytic does not provide ergotropy for two_ho'):
        ScenarioRunner(serial_task_runner, logger).run_scenario(scenario)


def test_sweeps_dispatch_one_point_per_value(logger: Logger) -> None:
    task_runner = inline_task_runner()
    scenario = a_scenario_with(solver=SolverKind.ANALYTIC, t_points=11, sweep=a_sweep_over('gamma_c', 0.1, 1.0, 10.0))

    table = ScenarioRunner(task_runner, logger).run_scenario(scenario)

    points = verify(task_runner.map).mapped_items()
    assert [point.value for point in points] == [0.1, 1.0, 10.0]
    assert all(point.task_runner is task_runner for point in points)
    assert isinstance(table, SweepTable)
    assert table.columns == ('gamma_c', 't', 'energy', 'ergotropy')
    assert len(table.rows) == 33
    assert table.metadata == dict(scenario='any-scenario', model='two_tls', solver='analytic', analysis='dynamics')


def test_sweep_points_use_the_inner_task_runner(logger: Logger, serial_task_runner: TaskRunner) -> None:
    task_runner = inline_task_runner()
    scenario = a_scenario_with(solver=SolverKind.ANALYTIC, t_points=3, sweep=a_sweep_over('gamma_c', 1.0))

    ScenarioRunner(task_runner, logger, inner_task_runner=serial_task_runner).run_scenario(scenario)

    (point,) = verify(task_runner.map).mapped_items()
    assert point.task_runner is serial_task_runner


def test_charging_time_analysis_yields_a_one_row_table(logger: Logger, serial_task_runner: TaskRunner) -> None:
    params = resonant_params_with(drive_ratio=0.5, gamma_c=1.15)
    scenario = a_scenario_with(params=params, solver=SolverKind.ANALYTIC, analysis=AnalysisKind.CHARGING_TIME, n=3)

    table = ScenarioRunner(serial_task_runner, logger).run_scenario(scenario)

    assert table.columns == CHARGING_TIME_COLUMNS
    assert table.column('tau')[0] == closed_form_charging_time(params, 3, ModelKind.TWO_TLS).tau
    assert table.column('converged')[0] == 1.0


def test_steady_state_analysis_reports_energy_ergotropy_and_their_ratio(logger: Logger,
                                                                       serial_task_runner: TaskRunner) -> None:
    params = resonant_params_with(drive_ratio=0.5, gamma_c=1.0)
    scenario = a_scenario_with(params=params, analysis=AnalysisKind.STEADY_STATE)

    table = ScenarioRunner(serial_task_runner, logger).run_scenario(scenario)

    energy, ergotropy = tls_steady(params)
    assert table.columns == STEADY_STATE_COLUMNS
    assert table.rows == ((energy, ergotropy, ergotropy / energy),)


def test_charging_time_report(logger: Logger, serial_task_runner: TaskRunner) -> None:
    params = resonant_params_with(drive_ratio=0.5, gamma_c=4.0)
    scenario = a_scenario_with(model=ModelKind.TWO_HO, params=params, solver=SolverKind.ANALYTIC,
                               analysis=AnalysisKind.CHARGING_TIME, observables=('energy',), n=5)

    report = ScenarioRunner(serial_task_runner, logger).charging_time(scenario)

    assert report == closed_form_charging_time(params, 5, ModelKind.TWO_HO)


def test_failures_name_the_scenario(logger: Logger, serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(model=ModelKind.TWO_HO, params=params_with(delta_cd=0.2), solver=SolverKind.ANALYTIC,
                               observables=('energy',), name='detuned-ho')

    with pytest.raises(RequiresResonanceException) as exception_info:
        ScenarioRunner(serial_task_runner, logger).run_scenario(scenario)

    assert exception_info.value.__notes__ == ['scenario detuned-ho']


def test_sweep_notes_reach_the_table(logger: Logger, serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(analysis=AnalysisKind.CHARGING_TIME, sweep=a_sweep_over('gamma_c', 0.0))

    table = ScenarioRunner(serial_task_runner, logger).run_scenario(scenario)

    assert table.columns == ('gamma_c',) + CHARGING_TIME_COLUMNS
    assert len(table.notes) == 1
    assert 'not converged' in table.notes[0]


def test_detuning_sweeps_need_a_detuning_variable(logger: Logger, serial_task_runner: TaskRunner) -> None:
    scenario = a_scenario_with(sweep=a_sweep_over('gamma_c', 0.1, 1.0))

    with pytest.raises(InvalidScenarioException, match='^sweep: a detuning sweep needs'):
        ScenarioRunner(serial_task_runner, logger).sweep_detuning(scenario)


def test_detuning_sweep_tabulates_closed_and_dephased_values(logger: Logger) -> None:
    task_runner = inline_task_runner()
    scenario = a_scenario_with(params=params_with(drive=0.1, g=1.0, gamma_c=0.1), solver=SolverKind.MOMENTS,
                               sweep=a_sweep_over('delta_cb', -0.03, 0.03))

    table = ScenarioRunner(task_runner, logger).sweep_detuning(scenario)

    assert table.columns == ('delta_cb',) + DETUNING_COLUMNS
    assert table.column('delta_cb').tolist() == [-0.03, 0.03]
    assert_allclose(table.column('dephased_energy'), [0.5, 0.5], atol=1e-6)
    assert verify(task_runner.map).call_count == 1
