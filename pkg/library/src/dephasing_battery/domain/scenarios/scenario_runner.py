from logging import Logger
from typing import Any, Dict, List, Optional, Sequence, Tuple

from dephasing_battery.domain.dephasing_battery_exception import DephasingBatteryException
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.charging_report import ChargingReport
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.dynamics_solvers import dynamics_solver_for
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.scenarios.steady_values import steady_values
from dephasing_battery.domain.scenarios.sweep_points import SweepPoint, SweepPointResult, charging_report, \
    detuning_columns, evaluate_detuning_point, evaluate_sweep_point, report_row, require_observables, sweep_columns
from dephasing_battery.domain.scenarios.sweep_table import Row, SweepTable
from dephasing_battery.domain.task_runner import TaskRunner


class ScenarioRunner:
    def __init__(self, task_runner: TaskRunner, logger: Logger, inner_task_runner: Optional[TaskRunner] = None):
        self.__task_runner = task_runner
        self.__inner_task_runner = inner_task_runner or task_runner
        self.__logger = logger

    def run_scenario(self, scenario: Scenario) -> TimeSeries | SweepTable:
        self.__logger.info(f'Running scenario {scenario.name} ({scenario.model.value}, {scenario.solver.value}, '
                           f'{scenario.analysis.value})')

        if scenario.sweep is not None:
            return self.__sweep(scenario)

        try:
            match scenario.analysis:
                case AnalysisKind.DYNAMICS:
                    solver = dynamics_solver_for(scenario.solver, self.__task_runner, self.__logger)
                    return require_observables(scenario, solver.solve(scenario, scenario.params, scenario.t_grid))
                case AnalysisKind.CHARGING_TIME:
                    report = charging_report(scenario, scenario.params, self.__task_runner)
                    return self.__table(scenario, sweep_columns(scenario), [report_row(report)], report.notes)
                case AnalysisKind.STEADY_STATE:
                    values = steady_values(scenario, scenario.params, self.__logger)
                    row = (values.energy, values.ergotropy, values.ratio)
                    return self.__table(scenario, sweep_columns(scenario), [row], values.notes)
        except DephasingBatteryException as e:
            e.add_note(f'scenario {scenario.name}')
            raise

    def sweep_detuning(self, scenario: Scenario) -> SweepTable:
        if scenario.sweep is None or not scenario.sweep.is_detuning:
            raise InvalidScenarioException('sweep', 'a detuning sweep needs a delta_cd, delta_bd, delta_cb or '
                                                    'delta_drive grid')

        self.__logger.info(f'Sweeping detuning {scenario.sweep.variable} for scenario {scenario.name} '
                           f'over {len(scenario.sweep.grid)} values')

        results = self.__task_runner.map(evaluate_detuning_point, self.__points(scenario))
        return self.__combine(scenario, detuning_columns(scenario), results)

    def charging_time(self, scenario: Scenario) -> ChargingReport:
        try:
            report = charging_report(scenario, scenario.params, self.__task_runner)
        except DephasingBatteryException as e:
            e.add_note(f'scenario {scenario.name}')
            raise

        self.__logger.info(f'Charging time of scenario {scenario.name}: tau = {report.tau:.6g}')
        return report

    def __sweep(self, scenario: Scenario) -> SweepTable:
        points = self.__points(scenario)
        self.__logger.info(f'Sweeping {scenario.sweep.variable} over {len(points)} values')

        results = self.__task_runner.map(evaluate_sweep_point, points)
        return self.__combine(scenario, sweep_columns(scenario), results)

    def __points(self, scenario: Scenario) -> List[SweepPoint]:
        return [
            SweepPoint(scenario=scenario, value=value, params=params, task_runner=self.__inner_task_runner)
            for value, params in scenario.sweep_params()
        ]

    def __combine(self, scenario: Scenario, columns: Tuple[str, ...], results: List[SweepPointResult]) -> SweepTable:
        rows = [row for result in results for row in result.rows]
        notes = tuple(note for result in results for note in result.notes)

        for note in notes:
            self.__logger.warning(note)

        return self.__table(scenario, (scenario.sweep.variable,) + columns, rows, notes)

    @staticmethod
    def __table(scenario: Scenario, columns: Tuple[str, ...], rows: Sequence[Row],
                notes: Tuple[str, ...]) -> SweepTable:
        metadata: Dict[str, Any] = dict(
            scenario=scenario.name,
            model=scenario.model.value,
            solver=scenario.solver.value,
            analysis=scenario.analysis.value,
        )

        return SweepTable(columns=tuple(columns), rows=tuple(rows), notes=tuple(notes), metadata=metadata)
