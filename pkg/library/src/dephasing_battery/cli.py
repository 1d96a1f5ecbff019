"""Command-line front end: `python -m dephasing_battery <command> ...`."""
import argparse
import hashlib
import logging
import sys
import time
import warnings
from importlib.metadata import PackageNotFoundError, version
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

import yaml

from dephasing_battery import dephasing_battery_toolkit
from dephasing_battery.domain.configuration_exception import ConfigurationException
from dephasing_battery.domain.dephasing_battery_exception import DephasingBatteryException
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.run_manifest import RunManifest
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.figure_catalogue import FIGURE_ALIASES, FIGURE_NAMES, FigureTask, \
    canonical_figure_name, figure_metadata, figure_scenarios, output_name
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import ANALYTIC_MODELS, Scenario
from dephasing_battery.domain.scenarios.scenario_runner import ScenarioRunner
from dephasing_battery.domain.scenarios.self_test import run_self_test
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep_points import CHARGING_TIME_COLUMNS, report_row
from dephasing_battery.domain.scenarios.sweep_table import SweepTable
from dephasing_battery.infrastructure.csv_result_writer import CsvResultWriter
from dephasing_battery.infrastructure.environment_settings import EnvironmentSettings
from dephasing_battery.infrastructure.key_value_config_reader import KeyValueConfigReader

DISTRIBUTION_NAME = 'dephasing-battery'
DEFAULT_OUTPUT = 'results'
LOG_FORMAT = '%(levelname)s %(message)s'

EXIT_SUCCESS = 0
EXIT_SOLVER_ERROR = 1
EXIT_CONFIGURATION_ERROR = 2


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    arguments = _argument_parser().parse_args(argv)
    _configure_logging(arguments.verbose)
    logger = getLogger('dephasing_battery')

    try:
        settings = EnvironmentSettings.from_environment()
        logger.debug(f'Using up to {settings.worker_count} worker process(es)')
        commands = Commands(
            dephasing_battery_toolkit(logger, settings.worker_count),
            KeyValueConfigReader(logger),
            arguments.output,
            stdout or sys.stdout,
            logger
        )

        match arguments.command:
            case 'simulate':
                return commands.simulate(Path(arguments.config))
            case 'sweep':
                return commands.sweep(Path(arguments.config), arguments.detuning)
            case 'charging-time':
                return commands.charging_time(arguments)
            case 'figure':
                return commands.figure(arguments.name)
            case 'selftest':
                return commands.self_test()
            case _:
                raise ConfigurationException(f'Unknown command {arguments.command}')
    except ConfigurationException as e:
        _log_failure(logger, 'Configuration error', e)
        return EXIT_CONFIGURATION_ERROR
    except DephasingBatteryException as e:
        _log_failure(logger, 'Solver error', e)
        return EXIT_SOLVER_ERROR
    except OSError as e:
        logger.error(f'Could not read or write {e.filename}: {e.strerror}')
        return EXIT_CONFIGURATION_ERROR


class Commands:
    def __init__(self, scenario_runner: ScenarioRunner, config_reader: KeyValueConfigReader,
                 output_directory: Optional[str], stdout: TextIO, logger: Logger):
        self.__scenario_runner = scenario_runner
        self.__config_reader = config_reader
        self.__output_directory = output_directory
        self.__stdout = stdout
        self.__logger = logger

    def simulate(self, config_path: Path) -> int:
        scenario = self.__config_reader.read(config_path)

        with _RecordedRun(scenario) as run:
            result = self.__scenario_runner.run_scenario(scenario)

        self.__write(scenario, scenario.name, result, run.manifest())
        return EXIT_SUCCESS

    def sweep(self, config_path: Path, detuning: bool) -> int:
        scenario = self.__config_reader.read(config_path)
        if scenario.sweep is None:
            raise InvalidScenarioException('sweep', 'the sweep command needs a [sweep] section')

        with _RecordedRun(scenario) as run:
            if detuning:
                result = self.__scenario_runner.sweep_detuning(scenario)
            else:
                result = self.__scenario_runner.run_scenario(scenario)

        self.__write(scenario, scenario.name, result, run.manifest())
        return EXIT_SUCCESS

    def charging_time(self, arguments: argparse.Namespace) -> int:
        scenario = self.__charging_time_scenario(arguments)

        with _RecordedRun(scenario) as run:
            report = self.__scenario_runner.charging_time(scenario)

        table = SweepTable(
            columns=CHARGING_TIME_COLUMNS,
            rows=(report_row(report),),
            notes=report.notes,
            metadata=dict(scenario=scenario.name, model=scenario.model.value, solver=scenario.solver.value),
        )
        self.__write(scenario, scenario.name, table, run.manifest())

        fields = dict(
            tau=report.tau, n=report.n, e_ss=report.e_ss, e_max_transient=report.e_max_transient,
            gamma_c=report.gamma_c, converged=report.converged, horizon=report.horizon,
        )
        yaml.safe_dump(fields, self.__stdout, sort_keys=False)
        return EXIT_SUCCESS

    def figure(self, name: str) -> int:
        name = canonical_figure_name(name)
        tasks = figure_scenarios(name)
        self.__logger.info(f'Regenerating {name} from {len(tasks)} scenario(s)')

        for task in tasks:
            with _RecordedRun(task.scenario) as run:
                if task.detuning:
                    result = self.__scenario_runner.sweep_detuning(task.scenario)
                else:
                    result = self.__scenario_runner.run_scenario(task.scenario)

                fitted = self.__fitted_values(task, result)

            manifest = run.manifest(figure=name, **fitted)
            for key, value in fitted.items():
                print(f'{output_name(name, task)} {key}: {value:.10g}', file=self.__stdout)

            if task.pivot and isinstance(result, SweepTable):
                for observable in task.pivot:
                    self.__write(
                        task.scenario,
                        f'{output_name(name, task)}-{observable}',
                        result.pivot(observable),
                        manifest
                    )
            else:
                self.__write(task.scenario, output_name(name, task), result, manifest)

        return EXIT_SUCCESS

    def self_test(self) -> int:
        results = run_self_test(self.__logger)

        for result in results:
            print(f'{"PASS" if result.passed else "FAIL"} {result.name}: {result.detail}', file=self.__stdout)

        failures = [result for result in results if not result.passed]
        print(f'{len(results) - len(failures)} of {len(results)} checks passed', file=self.__stdout)

        return EXIT_SUCCESS if not failures else EXIT_SOLVER_ERROR

    def __charging_time_scenario(self, arguments: argparse.Namespace) -> Scenario:
        if arguments.config is not None:
            return self.__config_reader.read(Path(arguments.config)).with_changes(
                analysis=AnalysisKind.CHARGING_TIME, sweep=None
            )

        model = ModelKind(arguments.model)
        solver = SolverKind(arguments.solver) if arguments.solver else (
            SolverKind.ANALYTIC if model in ANALYTIC_MODELS else SolverKind.LINDBLAD
        )

        return Scenario(
            model=model,
            params=Params(drive=arguments.F, g=arguments.g, gamma_c=arguments.gamma),
            name='charging-time',
            solver=solver,
            analysis=AnalysisKind.CHARGING_TIME,
            n=arguments.n,
        )

    def __fitted_values(self, task: FigureTask, result: TimeSeries | SweepTable) -> Dict[str, float]:
        try:
            return figure_metadata(task, result)
        except NotConvergedException as e:
            self.__logger.warning(f'No fit for {task.scenario.name}: {e}')
            return {}

    def __write(self, scenario: Scenario, name: str, result: TimeSeries | SweepTable, manifest: RunManifest) -> None:
        writer = CsvResultWriter(Path(self.__output_directory or scenario.output), self.__logger)

        if isinstance(result, TimeSeries):
            path = writer.write_series(name, result, manifest, scenario.observables)
        else:
            path = writer.write_table(name, result, manifest)

        print(path, file=self.__stdout)


class _RecordedRun:
    """Times a scenario run and collects the warnings it raises for the manifest."""

    def __init__(self, scenario: Scenario):
        self.__scenario = scenario
        self.__started = 0.0
        self.__wall_time = 0.0
        self.__recorded: List[warnings.WarningMessage] = []
        self.__catcher = warnings.catch_warnings(record=True)

    def __enter__(self) -> '_RecordedRun':
        self.__recorded = self.__catcher.__enter__() or []
        warnings.simplefilter('always')
        self.__started = time.perf_counter()
        return self

    def __exit__(self, *exc_info: Any) -> None:
        self.__wall_time = time.perf_counter() - self.__started
        self.__catcher.__exit__(*exc_info)

    def manifest(self, **metadata: Any) -> RunManifest:
        scenario = self.__scenario
        messages = tuple(dict.fromkeys(
            f'{warning.category.__name__}: {warning.message}' for warning in self.__recorded
        ))

        return RunManifest(
            config_hash=config_hash(scenario),
            toolkit_version=toolkit_version(),
            seed=scenario.trajectories.seed if scenario.solver is SolverKind.STOCHASTIC else None,
            wall_time_seconds=round(self.__wall_time, 6),
            warnings=messages,
            metadata=dict(scenario=scenario.name) | metadata,
        )


def config_hash(scenario: Scenario) -> str:
    return hashlib.sha256(KeyValueConfigReader.canonical(scenario).encode('utf-8')).hexdigest()


def toolkit_version() -> str:
    try:
        return version(DISTRIBUTION_NAME)
    except PackageNotFoundError:
        return 'unknown'


def _argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='dephasing-battery',
        description='Dephasing-assisted charging of quantum batteries: simulations, sweeps and figure data.'
    )
    parser.add_argument('--output', default=None,
                        help=f'directory for CSV and manifest files (default: the scenario output, '
                             f'{DEFAULT_OUTPUT})')
    parser.add_argument('--verbose', action='store_true', help='log numerical diagnostics at DEBUG level')

    commands = parser.add_subparsers(dest='command', required=True)

    simulate = commands.add_parser('simulate', help='run one scenario file')
    simulate.add_argument('config', help='scenario configuration file')

    sweep = commands.add_parser('sweep', help='run the [sweep] grid of a scenario file')
    sweep.add_argument('config', help='scenario configuration file')
    sweep.add_argument('--detuning', action='store_true',
                       help='tabulate closed-case maxima against dephased steady values')

    charging_time = commands.add_parser('charging-time', help='charging time to within e^-n of the steady energy')
    charging_time.add_argument('config', nargs='?', default=None, help='scenario configuration file')
    charging_time.add_argument('--model', default=ModelKind.TWO_TLS.value, choices=[kind.value for kind in ModelKind])
    charging_time.add_argument('--solver', default=None, choices=[kind.value for kind in SolverKind])
    charging_time.add_argument('--F', type=float, default=0.5, help='drive amplitude')
    charging_time.add_argument('--g', type=float, default=1.0, help='charger-battery coupling')
    charging_time.add_argument('--gamma', type=float, default=1.0, help='charger dephasing rate gamma_C')
    charging_time.add_argument('--n', type=int, default=1, help='precision exponent')

    figure = commands.add_parser('figure', help='regenerate the data behind a figure')
    figure.add_argument('name', choices=FIGURE_NAMES + tuple(FIGURE_ALIASES))

    commands.add_parser('selftest', help='run the oracle cross-checks')

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.INFO,
        format=LOG_FORMAT,
        force=True
    )


def _log_failure(logger: Logger, kind: str, exception: Exception) -> None:
    logger.error(f'{kind}: {exception}')

    for note in getattr(exception, '__notes__', ()):
        logger.error(f'  while running {note}')

    logger.debug('Traceback', exc_info=exception)
