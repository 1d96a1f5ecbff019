"""Scenario files: flat `key = value` lines with optional [trajectories] and [sweep] sections."""
import re
from dataclasses import dataclass
from enum import Enum
from logging import Logger, getLogger
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Type

import numpy as np

from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep import Sweep
from dephasing_battery.domain.scenarios.trajectory_settings import TrajectorySettings
from dephasing_battery.domain.stochastic.unravelling_scheme import UnravellingScheme
from dephasing_battery.infrastructure.config_parse_exception import ConfigParseException

LOGGER = getLogger(__name__)

PARAMETER_KEYS = dict(F='drive', g='g', gamma_C='gamma_c', delta_Cd='delta_cd', delta_Bd='delta_bd', omega_B='omega_b')
SWEEP_KEYS = PARAMETER_KEYS | dict(drive_ratio='drive_ratio', delta_CB='delta_cb', delta_drive='delta_drive')
SCENARIO_KEYS = (
    'model', 'name', 'solver', 'analysis', 'observables', 't_max', 't_points', 'n', 'cutoff', 'n_batteries', 'output'
)
TRAJECTORY_KEYS = ('n_traj', 'dt', 'seed', 'scheme', 'renormalize')
SECTION_KEYS: Dict[str, Tuple[str, ...]] = {
    '': SCENARIO_KEYS + tuple(PARAMETER_KEYS),
    'trajectories': TRAJECTORY_KEYS,
    'sweep': tuple(SWEEP_KEYS),
}

SECTION_PATTERN = re.compile(r'^\s*\[\s*(?P<name>[A-Za-z_]+)\s*]\s*$')
ENTRY_PATTERN = re.compile(r'^\s*(?P<key>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(?P<value>.*?)\s*$')
GRID_PATTERN = re.compile(r'^(?P<kind>linspace|logspace|list)\s*\((?P<arguments>.*)\)$')

TRUE_WORDS = ('true', 'yes', 'on', '1')
FALSE_WORDS = ('false', 'no', 'off', '0')


@dataclass(frozen=True)
class Entry:
    value: str
    line: int
    column: int


class KeyValueConfigReader:
    def __init__(self, logger: Logger):
        self.__logger = logger

    def read(self, path: Path) -> Scenario:
        self.__logger.info(f'Reading scenario configuration from {path}')
        return self.parse(path.read_text(), str(path))

    def parse(self, text: str, source: str = '<config>') -> Scenario:
        sections = _Sections(source, text)

        scenario_entries = sections.entries('')
        if 'model' not in scenario_entries:
            raise InvalidScenarioException('model', 'is required')

        values = _Values(source, scenario_entries)
        scenario = _validated(
            lambda: Scenario(
                model=values.enum('model', ModelKind),
                params=_validated(lambda: Params(**{
                    field: values.number(key) for key, field in PARAMETER_KEYS.items() if key in scenario_entries
                })),
                **_present(dict(
                    name=values.text('name'),
                    solver=values.enum('solver', SolverKind),
                    analysis=values.enum('analysis', AnalysisKind),
                    observables=values.names('observables'),
                    t_max=values.number('t_max'),
                    t_points=values.integer('t_points'),
                    n=values.integer('n'),
                    cutoff=values.integer('cutoff'),
                    n_batteries=values.integer('n_batteries'),
                    output=values.text('output'),
                )),
                trajectories=self.__trajectories(_Values(source, sections.entries('trajectories'))),
                sweep=_sweep(source, sections.entries('sweep')),
            )
        )

        self.__logger.debug(f'Parsed scenario {scenario.name} from {source}')
        return scenario

    @staticmethod
    def canonical(scenario: Scenario) -> str:
        lines = [
            f'model = {scenario.model.value}',
            f'name = {scenario.name}',
            f'solver = {scenario.solver.value}',
            f'analysis = {scenario.analysis.value}',
        ]
        lines += [f'{key} = {_number(getattr(scenario.params, field))}' for key, field in PARAMETER_KEYS.items()]
        lines += [
            f'observables = {", ".join(scenario.observables)}',
            f't_max = {_number(scenario.t_max)}',
            f't_points = {scenario.t_points}',
            f'n = {scenario.n}',
        ]
        if scenario.cutoff is not None:
            lines.append(f'cutoff = {scenario.cutoff}')
        lines += [f'n_batteries = {scenario.n_batteries}', f'output = {scenario.output}']

        settings = scenario.trajectories
        lines += [
            '',
            '[trajectories]',
            f'n_traj = {settings.n_traj}',
            f'dt = {_number(settings.dt)}',
            f'seed = {settings.seed}',
            f'scheme = {settings.scheme.value}',
            f'renormalize = {str(settings.renormalize).lower()}',
        ]

        if scenario.sweep is not None:
            key = next(key for key, field in SWEEP_KEYS.items() if field == scenario.sweep.variable)
            lines += ['', '[sweep]', f'{key} = list({", ".join(_number(value) for value in scenario.sweep.grid)})']

        return '\n'.join(lines) + '\n'

    @staticmethod
    def __trajectories(values: '_Values') -> TrajectorySettings:
        return _validated(lambda: TrajectorySettings(**_present(dict(
            n_traj=values.integer('n_traj'),
            dt=values.number('dt'),
            seed=values.integer('seed'),
            scheme=values.enum('scheme', UnravellingScheme),
            renormalize=values.boolean('renormalize'),
        ))))


def parse_config(path: Path) -> Scenario:
    return KeyValueConfigReader(LOGGER).read(Path(path))


def canonical_config(scenario: Scenario) -> str:
    return KeyValueConfigReader.canonical(scenario)


class _Sections:
    def __init__(self, source: str, text: str):
        self.__source = source
        self.__sections: Dict[str, Dict[str, Entry]] = {'': {}}

        current = ''
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0]
            if not line.strip():
                continue

            section = SECTION_PATTERN.match(line)
            if section:
                current = section.group('name')
                if current not in SECTION_KEYS:
                    raise ConfigParseException(
                        source, number, section.start('name') + 1, f'unknown section [{current}]'
                    )
                if current in self.__sections:
                    raise ConfigParseException(source, number, 1, f'section [{current}] appears twice')
                self.__sections[current] = {}
                continue

            entry = ENTRY_PATTERN.match(line)
            if not entry:
                raise ConfigParseException(source, number, len(line) - len(line.lstrip()) + 1,
                                           'expected `key = value` or a [section] header')

            key = entry.group('key')
            if key not in SECTION_KEYS[current]:
                where = f'section [{current}]' if current else 'the scenario block'
                raise ConfigParseException(source, number, entry.start('key') + 1, f'unknown key {key} in {where}')

            if key in self.__sections[current]:
                raise ConfigParseException(source, number, entry.start('key') + 1, f'duplicate key {key}')

            if not entry.group('value'):
                raise ConfigParseException(source, number, entry.end('key') + 1, f'{key} has no value')

            self.__sections[current][key] = Entry(entry.group('value'), number, entry.start('value') + 1)

    def entries(self, section: str) -> Dict[str, Entry]:
        return self.__sections.get(section, {})


class _Values:
    def __init__(self, source: str, entries: Dict[str, Entry]):
        self.__source = source
        self.__entries = entries

    def text(self, key: str) -> Optional[str]:
        entry = self.__entries.get(key)
        return None if entry is None else entry.value

    def number(self, key: str) -> Optional[float]:
        entry = self.__entries.get(key)
        return None if entry is None else _parse_float(self.__source, entry, key)

    def integer(self, key: str) -> Optional[int]:
        entry = self.__entries.get(key)
        if entry is None:
            return None

        try:
            return int(entry.value)
        except ValueError:
            raise ConfigParseException(
                self.__source, entry.line, entry.column, f'{key}: expected an integer, got {entry.value!r}'
            ) from None

    def boolean(self, key: str) -> Optional[bool]:
        entry = self.__entries.get(key)
        if entry is None:
            return None

        if entry.value.lower() in TRUE_WORDS:
            return True
        if entry.value.lower() in FALSE_WORDS:
            return False

        raise ConfigParseException(
            self.__source, entry.line, entry.column, f'{key}: expected true or false, got {entry.value!r}'
        )

    def enum[E: Enum](self, key: str, kind: Type[E]) -> Optional[E]:
        entry = self.__entries.get(key)
        if entry is None:
            return None

        try:
            return kind(entry.value)
        except ValueError:
            choices = ', '.join(str(member.value) for member in kind)
            raise ConfigParseException(
                self.__source, entry.line, entry.column, f'{key}: expected one of {choices}, got {entry.value!r}'
            ) from None

    def names(self, key: str) -> Optional[Tuple[str, ...]]:
        entry = self.__entries.get(key)
        if entry is None:
            return None

        return tuple(name.strip() for name in entry.value.split(',') if name.strip())


def _sweep(source: str, entries: Dict[str, Entry]) -> Optional[Sweep]:
    if not entries:
        return None

    if len(entries) > 1:
        entry = list(entries.values())[1]
        raise ConfigParseException(source, entry.line, 1, 'a [sweep] section holds exactly one variable')

    key, entry = next(iter(entries.items()))
    return _validated(lambda: Sweep(SWEEP_KEYS[key], _parse_grid(source, entry, key)))


def _parse_grid(source: str, entry: Entry, key: str) -> Tuple[float, ...]:
    match = GRID_PATTERN.match(entry.value)
    if not match:
        raise ConfigParseException(
            source, entry.line, entry.column, f'{key}: expected linspace(...), logspace(...) or list(...)'
        )

    arguments: List[Entry] = []
    offset = entry.column + match.start('arguments')
    for part in match.group('arguments').split(','):
        if part.strip():
            arguments.append(Entry(part.strip(), entry.line, offset + len(part) - len(part.lstrip())))
        offset += len(part) + 1

    values = [_parse_float(source, argument, key) for argument in arguments]

    if match.group('kind') == 'list':
        return tuple(values)

    if len(values) != 3 or values[2] != int(values[2]) or values[2] < 1:
        raise ConfigParseException(
            source, entry.line, entry.column, f'{key}: {match.group("kind")} takes start, stop and a positive count'
        )

    start, stop, count = values[0], values[1], int(values[2])
    if match.group('kind') == 'linspace':
        return tuple(np.linspace(start, stop, count).tolist())

    if start <= 0 or stop <= 0:
        raise ConfigParseException(source, entry.line, entry.column, f'{key}: logspace endpoints must be positive')

    # endpoints are values, not exponents
    return tuple(np.geomspace(start, stop, count).tolist())


def _parse_float(source: str, entry: Entry, key: str) -> float:
    try:
        return float(entry.value)
    except ValueError:
        raise ConfigParseException(
            source, entry.line, entry.column, f'{key}: expected a number, got {entry.value!r}'
        ) from None


def _validated[T](build: Callable[[], T]) -> T:
    try:
        return build()
    except InvalidParametersException as e:
        config_key = next((key for key, field in PARAMETER_KEYS.items() if field == e.field_name), e.field_name)
        raise InvalidParametersException(config_key, e.detail) from e


def _present(values: Dict[str, object]) -> Dict[str, object]:
    return {key: value for key, value in values.items() if value is not None}


def _number(value: float) -> str:
    return repr(float(value))
