"""Canned scenarios that regenerate the data behind each plotted experiment."""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_long_time_slope
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep import Sweep
from dephasing_battery.domain.scenarios.sweep_table import SweepTable

FIGURE_NAMES = (
    'charging-curves', 'charging-time-weak-drive', 'charging-time-strong-drive', 'charging-time-balanced-drive',
    'detuned-charger', 'oscillator-curves', 'hybrid-curves', 'star-steady-state', 'oscillator-charging',
    'detuned-drive',
)
# short identifiers accepted in place of the descriptive names
FIGURE_ALIASES = {
    'fig2': 'charging-curves',
    'fig3a': 'charging-time-weak-drive',
    'fig3b': 'charging-time-strong-drive',
    'fig3c': 'charging-time-balanced-drive',
    'fig4': 'detuned-charger',
    'fig5': 'oscillator-curves',
    'fig6': 'hybrid-curves',
    'sm-star': 'star-steady-state',
    'sm-ho': 'oscillator-charging',
    'sm-detuned': 'detuned-drive',
}

CHARGING_TIME_ORDER = 18
LARGE_GAMMA_FIT_START = 10.0
LONG_TIME_FIT_WINDOW = (100.0, 300.0)


class FigureFit(Enum):
    NONE = 'none'
    LARGE_GAMMA_SLOPE = 'large_gamma_slope'
    LONG_TIME_SLOPE = 'long_time_slope'


@dataclass(frozen=True)
class FigureTask:
    suffix: str
    scenario: Scenario
    detuning: bool = False
    pivot: Tuple[str, ...] = ()
    fit: FigureFit = FigureFit.NONE


def canonical_figure_name(name: str) -> str:
    return FIGURE_ALIASES.get(name, name)


def figure_scenarios(name: str) -> Tuple[FigureTask, ...]:
    name = canonical_figure_name(name)

    match name:
        case 'charging-curves':
            return _charging_curves()
        case 'charging-time-weak-drive':
            return _charging_times(name, 0.1)
        case 'charging-time-strong-drive':
            return _charging_times(name, 10.0)
        case 'charging-time-balanced-drive':
            return _charging_times(name, 0.5, FigureFit.LARGE_GAMMA_SLOPE)
        case 'detuned-charger':
            return _detuned_charger()
        case 'oscillator-curves':
            return _gamma_dynamics('oscillator-curves', ModelKind.TWO_HO, (0.1, 4.0, 30.0))
        case 'hybrid-curves':
            return _gamma_dynamics('hybrid-curves', ModelKind.TLS_HO, (0.1, 1.0, 10.0))
        case 'star-steady-state':
            return _star_steady_state()
        case 'oscillator-charging':
            return _oscillator_charging()
        case 'detuned-drive':
            return _detuned_drive()
        case _:
            raise InvalidScenarioException(
                'figure', f'unknown figure {name}, expected one of {", ".join(FIGURE_NAMES)}'
            )


def output_name(figure: str, task: FigureTask) -> str:
    return f'{figure}-{task.suffix}' if task.suffix else figure


def figure_metadata(task: FigureTask, result: TimeSeries | SweepTable) -> Dict[str, float]:
    match task.fit:
        case FigureFit.LARGE_GAMMA_SLOPE if isinstance(result, SweepTable):
            return dict(large_gamma_slope=large_gamma_slope(result, task.scenario.n, task.scenario.params.g))
        case FigureFit.LONG_TIME_SLOPE if isinstance(result, TimeSeries):
            return dict(
                long_time_slope=long_time_slope(result, *LONG_TIME_FIT_WINDOW),
                long_time_slope_closed_form=ho_long_time_slope(task.scenario.params),
            )
        case _:
            return {}


def large_gamma_slope(table: SweepTable, n: int, g: float) -> float:
    """Least-squares kappa in tau = kappa n gamma_C / g^2 over the converged points with gamma_C >= 10 g."""
    gamma = table.column('gamma_c')
    tau = table.column('tau')
    selected = (gamma >= LARGE_GAMMA_FIT_START * g) & np.isfinite(tau)

    if not np.any(selected):
        raise NotConvergedException(f'No converged charging times with gamma_C >= {LARGE_GAMMA_FIT_START} g to fit')

    scale = n * gamma[selected] / g ** 2
    (kappa,), *_ = np.linalg.lstsq(scale[:, np.newaxis], tau[selected], rcond=None)

    return float(kappa)


def long_time_slope(series: TimeSeries, start: float, end: float) -> float:
    window = (series.times >= start) & (series.times <= end)

    if np.count_nonzero(window) < 2:
        raise NotConvergedException(f'Series does not cover the fit window [{start}, {end}]')

    slope, _ = np.polyfit(series.times[window], np.asarray(series.energy)[window], 1)
    return float(slope)


def _charging_curves() -> Tuple[FigureTask, ...]:
    scenario = Scenario(
        model=ModelKind.TWO_TLS,
        params=Params(drive=0.5, g=1.0),
        name='charging-curves',
        solver=SolverKind.ANALYTIC,
        t_max=30.0,
        t_points=601,
        sweep=Sweep('gamma_c', (0.01, 1.15, 30.0)),
    )

    return (FigureTask('', scenario, pivot=('energy', 'ergotropy')),)


def _charging_times(name: str, drive: float, fit: FigureFit = FigureFit.NONE) -> Tuple[FigureTask, ...]:
    scenario = Scenario(
        model=ModelKind.TWO_TLS,
        params=Params(drive=drive, g=1.0),
        name=name,
        solver=SolverKind.ANALYTIC,
        analysis=AnalysisKind.CHARGING_TIME,
        n=CHARGING_TIME_ORDER,
        sweep=Sweep('gamma_c', _geometric(0.01, 100.0, 60)),
    )

    return (FigureTask('', scenario, fit=fit),)


def _detuned_charger() -> Tuple[FigureTask, ...]:
    params = Params(drive=0.1, g=1.0, gamma_c=0.1)
    detuning = Scenario(
        model=ModelKind.TWO_TLS,
        params=params,
        name='detuned-charger-detuning',
        solver=SolverKind.MOMENTS,
        sweep=Sweep('delta_cb', _linear(-0.2, 0.2, 41)),
    )
    dynamics = Scenario(
        model=ModelKind.TWO_TLS,
        params=params.with_changes(delta_cd=0.03),
        name='detuned-charger-dynamics',
        solver=SolverKind.MOMENTS,
        t_max=300.0,
        t_points=3001,
        sweep=Sweep('gamma_c', (0.0, 0.1)),
    )

    return (
        FigureTask('detuning', detuning, detuning=True),
        FigureTask('dynamics', dynamics, pivot=('energy', 'ergotropy')),
    )


def _gamma_dynamics(name: str, model: ModelKind, gammas: Tuple[float, ...]) -> Tuple[FigureTask, ...]:
    scenario = Scenario(
        model=model,
        params=Params(drive=0.5, g=1.0),
        name=name,
        t_max=30.0,
        t_points=301,
        sweep=Sweep('gamma_c', gammas),
    )

    return (FigureTask('', scenario, pivot=('energy', 'ergotropy')),)


def _star_steady_state() -> Tuple[FigureTask, ...]:
    tasks: List[FigureTask] = []

    for n_batteries in (1, 2, 3):
        scenario = Scenario(
            model=ModelKind.STAR_TLS,
            params=Params(drive=0.5, g=1.0, gamma_c=1.0),
            name=f'star-steady-state-n{n_batteries}',
            analysis=AnalysisKind.STEADY_STATE,
            n_batteries=n_batteries,
            sweep=Sweep('drive_ratio', _linear(0.05, 1.5, 146)),
        )
        tasks.append(FigureTask(f'n{n_batteries}', scenario))

    return tuple(tasks)


def _oscillator_charging() -> Tuple[FigureTask, ...]:
    tau = Scenario(
        model=ModelKind.TWO_HO,
        params=Params(drive=0.5, g=1.0),
        name='oscillator-charging-tau',
        solver=SolverKind.MOMENTS,
        analysis=AnalysisKind.CHARGING_TIME,
        n=CHARGING_TIME_ORDER,
        sweep=Sweep('gamma_c', _geometric(0.1, 100.0, 30)),
    )
    steady = Scenario(
        model=ModelKind.TWO_HO,
        params=Params(drive=0.5, g=1.0, gamma_c=1.0),
        name='oscillator-charging-steady',
        analysis=AnalysisKind.STEADY_STATE,
        sweep=Sweep('drive_ratio', _linear(0.1, 1.0, 10)),
    )

    return FigureTask('tau', tau), FigureTask('steady', steady)


def _detuned_drive() -> Tuple[FigureTask, ...]:
    params = Params(drive=0.1, g=1.0, gamma_c=0.1)
    tls = Scenario(
        model=ModelKind.TWO_TLS,
        params=params,
        name='detuned-drive-tls',
        solver=SolverKind.MOMENTS,
        t_max=400.0,
        t_points=4001,
        sweep=Sweep('delta_drive', _linear(-0.2, 0.2, 21)),
    )
    ho = Scenario(
        model=ModelKind.TWO_HO,
        params=params,
        name='detuned-drive-ho',
        t_max=400.0,
        t_points=4001,
        sweep=Sweep('delta_drive', _linear(-0.5, 0.5, 21)),
    )
    growth = Scenario(
        model=ModelKind.TWO_HO,
        params=params.with_changes(delta_cd=0.5, delta_bd=0.5),
        name='detuned-drive-ho-growth',
        solver=SolverKind.MOMENTS,
        observables=('energy',),
        t_max=300.0,
        t_points=3001,
    )

    return (
        FigureTask('tls', tls, detuning=True),
        FigureTask('ho', ho, detuning=True),
        FigureTask('ho-growth', growth, fit=FigureFit.LONG_TIME_SLOPE),
    )


def _geometric(start: float, stop: float, count: int) -> Tuple[float, ...]:
    return tuple(np.geomspace(start, stop, count).tolist())


def _linear(start: float, stop: float, count: int) -> Tuple[float, ...]:
    return tuple(np.round(np.linspace(start, stop, count), 12).tolist())
