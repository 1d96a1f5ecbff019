import math
from dataclasses import dataclass, field, replace
from typing import Any, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from dephasing_battery.domain.models.model_builders import MAX_STAR_BATTERIES
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.sweep import Sweep
from dephasing_battery.domain.scenarios.trajectory_settings import TrajectorySettings

KNOWN_OBSERVABLES = (
    'energy', 'ergotropy', 'entropy',
    'charger_population', 'sigma_z_b', 'sigma_minus_b_re', 'sigma_minus_b_im',
    'battery_amplitude_re', 'battery_amplitude_im', 'norm',
)

MOMENT_MODELS = (ModelKind.TWO_TLS, ModelKind.TWO_HO)
ANALYTIC_MODELS = (ModelKind.TWO_TLS, ModelKind.TWO_HO)


@dataclass(frozen=True)
class Scenario:
    model: ModelKind
    params: Params
    name: str = 'scenario'
    solver: SolverKind = SolverKind.LINDBLAD
    analysis: AnalysisKind = AnalysisKind.DYNAMICS
    observables: Tuple[str, ...] = ('energy', 'ergotropy')
    t_max: float = 30.0
    t_points: int = 301
    n: int = 1
    cutoff: Optional[int] = None
    n_batteries: int = 1
    sweep: Optional[Sweep] = None
    trajectories: TrajectorySettings = field(default_factory=TrajectorySettings)
    output: str = 'results'

    def __post_init__(self) -> None:
        if not self.name or any(character in self.name for character in '/\\'):
            raise InvalidScenarioException('name', f'must be a plain file name, got {self.name!r}')

        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise InvalidScenarioException('t_max', f'must be positive, got {self.t_max}')

        if self.t_points < 2:
            raise InvalidScenarioException('t_points', f'must be at least 2, got {self.t_points}')

        if self.n < 1:
            raise InvalidScenarioException('n', f'must be a positive integer, got {self.n}')

        if not self.observables:
            raise InvalidScenarioException('observables', 'at least one observable is required')

        for observable in self.observables:
            if observable not in KNOWN_OBSERVABLES:
                raise InvalidScenarioException('observables', f'unknown observable {observable}')

        if self.solver is SolverKind.MOMENTS and self.model not in MOMENT_MODELS:
            raise InvalidScenarioException('solver', f'moment equations are not available for {self.model.value}')

        if self.solver is SolverKind.ANALYTIC and self.model not in ANALYTIC_MODELS:
            raise InvalidScenarioException('solver', f'closed forms are not available for {self.model.value}')

        if self.solver is SolverKind.STOCHASTIC and self.analysis is not AnalysisKind.DYNAMICS:
            raise InvalidScenarioException('analysis', f'{self.analysis.value} needs a deterministic solver')

        if self.model is ModelKind.STAR_TLS:
            if not 1 <= self.n_batteries <= MAX_STAR_BATTERIES:
                raise InvalidScenarioException(
                    'n_batteries', f'must lie between 1 and {MAX_STAR_BATTERIES}, got {self.n_batteries}'
                )
        elif self.n_batteries != 1:
            raise InvalidScenarioException('n_batteries', 'only the star model takes several batteries')

        if self.cutoff is not None and self.cutoff < 2:
            raise InvalidScenarioException('cutoff', f'must be at least 2, got {self.cutoff}')

    @property
    def t_grid(self) -> NDArray[np.float64]:
        return np.linspace(0.0, self.t_max, self.t_points)

    def sweep_params(self) -> Tuple[Tuple[float, Params], ...]:
        if self.sweep is None:
            return ()

        return tuple((value, self.sweep.apply(self.params, value)) for value in self.sweep.grid)

    def with_changes(self, **changes: Any) -> 'Scenario':
        return replace(self, **changes)
