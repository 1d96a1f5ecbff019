from dataclasses import dataclass
from typing import Tuple

import numpy as np

from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException

PARAMS_VARIABLES = ('drive', 'g', 'gamma_c', 'delta_cd', 'delta_bd', 'omega_b')
DETUNING_VARIABLES = ('delta_cd', 'delta_bd', 'delta_cb', 'delta_drive')
SWEEP_VARIABLES = PARAMS_VARIABLES + ('drive_ratio', 'delta_cb', 'delta_drive')


@dataclass(frozen=True)
class Sweep:
    variable: str
    grid: Tuple[float, ...]

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise InvalidScenarioException('sweep.variable', f'cannot sweep {self.variable}')

        if not self.grid:
            raise InvalidScenarioException('sweep.grid', 'sweep grid is empty')

        steps = np.diff(np.array(self.grid, dtype=np.float64))
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise InvalidScenarioException('sweep.grid', 'sweep grid must be strictly monotone')

    @property
    def is_detuning(self) -> bool:
        return self.variable in DETUNING_VARIABLES

    def apply(self, params: Params, value: float) -> Params:
        match self.variable:
            case 'drive_ratio':
                return params.with_changes(drive=value * params.g)
            case 'delta_cb':
                return params.with_changes(delta_cd=value, delta_bd=0.0)
            case 'delta_drive':
                return params.with_changes(delta_cd=value, delta_bd=value)
            case _:
                return params.with_changes(**{self.variable: value})
