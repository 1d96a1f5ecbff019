from dataclasses import dataclass

import numpy as np

from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.stochastic.invalid_trajectory_config_exception import InvalidTrajectoryConfigException
from dephasing_battery.domain.stochastic.unravelling_scheme import UnravellingScheme

STABILITY_LIMIT = 0.05
MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class TrajectoryConfig:
    dt: float
    n_steps: int
    n_traj: int
    seed: int = 0
    scheme: UnravellingScheme = UnravellingScheme.MEASUREMENT_NONLINEAR
    renormalize: bool = True

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise InvalidTrajectoryConfigException('dt', f'must be positive, got {self.dt}')

        if self.n_steps < 1:
            raise InvalidTrajectoryConfigException('n_steps', f'must be at least 1, got {self.n_steps}')

        if self.n_traj < 1:
            raise InvalidTrajectoryConfigException('n_traj', f'must be at least 1, got {self.n_traj}')

        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidTrajectoryConfigException('seed', f'must be a 64-bit unsigned integer, got {self.seed}')

    @property
    def duration(self) -> float:
        return self.dt * self.n_steps

    def validate_for(self, model: ModelSpec) -> None:
        if self.dt * model.params.gamma_c > STABILITY_LIMIT:
            raise InvalidTrajectoryConfigException(
                'dt', f'dt * gamma_C = {self.dt * model.params.gamma_c:.3g} exceeds {STABILITY_LIMIT}'
            )

        hamiltonian_norm = float(np.linalg.norm(model.hamiltonian, 2))
        if self.dt * hamiltonian_norm > STABILITY_LIMIT:
            raise InvalidTrajectoryConfigException(
                'dt', f'dt * |H| = {self.dt * hamiltonian_norm:.3g} exceeds {STABILITY_LIMIT}'
            )
