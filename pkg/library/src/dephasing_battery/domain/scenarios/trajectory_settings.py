import math
from dataclasses import dataclass

from dephasing_battery.domain.stochastic.trajectory_config import TrajectoryConfig
from dephasing_battery.domain.stochastic.unravelling_scheme import UnravellingScheme


@dataclass(frozen=True)
class TrajectorySettings:
    n_traj: int = 1000
    dt: float = 1e-3
    seed: int = 0
    scheme: UnravellingScheme = UnravellingScheme.MEASUREMENT_NONLINEAR
    renormalize: bool = True

    def __post_init__(self) -> None:
        self.config_for(self.dt)

    def config_for(self, t_max: float) -> TrajectoryConfig:
        return TrajectoryConfig(
            dt=self.dt,
            n_steps=max(1, math.ceil(round(t_max / self.dt, 9))),
            n_traj=self.n_traj,
            seed=self.seed,
            scheme=self.scheme,
            renormalize=self.renormalize,
        )
