from dataclasses import dataclass
from typing import Tuple

from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.stochastic.trajectory_config import TrajectoryConfig


@dataclass(frozen=True, eq=False)
class TrajectoryBatch:
    model: ModelSpec
    config: TrajectoryConfig
    sample_steps: Tuple[int, ...]
    first_index: int
    count: int
