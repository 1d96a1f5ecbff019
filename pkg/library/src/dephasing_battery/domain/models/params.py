import math
from dataclasses import dataclass, fields, replace
from typing import Any

from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException

RESONANCE_TOLERANCE = 1e-15


@dataclass(frozen=True)
class Params:
    drive: float = 0.5
    g: float = 1.0
    gamma_c: float = 0.0
    delta_cd: float = 0.0
    delta_bd: float = 0.0
    omega_b: float = 1.0

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)

            if not math.isfinite(value):
                raise InvalidParametersException(field.name, f'must be finite, got {value}')

        for name in ('drive', 'g', 'gamma_c'):
            if getattr(self, name) < 0:
                raise InvalidParametersException(name, f'must be non-negative, got {getattr(self, name)}')

        if self.omega_b <= 0:
            raise InvalidParametersException('omega_b', f'must be positive, got {self.omega_b}')

    @property
    def delta_cb(self) -> float:
        return self.delta_cd - self.delta_bd

    @property
    def drive_ratio(self) -> float:
        if self.g == 0:
            raise InvalidParametersException('g', 'drive ratio F/g needs a non-zero coupling')

        return self.drive / self.g

    @property
    def is_resonant(self) -> bool:
        return abs(self.delta_cd) <= RESONANCE_TOLERANCE and abs(self.delta_bd) <= RESONANCE_TOLERANCE

    def with_changes(self, **changes: Any) -> 'Params':
        return replace(self, **changes)
