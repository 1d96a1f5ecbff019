import os
from dataclasses import dataclass
from typing import Mapping, Optional

from dephasing_battery.domain.configuration_exception import ConfigurationException

THREADS_VARIABLE = 'QB_THREADS'


@dataclass(frozen=True)
class EnvironmentSettings:
    max_workers: Optional[int] = None

    @staticmethod
    def from_environment(environment: Mapping[str, str] = os.environ) -> 'EnvironmentSettings':
        value = environment.get(THREADS_VARIABLE)
        if value is None or value.strip() == '':
            return EnvironmentSettings()

        try:
            max_workers = int(value)
        except ValueError as e:
            raise ConfigurationException(f'{THREADS_VARIABLE} must be a positive integer, got {value!r}') from e

        if max_workers < 1:
            raise ConfigurationException(f'{THREADS_VARIABLE} must be a positive integer, got {value!r}')

        return EnvironmentSettings(max_workers)

    @property
    def worker_count(self) -> int:
        return self.max_workers or os.cpu_count() or 1
