from abc import ABCMeta, abstractmethod
from pathlib import Path
from typing import Optional, Tuple

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.run_manifest import RunManifest
from dephasing_battery.domain.scenarios.sweep_table import SweepTable


class ResultWriter(metaclass=ABCMeta):
    @abstractmethod
    def write_series(self, name: str, series: TimeSeries, manifest: RunManifest,
                     observables: Optional[Tuple[str, ...]] = None) -> Path:
        pass

    @abstractmethod
    def write_table(self, name: str, table: SweepTable, manifest: RunManifest) -> Path:
        pass
