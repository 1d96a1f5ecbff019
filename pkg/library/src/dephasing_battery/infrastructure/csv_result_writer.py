from logging import Logger
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, TextIO, Tuple

import numpy as np
import yaml

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.result_writer import ResultWriter
from dephasing_battery.domain.run_manifest import RunManifest
from dephasing_battery.domain.scenarios.sweep_table import SweepTable

VALUE_FORMAT = '%.17g'


class CsvResultWriter(ResultWriter):
    def __init__(self, output_directory: Path, logger: Logger):
        self.__output_directory = output_directory
        self.__logger = logger

    def write_series(self, name: str, series: TimeSeries, manifest: RunManifest,
                     observables: Optional[Tuple[str, ...]] = None) -> Path:
        columns = series.columns(observables)
        data = np.column_stack([columns[column] for column in columns])

        return self.__write(name, tuple(columns), data, series.metadata, series.notes, manifest)

    def write_table(self, name: str, table: SweepTable, manifest: RunManifest) -> Path:
        data = np.array(table.rows, dtype=np.float64).reshape(len(table.rows), len(table.columns))

        return self.__write(name, table.columns, data, table.metadata, table.notes, manifest)

    def __write(self, name: str, columns: Tuple[str, ...], data: np.ndarray, metadata: Dict[str, Any],
                notes: Sequence[str], manifest: RunManifest) -> Path:
        self.__output_directory.mkdir(parents=True, exist_ok=True)
        csv_path = self.__output_directory / f'{name}.csv'
        manifest_path = self.__output_directory / f'{name}.manifest.yaml'

        with csv_path.open('w', newline='') as handle:
            self.__write_metadata(handle, metadata, notes)
            np.savetxt(handle, data, fmt=VALUE_FORMAT, delimiter=',', header=','.join(columns), comments='')

        written = manifest.with_warnings(*notes)
        with manifest_path.open('w') as handle:
            yaml.safe_dump(
                written.as_dict() | dict(outputs=list(written.outputs) + [csv_path.name]),
                handle,
                sort_keys=False
            )

        self.__logger.info(f'Wrote {csv_path} ({len(data)} rows) and {manifest_path.name}')
        return csv_path

    @staticmethod
    def __write_metadata(handle: TextIO, metadata: Dict[str, Any], notes: Sequence[str]) -> None:
        for key, value in metadata.items():
            handle.write(f'# {key}: {value}\n')

        for note in notes:
            handle.write(f'# note: {note}\n')
