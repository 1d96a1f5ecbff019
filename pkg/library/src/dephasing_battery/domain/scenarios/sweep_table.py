from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException

type Row = Tuple[float, ...]


@dataclass(frozen=True, eq=False)
class SweepTable:
    columns: Tuple[str, ...]
    rows: Tuple[Row, ...]
    notes: Tuple[str, ...] = ()
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.columns):
                raise InvalidScenarioException('columns', f'row of length {len(row)} for {len(self.columns)} columns')

    def column(self, name: str) -> NDArray[np.float64]:
        if name not in self.columns:
            raise KeyError(f'Table has no column {name}')

        position = self.columns.index(name)
        return np.array([row[position] for row in self.rows], dtype=np.float64)

    def pivot(self, observable: str, index: str = 't', by: Optional[str] = None) -> 'SweepTable':
        """Wide layout: one row per index value and one observable column per value of the sweep variable."""
        group_column = by or self.columns[0]
        groups: Dict[float, List[Row]] = {}
        for row in self.rows:
            groups.setdefault(row[self.columns.index(group_column)], []).append(row)

        index_position = self.columns.index(index)
        value_position = self.columns.index(observable)
        index_values = [row[index_position] for row in next(iter(groups.values()), [])]

        for value, rows in groups.items():
            if [row[index_position] for row in rows] != index_values:
                raise InvalidScenarioException('sweep', f'{group_column} = {value!r} was sampled on a different grid')

        columns = (index,) + tuple(f'{observable}[{group_column}={value!r}]' for value in groups)
        rows = tuple(
            (index_value,) + tuple(rows[position][value_position] for rows in groups.values())
            for position, index_value in enumerate(index_values)
        )

        return SweepTable(columns=columns, rows=rows, notes=self.notes, metadata=dict(self.metadata))

    def with_metadata(self, **metadata: Any) -> 'SweepTable':
        return replace(self, metadata=self.metadata | metadata)
