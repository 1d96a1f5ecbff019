from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.lindblad.invalid_time_grid_exception import InvalidTimeGridException
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix

type RealSeries = NDArray[np.float64]

NAMED_OBSERVABLES = ('energy', 'ergotropy', 'entropy')


def validate_time_grid(t_grid: ArrayLike) -> RealSeries:
    times = np.array(t_grid, dtype=np.float64)

    if times.ndim != 1 or times.size == 0:
        raise InvalidTimeGridException('Time grid must be a non-empty one-dimensional sequence')

    if not np.all(np.isfinite(times)):
        raise InvalidTimeGridException('Time grid contains non-finite values')

    if times[0] < 0:
        raise InvalidTimeGridException(f'Time grid must start at t >= 0, got {times[0]}')

    if np.any(np.diff(times) <= 0):
        raise InvalidTimeGridException('Time grid must be strictly increasing')

    times.flags.writeable = False
    return times


@dataclass(frozen=True, eq=False)
class TimeSeries:
    times: RealSeries
    energy: Optional[RealSeries] = None
    ergotropy: Optional[RealSeries] = None
    entropy: Optional[RealSeries] = None
    moments: Dict[str, NDArray] = field(default_factory=dict)
    errors: Dict[str, RealSeries] = field(default_factory=dict)
    states: Optional[Tuple[ComplexMatrix, ...]] = None
    notes: Tuple[str, ...] = ()
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        validate_time_grid(self.times)

        columns = {name: getattr(self, name) for name in NAMED_OBSERVABLES} | self.moments | self.errors
        for name, values in columns.items():
            if values is not None and len(values) != len(self.times):
                raise InvalidTimeGridException(
                    f'Column {name} has {len(values)} samples but the time grid has {len(self.times)}'
                )

        if self.states is not None and len(self.states) != len(self.times):
            raise InvalidTimeGridException(f'Got {len(self.states)} states for {len(self.times)} sample times')

    def has_observable(self, name: str) -> bool:
        if name in NAMED_OBSERVABLES:
            return getattr(self, name) is not None

        return name in self.moments

    def observable(self, name: str) -> NDArray:
        values = getattr(self, name) if name in NAMED_OBSERVABLES else self.moments.get(name)

        if values is None:
            raise KeyError(f'Time series has no observable named {name}')

        return values

    def error(self, name: str) -> Optional[RealSeries]:
        return self.errors.get(name)

    def columns(self, names: Optional[Tuple[str, ...]] = None) -> Dict[str, RealSeries]:
        selected = names or tuple(
            [name for name in NAMED_OBSERVABLES if self.has_observable(name)] + list(self.moments)
        )

        columns: Dict[str, RealSeries] = dict(t=self.times)
        for name in selected:
            values = self.observable(name)

            if np.iscomplexobj(values):
                columns[f'{name}_re'] = np.real(values)
                columns[f'{name}_im'] = np.imag(values)
            else:
                columns[name] = np.asarray(values, dtype=np.float64)

            if name in self.errors:
                columns[f'{name}_error'] = self.errors[name]

        return columns

    def with_changes(self, **changes: Any) -> 'TimeSeries':
        return replace(self, **changes)

    def with_notes(self, *notes: str) -> 'TimeSeries':
        return replace(self, notes=self.notes + tuple(notes))
