from abc import ABCMeta, abstractmethod

from numpy.typing import NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.scenario import Scenario


class DynamicsSolver(metaclass=ABCMeta):
    @abstractmethod
    def solve(self, scenario: Scenario, params: Params, times: NDArray) -> TimeSeries:
        pass
