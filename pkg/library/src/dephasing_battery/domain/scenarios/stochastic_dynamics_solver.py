from logging import Logger

import numpy as np
from numpy.typing import NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.models.model_builders import build_model
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.dynamics_solver import DynamicsSolver
from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.stochastic.trajectory_ensemble import ensemble_run
from dephasing_battery.domain.task_runner import TaskRunner


class StochasticDynamicsSolver(DynamicsSolver):
    def __init__(self, task_runner: TaskRunner, logger: Logger):
        self.__task_runner = task_runner
        self.__logger = logger

    def solve(self, scenario: Scenario, params: Params, times: NDArray) -> TimeSeries:
        settings = scenario.trajectories
        snapped = np.unique(np.rint(np.asarray(times) / settings.dt)) * settings.dt

        if len(snapped) != len(times) or np.max(np.abs(snapped - times)) > 1e-9 * max(1.0, float(times[-1])):
            self.__logger.info(f'Sample times moved onto multiples of dt = {settings.dt} ({len(snapped)} samples)')

        model = build_model(scenario.model, params, scenario.cutoff, scenario.n_batteries)
        config = settings.config_for(float(snapped[-1]))

        return ensemble_run(model, config, snapped, self.__task_runner)
