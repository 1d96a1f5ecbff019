from logging import Logger
from typing import Optional

from dephasing_battery.domain.scenarios.scenario import Scenario
from dephasing_battery.domain.scenarios.scenario_runner import ScenarioRunner
from dephasing_battery.infrastructure.process_pool_task_runner import ProcessPoolTaskRunner
from dephasing_battery.infrastructure.serial_task_runner import SerialTaskRunner

__all__ = ["dephasing_battery_toolkit", "Scenario", "ScenarioRunner"]


def dephasing_battery_toolkit(logger: Logger, max_workers: Optional[int] = None) -> ScenarioRunner:
    # sweep points fan out over processes; work inside a point stays in its worker
    return ScenarioRunner(
        ProcessPoolTaskRunner(max_workers, logger),
        logger,
        SerialTaskRunner(logger)
    )
