import logging
from logging import Logger

import numpy as np
import pytest
from numpy.random import Generator

from dephasing_battery.domain.task_runner import TaskRunner
from dephasing_battery.infrastructure.serial_task_runner import SerialTaskRunner
from dephasing_battery_test_support.random_states import a_random_generator


@pytest.fixture(scope="session")
def logger() -> Logger:
    return logging.getLogger()


@pytest.fixture(scope="function")
def rng() -> Generator:
    return a_random_generator()


@pytest.fixture(scope="session")
def serial_task_runner(logger: Logger) -> TaskRunner:
    return SerialTaskRunner(logger)


@pytest.fixture(scope="session")
def sample_times() -> np.ndarray:
    return np.linspace(0.0, 10.0, 101)
