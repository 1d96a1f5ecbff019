import logging
from logging import Logger
from pathlib import Path

import pytest

from dephasing_battery_test_support.command_line_runner import CommandLineRunner


@pytest.fixture(scope="session")
def logger() -> Logger:
    return logging.getLogger()


@pytest.fixture(scope="function")
def command_line_runner(tmp_path: Path, logger: Logger) -> CommandLineRunner:
    return CommandLineRunner(tmp_path, logger)


@pytest.fixture(scope="function")
def scenario_file(tmp_path: Path) -> Path:
    path = tmp_path / 'charging.cfg'
    path.write_text(
        '# resonant pair near the optimal dephasing\n'
        'model = two_tls\n'
        'name = charging\n'
        'solver = analytic\n'
        'observables = energy, ergotropy, entropy\n'
        'F = 0.5\n'
        'g = 1\n'
        'gamma_C = 1.15\n'
        't_max = 10\n'
        't_points = 101\n'
    )

    return path
