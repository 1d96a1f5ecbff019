import numpy as np
import pytest

from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException
from dephasing_battery.domain.metrics.quasi_steady import quasi_steady_value, tail_average


def test_finds_the_first_settled_window() -> None:
    times = np.linspace(0.0, 30.0, 3001)

    settled_at, value = quasi_steady_value(times, 1 - np.exp(-times), window=5.0)

    assert 10.0 < settled_at < 13.0
    assert value == pytest.approx(1.0, abs=1e-3)


def test_persistent_oscillation_has_no_plateau() -> None:
    times = np.linspace(0.0, 30.0, 301)

    with pytest.raises(NotConvergedException, match='No plateau'):
        quasi_steady_value(times, 1 + 0.1 * np.sin(times), window=5.0)


def test_series_shorter_than_the_window_has_no_plateau() -> None:
    with pytest.raises(NotConvergedException, match='shorter'):
        quasi_steady_value(np.linspace(0.0, 2.0, 21), np.ones(21), window=5.0)


def test_averages_the_tail_of_a_series() -> None:
    assert tail_average(np.arange(100.0)) == pytest.approx(97.0)
    assert tail_average([3.0]) == 3.0
