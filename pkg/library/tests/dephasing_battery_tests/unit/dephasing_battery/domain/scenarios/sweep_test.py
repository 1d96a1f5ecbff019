import pytest

from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.sweep import Sweep
from dephasing_battery_tests.support.builders.params_builder import params_with
from dephasing_battery_tests.support.builders.scenario_builder import a_sweep_over


def test_sweeps_a_plain_parameter() -> None:
    swept = a_sweep_over('gamma_c', 0.1, 1.0).apply(params_with(gamma_c=5.0, drive=0.3), 1.0)

    assert swept == params_with(gamma_c=1.0, drive=0.3)


def test_drive_ratio_scales_the_drive_with_the_coupling() -> None:
    swept = a_sweep_over('drive_ratio', 0.5).apply(params_with(g=2.0), 0.5)

    assert swept.drive == 1.0
    assert swept.g == 2.0


def test_charger_battery_detuning_moves_only_the_charger() -> None:
    swept = a_sweep_over('delta_cb', -0.1, 0.1).apply(params_with(delta_bd=0.4), 0.1)

    assert swept.delta_cd == 0.1
    assert swept.delta_bd == 0.0
    assert swept.delta_cb == 0.1


def test_drive_detuning_moves_charger_and_battery_together() -> None:
    swept = a_sweep_over('delta_drive', -0.2, 0.2).apply(params_with(), -0.2)

    assert swept.delta_cd == -0.2
    assert swept.delta_bd == -0.2
    assert swept.delta_cb == 0.0


@pytest.mark.parametrize('variable, detuning', [
    ('delta_cd', True), ('delta_bd', True), ('delta_cb', True), ('delta_drive', True),
    ('gamma_c', False), ('drive_ratio', False), ('omega_b', False),
])
def test_knows_which_variables_are_detunings(variable: str, detuning: bool) -> None:
    assert a_sweep_over(variable, 1.0).is_detuning is detuning


def test_accepts_decreasing_grids() -> None:
    assert a_sweep_over('gamma_c', 3.0, 2.0, 1.0).grid == (3.0, 2.0, 1.0)


def test_rejects_unknown_variables() -> None:
    with pytest.raises(InvalidScenarioException, match='^sweep.variable: cannot sweep temperature'):
        Sweep('temperature', (1.0,))


def test_rejects_empty_grids() -> None:
    with pytest.raises(InvalidScenarioException, match='^sweep.grid: sweep grid is empty'):
        Sweep('gamma_c', ())


@pytest.mark.parametrize('grid', [(1.0, 1.0), (1.0, 3.0, 2.0)])
def test_rejects_grids_that_are_not_strictly_monotone(grid: tuple) -> None:
    with pytest.raises(InvalidScenarioException, match='strictly monotone'):
        Sweep('gamma_c', grid)
