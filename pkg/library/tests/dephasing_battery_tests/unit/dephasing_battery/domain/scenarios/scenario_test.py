import pytest
from numpy.testing import assert_allclose

from dephasing_battery.domain.configuration_exception import ConfigurationException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.scenarios.analysis_kind import AnalysisKind
from dephasing_battery.domain.scenarios.invalid_scenario_exception import InvalidScenarioException
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.trajectory_settings import TrajectorySettings
from dephasing_battery.domain.stochastic.invalid_trajectory_config_exception import InvalidTrajectoryConfigException
from dephasing_battery_tests.support.builders.params_builder import params_with
from dephasing_battery_tests.support.builders.scenario_builder import a_scenario_with, a_sweep_over, any_scenario


def test_time_grid_spans_zero_to_t_max() -> None:
    scenario = a_scenario_with(t_max=2.0, t_points=5)

    assert_allclose(scenario.t_grid, [0.0, 0.5, 1.0, 1.5, 2.0])


@pytest.mark.parametrize('changes, field_name', [
    (dict(name=''), 'name'),
    (dict(name='results/run'), 'name'),
    (dict(t_max=0.0), 't_max'),
    (dict(t_max=float('inf')), 't_max'),
    (dict(t_points=1), 't_points'),
    (dict(n=0), 'n'),
    (dict(observables=()), 'observables'),
    (dict(observables=('energy', 'power')), 'observables'),
    (dict(model=ModelKind.STAR_TLS, solver=SolverKind.MOMENTS), 'solver'),
    (dict(model=ModelKind.TLS_HO, solver=SolverKind.ANALYTIC), 'solver'),
    (dict(solver=SolverKind.STOCHASTIC, analysis=AnalysisKind.STEADY_STATE), 'analysis'),
    (dict(model=ModelKind.STAR_TLS, n_batteries=7), 'n_batteries'),
    (dict(model=ModelKind.STAR_TLS, n_batteries=0), 'n_batteries'),
    (dict(n_batteries=2), 'n_batteries'),
    (dict(model=ModelKind.TWO_HO, cutoff=1), 'cutoff'),
])
def test_rejects_inconsistent_scenarios(changes: dict, field_name: str) -> None:
    with pytest.raises(InvalidScenarioException, match=f'^{field_name}:') as exception_info:
        any_scenario().with_changes(**changes)

    assert exception_info.value.field_name == field_name
    assert isinstance(exception_info.value, ConfigurationException)


def test_star_scenarios_take_up_to_six_batteries() -> None:
    assert a_scenario_with(model=ModelKind.STAR_TLS, n_batteries=6).n_batteries == 6


def test_sweep_params_applies_every_grid_value() -> None:
    scenario = a_scenario_with(params=params_with(drive=0.5, g=2.0), sweep=a_sweep_over('drive_ratio', 0.1, 0.2))

    swept = scenario.sweep_params()

    assert [value for value, _ in swept] == [0.1, 0.2]
    assert [params.drive for _, params in swept] == pytest.approx([0.2, 0.4])
    assert all(params.g == 2.0 for _, params in swept)


def test_scenario_without_sweep_has_no_sweep_params() -> None:
    assert any_scenario().sweep_params() == ()


def test_trajectory_settings_cover_the_requested_duration() -> None:
    cfg = TrajectorySettings(n_traj=50, dt=1e-3, seed=3).config_for(5.0)

    assert cfg.n_steps == 5000
    assert cfg.n_traj == 50
    assert cfg.seed == 3
    assert cfg.duration == pytest.approx(5.0)


def test_trajectory_settings_round_up_partial_steps() -> None:
    assert TrajectorySettings(dt=0.3).config_for(1.0).n_steps == 4
    assert TrajectorySettings(dt=0.1).config_for(0.3).n_steps == 3


def test_trajectory_settings_are_validated_eagerly() -> None:
    with pytest.raises(InvalidTrajectoryConfigException, match='^n_traj:'):
        TrajectorySettings(n_traj=0)

    with pytest.raises(InvalidTrajectoryConfigException, match='^dt:'):
        TrajectorySettings(dt=-1.0)
