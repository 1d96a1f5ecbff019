import numpy as np
import pytest
from numpy.testing import assert_allclose

from dephasing_battery.domain.lindblad.degenerate_steady_state_exception import DegenerateSteadyStateException
from dephasing_battery.domain.lindblad.liouvillian import liouvillian_apply
from dephasing_battery.domain.lindblad.steady_state_solver import long_time_state, steady_state, unique_steady_state
from dephasing_battery.domain.metrics.battery_metrics import energy
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_builders import build_two_ho, build_two_tls
from dephasing_battery.domain.operators.operator_algebra import expect, sigma_minus, sigma_z
from dephasing_battery_test_support.numeric_assertions import assert_density_matrix
from dephasing_battery_tests.support.builders.params_builder import params_with


def test_resonant_two_tls_battery_is_half_charged_with_coherence() -> None:
    model = build_two_tls(params_with(drive=0.5, g=1.0, gamma_c=0.5))

    rho_b = model.battery_state(steady_state(model))

    assert expect(sigma_z(), rho_b).real == pytest.approx(0.0, abs=1e-8)
    assert abs(expect(sigma_minus(), rho_b)) == pytest.approx(0.25, abs=1e-8)


def test_steady_state_is_annihilated_by_the_generator() -> None:
    model = build_two_tls(params_with(drive=0.3, g=0.8, gamma_c=2.0, delta_cd=0.1))

    rho = steady_state(model)

    assert np.max(np.abs(liouvillian_apply(model, rho))) <= 1e-8
    assert_density_matrix(rho)


def test_resonant_two_ho_stores_three_halves_of_the_squared_drive_ratio() -> None:
    model = build_two_ho(params_with(drive=0.1, g=1.0, gamma_c=1.0), 6)

    rho_b = model.battery_state(steady_state(model))

    assert energy(rho_b, model.battery_hamiltonian) == pytest.approx(0.015, abs=1e-8)


def test_undriven_model_has_many_steady_states() -> None:
    model = build_two_tls(params_with(drive=0.0, g=1.0, gamma_c=1.0))

    with pytest.raises(DegenerateSteadyStateException) as exception_info:
        unique_steady_state(model)

    assert exception_info.value.null_space_dimension > 1


def test_falls_back_to_long_time_state_of_initial_state_when_degenerate() -> None:
    model = build_two_tls(params_with(drive=0.0, g=1.0, gamma_c=1.0))

    assert_allclose(steady_state(model), model.initial_state, atol=1e-9)


def test_fallback_can_be_disabled() -> None:
    model = build_two_tls(params_with(drive=0.0, g=1.0, gamma_c=1.0))

    with pytest.raises(DegenerateSteadyStateException):
        steady_state(model, fallback=False)


def test_long_time_state_is_stationary() -> None:
    model = build_two_tls(params_with(drive=0.5, g=1.0, gamma_c=1.0))

    rho = long_time_state(model, model.initial_state)

    assert np.max(np.abs(liouvillian_apply(model, rho))) <= 1e-8
    assert_density_matrix(rho)


def test_steady_state_needs_dephasing() -> None:
    with pytest.raises(InvalidParametersException, match='gamma_c'):
        steady_state(build_two_tls(params_with(gamma_c=0.0)))
