import numpy as np
import pytest
from numpy.random import Generator
from numpy.testing import assert_allclose

from dephasing_battery.domain.lindblad.master_equation_integrator import propagate
from dephasing_battery.domain.lindblad.povm_channel import apply_povm_outcome, povm_average_channel, povm_operator, \
    sample_povm_outcome
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_builders import build_two_tls
from dephasing_battery.domain.operators.operator_algebra import as_operator, excited_projector, number
from dephasing_battery_test_support.numeric_assertions import assert_density_matrix
from dephasing_battery_test_support.random_states import a_random_density_matrix
from dephasing_battery_tests.support.builders.params_builder import params_with


def test_leaves_states_diagonal_in_jump_basis_unchanged() -> None:
    rho = as_operator(np.diag([0.1, 0.2, 0.3, 0.4]))

    assert_allclose(povm_average_channel(rho, number(4), 2.0, 0.5), rho, atol=1e-15)


def test_damps_two_level_coherence_by_half_the_measurement_strength() -> None:
    rho = as_operator([[0.5, 0.5], [0.5, 0.5]])

    damped = povm_average_channel(rho, excited_projector(), 0.8, 0.25)

    assert damped[0, 1] == pytest.approx(0.5 * np.exp(-0.1), abs=1e-14)
    assert damped[0, 0] == pytest.approx(0.5, abs=1e-14)


def test_damps_oscillator_coherence_by_squared_photon_number_difference(rng: Generator) -> None:
    rho = a_random_density_matrix(5, rng)

    damped = povm_average_channel(rho, number(5), 1.5, 0.1)

    assert damped[3, 1] == pytest.approx(rho[3, 1] * np.exp(-2 * 1.5 * 0.1), abs=1e-14)
    assert np.trace(damped) == pytest.approx(1, abs=1e-12)


def test_repeated_short_measurements_reproduce_dephasing_over_the_whole_interval(rng: Generator) -> None:
    model = build_two_tls(params_with(drive=0.0, g=0.0, gamma_c=1.3))
    rho = a_random_density_matrix(4, rng)
    duration, slices = 2.0, 50

    repeated = rho
    for _ in range(slices):
        repeated = povm_average_channel(repeated, model.jump, model.params.gamma_c, duration / slices)

    assert_allclose(repeated, propagate(model, rho, [0.0, duration])[-1], atol=1e-10)


def test_measurement_operators_resolve_the_identity() -> None:
    outcomes = np.linspace(-8.0, 9.0, 4001)
    elements = [povm_operator(number(3), 1.0, 1.0, alpha) for alpha in outcomes]

    completeness = np.trapezoid([element @ element for element in elements], outcomes, axis=0)

    assert_allclose(completeness, np.eye(3), atol=1e-10)


def test_applying_a_sampled_outcome_yields_a_normalised_state(rng: Generator) -> None:
    rho = a_random_density_matrix(3, rng)
    outcome = sample_povm_outcome(rho, number(3), 2.0, 0.3, rng)

    assert_density_matrix(apply_povm_outcome(rho, number(3), 2.0, 0.3, outcome))


def test_rejects_negative_measurement_strength() -> None:
    with pytest.raises(InvalidParametersException):
        povm_average_channel(as_operator(np.eye(2) / 2), excited_projector(), -1.0, 0.1)
