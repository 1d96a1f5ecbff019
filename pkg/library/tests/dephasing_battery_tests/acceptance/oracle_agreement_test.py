import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose

from dephasing_battery.domain.analytic.tls_closed_forms import tls_energy_closed
from dephasing_battery.domain.lindblad.integration_method import IntegrationMethod
from dephasing_battery.domain.lindblad.master_equation_integrator import integrate
from dephasing_battery.domain.metrics.battery_metrics import entropy
from dephasing_battery.domain.models.model_builders import build_two_tls
from dephasing_battery.domain.moments.tls_moment_systems import tls_series_from_moments
from dephasing_battery_test_support.numeric_assertions import assert_density_matrix
from dephasing_battery_tests.support.builders.params_builder import resonant_params_with

TIMES = np.linspace(0.0, 30.0, 301)
GAMMAS = (0.0, 0.1, 1.0, 10.0)
DRIVE_RATIOS = (0.1, 0.5, 10.0)


@pytest.mark.parametrize('gamma_c, drive_ratio', list(itertools.product(GAMMAS, DRIVE_RATIOS)))
def test_closed_form_moments_and_master_equation_agree(gamma_c: float, drive_ratio: float) -> None:
    params = resonant_params_with(drive_ratio=drive_ratio, gamma_c=gamma_c)
    model = build_two_tls(params)

    closed = tls_energy_closed(params, TIMES)
    moments = tls_series_from_moments(params, TIMES).energy
    lindblad = integrate(model, model.initial_state, TIMES, IntegrationMethod.EXPONENTIAL).energy

    assert_allclose(moments, closed, rtol=0, atol=1e-6)
    assert_allclose(lindblad, closed, rtol=0, atol=1e-6)
    assert_allclose(lindblad, moments, rtol=0, atol=1e-6)


@pytest.mark.parametrize('method', list(IntegrationMethod))
@pytest.mark.parametrize('gamma_c', [0.1, 1.15, 10.0])
def test_master_equation_keeps_states_physical(method: IntegrationMethod, gamma_c: float) -> None:
    model = build_two_tls(resonant_params_with(drive_ratio=0.5, gamma_c=gamma_c))

    series = integrate(model, model.initial_state, TIMES, method, keep_states=True)

    assert series.states is not None
    for state in series.states:
        assert_density_matrix(state)


@pytest.mark.parametrize('gamma_c, drive_ratio', [(0.1, 0.1), (1.15, 0.5), (10.0, 10.0)])
def test_entropy_follows_from_energy_and_ergotropy_along_every_run(gamma_c: float, drive_ratio: float) -> None:
    model = build_two_tls(resonant_params_with(drive_ratio=drive_ratio, gamma_c=gamma_c))

    series = integrate(model, model.initial_state, TIMES, IntegrationMethod.EXPONENTIAL, keep_states=True)
    from_states = [entropy(model.battery_state(state)) for state in series.states or ()]

    assert_allclose(tls_series_from_moments(model.params, TIMES).entropy, from_states, rtol=0, atol=1e-8)
