import numpy as np
import pytest
from numpy.testing import assert_allclose

from dephasing_battery.domain.analytic.on_resonance_pole_exception import OnResonancePoleException
from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_closed_detuned, ho_closed_detuned_max, \
    ho_energy_closed_resonant, ho_energy_large_gamma, ho_energy_small_gamma, ho_long_time_slope
from dephasing_battery.domain.analytic.oscillator_detuning import OscillatorDetuning
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.moments.oscillator_moment_systems import oscillator_series_from_moments
from dephasing_battery_tests.support.builders.params_builder import params_with


def test_resonant_energy_starts_at_zero_and_saturates() -> None:
    energies = ho_energy_closed_resonant(params_with(drive=0.1, g=1.0, gamma_c=1.0), [0.0, 300.0])

    assert energies[0] == pytest.approx(0.0, abs=1e-15)
    assert energies[1] == pytest.approx(0.015, abs=1e-10)


def test_undamped_resonant_energy_after_half_a_coupling_period() -> None:
    energy = ho_energy_closed_resonant(params_with(drive=0.1, g=1.0, gamma_c=0.0), np.pi)

    assert energy == pytest.approx(0.04, abs=1e-12)


@pytest.mark.parametrize('gamma_c', [0.0, 0.5, 4.0, 8.0, 30.0])
def test_resonant_energy_matches_moment_dynamics(gamma_c: float, sample_times: np.ndarray) -> None:
    p = params_with(drive=0.3, g=1.0, gamma_c=gamma_c)

    assert_allclose(
        ho_energy_closed_resonant(p, sample_times), oscillator_series_from_moments(p, sample_times).energy, atol=1e-9
    )


def test_small_dephasing_form_tracks_exact_energy() -> None:
    p = params_with(drive=0.3, g=1.0, gamma_c=0.01)
    times = np.linspace(0.0, 50.0, 501)

    assert np.max(np.abs(ho_energy_small_gamma(p, times) - ho_energy_closed_resonant(p, times))) <= 1e-3


def test_large_dephasing_form_tracks_exact_energy() -> None:
    p = params_with(drive=0.3, g=1.0, gamma_c=200.0)
    times = np.linspace(0.0, 500.0, 501)

    assert np.max(np.abs(ho_energy_large_gamma(p, times) - ho_energy_closed_resonant(p, times))) <= 1e-3


@pytest.mark.parametrize('detuning', [0.3, -0.6, 1.7])
def test_detuned_drive_form_matches_moment_dynamics(detuning: float, sample_times: np.ndarray) -> None:
    p = params_with(drive=0.1, g=1.0, gamma_c=0.0, delta_cd=detuning, delta_bd=detuning)

    assert_allclose(
        ho_closed_detuned(p, sample_times, OscillatorDetuning.DETUNED_DRIVE),
        oscillator_series_from_moments(p, sample_times).energy,
        atol=1e-9,
    )


@pytest.mark.parametrize('detuning', [0.2, -0.5, 2.0])
def test_charger_battery_detuned_form_matches_moment_dynamics(detuning: float, sample_times: np.ndarray) -> None:
    p = params_with(drive=0.1, g=1.0, gamma_c=0.0, delta_cd=detuning)

    assert_allclose(
        ho_closed_detuned(p, sample_times, OscillatorDetuning.DETUNED_CB),
        oscillator_series_from_moments(p, sample_times).energy,
        atol=1e-9,
    )


def test_detuned_forms_describe_the_closed_system_only() -> None:
    with pytest.raises(InvalidParametersException, match='gamma_C = 0'):
        ho_closed_detuned(
            params_with(gamma_c=0.1, delta_cd=0.2, delta_bd=0.2), [1.0], OscillatorDetuning.DETUNED_DRIVE
        )


def test_detuned_drive_peak_value_is_the_energy_after_half_a_coupling_period() -> None:
    p = params_with(drive=0.1, g=1.0, gamma_c=0.0, delta_cd=0.3, delta_bd=0.3)
    first_peak_time = np.pi / p.g

    assert ho_closed_detuned_max(p) == pytest.approx(
        float(ho_closed_detuned(p, first_peak_time, OscillatorDetuning.DETUNED_DRIVE)), rel=1e-10
    )


def test_detuned_drive_has_a_pole_at_the_coupling_strength() -> None:
    with pytest.raises(OnResonancePoleException):
        ho_closed_detuned_max(params_with(gamma_c=0.0, delta_cd=1.0, delta_bd=1.0))


def test_long_time_growth_rate_of_dephased_detuned_oscillators() -> None:
    p = params_with(drive=0.1, g=1.0, gamma_c=0.1, delta_cd=0.5, delta_bd=0.5)
    times = np.linspace(100.0, 300.0, 201)

    energies = oscillator_series_from_moments(p, np.concatenate(([0.0], times))).energy[1:]
    slope, _ = np.polyfit(times, energies, 1)

    assert slope == pytest.approx(ho_long_time_slope(p), rel=2e-2)
    assert ho_long_time_slope(p) == pytest.approx(2 * 0.01 * 0.1 * 0.25 / (4 - 2 + 0.0025 + 0.25), rel=1e-12)
