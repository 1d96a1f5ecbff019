import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.analytic.chi_args import ChiArgs
from dephasing_battery.domain.analytic.chi_function import damped_chi
from dephasing_battery.domain.analytic.on_resonance_pole_exception import OnResonancePoleException
from dephasing_battery.domain.analytic.oscillator_detuning import OscillatorDetuning
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException

POLE_TOLERANCE = 1e-9


def ho_energy_closed_resonant(p: Params, t: ArrayLike) -> NDArray:
    _require_resonance(p)
    times = np.asarray(t, dtype=np.float64)

    if p.g == 0:
        return np.zeros_like(times)

    slow = damped_chi(ChiArgs(p.gamma_c, p.g, 0.5), times)
    fast = damped_chi(ChiArgs(p.gamma_c, p.g, 2.0), times)

    return p.drive_ratio ** 2 * p.omega_b * (1.5 - (4 * slow - fast) / 2)


def ho_energy_small_gamma(p: Params, t: ArrayLike) -> NDArray:
    times = np.asarray(t, dtype=np.float64)
    oscillation = 4 * np.cos(p.g * times) - np.cos(2 * p.g * times)

    return p.drive_ratio ** 2 * p.omega_b * (1.5 - np.exp(-p.gamma_c * times / 4) * oscillation / 2)


def ho_energy_large_gamma(p: Params, t: ArrayLike) -> NDArray:
    if p.gamma_c <= 0:
        raise InvalidParametersException('gamma_c', 'the large-dephasing form needs a positive dephasing rate')

    times = np.asarray(t, dtype=np.float64)
    scale = p.g ** 2 / p.gamma_c

    return p.drive_ratio ** 2 * p.omega_b * (1.5 - 2 * np.exp(-2 * scale * times) + np.exp(-8 * scale * times) / 2)


def ho_closed_detuned(p: Params, t: ArrayLike, case: OscillatorDetuning) -> NDArray:
    if p.gamma_c != 0:
        raise InvalidParametersException('gamma_c', 'closed-system detuned forms need gamma_C = 0')

    times = np.asarray(t, dtype=np.float64)
    match case:
        case OscillatorDetuning.DETUNED_DRIVE:
            return p.omega_b * _detuned_drive_energy(p, times)
        case OscillatorDetuning.DETUNED_CB:
            return p.omega_b * _detuned_cb_energy(p, times)


def ho_closed_detuned_max(p: Params) -> float:
    detuning = _detuned_drive_detuning(p)

    return float(
        p.omega_b * 4 * p.drive ** 2 * p.g ** 2 * np.cos(detuning * np.pi / (2 * p.g)) ** 2
        / (detuning ** 2 - p.g ** 2) ** 2
    )


def ho_long_time_slope(p: Params) -> float:
    if p.delta_cd != p.delta_bd:
        raise InvalidParametersException('delta_bd', 'the linear growth rate needs delta_Cd = delta_Bd')

    g, gamma, detuning = p.g, p.gamma_c, p.delta_cd
    denominator = 4 * g ** 4 - 8 * g ** 2 * detuning ** 2 + gamma ** 2 * detuning ** 2 + 4 * detuning ** 4

    return p.omega_b * 2 * p.drive ** 2 * gamma * detuning ** 2 / denominator


def _detuned_drive_energy(p: Params, times: NDArray) -> NDArray:
    detuning = _detuned_drive_detuning(p)
    g = p.g

    oscillating = (
            3 * g ** 2
            + g ** 2 * np.cos(2 * g * times)
            - 4 * g ** 2 * np.cos(g * times) * np.cos(detuning * times)
            + 2 * np.sin(g * times) * detuning * (detuning * np.sin(g * times) - 2 * g * np.sin(detuning * times))
    )

    return p.drive ** 2 / (2 * (detuning ** 2 - g ** 2) ** 2) * oscillating


def _detuned_cb_energy(p: Params, times: NDArray) -> NDArray:
    if p.delta_bd != 0:
        raise InvalidParametersException('delta_bd', 'the charger-battery detuned form needs delta_Bd = 0')

    detuning = p.delta_cd
    g = p.g
    spread = detuning ** 2 + 4 * g ** 2
    root = np.sqrt(spread)
    fast = detuning / 2 + root / 2
    slow = g ** 2 / fast

    bracket = (
            2 - 2 * g ** 2 / spread
            + 2 * g ** 2 * np.cos(root * times) / spread
            - (np.cos(slow * times) + np.cos(fast * times))
            - detuning / root * (np.cos(slow * times) - np.cos(fast * times))
    )

    return p.drive_ratio ** 2 * bracket


def _detuned_drive_detuning(p: Params) -> float:
    if p.delta_cd != p.delta_bd:
        raise InvalidParametersException('delta_bd', 'the detuned-drive form needs delta_Cd = delta_Bd')

    if abs(abs(p.delta_cd) - p.g) < POLE_TOLERANCE:
        raise OnResonancePoleException(f'Drive detuning {p.delta_cd} sits on the pole |delta| = g = {p.g}')

    return p.delta_cd


def _require_resonance(p: Params) -> None:
    if not p.is_resonant:
        raise RequiresResonanceException(
            f'Closed forms need resonance, got delta_Cd = {p.delta_cd}, delta_Bd = {p.delta_bd}'
        )
