from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import brentq

from dephasing_battery.domain.analytic.chi_args import ChiArgs
from dephasing_battery.domain.analytic.chi_function import branch_constants, damped_chi
from dephasing_battery.domain.metrics.battery_metrics import tls_ergotropy_from_moments
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException

LARGE_GAMMA_ROOT_SAMPLES = 20001


def tls_sigma_z_closed(p: Params, t: ArrayLike) -> NDArray:
    _require_resonance(p)
    times = np.asarray(t, dtype=np.float64)

    if p.g == 0:
        return -np.ones_like(times)

    ratio_squared = p.drive_ratio ** 2
    root = np.sqrt(1 + 4 * ratio_squared)
    f0, f1, f2 = branch_constants(p)

    bracket = (
            8 * ratio_squared * damped_chi(ChiArgs(p.gamma_c, p.g, f0), times)
            + (1 + root) * damped_chi(ChiArgs(p.gamma_c, p.g, f1), times)
            + (1 - root) * damped_chi(ChiArgs(p.gamma_c, p.g, f2), times)
    )

    return -bracket / (2 * (1 + 4 * ratio_squared))


def tls_energy_closed(p: Params, t: ArrayLike) -> NDArray:
    return p.omega_b / 2 * (tls_sigma_z_closed(p, t) + 1)


def tls_sigma_minus_closed(p: Params, t: ArrayLike) -> NDArray:
    _require_resonance(p)
    times = np.asarray(t, dtype=np.float64)

    if p.g == 0:
        return np.zeros_like(times, dtype=np.complex128)

    ratio = p.drive_ratio
    steady_value = -ratio / (1 + 4 * ratio ** 2)
    relaxation = damped_chi(ChiArgs(p.gamma_c, p.g, 0.5 + 2 * ratio ** 2), times)

    return (steady_value * (1 - relaxation)).astype(np.complex128)


def tls_ergotropy_closed(p: Params, t: ArrayLike) -> NDArray:
    return tls_ergotropy_from_moments(tls_sigma_z_closed(p, t), tls_sigma_minus_closed(p, t), p.omega_b)


def tls_steady(p: Params) -> Tuple[float, float]:
    if p.gamma_c <= 0:
        raise InvalidParametersException('gamma_c', 'steady values need a positive dephasing rate')

    if p.g == 0:
        return 0.0, 0.0

    if p.delta_bd != 0:
        return p.omega_b / 2, 0.0

    ratio = p.drive_ratio
    return p.omega_b / 2, p.omega_b * ratio / (1 + 4 * ratio ** 2)


def tls_energy_large_gamma(p: Params, t: ArrayLike) -> NDArray:
    return p.omega_b * (0.5 - _large_gamma_transient(p, np.asarray(t, dtype=np.float64)) / 2)


def tls_charging_time_large_gamma(p: Params, n: int) -> float:
    threshold = np.exp(-n)

    def excess(t: float) -> float:
        return float(abs(_large_gamma_transient(p, np.asarray(t)))) - threshold

    rates = _large_gamma_rates(p)
    horizon = (n + 10) / min(rate for rate in rates if rate > 0)
    times = np.linspace(0.0, horizon, LARGE_GAMMA_ROOT_SAMPLES)
    above = np.nonzero(np.abs(_large_gamma_transient(p, times)) >= threshold)[0]

    last = above[-1]
    if last == len(times) - 1:
        return float(horizon)

    return float(brentq(excess, times[last], times[last + 1], xtol=1e-14, rtol=1e-12))


def _large_gamma_transient(p: Params, times: NDArray) -> NDArray:
    """Normalised distance to the steady energy, starting at 1 for an empty battery."""
    _require_resonance(p)
    if p.gamma_c <= 0:
        raise InvalidParametersException('gamma_c', 'the large-dephasing form needs a positive dephasing rate')

    ratio_squared = p.drive_ratio ** 2
    root = np.sqrt(1 + 4 * ratio_squared)
    slow, first, second = _large_gamma_rates(p)

    weighted = (
            8 * ratio_squared * np.exp(-slow * times)
            + (1 + root) * np.exp(-first * times)
            + (1 - root) * np.exp(-second * times)
    )

    return weighted / (2 * (1 + 4 * ratio_squared))


def _large_gamma_rates(p: Params) -> Tuple[float, float, float]:
    _, f1, f2 = branch_constants(p)
    scale = p.g ** 2 / p.gamma_c

    return 2 * scale, 4 * f1 * scale, 4 * f2 * scale


def _require_resonance(p: Params) -> None:
    if not p.is_resonant:
        raise RequiresResonanceException(
            f'Closed forms need resonance, got delta_Cd = {p.delta_cd}, delta_Bd = {p.delta_bd}'
        )
