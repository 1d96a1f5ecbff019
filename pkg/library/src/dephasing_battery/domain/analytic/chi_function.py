"""Damped-oscillator kernels shared by every resonant closed form.

chi(t) = cosh(k t / 4) + (gamma / k) sinh(k t / 4) with k = sqrt(gamma^2 - 32 f g^2). The square root is
taken in complex arithmetic so one expression covers the underdamped and overdamped sides; close to
critical damping a power series in k^2 replaces the quotient sinh(x) / k.
"""
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.analytic.chi_args import ChiArgs
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.params import Params

CRITICAL_BAND = 1e-8
SERIES_TERMS = 40


def branch_constants(p: Params) -> Tuple[float, float, float]:
    ratio_squared = p.drive_ratio ** 2
    root = np.sqrt(1 + 4 * ratio_squared)
    return 0.5, slow_branch_constant(p.drive_ratio), float(1 + 2 * ratio_squared + root)


def slow_branch_constant(drive_ratio: float) -> float:
    ratio_squared = drive_ratio ** 2

    # 1 + 2r^2 - sqrt(1 + 4r^2) rewritten to avoid cancellation at weak drive
    return float(4 * ratio_squared ** 2 / (1 + 2 * ratio_squared + np.sqrt(1 + 4 * ratio_squared)))


def chi(args: ChiArgs, t: ArrayLike) -> NDArray:
    times = _times(t)

    if abs(args.discriminant) < CRITICAL_BAND:
        return _critical_series(args, times)

    root = np.sqrt(complex(args.discriminant))
    argument = root * times / 4

    return np.real(np.cosh(argument) + args.gamma_c / root * np.sinh(argument))


def damped_chi(args: ChiArgs, t: ArrayLike) -> NDArray:
    times = _times(t)

    if abs(args.discriminant) < CRITICAL_BAND:
        return np.exp(-args.gamma_c * times / 4) * _critical_series(args, times)

    root = np.sqrt(complex(args.discriminant))
    ratio = args.gamma_c / root
    growing = (1 + ratio) * np.exp((root - args.gamma_c) * times / 4)
    decaying = (1 - ratio) * np.exp(-(root + args.gamma_c) * times / 4)

    return np.real(growing + decaying) / 2


def _critical_series(args: ChiArgs, times: NDArray) -> NDArray:
    u = args.discriminant * times ** 2 / 16
    cosh_term = np.ones_like(times)
    sinh_term = np.ones_like(times)
    cosh_sum = np.ones_like(times)
    sinh_sum = np.ones_like(times)

    for k in range(1, SERIES_TERMS):
        cosh_term = cosh_term * u / ((2 * k - 1) * (2 * k))
        sinh_term = sinh_term * u / ((2 * k) * (2 * k + 1))
        cosh_sum = cosh_sum + cosh_term
        sinh_sum = sinh_sum + sinh_term

    return cosh_sum + args.gamma_c * times / 4 * sinh_sum


def _times(t: ArrayLike) -> NDArray:
    times = np.asarray(t, dtype=np.float64)

    if np.any(times < 0):
        raise InvalidParametersException('t', 'closed forms are defined for t >= 0')

    return times
