"""Charging time: the last instant after which the battery energy stays within e^-n of the initial gap."""
import math
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import bisect

from dephasing_battery.domain.analytic.oscillator_closed_forms import ho_energy_closed_resonant
from dephasing_battery.domain.analytic.tls_closed_forms import tls_energy_closed
from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.charging_report import ChargingReport
from dephasing_battery.domain.metrics.not_converged_exception import NotConvergedException
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params

type EnergyAt = Callable[[float], float]

HORIZON_FACTOR = 20.0
BISECTION_RELATIVE_TOLERANCE = 1e-6
CLOSED_FORM_SAMPLES = 200_001
EARLY_TIME_SAMPLES = 2001
EARLY_TIME_FLOOR = 1e-8


def charging_time(series: TimeSeries, e_ss: float, n: int, energy_at: Optional[EnergyAt] = None,
                  gamma_c: float = math.nan) -> ChargingReport:
    if series.energy is None:
        raise InvalidParametersException('series', 'charging time needs an energy column')

    times = series.times
    energies = np.asarray(series.energy, dtype=np.float64)
    initial_gap = abs(energies[0] - e_ss)

    if not math.isfinite(e_ss) or initial_gap == 0:
        raise InvalidParametersException('e_ss', f'steady energy {e_ss} must be finite and differ from E_B(0)')

    threshold = math.exp(-n) * initial_gap
    deviation = np.abs(energies - e_ss)
    horizon = float(times[-1])

    if deviation[-1] >= threshold:
        report = ChargingReport(
            tau=math.nan, n=n, e_ss=e_ss, e_max_transient=float(np.max(energies)), gamma_c=gamma_c,
            converged=False, horizon=horizon
        )
        raise NotConvergedException(
            f'Energy still {deviation[-1]:.3e} away from {e_ss:.6g} at the horizon t = {horizon:.6g}', report
        )

    last_above = int(np.nonzero(deviation >= threshold)[0][-1])
    evaluate = energy_at or CubicSpline(times, energies)

    def excess(t: float) -> float:
        return abs(float(evaluate(t)) - e_ss) - threshold

    lower, upper = float(times[last_above]), float(times[last_above + 1])
    tau = lower if excess(lower) <= 0 else bisect(
        excess, lower, upper, xtol=1e-15, rtol=BISECTION_RELATIVE_TOLERANCE
    )

    return ChargingReport(
        tau=float(tau), n=n, e_ss=e_ss, e_max_transient=float(np.max(energies)), gamma_c=gamma_c,
        converged=True, horizon=horizon
    )


def default_horizon(p: Params, n: int, kind: ModelKind) -> float:
    if p.gamma_c <= 0:
        raise NotConvergedException('Undamped dynamics never settle, no charging time exists')

    if p.g <= 0:
        raise InvalidParametersException('g', 'charging needs a positive coupling')

    candidates = [4 * n / p.gamma_c, n * p.gamma_c / (2 * p.g ** 2)]

    if not kind.has_oscillator_charger and 0 < p.drive < p.g:
        candidates.append(n * p.g ** 2 * p.gamma_c / p.drive ** 4)

    return HORIZON_FACTOR * max(candidates)


def closed_form_charging_time(p: Params, n: int, kind: ModelKind, samples: int = CLOSED_FORM_SAMPLES,
                              horizon: Optional[float] = None) -> ChargingReport:
    match kind:
        case ModelKind.TWO_TLS:
            energy_curve = tls_energy_closed
            e_ss = p.omega_b / 2
        case ModelKind.TWO_HO:
            energy_curve = ho_energy_closed_resonant
            e_ss = 1.5 * p.drive_ratio ** 2 * p.omega_b
        case _:
            raise InvalidParametersException('model', f'no closed-form energy for {kind.value}')

    end = horizon or default_horizon(p, n, kind)
    times = np.union1d(
        np.linspace(0.0, end, samples),
        np.geomspace(EARLY_TIME_FLOOR * end, end, EARLY_TIME_SAMPLES)
    )

    series = TimeSeries(times=times, energy=energy_curve(p, times))
    return charging_time(series, e_ss, n, energy_at=lambda t: float(energy_curve(p, t)), gamma_c=p.gamma_c)
