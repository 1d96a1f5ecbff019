import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.moments.moment_evolution import evolve_moments
from dephasing_battery.domain.moments.moment_propagation import MomentPropagation
from dephasing_battery.domain.moments.moment_system import MomentSystem
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.models.requires_resonance_exception import RequiresResonanceException

# b = a_B + F/g removes the drive at resonance
DISPLACED_LABELS = (
    'charger_amplitude_re', 'charger_amplitude_im',
    'displaced_amplitude_re', 'displaced_amplitude_im',
    'charger_number',
    'coupling_re', 'coupling_im',
    'displaced_number',
)

DETUNED_LABELS = (
    'battery_number', 'charger_number',
    'coupling_im', 'coupling_re',
    'battery_amplitude_re', 'battery_amplitude_im',
    'charger_amplitude_re', 'charger_amplitude_im',
)


def ho_resonant_moment_system(p: Params) -> MomentSystem:
    if not p.is_resonant:
        raise RequiresResonanceException(
            f'The displaced-frame system needs resonance, got delta_Cd = {p.delta_cd}, delta_Bd = {p.delta_bd}'
        )

    g = p.g
    half_gamma = p.gamma_c / 2

    m = np.zeros((8, 8))
    m[0, 3] = g
    m[0, 0] = -half_gamma
    m[1, 2] = -g
    m[1, 1] = -half_gamma

    m[2, 1] = g
    m[3, 0] = -g

    m[4, 6] = 2 * g

    m[5, 5] = -half_gamma
    m[6, 4] = -g
    m[6, 7] = g
    m[6, 6] = -half_gamma

    m[7, 6] = -2 * g

    v0 = np.zeros(8)
    if g > 0:
        ratio = p.drive_ratio
        v0[2] = ratio
        v0[7] = ratio ** 2

    return MomentSystem(matrix=m, inhomogeneity=np.zeros(8), v0=v0, labels=DISPLACED_LABELS)


def ho_detuned_moment_system(p: Params) -> MomentSystem:
    g, drive = p.g, p.drive
    half_gamma = p.gamma_c / 2
    difference = p.delta_cd - p.delta_bd
    battery, charger = p.delta_bd, p.delta_cd

    m = np.zeros((8, 8))
    m[0, 2] = -2 * g

    m[1, 7] = -2 * drive
    m[1, 2] = 2 * g

    m[2, 4] = drive
    m[2, 1] = -g
    m[2, 0] = g
    m[2, 2] = -half_gamma
    m[2, 3] = difference

    m[3, 5] = -drive
    m[3, 3] = -half_gamma
    m[3, 2] = -difference

    m[4, 7] = g
    m[4, 5] = battery

    m[5, 6] = -g
    m[5, 4] = -battery

    m[6, 5] = g
    m[6, 6] = -half_gamma
    m[6, 7] = charger

    m[7, 4] = -g
    m[7, 7] = -half_gamma
    m[7, 6] = -charger

    inhomogeneity = np.zeros(8)
    inhomogeneity[7] = -drive

    return MomentSystem(matrix=m, inhomogeneity=inhomogeneity, v0=np.zeros(8), labels=DETUNED_LABELS)


def ho_resonant_energy(series: TimeSeries, p: Params) -> NDArray:
    if p.g == 0:
        return np.zeros_like(series.times)

    ratio = p.drive_ratio
    return p.omega_b * (
            series.observable('displaced_number') - 2 * ratio * series.observable('displaced_amplitude_re') + ratio ** 2
    )


def ho_detuned_energy(series: TimeSeries, omega_b: float = 1.0) -> NDArray:
    return omega_b * series.observable('battery_number')


def oscillator_series_from_moments(p: Params, t_grid: ArrayLike) -> TimeSeries:
    if p.is_resonant:
        series = evolve_moments(ho_resonant_moment_system(p), t_grid)
        return series.with_changes(energy=ho_resonant_energy(series, p))

    # the detuned generator always has a zero mode, so the closed inverse never applies
    series = evolve_moments(ho_detuned_moment_system(p), t_grid, MomentPropagation.ODE)
    return series.with_changes(energy=ho_detuned_energy(series, p.omega_b))
