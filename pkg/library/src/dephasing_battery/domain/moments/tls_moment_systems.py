"""Closed moment equations of the two-TLS charger-battery pair in the drive frame.

The first system couples the battery and charger inversions to the correlations that feed them, the
second one carries the battery coherence. Complex moments are split into real and imaginary parts.
"""
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike

from dephasing_battery.domain.lindblad.time_series import TimeSeries
from dephasing_battery.domain.metrics.battery_metrics import entropy_from_energy_and_ergotropy, \
    tls_ergotropy_from_moments
from dephasing_battery.domain.moments.moment_evolution import evolve_moments
from dephasing_battery.domain.moments.moment_system import MomentSystem
from dephasing_battery.domain.models.params import Params

POPULATION_LABELS = (
    'sigma_z_b', 'sigma_z_c',
    'sp_c_sm_b_re', 'sp_c_sm_b_im',
    'sz_c_sm_b_re', 'sz_c_sm_b_im',
    'sm_c_sm_b_re', 'sm_c_sm_b_im',
    'sigma_minus_c_re', 'sigma_minus_c_im',
)

COHERENCE_LABELS = (
    'sigma_minus_b_re', 'sigma_minus_b_im',
    'sm_c_sz_b_re', 'sm_c_sz_b_im',
    'sz_c_sz_b',
)


def tls_moment_systems(p: Params) -> Tuple[MomentSystem, MomentSystem]:
    return _population_system(p), _coherence_system(p)


def tls_series_from_moments(p: Params, t_grid: ArrayLike) -> TimeSeries:
    populations, coherences = tls_moment_systems(p)
    population_series = evolve_moments(populations, t_grid)
    coherence_series = evolve_moments(coherences, t_grid)

    sigma_z = population_series.observable('sigma_z_b')
    sigma_minus = coherence_series.observable('sigma_minus_b_re') + 1j * coherence_series.observable('sigma_minus_b_im')

    energy = p.omega_b / 2 * (sigma_z + 1)
    ergotropy = tls_ergotropy_from_moments(sigma_z, sigma_minus, p.omega_b)

    return TimeSeries(
        times=population_series.times,
        energy=energy,
        ergotropy=ergotropy,
        entropy=entropy_from_energy_and_ergotropy(energy, ergotropy, p.omega_b),
        moments=population_series.moments | coherence_series.moments,
    )


def _population_system(p: Params) -> MomentSystem:
    g, drive = p.g, p.drive
    half_gamma = p.gamma_c / 2
    difference = p.delta_cd - p.delta_bd
    total = p.delta_cd + p.delta_bd
    battery, charger = p.delta_bd, p.delta_cd

    m = np.zeros((10, 10))
    m[0, 3] = -4 * g

    m[1, 9] = -4 * drive
    m[1, 3] = 4 * g

    m[2, 5] = drive
    m[2, 2] = -half_gamma
    m[2, 3] = -difference

    m[3, 4] = -drive
    m[3, 1] = -g / 2
    m[3, 0] = g / 2
    m[3, 3] = -half_gamma
    m[3, 2] = difference

    m[4, 3] = 2 * drive
    m[4, 7] = -2 * drive
    m[4, 9] = -g
    m[4, 5] = battery

    m[5, 2] = -2 * drive
    m[5, 6] = 2 * drive
    m[5, 8] = g
    m[5, 4] = -battery

    m[6, 5] = -drive
    m[6, 6] = -half_gamma
    m[6, 7] = total

    m[7, 4] = drive
    m[7, 7] = -half_gamma
    m[7, 6] = -total

    m[8, 5] = -g
    m[8, 8] = -half_gamma
    m[8, 9] = charger

    m[9, 1] = drive
    m[9, 4] = g
    m[9, 9] = -half_gamma
    m[9, 8] = -charger

    v0 = np.zeros(10)
    v0[0] = v0[1] = -1

    return MomentSystem(matrix=m, inhomogeneity=np.zeros(10), v0=v0, labels=POPULATION_LABELS)


def _coherence_system(p: Params) -> MomentSystem:
    g, drive = p.g, p.drive
    half_gamma = p.gamma_c / 2
    battery, charger = p.delta_bd, p.delta_cd

    m = np.array([
        [0.0, battery, 0.0, -g, 0.0],
        [-battery, 0.0, g, 0.0, 0.0],
        [0.0, -g, -half_gamma, charger, 0.0],
        [g, 0.0, -charger, -half_gamma, drive],
        [0.0, 0.0, 0.0, -4 * drive, 0.0],
    ])

    return MomentSystem(
        matrix=m, inhomogeneity=np.zeros(5), v0=np.array([0.0, 0.0, 0.0, 0.0, 1.0]), labels=COHERENCE_LABELS
    )
