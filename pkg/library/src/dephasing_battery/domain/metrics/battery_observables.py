from typing import Dict, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries, validate_time_grid
from dephasing_battery.domain.metrics.battery_metrics import energy, entropy, ergotropy
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, destroy, expect, sigma_minus, \
    sigma_z

type BatteryOperators = Dict[str, ComplexMatrix]


def battery_moment_operators(model: ModelSpec) -> BatteryOperators:
    """Battery operators reported alongside the thermodynamic quantities, keyed by moment label."""
    if model.kind.has_oscillator_battery:
        return dict(battery_amplitude=destroy(model.battery_dimension))

    if model.n_batteries == 1:
        return dict(sigma_z_b=sigma_z(), sigma_minus_b=sigma_minus())

    return {}


def series_from_states(model: ModelSpec, times: ArrayLike, states: Sequence[ComplexMatrix],
                       keep_states: bool = False, notes: Tuple[str, ...] = ()) -> TimeSeries:
    grid = validate_time_grid(times)
    moment_operators = battery_moment_operators(model)
    h_b = model.battery_hamiltonian

    energies = np.empty(len(states))
    ergotropies = np.empty(len(states))
    entropies = np.empty(len(states))
    charger_population = np.empty(len(states))
    moments: Dict[str, NDArray] = {name: np.empty(len(states), dtype=np.complex128) for name in moment_operators}

    for index, rho in enumerate(states):
        rho_b = model.battery_state(rho)

        energies[index] = energy(rho_b, h_b)
        ergotropies[index] = ergotropy(rho_b, h_b)
        entropies[index] = entropy(rho_b)
        charger_population[index] = np.real(expect(model.jump, rho))

        for name, operator in moment_operators.items():
            moments[name][index] = expect(operator, rho_b)

    columns: Dict[str, NDArray] = dict(charger_population=charger_population)
    for name, values in moments.items():
        if name == 'sigma_z_b':
            columns[name] = np.real(values)
        else:
            columns[f'{name}_re'] = np.real(values)
            columns[f'{name}_im'] = np.imag(values)

    return TimeSeries(
        times=grid,
        energy=energies,
        ergotropy=ergotropies,
        entropy=entropies,
        moments=columns,
        states=tuple(states) if keep_states else None,
        notes=notes,
    )
