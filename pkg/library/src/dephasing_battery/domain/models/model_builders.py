import math
from functools import reduce
from typing import Optional

import numpy as np

from dephasing_battery.domain.models.cutoff_too_small_exception import CutoffTooSmallException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.models.too_many_batteries_exception import TooManyBatteriesException
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, StateVector, as_operator, dagger, \
    destroy, embed, excited_projector, ket, number, partial_trace, projector, sigma_minus, sigma_plus

MAX_STAR_BATTERIES = 6
TOP_FOCK_POPULATION_LIMIT = 1e-8

TLS_GROUND_INDEX = 1
FOCK_VACUUM_INDEX = 0


def build_two_tls(p: Params) -> ModelSpec:
    return _build_star(p, 1, ModelKind.TWO_TLS)


def build_star_tls(p: Params, n_batteries: int) -> ModelSpec:
    return _build_star(p, n_batteries, ModelKind.STAR_TLS)


def build_two_ho(p: Params, cutoff: int) -> ModelSpec:
    _require_cutoff(cutoff)
    dims = (cutoff, cutoff)
    a_c = embed(destroy(cutoff), dims, 0)
    a_b = embed(destroy(cutoff), dims, 1)
    n_c = embed(number(cutoff), dims, 0)
    n_b = embed(number(cutoff), dims, 1)

    hamiltonian = (
            p.delta_cd * n_c + p.delta_bd * n_b
            + p.g * (dagger(a_c) @ a_b + dagger(a_b) @ a_c)
            + p.drive * (a_c + dagger(a_c))
    )

    return ModelSpec(
        kind=ModelKind.TWO_HO,
        params=p,
        dims=dims,
        hamiltonian=as_operator(hamiltonian),
        jump=n_c,
        battery_hamiltonian=as_operator(p.omega_b * number(cutoff)),
        charger_hamiltonian=as_operator(_charger_frequency(p) * n_c),
        initial_state=_product_state(ket(cutoff, FOCK_VACUUM_INDEX), ket(cutoff, FOCK_VACUUM_INDEX)),
        cutoff=cutoff,
    )


def build_tls_ho(p: Params, cutoff: int) -> ModelSpec:
    _require_cutoff(cutoff)
    dims = (2, cutoff)
    sp_c = embed(sigma_plus(), dims, 0)
    sm_c = embed(sigma_minus(), dims, 0)
    excited_c = embed(excited_projector(), dims, 0)
    a_b = embed(destroy(cutoff), dims, 1)
    n_b = embed(number(cutoff), dims, 1)

    hamiltonian = (
            p.delta_cd * excited_c + p.delta_bd * n_b
            + p.g * (sp_c @ a_b + sm_c @ dagger(a_b))
            + p.drive * (sp_c + sm_c)
    )

    return ModelSpec(
        kind=ModelKind.TLS_HO,
        params=p,
        dims=dims,
        hamiltonian=as_operator(hamiltonian),
        jump=excited_c,
        battery_hamiltonian=as_operator(p.omega_b * number(cutoff)),
        charger_hamiltonian=as_operator(_charger_frequency(p) * excited_c),
        initial_state=_product_state(ket(2, TLS_GROUND_INDEX), ket(cutoff, FOCK_VACUUM_INDEX)),
        cutoff=cutoff,
    )


def build_model(kind: ModelKind, p: Params, cutoff: Optional[int] = None, n_batteries: int = 1) -> ModelSpec:
    match kind:
        case ModelKind.TWO_TLS:
            return build_two_tls(p)
        case ModelKind.STAR_TLS:
            return build_star_tls(p, n_batteries)
        case ModelKind.TWO_HO:
            return build_two_ho(p, cutoff or default_fock_cutoff(p))
        case ModelKind.TLS_HO:
            return build_tls_ho(p, cutoff or default_fock_cutoff(p))


def default_fock_cutoff(p: Params) -> int:
    if p.drive == 0:
        return 2

    ratio = p.drive_ratio
    return 2 + math.ceil(8 * ratio ** 2 + 6 * ratio)


def check_fock_cutoff(model: ModelSpec, rho: ComplexMatrix) -> None:
    oscillator_positions = [
        position for position, is_oscillator in enumerate([
            model.kind.has_oscillator_charger,
            model.kind.has_oscillator_battery
        ]) if is_oscillator
    ]

    for position in oscillator_positions:
        populations = np.real(np.diag(partial_trace(rho, model.dims, position)))
        top_population = float(np.sum(populations[-2:]))

        if top_population >= TOP_FOCK_POPULATION_LIMIT:
            raise CutoffTooSmallException(
                f'Fock cutoff {model.cutoff} leaves population {top_population:.3e} in the top two levels '
                f'of subsystem {position}'
            )


def _build_star(p: Params, n_batteries: int, kind: ModelKind) -> ModelSpec:
    if not 1 <= n_batteries <= MAX_STAR_BATTERIES:
        raise TooManyBatteriesException(
            f'Star configuration supports 1 to {MAX_STAR_BATTERIES} batteries, got {n_batteries}'
        )

    dims = (2,) * (n_batteries + 1)
    sp_c = embed(sigma_plus(), dims, 0)
    sm_c = embed(sigma_minus(), dims, 0)
    excited_c = embed(excited_projector(), dims, 0)
    battery_lowering = sum(embed(sigma_minus(), dims, j) for j in range(1, n_batteries + 1))
    battery_excitations = sum(embed(excited_projector(), dims, j) for j in range(1, n_batteries + 1))

    hamiltonian = (
            p.delta_cd * excited_c + p.delta_bd * battery_excitations
            + p.g * (sp_c @ battery_lowering + dagger(battery_lowering) @ sm_c)
            + p.drive * (sp_c + sm_c)
    )

    battery_dims = (2,) * n_batteries
    battery_hamiltonian = p.omega_b * sum(
        embed(excited_projector(), battery_dims, j) for j in range(n_batteries)
    )

    return ModelSpec(
        kind=kind,
        params=p,
        dims=dims,
        hamiltonian=as_operator(hamiltonian),
        jump=excited_c,
        battery_hamiltonian=as_operator(battery_hamiltonian),
        charger_hamiltonian=as_operator(_charger_frequency(p) * excited_c),
        initial_state=_product_state(*[ket(2, TLS_GROUND_INDEX)] * (n_batteries + 1)),
        n_batteries=n_batteries,
    )


def _charger_frequency(p: Params) -> float:
    return p.omega_b + p.delta_cb


def _product_state(*factors: StateVector) -> ComplexMatrix:
    return projector(reduce(np.kron, factors))


def _require_cutoff(cutoff: int) -> None:
    if cutoff < 2:
        raise CutoffTooSmallException(f'Fock cutoff must be at least 2, got {cutoff}')
