from logging import getLogger
from typing import Dict, List, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from dephasing_battery.domain.lindblad.time_series import TimeSeries, validate_time_grid
from dephasing_battery.domain.metrics.battery_observables import series_from_states
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, hermitize, ket, sigma_z
from dephasing_battery.domain.stochastic.invalid_trajectory_config_exception import InvalidTrajectoryConfigException
from dephasing_battery.domain.stochastic.stochastic_steps import measurement_update, noise_update
from dephasing_battery.domain.stochastic.trajectory_batch import TrajectoryBatch
from dephasing_battery.domain.stochastic.trajectory_batch_result import TrajectoryBatchResult
from dephasing_battery.domain.stochastic.trajectory_config import TrajectoryConfig
from dephasing_battery.domain.stochastic.unravelling_scheme import UnravellingScheme
from dephasing_battery.domain.stochastic.unstable_trajectory_exception import UnstableTrajectoryException
from dephasing_battery.domain.task_runner import TaskRunner

LOGGER = getLogger(__name__)

BATCH_SIZE = 100
UNSTABLE_NORM = 1e3
SAMPLE_TIME_TOLERANCE = 1e-9


def wiener_increments(seed: int, trajectory_index: int, n_steps: int, dt: float) -> NDArray[np.float64]:
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trajectory_index,)))
    return rng.normal(0.0, np.sqrt(dt), n_steps)


def ensemble_run(model: ModelSpec, cfg: TrajectoryConfig, t_grid: ArrayLike, task_runner: TaskRunner) -> TimeSeries:
    cfg.validate_for(model)
    times = validate_time_grid(t_grid)
    sample_steps = _sample_steps(cfg, times)

    batches = [
        TrajectoryBatch(
            model=model, config=cfg, sample_steps=sample_steps, first_index=first,
            count=min(BATCH_SIZE, cfg.n_traj - first)
        )
        for first in range(0, cfg.n_traj, BATCH_SIZE)
    ]

    LOGGER.info(f'Running {cfg.n_traj} {cfg.scheme.value} trajectories in {len(batches)} batches')
    results = task_runner.map(simulate_trajectory_batch, batches)

    return _combine(model, cfg, times, results)


def simulate_trajectory_batch(batch: TrajectoryBatch) -> TrajectoryBatchResult:
    model, cfg = batch.model, batch.config
    observables = ensemble_observables(model)
    n_samples = len(batch.sample_steps)
    sample_positions = {step: position for position, step in enumerate(batch.sample_steps)}

    start = ket(model.dimension, int(np.argmax(np.real(np.diag(model.initial_state)))))
    states = np.tile(start, (batch.count, 1))
    increments = np.stack([
        wiener_increments(cfg.seed, index, cfg.n_steps, cfg.dt)
        for index in range(batch.first_index, batch.first_index + batch.count)
    ])

    sums = {name: np.zeros(n_samples) for name in list(observables) + ['norm']}
    squared_sums = {name: np.zeros(n_samples) for name in sums}
    density_sums = np.zeros((n_samples, model.dimension, model.dimension), dtype=np.complex128)

    def record(position: int, squared_norms: NDArray) -> None:
        values = {
            name: np.real(np.sum(states.conj() * (states @ operator.T), axis=1))
            for name, operator in observables.items()
        } | dict(norm=squared_norms)

        for name, value in values.items():
            sums[name][position] = np.sum(value)
            squared_sums[name][position] = np.sum(value ** 2)

        density_sums[position] = np.einsum('bi,bj->ij', states, states.conj())

    if 0 in sample_positions:
        record(sample_positions[0], np.ones(batch.count))

    linear = cfg.scheme is UnravellingScheme.CLASSICAL_NOISE_LINEAR
    update = noise_update if linear else measurement_update

    for step in range(1, cfg.n_steps + 1):
        unnormalized = update(states, model, cfg.dt, increments[:, step - 1])
        squared_norms = np.real(np.sum(unnormalized.conj() * unnormalized, axis=1))

        if np.any(squared_norms > UNSTABLE_NORM ** 2) or not np.all(np.isfinite(squared_norms)):
            raise UnstableTrajectoryException(
                f'Trajectory norm left the stable range at t = {step * cfg.dt:.6g} in the batch starting at '
                f'trajectory {batch.first_index}'
            )

        if linear and not cfg.renormalize:
            states = unnormalized
        else:
            states = unnormalized / np.sqrt(squared_norms)[:, None]

        if step in sample_positions:
            record(sample_positions[step], squared_norms)

    return TrajectoryBatchResult(count=batch.count, sums=sums, squared_sums=squared_sums, density_sums=density_sums)


def ensemble_observables(model: ModelSpec) -> Dict[str, ComplexMatrix]:
    observables = dict(
        energy=model.battery_operator(model.battery_hamiltonian),
        charger_population=model.jump,
    )

    if not model.kind.has_oscillator_battery and model.n_batteries == 1:
        observables['sigma_z_b'] = model.battery_operator(sigma_z())

    return observables


def _sample_steps(cfg: TrajectoryConfig, times: NDArray) -> Tuple[int, ...]:
    steps = np.rint(times / cfg.dt).astype(int)

    if np.any(np.abs(steps * cfg.dt - times) > SAMPLE_TIME_TOLERANCE * np.maximum(1.0, times)):
        raise InvalidTrajectoryConfigException('dt', 'sample times must be integer multiples of dt')

    if steps[-1] > cfg.n_steps:
        raise InvalidTrajectoryConfigException(
            'n_steps', f'sample time {times[-1]} lies beyond the simulated duration {cfg.duration}'
        )

    if np.any(np.diff(steps) <= 0):
        raise InvalidTrajectoryConfigException('dt', 'two sample times fall on the same step')

    return tuple(int(step) for step in steps)


def _combine(model: ModelSpec, cfg: TrajectoryConfig, times: NDArray,
             results: List[TrajectoryBatchResult]) -> TimeSeries:
    count = sum(result.count for result in results)
    names = list(results[0].sums)

    means: Dict[str, NDArray] = {}
    errors: Dict[str, NDArray] = {}
    for name in names:
        total = np.sum([result.sums[name] for result in results], axis=0)
        squares = np.sum([result.squared_sums[name] for result in results], axis=0)
        means[name] = total / count

        if count > 1:
            variance = np.maximum(squares - count * means[name] ** 2, 0.0) / (count - 1)
            errors[name] = np.sqrt(variance / count)
        else:
            errors[name] = np.zeros_like(total)

    averaged = np.sum([result.density_sums for result in results], axis=0) / count
    states = [hermitize(rho / np.trace(rho)) for rho in averaged]

    series = series_from_states(model, times, states)
    moments = series.moments | {name: means[name] for name in names if name != 'energy'}

    return series.with_changes(
        energy=means['energy'],
        moments=moments,
        errors=errors,
        metadata=dict(
            scheme=cfg.scheme.value,
            renormalize=cfg.renormalize or cfg.scheme is UnravellingScheme.MEASUREMENT_NONLINEAR,
            n_traj=count,
            seed=cfg.seed,
            dt=cfg.dt,
        ),
    )
