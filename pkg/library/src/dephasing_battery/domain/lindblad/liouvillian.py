import numpy as np

from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.operators.dimension_mismatch_exception import DimensionMismatchException
from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix, as_operator, identity


def liouvillian_apply(model: ModelSpec, rho: ComplexMatrix) -> ComplexMatrix:
    if rho.shape != model.hamiltonian.shape:
        raise DimensionMismatchException(
            f'State of shape {rho.shape} does not match model dimension {model.dimension}'
        )

    return as_operator(liouvillian_rate(model, rho))


def liouvillian_rate(model: ModelSpec, rho: ComplexMatrix) -> ComplexMatrix:
    """Unchecked right-hand side of the master equation, used inside integrator loops."""
    h = model.hamiltonian
    jump = model.jump
    jump_squared = model.jump_squared
    gamma = model.params.gamma_c

    unitary = -1j * (h @ rho - rho @ h)
    if gamma == 0:
        return unitary

    dissipator = jump @ rho @ jump - 0.5 * (jump_squared @ rho + rho @ jump_squared)
    return unitary + gamma * dissipator


def liouvillian_superoperator(model: ModelSpec) -> ComplexMatrix:
    """Matrix of the generator acting on row-major vectorised density matrices."""
    h = model.hamiltonian
    jump = model.jump
    jump_squared = model.jump_squared
    unit = identity(model.dimension)
    gamma = model.params.gamma_c

    generator = -1j * (np.kron(h, unit) - np.kron(unit, h.T))
    generator += gamma * (
            np.kron(jump, jump.T)
            - 0.5 * np.kron(jump_squared, unit)
            - 0.5 * np.kron(unit, jump_squared.T)
    )

    return as_operator(generator)
