import numpy as np

from dephasing_battery.domain.operators.operator_algebra import ComplexMatrix
from dephasing_battery.domain.operators.unphysical_state_exception import UnphysicalStateException

STATE_TOLERANCE = 1e-7


def require_physical_state(rho: ComplexMatrix, tolerance: float = STATE_TOLERANCE) -> None:
    trace = complex(np.trace(rho))
    if abs(trace - 1) > tolerance:
        raise UnphysicalStateException(f'Density matrix has trace {trace:.12g}')

    smallest = float(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0])
    if smallest < -tolerance:
        raise UnphysicalStateException(f'Density matrix has negative eigenvalue {smallest:.3e}')
