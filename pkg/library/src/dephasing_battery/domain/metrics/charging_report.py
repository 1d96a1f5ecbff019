from dataclasses import dataclass, replace
from typing import Tuple


@dataclass(frozen=True)
class ChargingReport:
    tau: float
    n: int
    e_ss: float
    e_max_transient: float
    gamma_c: float
    converged: bool
    horizon: float
    notes: Tuple[str, ...] = ()

    def with_notes(self, *notes: str) -> 'ChargingReport':
        return replace(self, notes=self.notes + tuple(notes))
