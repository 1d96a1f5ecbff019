from typing import Optional

from dephasing_battery.domain.metrics.charging_report import ChargingReport
from dephasing_battery.domain.solver_exception import SolverException


class NotConvergedException(SolverException):
    def __init__(self, message: str, report: Optional[ChargingReport] = None):
        super().__init__(message)
        self.report = report
