from dephasing_battery.domain.solver_exception import SolverException


class OnResonancePoleException(SolverException):
    pass
