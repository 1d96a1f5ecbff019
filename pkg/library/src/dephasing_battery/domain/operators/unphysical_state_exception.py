from dephasing_battery.domain.solver_exception import SolverException


class UnphysicalStateException(SolverException):
    pass
