from dephasing_battery.domain.solver_exception import SolverException


class DimensionMismatchException(SolverException):
    pass
