from dephasing_battery.domain.solver_exception import SolverException


class SingularMatrixException(SolverException):
    pass
