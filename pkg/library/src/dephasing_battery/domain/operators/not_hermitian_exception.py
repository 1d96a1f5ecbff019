from dephasing_battery.domain.solver_exception import SolverException


class NotHermitianException(SolverException):
    pass
