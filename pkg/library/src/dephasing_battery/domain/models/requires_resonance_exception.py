from dephasing_battery.domain.solver_exception import SolverException


class RequiresResonanceException(SolverException):
    pass
