from dephasing_battery.domain.solver_exception import SolverException


class UnstableTrajectoryException(SolverException):
    pass
