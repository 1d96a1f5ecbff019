from dephasing_battery.domain.solver_exception import SolverException


class DegenerateSteadyStateException(SolverException):
    def __init__(self, null_space_dimension: int):
        super().__init__(f'Liouvillian null space has dimension {null_space_dimension}, steady state is not unique')
        self.null_space_dimension = null_space_dimension
