from dephasing_battery.domain.solver_exception import SolverException


class StepSizeUnderflowException(SolverException):
    def __init__(self, last_good_time: float, message: str):
        super().__init__(f'Integration failed after t = {last_good_time:.6g}: {message}')
        self.last_good_time = last_good_time
