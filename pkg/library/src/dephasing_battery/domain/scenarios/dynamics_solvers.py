from logging import Logger

from dephasing_battery.domain.scenarios.analytic_dynamics_solver import AnalyticDynamicsSolver
from dephasing_battery.domain.scenarios.dynamics_solver import DynamicsSolver
from dephasing_battery.domain.scenarios.lindblad_dynamics_solver import LindbladDynamicsSolver
from dephasing_battery.domain.scenarios.moment_dynamics_solver import MomentDynamicsSolver
from dephasing_battery.domain.scenarios.solver_kind import SolverKind
from dephasing_battery.domain.scenarios.stochastic_dynamics_solver import StochasticDynamicsSolver
from dephasing_battery.domain.task_runner import TaskRunner


def dynamics_solver_for(kind: SolverKind, task_runner: TaskRunner, logger: Logger) -> DynamicsSolver:
    match kind:
        case SolverKind.LINDBLAD:
            return LindbladDynamicsSolver(logger)
        case SolverKind.MOMENTS:
            return MomentDynamicsSolver()
        case SolverKind.ANALYTIC:
            return AnalyticDynamicsSolver()
        case SolverKind.STOCHASTIC:
            return StochasticDynamicsSolver(task_runner, logger)
