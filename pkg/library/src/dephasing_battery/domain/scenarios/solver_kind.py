from enum import Enum


class SolverKind(Enum):
    LINDBLAD = 'lindblad'
    MOMENTS = 'moments'
    ANALYTIC = 'analytic'
    STOCHASTIC = 'stochastic'
