from enum import Enum


class MomentPropagation(Enum):
    AUTOMATIC = 'automatic'
    ODE = 'ode'
