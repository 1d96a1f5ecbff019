from enum import Enum


class IntegrationMethod(Enum):
    RUNGE_KUTTA = 'runge_kutta'
    EXPONENTIAL = 'exponential'
