from enum import Enum


class UnravellingScheme(Enum):
    MEASUREMENT_NONLINEAR = 'measurement'
    CLASSICAL_NOISE_LINEAR = 'noise'
