from enum import Enum


class ChargingRegime(Enum):
    SMALL_GAMMA = 'small_gamma'
    LARGE_GAMMA_WEAK_DRIVE = 'large_gamma_weak_drive'
    LARGE_GAMMA_STRONG_DRIVE = 'large_gamma_strong_drive'
    HO_SMALL_GAMMA = 'ho_small_gamma'
    HO_LARGE_GAMMA = 'ho_large_gamma'
