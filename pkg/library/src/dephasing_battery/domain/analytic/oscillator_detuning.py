from enum import Enum


class OscillatorDetuning(Enum):
    DETUNED_DRIVE = 'detuned_drive'
    DETUNED_CB = 'detuned_cb'
