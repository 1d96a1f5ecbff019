from enum import Enum


class AnalysisKind(Enum):
    DYNAMICS = 'dynamics'
    CHARGING_TIME = 'charging_time'
    STEADY_STATE = 'steady_state'
