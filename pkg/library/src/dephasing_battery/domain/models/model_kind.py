from enum import Enum


class ModelKind(Enum):
    TWO_TLS = 'two_tls'
    TWO_HO = 'two_ho'
    TLS_HO = 'tls_ho'
    STAR_TLS = 'star_tls'

    @property
    def has_oscillator_charger(self) -> bool:
        return self is ModelKind.TWO_HO

    @property
    def has_oscillator_battery(self) -> bool:
        return self in (ModelKind.TWO_HO, ModelKind.TLS_HO)
