from dephasing_battery.domain.models.params import Params


def any_params() -> Params:
    return params_with()


def params_with(drive: float = 0.5, g: float = 1.0, gamma_c: float = 1.0, delta_cd: float = 0.0,
                delta_bd: float = 0.0, omega_b: float = 1.0) -> Params:
    return Params(drive=drive, g=g, gamma_c=gamma_c, delta_cd=delta_cd, delta_bd=delta_bd, omega_b=omega_b)


def resonant_params_with(drive_ratio: float, gamma_c: float, g: float = 1.0) -> Params:
    return params_with(drive=drive_ratio * g, g=g, gamma_c=gamma_c)
