import math
import warnings

from dephasing_battery.domain.analytic.charging_regime import ChargingRegime
from dephasing_battery.domain.analytic.chi_function import slow_branch_constant
from dephasing_battery.domain.analytic.regime_mismatch_warning import RegimeMismatchWarning
from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.model_kind import ModelKind
from dephasing_battery.domain.models.params import Params

SMALL_GAMMA_LIMIT = 0.1
LARGE_GAMMA_LIMIT = 10.0
WEAK_DRIVE_LIMIT = 0.2
STRONG_DRIVE_LIMIT = 5.0
# drive ratio at which the slow branch constant reaches 1/2 and the root 32 f1 g^2 meets 16 g^2
BRANCH_CROSSOVER = math.sqrt(3) / 2


def charging_time_asymptotic(p: Params, n: int, regime: ChargingRegime) -> float:
    if p.gamma_c <= 0:
        raise InvalidParametersException('gamma_c', 'asymptotic charging times need a positive dephasing rate')

    if p.g <= 0:
        raise InvalidParametersException('g', 'asymptotic charging times need a positive coupling')

    gamma, g, drive = p.gamma_c, p.g, p.drive
    _warn_on_regime_mismatch(p, regime)

    match regime:
        case ChargingRegime.SMALL_GAMMA | ChargingRegime.HO_SMALL_GAMMA:
            return 4 * n / gamma
        case ChargingRegime.LARGE_GAMMA_WEAK_DRIVE:
            if drive == 0:
                return math.inf
            return n * g ** 2 * gamma / drive ** 4
        case ChargingRegime.LARGE_GAMMA_STRONG_DRIVE | ChargingRegime.HO_LARGE_GAMMA:
            return n * gamma / (2 * g ** 2)


def optimal_dephasing(p: Params, kind: ModelKind) -> float:
    match kind:
        case ModelKind.TWO_HO:
            return 4 * p.g
        case ModelKind.TWO_TLS:
            return _two_tls_optimal_dephasing(p)
        case _:
            raise InvalidParametersException('kind', f'no optimal dephasing estimate for {kind.value}')


def _two_tls_optimal_dephasing(p: Params) -> float:
    ratio = p.drive_ratio

    if ratio <= WEAK_DRIVE_LIMIT:
        return 8 * p.drive ** 2 / p.g

    if ratio >= BRANCH_CROSSOVER:
        return 4 * p.g

    # the slow-branch root 32 f1 approaches 64 r^4 from below; its offset from the weak-drive limit fades out
    # logarithmically in r so that the estimate is continuous at WEAK_DRIVE_LIMIT
    edge_offset = 8 * WEAK_DRIVE_LIMIT ** 2 / _slow_branch_root(WEAK_DRIVE_LIMIT)
    weight = math.log(ratio / WEAK_DRIVE_LIMIT) / math.log(BRANCH_CROSSOVER / WEAK_DRIVE_LIMIT)

    return p.g * _slow_branch_root(ratio) * edge_offset ** (1 - weight)


def _slow_branch_root(ratio: float) -> float:
    return math.sqrt(32 * slow_branch_constant(ratio))


def _warn_on_regime_mismatch(p: Params, regime: ChargingRegime) -> None:
    relative_gamma = p.gamma_c / p.g
    problems = []

    if regime in (ChargingRegime.SMALL_GAMMA, ChargingRegime.HO_SMALL_GAMMA) and relative_gamma > SMALL_GAMMA_LIMIT:
        problems.append(f'gamma_C/g = {relative_gamma:.3g} is not small')

    if regime in (ChargingRegime.LARGE_GAMMA_WEAK_DRIVE, ChargingRegime.LARGE_GAMMA_STRONG_DRIVE,
                  ChargingRegime.HO_LARGE_GAMMA) and relative_gamma < LARGE_GAMMA_LIMIT:
        problems.append(f'gamma_C/g = {relative_gamma:.3g} is not large')

    if regime is ChargingRegime.LARGE_GAMMA_WEAK_DRIVE and p.drive / p.g > WEAK_DRIVE_LIMIT:
        problems.append(f'F/g = {p.drive / p.g:.3g} is not weak')

    if regime is ChargingRegime.LARGE_GAMMA_STRONG_DRIVE and p.drive / p.g < STRONG_DRIVE_LIMIT:
        problems.append(f'F/g = {p.drive / p.g:.3g} is not strong')

    if problems:
        warnings.warn(f'{regime.value} estimate used outside its regime: {", ".join(problems)}', RegimeMismatchWarning)
