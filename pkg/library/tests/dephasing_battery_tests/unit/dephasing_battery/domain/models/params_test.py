import math
import pickle

import pytest

from dephasing_battery.domain.models.invalid_parameters_exception import InvalidParametersException
from dephasing_battery.domain.models.params import Params
from dephasing_battery_tests.support.builders.params_builder import params_with


def test_derives_charger_battery_detuning() -> None:
    p = params_with(delta_cd=0.3, delta_bd=0.1)

    assert p.delta_cb == pytest.approx(0.2)
    assert not p.is_resonant


def test_reports_resonance_when_both_drive_detunings_vanish() -> None:
    assert params_with().is_resonant


def test_derives_drive_ratio() -> None:
    assert params_with(drive=0.5, g=2.0).drive_ratio == 0.25


def test_drive_ratio_needs_coupling() -> None:
    with pytest.raises(InvalidParametersException, match='^g: '):
        _ = params_with(g=0.0).drive_ratio


@pytest.mark.parametrize('field_name', ['drive', 'g', 'gamma_c'])
def test_rejects_negative_rates(field_name: str) -> None:
    with pytest.raises(InvalidParametersException) as exception_info:
        Params(**{field_name: -0.1})

    assert exception_info.value.field_name == field_name


def test_rejects_non_finite_values() -> None:
    with pytest.raises(InvalidParametersException, match='finite'):
        Params(delta_cd=math.nan)


def test_rejects_non_positive_battery_frequency() -> None:
    with pytest.raises(InvalidParametersException, match='omega_b'):
        Params(omega_b=0.0)


def test_copies_with_changes_and_revalidates() -> None:
    p = params_with(gamma_c=1.0)

    assert p.with_changes(gamma_c=2.0).gamma_c == 2.0
    assert p.gamma_c == 1.0

    with pytest.raises(InvalidParametersException):
        p.with_changes(gamma_c=-1.0)


def test_parameter_errors_survive_pickling() -> None:
    error = InvalidParametersException('gamma_c', 'must be non-negative, got -1')

    restored = pickle.loads(pickle.dumps(error))

    assert isinstance(restored, InvalidParametersException)
    assert restored.field_name == 'gamma_c'
    assert str(restored) == str(error)
