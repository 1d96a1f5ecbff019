from logging import Logger
from typing import Callable, List, Tuple

from dephasing_battery.domain.models.cutoff_too_small_exception import CutoffTooSmallException
from dephasing_battery.domain.models.model_builders import build_model
from dephasing_battery.domain.models.model_spec import ModelSpec
from dephasing_battery.domain.models.params import Params
from dephasing_battery.domain.scenarios.scenario import Scenario

MAX_ESCALATIONS = 6
CUTOFF_STEP = 4


def with_cutoff_escalation[T](scenario: Scenario, params: Params, action: Callable[[ModelSpec], T],
                              logger: Logger) -> Tuple[T, Tuple[str, ...]]:
    """Run action on the scenario's model, enlarging an automatic Fock cutoff until the result fits."""
    cutoff = scenario.cutoff
    notes: List[str] = []

    for _ in range(MAX_ESCALATIONS + 1):
        model = build_model(scenario.model, params, cutoff, scenario.n_batteries)

        try:
            return action(model), tuple(notes)
        except CutoffTooSmallException as e:
            if scenario.cutoff is not None or model.cutoff is None:
                raise

            cutoff = model.cutoff + CUTOFF_STEP
            note = f'Fock cutoff raised from {model.cutoff} to {cutoff} ({e})'
            logger.warning(note)
            notes.append(note)

    raise CutoffTooSmallException(f'Fock cutoff {cutoff} still too small after {MAX_ESCALATIONS} escalations')
