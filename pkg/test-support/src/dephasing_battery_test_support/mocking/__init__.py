from typing import Any, Callable, List, Sequence, Type, cast
from unittest.mock import create_autospec

from dephasing_battery.domain.task_runner import TaskRunner
from dephasing_battery_test_support.mocking.stub import Stub
from dephasing_battery_test_support.mocking.verifiable_spy import VerifiableSpy


# Callable[[], T] rather than Type[T] so that abstract ports can be mocked
def mock_class[T](cls: Type[T] | Callable[[], T]) -> T:
    return cast(T, create_autospec(spec=cls, instance=True))


def verify(mock: Any) -> VerifiableSpy:
    return VerifiableSpy(mock)


def when_calling(mock: Any) -> Stub:
    return Stub(mock)


def inline_task_runner() -> TaskRunner:
    """A TaskRunner mock that really runs its tasks, in order, so tests can both use results and verify dispatch."""
    task_runner = mock_class(TaskRunner)

    def run_inline(task: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        return [task(item) for item in items]

    when_calling(task_runner.map).invoke(run_inline)
    return task_runner
