from logging import Logger
from typing import Callable, List, Sequence

from dephasing_battery.domain.task_runner import TaskRunner


class SerialTaskRunner(TaskRunner):
    def __init__(self, logger: Logger):
        self.__logger = logger

    def map[T, R](self, task: Callable[[T], R], items: Sequence[T]) -> List[R]:
        self.__logger.debug(f'Running {len(items)} tasks in process')
        return [task(item) for item in items]
