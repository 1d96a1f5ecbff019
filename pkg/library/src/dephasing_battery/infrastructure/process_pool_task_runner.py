from concurrent.futures import ProcessPoolExecutor
from logging import Logger
from typing import Callable, List, Optional, Sequence

from dephasing_battery.domain.task_runner import TaskRunner


class ProcessPoolTaskRunner(TaskRunner):
    def __init__(self, max_workers: Optional[int], logger: Logger):
        self.__max_workers = max_workers
        self.__logger = logger

    def map[T, R](self, task: Callable[[T], R], items: Sequence[T]) -> List[R]:
        if len(items) <= 1 or self.__max_workers == 1:
            return [task(item) for item in items]

        self.__logger.debug(f'Dispatching {len(items)} tasks to up to {self.__max_workers or "all"} worker processes')

        with ProcessPoolExecutor(max_workers=self.__max_workers) as executor:
            futures = [executor.submit(task, item) for item in items]

            results = []
            for position, future in enumerate(futures):
                try:
                    results.append(future.result())
                except BaseException as e:
                    self.__logger.exception(f'Task {position} of {len(items)} failed in a worker process', exc_info=e)
                    for pending in futures:
                        pending.cancel()
                    raise

        return results
