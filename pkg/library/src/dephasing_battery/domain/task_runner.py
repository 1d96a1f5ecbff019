from abc import ABCMeta, abstractmethod
from typing import Callable, List, Sequence


class TaskRunner(metaclass=ABCMeta):
    @abstractmethod
    def map[T, R](self, task: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Apply task to every item, returning results in item order."""
        pass
