from typing import Any, List
from unittest.mock import Mock


class VerifiableSpy:
    def __init__(self, mock: Mock):
        self.__mock = mock

    @property
    def call_count(self) -> int:
        return self.__mock.call_count

    def was_not_called(self) -> None:
        self.__mock.assert_not_called()

    def was_called_once(self) -> None:
        self.__mock.assert_called_once()

    def mapped_items(self) -> List[Any]:
        """Items handed to every TaskRunner.map call so far, flattened in call order."""
        return [item for call in self.__mock.call_args_list for item in call.args[1]]
