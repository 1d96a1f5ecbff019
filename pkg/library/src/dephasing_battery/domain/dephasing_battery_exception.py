from typing import Any, Dict


class DephasingBatteryException(Exception):
    def __reduce__(self) -> Any:
        # rebuilt without calling subclass constructors so errors cross process boundaries intact
        return _restore_exception, (self.__class__, self.args, self.__dict__)


def _restore_exception(cls: type, args: tuple, state: Dict[str, Any]) -> DephasingBatteryException:
    exception = cls.__new__(cls)
    Exception.__init__(exception, *args)
    exception.__dict__.update(state)
    return exception
