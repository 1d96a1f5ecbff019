from dephasing_battery.domain.dephasing_battery_exception import DephasingBatteryException


class ConfigurationException(DephasingBatteryException):
    pass
