from dephasing_battery.domain.configuration_exception import ConfigurationException


class InvalidTimeGridException(ConfigurationException):
    pass
