from dephasing_battery.domain.configuration_exception import ConfigurationException


class InvalidTrajectoryConfigException(ConfigurationException):
    def __init__(self, field_name: str, message: str):
        super().__init__(f'{field_name}: {message}')
        self.field_name = field_name
