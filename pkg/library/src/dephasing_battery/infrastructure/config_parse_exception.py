from dephasing_battery.domain.configuration_exception import ConfigurationException


class ConfigParseException(ConfigurationException):
    def __init__(self, source: str, line: int, column: int, message: str):
        super().__init__(f'{source}:{line}:{column}: {message}')
        self.line = line
        self.column = column
