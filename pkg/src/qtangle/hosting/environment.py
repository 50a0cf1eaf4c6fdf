from enum import StrEnum


class Environment(StrEnum):
    LOCAL = "local"
    CI = "ci"


class EnvironmentVariable(StrEnum):
    QTANGLE_ENVIRONMENT = "QTANGLE_ENVIRONMENT"
