from .environment import Environment, EnvironmentVariable
from .host_environment import HostEnvironment

__all__ = [
    "Environment",
    "EnvironmentVariable",
    "HostEnvironment",
]
