# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:38'

from .typed_config import TypedConfig
from .exceptions import ConfigError, ConfigTypeError, ConfigValueError, ConfigPrefixError
from .helpers import EnvVariablePrefix

__all__ = [
    'TypedConfig',
    'ConfigError',
    'ConfigTypeError',
    'ConfigValueError',
    'ConfigPrefixError',
    'EnvVariablePrefix',
]
