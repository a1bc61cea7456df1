# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:38'


class ConfigError(Exception):
    '''Base exception of the settings layer; every benchmark setting error derives from it'''


class ConfigTypeError(ConfigError, TypeError):
    '''Raised when a setting or its GKB_* environment override doesn't match the annotated type'''


class ConfigValueError(ConfigError, ValueError):
    '''Raised when a setting is undefined or a required environment override is missing'''


class ConfigPrefixError(ConfigError, ValueError):
    '''Raised when an environment prefix is not an upper-case identifier'''
