# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:12'

import re
from typing import Type, TypeVar, Callable

from ..exceptions import ConfigPrefixError

T = TypeVar('T')

PREFIX_PATTERN = re.compile(r'^[A-Z][A-Z0-9]*(_[A-Z0-9]+)*_?$')


def EnvVariablePrefix(prefix: str = '') -> Callable[[Type[T]], Type[T]]:
    '''
    Class decorator that scopes TypedConfig environment overrides to `<PREFIX>_<NAME>`.

    Both `GKB` and `GKB_` select `GKB_WORKERS` for a `WORKERS` setting; an empty prefix
    reads the bare name.

    Args:
        prefix: upper-case identifier, optionally ending with one underscore

    Raises:
        ConfigPrefixError: if the prefix is not an upper-case identifier

    Usage:
        .. code-block:: python

            @EnvVariablePrefix('GKB_')
            class BenchConfig(TypedConfig):
                WORKERS: int = 1
    '''
    if prefix and not PREFIX_PATTERN.match(prefix):
        raise ConfigPrefixError(f'Environment prefix <{prefix}> must be an upper-case identifier, e.g. GKB_')

    def decorator(cls: Type[T]) -> Type[T]:
        setattr(cls, '_env_prefix', prefix)
        return cls

    return decorator
