# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:05'

import os
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, get_origin

from .exceptions import ConfigError, ConfigTypeError, ConfigValueError

# types which can be parsed from environment variables
SUPPORTED_ENV_TYPES: tuple[type, ...] = (int, float, str, bool, list, dict, Path)
BOOL_TRUE = ('true', 'yes', '1', 'y')
BOOL_FALSE = ('false', 'no', '0', 'n')


class TypedConfig:
    '''
    Typed configuration with environment overrides.

    Annotated class attributes are defined automatically. Reading an attribute checks
    the environment variable ``<PREFIX>_<NAME>`` first, then falls back to the class
    default. Resolved values are cached.

    Usage:
        .. code-block:: python

            @EnvVariablePrefix('GKB_')
            class BenchConfig(TypedConfig):
                WORKERS: int = 1
                OUT_DIR: Path = Path('results')


            config = BenchConfig()
            config.WORKERS  # GKB_WORKERS or 1
            config.snapshot()  # {'OUT_DIR': 'results', 'WORKERS': 1}
    '''

    def __init__(self) -> None:
        self._log = logging.getLogger(self.__class__.__name__)
        self._init: Dict[str, Any] = {}
        self._cache: Dict[str, Any] = {}
        self._types: Dict[str, Any] = {}
        self._env_prefix = getattr(self.__class__, '_env_prefix', '')

        annotations: Dict[str, Any] = {}
        defaults: Dict[str, Any] = {}
        for cls in reversed(self.__class__.__mro__):
            annotations.update(getattr(cls, '__annotations__', {}))
            for name, value in cls.__dict__.items():
                if name and not name.startswith('_') and not callable(value) and not isinstance(value, property):
                    defaults[name] = value

        for name, value in defaults.items():
            self.define(name=name, type_annotation=annotations.get(name, type(value)), default=value)

    def _is_member(self, name: str) -> bool:
        '''Methods and properties are regular attributes, not configuration variables.'''
        attr = getattr(type(self), name, None)
        return callable(attr) or isinstance(attr, property)

    @staticmethod
    def _base_type(type_annotation: Any) -> Any:
        '''Return the runtime class behind a (possibly generic) annotation.'''
        origin = get_origin(type_annotation)
        return origin if origin is not None else type_annotation

    def _check_value(self, name: str, value: Any) -> None:
        base_type = self._base_type(self._types[name])
        if isinstance(base_type, type) and not isinstance(value, base_type):
            # ints are accepted where floats are expected
            if not (base_type is float and isinstance(value, int) and not isinstance(value, bool)):
                raise ConfigTypeError(
                    f'Value for <{name}> must be of type {base_type.__name__}, got {type(value).__name__}'
                )

    def define(self, name: str, type_annotation: Any, default: Optional[Any] = None) -> None:
        '''
        Define a configuration variable.

        Args:
            name: variable name
            type_annotation: expected type
            default: optional default value

        Raises:
            ConfigError: if the name starts with underscore
            ConfigTypeError: if the annotation is not a type or the default has a wrong type
        '''
        if name.startswith('_'):
            raise ConfigError(f'Configuration variable names cannot start with underscore: {name}')

        base_type = self._base_type(type_annotation)
        if not isinstance(base_type, type):
            raise ConfigTypeError(f'Type annotation for <{name}> must be a type, got {type(type_annotation).__name__}')

        self._types[name] = type_annotation
        if default is not None:
            try:
                self._check_value(name, default)
            except ConfigTypeError as e:
                del self._types[name]
                raise ConfigTypeError(f'Default value for <{name}> must be of type {base_type.__name__}') from e
            self._init[name] = default

    def _convert(self, name: str, env_var: str, raw: str) -> Any:
        '''Convert a raw environment string to the declared type.'''
        base_type = self._base_type(self._types[name])
        try:
            if issubclass(base_type, bool):
                lowered = raw.lower()
                if lowered in BOOL_TRUE:
                    return True
                if lowered in BOOL_FALSE:
                    return False
                raise ValueError(f'Cannot convert <{raw}> to <bool>')
            if issubclass(base_type, (list, dict)):
                try:
                    parsed = json.loads(raw)
                except json.JSONDecodeError as e:
                    raise ValueError(f'Invalid JSON: {e}')
                if not isinstance(parsed, base_type):
                    raise ValueError(f'JSON value is not a {base_type.__name__}')
                return parsed
            return base_type(raw)
        except ValueError as exc:
            self._log.error(f'Type conversion error for <{name}>: {exc}')
            raise ConfigTypeError(f'Cannot convert variable <{env_var}={raw}> to {base_type.__name__}') from exc

    def _env_name(self, name: str) -> str:
        if self._env_prefix:
            return f'{self._env_prefix.rstrip("_").upper()}_{name.upper()}'
        return name.upper()

    def __getattribute__(self, name: str) -> Any:
        '''
        Resolve a configuration variable: cache, environment, then default.

        Raises:
            ConfigValueError: if the variable is not defined or has no value
            ConfigTypeError: if the environment value cannot be converted
        '''
        if name.startswith('_') or self._is_member(name):
            return super().__getattribute__(name)

        if name not in self._types:
            raise ConfigValueError(f'Configuration variable <{name}> is not defined. Use define("{name}", type) first.')
        if name in self._cache:
            return self._cache[name]

        env_var = self._env_name(name)
        base_type = self._base_type(self._types[name])
        raw = os.environ.get(env_var) if base_type in SUPPORTED_ENV_TYPES else None
        if raw is None:
            if name in self._init:
                self._cache[name] = self._init[name]
                return self._init[name]
            raise ConfigValueError(
                f'Configuration variable <{name}> is not initialized and no environment variable <{env_var}> found'
            )

        value = self._convert(name, env_var, raw)
        self._cache[name] = value
        self._log.debug(f'Variable <{name}> loaded from environment: {env_var}={value}')
        return value

    def __setattr__(self, name: str, value: Any) -> None:
        '''
        Set and cache a configuration value.

        Raises:
            ConfigValueError: if the variable is not defined
            ConfigTypeError: if the value has a wrong type
        '''
        if name.startswith('_') or self._is_member(name):
            super().__setattr__(name, value)
            return
        self.set(name, value)

    def __dir__(self) -> List[str]:
        '''Return attributes including configuration variables.'''
        return sorted(set(super().__dir__()).union(self._types.keys()))

    def get(self, name: str) -> Any:
        '''Get a configuration value by name.'''
        if name not in self._types:
            raise ConfigValueError(f'Configuration variable <{name}> is not defined. Use define("{name}", type) first.')
        return self.__getattribute__(name)

    def set(self, name: str, value: Any) -> None:
        '''Set a configuration value by name.'''
        if name not in self._types:
            raise ConfigValueError(f'Configuration variable <{name}> is not defined. Use define("{name}", type) first.')
        self._check_value(name, value)
        self._cache[name] = value

    def snapshot(self) -> Dict[str, Any]:
        '''
        Return every resolvable variable with its current value.

        Paths are converted to strings so the result is JSON-compatible.
        Variables without a value are skipped.
        '''
        result: Dict[str, Any] = {}
        for name in sorted(self._types):
            try:
                value = self.get(name)
            except ConfigValueError:
                continue
            result[name] = str(value) if isinstance(value, Path) else value
        return result

    def types(self) -> Dict[str, Type[Any]]:
        '''Return declared variable types.'''
        return dict(self._types)
