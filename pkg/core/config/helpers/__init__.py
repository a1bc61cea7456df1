# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/14/2026 21:12'

from .env_prefix import EnvVariablePrefix

__all__ = ['EnvVariablePrefix']
