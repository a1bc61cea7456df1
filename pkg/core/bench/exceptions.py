# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/23/2026 09:40'


class BenchConfigError(ValueError):
    '''Raised on invalid benchmark settings'''


class ReportError(Exception):
    '''Raised when a report or curve file cannot be written or read'''


class ConfigLoadError(Exception):
    '''Raised when an experiment preset cannot be loaded'''
