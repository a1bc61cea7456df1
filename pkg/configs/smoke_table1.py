# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 09:30'

from .base import Table1Preset


class SmokeTable1Config(Table1Preset):
    '''Short plumbing run, medians are not expected to order.'''

    STEPS = 1000
    EARLY_STOP = False
