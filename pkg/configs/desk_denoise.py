# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/24/2026 09:30'

from .base import DenoisePreset


class DeskDenoiseConfig(DenoisePreset):
    '''Depth 1 and 2 comparison at 5 dB.'''

    DEPTHS = (1, 2)
    SNR_DB = 5.0
