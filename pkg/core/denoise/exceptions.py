# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 10:55'


class DenoiserSpecError(ValueError):
    '''Raised on invalid denoiser architecture, noisy pair or experiment settings'''
