# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 09:05'


class LayerConfigError(ValueError):
    '''Raised on invalid layer dimensions, grouping or degenerate initialization'''
