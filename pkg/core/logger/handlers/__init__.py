# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/15/2026 11:05'

from .color_stream_handler import ColorStreamHandler


__all__ = ['ColorStreamHandler']
