# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/17/2026 10:02'

import pytest

from core.spline import KnotGrid, make_knot_grid


@pytest.fixture
def cubic_grid() -> KnotGrid:
    '''Grid used by the KAN layers: [-1, 1], G=5, cubic.'''
    return make_knot_grid(-1.0, 1.0, 5, 3)
