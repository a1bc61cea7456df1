# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/17/2026 09:30'

from .knots import KnotGrid, KnotGridError, make_knot_grid, bspline_basis, bspline_basis_node

__all__ = ['KnotGrid', 'KnotGridError', 'make_knot_grid', 'bspline_basis', 'bspline_basis_node']
