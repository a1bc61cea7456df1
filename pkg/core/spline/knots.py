# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/17/2026 09:31'
__version__ = '0.1.0'

from dataclasses import dataclass, field
from typing import Any, Dict, Sequence, Tuple, Union, overload, Literal

import numpy as np

from core.autodiff import Node


class KnotGridError(ValueError):
    '''Raised when a knot grid cannot be constructed'''


@dataclass(frozen=True)
class KnotGrid:
    '''Uniform knot vector extended by `order` knots beyond each end of [lo, hi].'''

    lo: float  # domain start
    hi: float  # domain end
    grid_size: int  # interior intervals G
    order: int  # spline degree
    knots: np.ndarray = field(repr=False, compare=False)

    @property
    def num_basis(self) -> int:
        return self.grid_size + self.order

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / self.grid_size

    def describe(self) -> Dict[str, Any]:
        '''JSON-compatible description for reports.'''
        return {'lo': self.lo, 'hi': self.hi, 'grid_size': self.grid_size, 'order': self.order}


def make_knot_grid(lo: float, hi: float, grid_size: int, order: int) -> KnotGrid:
    '''
    Build a uniform knot grid.

    Args:
        lo: domain start
        hi: domain end
        grid_size: number of interior intervals, at least 1
        order: spline degree, non-negative

    Returns:
        Grid with `grid_size + 2 * order + 1` strictly increasing knots

    Raises:
        KnotGridError: on an empty domain or invalid sizes
    '''
    if not lo < hi:
        raise KnotGridError(f'Knot grid domain must satisfy lo < hi, got <{lo}, {hi}>')
    if grid_size < 1:
        raise KnotGridError(f'Knot grid size must be >= 1, got <{grid_size}>')
    if order < 0:
        raise KnotGridError(f'Spline order must be >= 0, got <{order}>')
    spacing = (hi - lo) / grid_size
    knots = lo + spacing * np.arange(-order, grid_size + order + 1, dtype=np.float64)
    return KnotGrid(lo=float(lo), hi=float(hi), grid_size=grid_size, order=order, knots=knots)


def _cox_de_boor(knots: np.ndarray, x: np.ndarray, degree: int) -> np.ndarray:
    '''Basis values of the given degree, shape x.shape + (len(knots) - 1 - degree,).'''
    x = x[..., None]
    bases = ((x >= knots[:-1]) & (x < knots[1:])).astype(np.float64)
    # close the last interval so x == knots[-1] is covered
    bases[..., -1] += x[..., 0] == knots[-1]
    for k in range(1, degree + 1):
        left = (x - knots[: -(k + 1)]) / (knots[k:-1] - knots[: -(k + 1)]) * bases[..., :-1]
        right = (knots[k + 1 :] - x) / (knots[k + 1 :] - knots[1:-k]) * bases[..., 1:]
        bases = left + right
    return bases


@overload
def bspline_basis(grid: KnotGrid, x: Union[float, np.ndarray], derivative: Literal[False] = ...) -> np.ndarray: ...


@overload
def bspline_basis(
    grid: KnotGrid, x: Union[float, np.ndarray], derivative: Literal[True]
) -> Tuple[np.ndarray, np.ndarray]: ...


def bspline_basis(
    grid: KnotGrid, x: Union[float, np.ndarray], derivative: bool = False
) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]:
    '''
    Evaluate all basis functions by the Cox-de Boor recursion.

    Inputs outside the extended support give zeros.

    Args:
        grid: knot grid
        x: scalar or array of points
        derivative: also return d(B_i)/dx

    Returns:
        Basis values with shape x.shape + (num_basis,), and derivatives of the same shape if requested
    '''
    points = np.asarray(x, dtype=np.float64)
    knots, order = grid.knots, grid.order
    if not derivative:
        return _cox_de_boor(knots, points, order)
    if order == 0:
        values = _cox_de_boor(knots, points, 0)
        return values, np.zeros_like(values)

    lower = _cox_de_boor(knots, points, order - 1)
    left = (points[..., None] - knots[: -(order + 1)]) / (knots[order:-1] - knots[: -(order + 1)]) * lower[..., :-1]
    right = (knots[order + 1 :] - points[..., None]) / (knots[order + 1 :] - knots[1:-order]) * lower[..., 1:]
    slope = order * (
        lower[..., :-1] / (knots[order:-1] - knots[: -(order + 1)])
        - lower[..., 1:] / (knots[order + 1 :] - knots[1:-order])
    )
    return left + right, slope


def bspline_basis_node(grid: KnotGrid, x: Node) -> Node:
    '''Differentiable basis evaluation, output shape x.shape + (num_basis,).'''
    values, slope = bspline_basis(grid, x.value, derivative=True)

    def vjp(g: np.ndarray) -> Sequence[np.ndarray]:
        return (np.sum(g * slope, axis=-1),)

    return Node.from_op('bspline_basis', values, (x,), vjp)
