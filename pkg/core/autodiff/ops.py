# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 10:40'
__version__ = '0.1.0'

'''
Differentiable operations on `Node`.

Elementwise operations follow numpy broadcasting; gradients are summed back
to the operand shape.
'''

from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import ShapeMismatchError
from .node import ArrayLike, Node, as_node

Axis = Optional[Union[int, Tuple[int, ...]]]


def unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    '''Sum a broadcast gradient back to `shape`.'''
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


def _broadcast_shape(op: str, a: Node, b: Node) -> Tuple[int, ...]:
    try:
        return tuple(np.broadcast_shapes(a.shape, b.shape))
    except ValueError:
        raise ShapeMismatchError(op, a.shape, b.shape) from None


def add(a: ArrayLike, b: ArrayLike) -> Node:
    a, b = as_node(a), as_node(b)
    _broadcast_shape('add', a, b)

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        return unbroadcast(g, a.shape), unbroadcast(g, b.shape)

    return Node.from_op('add', a.value + b.value, (a, b), vjp)


def sub(a: ArrayLike, b: ArrayLike) -> Node:
    a, b = as_node(a), as_node(b)
    _broadcast_shape('sub', a, b)

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        return unbroadcast(g, a.shape), unbroadcast(-g, b.shape)

    return Node.from_op('sub', a.value - b.value, (a, b), vjp)


def mul(a: ArrayLike, b: ArrayLike) -> Node:
    a, b = as_node(a), as_node(b)
    _broadcast_shape('mul', a, b)

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        return unbroadcast(g * b.value, a.shape), unbroadcast(g * a.value, b.shape)

    return Node.from_op('mul', a.value * b.value, (a, b), vjp)


def div(a: ArrayLike, b: ArrayLike) -> Node:
    a, b = as_node(a), as_node(b)
    _broadcast_shape('div', a, b)
    out = a.value / b.value

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        return unbroadcast(g / b.value, a.shape), unbroadcast(-g * out / b.value, b.shape)

    return Node.from_op('div', out, (a, b), vjp)


def neg(a: ArrayLike) -> Node:
    a = as_node(a)
    return Node.from_op('neg', -a.value, (a,), lambda g: (-g,))


def power(a: ArrayLike, exponent: float) -> Node:
    '''Raise to a constant integer or real exponent.'''
    a = as_node(a)
    p = float(exponent)

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        if p == 0.0:
            return (np.zeros_like(a.value),)
        return (g * p * np.power(a.value, p - 1.0),)

    return Node.from_op('pow', np.power(a.value, p), (a,), vjp)


def exp(a: ArrayLike) -> Node:
    a = as_node(a)
    out = np.exp(a.value)
    return Node.from_op('exp', out, (a,), lambda g: (g * out,))


def tanh(a: ArrayLike) -> Node:
    a = as_node(a)
    out = np.tanh(a.value)
    return Node.from_op('tanh', out, (a,), lambda g: (g * (1.0 - out * out),))


def absolute(a: ArrayLike) -> Node:
    '''Absolute value; the subgradient at 0 is 0.'''
    a = as_node(a)
    return Node.from_op('abs', np.abs(a.value), (a,), lambda g: (g * np.sign(a.value),))


def maximum(a: ArrayLike, constant: float) -> Node:
    '''Elementwise max with a constant; ties pass no gradient.'''
    a = as_node(a)
    mask = a.value > constant
    return Node.from_op('maximum', np.maximum(a.value, constant), (a,), lambda g: (g * mask,))


def matmul(a: ArrayLike, b: ArrayLike) -> Node:
    '''
    Matrix product with numpy semantics for 1-D and batched operands.

    Raises:
        ShapeMismatchError: if inner dimensions differ
    '''
    a, b = as_node(a), as_node(b)
    av, bv = a.value, b.value
    if av.ndim == 0 or bv.ndim == 0:
        raise ShapeMismatchError('matmul', a.shape, b.shape, 'scalar operand')
    inner = bv.shape[-2] if bv.ndim > 1 else bv.shape[0]
    if av.shape[-1] != inner:
        raise ShapeMismatchError('matmul', a.shape, b.shape, 'inner dimensions differ')
    try:
        out = av @ bv
    except ValueError as e:
        raise ShapeMismatchError('matmul', a.shape, b.shape, str(e)) from None

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        a2 = av[None, :] if av.ndim == 1 else av
        b2 = bv[:, None] if bv.ndim == 1 else bv
        g2 = np.expand_dims(g, -2) if av.ndim == 1 else g
        g2 = np.expand_dims(g2, -1) if bv.ndim == 1 else g2
        ga = g2 @ np.swapaxes(b2, -1, -2)
        gb = np.swapaxes(a2, -1, -2) @ g2
        if av.ndim == 1:
            ga = np.squeeze(ga, -2)
        if bv.ndim == 1:
            gb = np.squeeze(gb, -1)
        return unbroadcast(ga, a.shape), unbroadcast(gb, b.shape)

    return Node.from_op('matmul', out, (a, b), vjp)


def _expand_reduced(g: np.ndarray, shape: Tuple[int, ...], axis: Axis, keepdims: bool) -> np.ndarray:
    if axis is not None and not keepdims:
        axes = (axis,) if isinstance(axis, int) else axis
        g = np.expand_dims(g, tuple(x % len(shape) for x in axes))
    return np.broadcast_to(g, shape).copy()


def sum(a: ArrayLike, axis: Axis = None, keepdims: bool = False) -> Node:  # noqa: A001
    a = as_node(a)
    out = np.sum(a.value, axis=axis, keepdims=keepdims)
    return Node.from_op('sum', out, (a,), lambda g: (_expand_reduced(g, a.shape, axis, keepdims),))


def mean(a: ArrayLike, axis: Axis = None, keepdims: bool = False) -> Node:
    a = as_node(a)
    out = np.mean(a.value, axis=axis, keepdims=keepdims)
    count = a.value.size / max(np.asarray(out).size, 1)
    return Node.from_op('mean', out, (a,), lambda g: (_expand_reduced(g, a.shape, axis, keepdims) / count,))


def reshape(a: ArrayLike, shape: Tuple[int, ...]) -> Node:
    a = as_node(a)
    try:
        out = a.value.reshape(shape)
    except ValueError:
        raise ShapeMismatchError('reshape', a.shape, tuple(shape)) from None
    return Node.from_op('reshape', out, (a,), lambda g: (g.reshape(a.shape),))


def transpose(a: ArrayLike, axes: Optional[Tuple[int, ...]] = None) -> Node:
    a = as_node(a)
    inverse = None if axes is None else tuple(np.argsort(axes))
    return Node.from_op('transpose', np.transpose(a.value, axes), (a,), lambda g: (np.transpose(g, inverse),))
