# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/22/2026 11:00'
__version__ = '0.1.0'

'''
Strided 1-D convolution and its transpose as fused graph ops.

Feature maps are (batch, channels, length). Both ops use symmetric zero padding
p = (kernel - stride) / 2, so a convolution maps length L to L / stride and the
transposed convolution maps it back when L is divisible by the stride.
'''

from typing import Optional, Sequence

import numpy as np

from core.autodiff import Module, Node, ShapeMismatchError
from core.layers import SeedLike
from .exceptions import DenoiserSpecError


def conv_padding(kernel: int, stride: int) -> int:
    '''
    Symmetric padding that makes the transposed path invert lengths.

    Raises:
        DenoiserSpecError: if kernel <= stride or kernel - stride is odd
    '''
    if stride < 1 or kernel <= stride or (kernel - stride) % 2:
        raise DenoiserSpecError(f'Kernel <{kernel}> must exceed stride <{stride}> by an even amount')
    return (kernel - stride) // 2


def conv_output_length(length: int, kernel: int, stride: int, padding: int) -> int:
    return (length + 2 * padding - kernel) // stride + 1


def conv_transpose_output_length(length: int, kernel: int, stride: int, padding: int) -> int:
    return (length - 1) * stride + kernel - 2 * padding


def _windows(length: int, kernel: int, stride: int) -> np.ndarray:
    '''(positions, kernel) indices of every strided window.'''
    return np.arange(length)[:, None] * stride + np.arange(kernel)[None, :]


def _check_channels(op: str, x: Node, weight: Node, channel_axis: int) -> None:
    if x.value.ndim != 3 or x.shape[1] != weight.shape[channel_axis]:
        raise ShapeMismatchError(op, x.shape, weight.shape, 'input channels')


def conv1d(x: Node, weight: Node, bias: Optional[Node], stride: int = 1, padding: int = 0) -> Node:
    '''
    Strided convolution (cross-correlation) of (B, C, L) with weights (O, C, K).

    Output length is floor((L + 2p - K) / stride) + 1.

    Raises:
        ShapeMismatchError: on a channel mismatch or a padded input shorter than the kernel
    '''
    _check_channels('conv1d', x, weight, 1)
    kernel = weight.shape[2]
    if x.shape[2] + 2 * padding < kernel:
        raise ShapeMismatchError('conv1d', x.shape, weight.shape, 'padded input shorter than kernel')
    padded = np.pad(x.value, ((0, 0), (0, 0), (padding, padding)))
    out_length = conv_output_length(x.shape[2], kernel, stride, padding)
    index = _windows(out_length, kernel, stride)
    columns = padded[:, :, index]  # (B, C, L_out, K)
    out = np.einsum('bclk,ock->bol', columns, weight.value)
    if bias is not None:
        out = out + bias.value[None, :, None]

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        grad_columns = np.einsum('bol,ock->bclk', g, weight.value)
        grad_padded = np.zeros_like(padded)
        np.add.at(grad_padded, (slice(None), slice(None), index), grad_columns)
        grad_x = grad_padded[:, :, padding : padding + x.shape[2]]
        grad_w = np.einsum('bol,bclk->ock', g, columns)
        grads = [grad_x, grad_w]
        if bias is not None:
            grads.append(g.sum(axis=(0, 2)))
        return grads

    parents = (x, weight) if bias is None else (x, weight, bias)
    return Node.from_op('conv1d', out, parents, vjp)


def conv_transpose1d(x: Node, weight: Node, bias: Optional[Node], stride: int = 1, padding: int = 0) -> Node:
    '''
    Transposed convolution of (B, C, L) with weights (C, O, K).

    Every input position scatters a K-wide window at stride spacing; p samples are
    cropped from both ends, so the output length is (L - 1) * stride + K - 2p.

    Raises:
        ShapeMismatchError: on a channel mismatch
    '''
    _check_channels('conv_transpose1d', x, weight, 0)
    batch, _, length = x.shape
    kernel, out_channels = weight.shape[2], weight.shape[1]
    full_length = (length - 1) * stride + kernel
    index = _windows(length, kernel, stride)
    full = np.zeros((batch, out_channels, full_length))
    np.add.at(full, (slice(None), slice(None), index), np.einsum('bcl,cok->bolk', x.value, weight.value))
    out = full[:, :, padding : full_length - padding]
    if bias is not None:
        out = out + bias.value[None, :, None]

    def vjp(g: np.ndarray) -> Sequence[Optional[np.ndarray]]:
        grad_full = np.zeros((batch, out_channels, full_length))
        grad_full[:, :, padding : full_length - padding] = g
        grad_windows = grad_full[:, :, index]  # (B, O, L, K)
        grad_x = np.einsum('bolk,cok->bcl', grad_windows, weight.value)
        grad_w = np.einsum('bcl,bolk->cok', x.value, grad_windows)
        grads = [grad_x, grad_w]
        if bias is not None:
            grads.append(g.sum(axis=(0, 2)))
        return grads

    parents = (x, weight) if bias is None else (x, weight, bias)
    return Node.from_op('conv_transpose1d', np.ascontiguousarray(out), parents, vjp)


class Conv1d(Module):
    '''
    Strided 1-D convolution with PyTorch-style uniform initialization.

    Args:
        in_channels: input channels
        out_channels: output channels
        kernel: kernel size
        stride: stride, padding is derived from kernel and stride
        seed: int seed or generator
        transposed: scatter instead of gather, weights are (in, out, kernel)
    '''

    def __init__(
        self,
        in_channels: int,
        out_channels: int,
        kernel: int,
        stride: int,
        seed: SeedLike = None,
        transposed: bool = False,
    ) -> None:
        if min(in_channels, out_channels, kernel) < 1:
            raise DenoiserSpecError(f'Invalid conv <{in_channels}->{out_channels}> kernel <{kernel}>')
        rng = np.random.default_rng(seed)
        self.stride = stride
        self.padding = conv_padding(kernel, stride)
        self.transposed = transposed
        # a transposed output sample collects kernel / stride positions per input channel
        fan_in = in_channels * (kernel // stride if transposed else kernel)
        bound = 1.0 / np.sqrt(fan_in)
        shape = (in_channels, out_channels, kernel) if transposed else (out_channels, in_channels, kernel)
        self.weight = Node(rng.uniform(-bound, bound, shape), requires_grad=True, name='weight')
        self.bias = Node(rng.uniform(-bound, bound, out_channels), requires_grad=True, name='bias')

    def forward(self, x: Node) -> Node:
        op = conv_transpose1d if self.transposed else conv1d
        return op(x, self.weight, self.bias, self.stride, self.padding)
