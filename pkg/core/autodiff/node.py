# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 09:25'
__version__ = '0.1.0'

import itertools
import threading
from contextlib import contextmanager
from typing import Any, Callable, Generator, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import NonScalarRootError

# vector-jacobian product: output gradient -> one gradient (or None) per parent
VJP = Callable[[np.ndarray], Sequence[Optional[np.ndarray]]]
ArrayLike = Union['Node', np.ndarray, float, int, Sequence[Any]]

# global creation counter, creation order is a topological order
_creation_ids = itertools.count()
_state = threading.local()


def is_grad_enabled() -> bool:
    '''Return False inside a `no_grad` block of the current thread.'''
    return getattr(_state, 'grad_enabled', True)


@contextmanager
def no_grad() -> Generator[None, None, None]:
    '''
    Disable graph recording in the current thread.

    Usage:
        .. code-block:: python

            with no_grad():
                prediction = model(inputs)
    '''
    previous = is_grad_enabled()
    _state.grad_enabled = False
    try:
        yield
    finally:
        _state.grad_enabled = previous


class Node:
    '''
    Value in a differentiable computation graph.

    A node without parents is a leaf: a parameter (requires_grad=True) or an input.
    Values are float64 arrays and `grad` always has the value shape.
    '''

    __slots__ = ('value', 'grad', 'requires_grad', 'parents', 'vjp', 'op', 'id', 'name', 'lr_scale')

    def __init__(self, value: Any, requires_grad: bool = False, name: Optional[str] = None) -> None:
        self.value: np.ndarray = np.array(value, dtype=np.float64)
        self.grad: np.ndarray = np.zeros_like(self.value)
        self.requires_grad = requires_grad
        self.parents: Tuple['Node', ...] = ()
        self.vjp: Optional[VJP] = None
        self.op = 'leaf'
        self.id = next(_creation_ids)
        self.name = name
        self.lr_scale: Union[float, np.ndarray] = 1.0  # optimizer step multiplier, broadcast to the value

    @classmethod
    def from_op(cls, op: str, value: np.ndarray, parents: Sequence['Node'], vjp: VJP) -> 'Node':
        '''
        Create the output node of an operation.

        The op record is kept only when a parent requires a gradient and recording is enabled.

        Args:
            op: operation name for diagnostics
            value: computed output value
            parents: input nodes in the order returned by `vjp`
            vjp: vector-jacobian product of the operation
        '''
        node = cls.__new__(cls)
        node.value = np.asarray(value, dtype=np.float64)
        node.grad = np.zeros_like(node.value)
        node.id = next(_creation_ids)
        node.op = op
        node.name = None
        node.lr_scale = 1.0
        node.requires_grad = is_grad_enabled() and any(p.requires_grad for p in parents)
        node.parents = tuple(parents) if node.requires_grad else ()
        node.vjp = vjp if node.requires_grad else None
        return node

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.value.shape)

    @property
    def is_leaf(self) -> bool:
        return not self.parents

    def item(self) -> float:
        '''Return the value of a single-element node as float.'''
        return float(self.value.reshape(-1)[0]) if self.value.size == 1 else float(self.value)

    def zero_grad(self) -> None:
        self.grad = np.zeros_like(self.value)

    def backward(self) -> None:
        '''Accumulate d(self)/d(leaf) into every leaf gradient, see `backward`.'''
        backward(self)

    def __repr__(self) -> str:
        label = f' {self.name}' if self.name else ''
        return f'Node<{self.op}{label} shape={self.shape}>'

    # operators
    def __add__(self, other: ArrayLike) -> 'Node':
        return _ops.add(self, other)

    def __radd__(self, other: ArrayLike) -> 'Node':
        return _ops.add(other, self)

    def __sub__(self, other: ArrayLike) -> 'Node':
        return _ops.sub(self, other)

    def __rsub__(self, other: ArrayLike) -> 'Node':
        return _ops.sub(other, self)

    def __mul__(self, other: ArrayLike) -> 'Node':
        return _ops.mul(self, other)

    def __rmul__(self, other: ArrayLike) -> 'Node':
        return _ops.mul(other, self)

    def __truediv__(self, other: ArrayLike) -> 'Node':
        return _ops.div(self, other)

    def __rtruediv__(self, other: ArrayLike) -> 'Node':
        return _ops.div(other, self)

    def __neg__(self) -> 'Node':
        return _ops.neg(self)

    def __pow__(self, exponent: float) -> 'Node':
        return _ops.power(self, exponent)

    def __matmul__(self, other: ArrayLike) -> 'Node':
        return _ops.matmul(self, other)

    def __rmatmul__(self, other: ArrayLike) -> 'Node':
        return _ops.matmul(other, self)

    def __abs__(self) -> 'Node':
        return _ops.absolute(self)


class Graph:
    '''Nodes reachable from a root, in creation order.'''

    def __init__(self, nodes: Iterable[Node]) -> None:
        self.nodes: List[Node] = sorted(nodes, key=lambda x: x.id)

    @classmethod
    def trace(cls, root: Node) -> 'Graph':
        '''Collect all nodes the root depends on.'''
        seen = {root.id: root}
        stack = [root]
        while stack:
            node = stack.pop()
            for parent in node.parents:
                if parent.id not in seen:
                    seen[parent.id] = parent
                    stack.append(parent)
        return cls(seen.values())

    @property
    def leaves(self) -> List[Node]:
        return [x for x in self.nodes if x.is_leaf and x.requires_grad]

    def __len__(self) -> int:
        return len(self.nodes)


def backward(root: Node) -> None:
    '''
    Reverse-mode sweep from a scalar root.

    Gradients of intermediate nodes are reset, leaf gradients accumulate across calls.

    Raises:
        NonScalarRootError: if root has more than one element
    '''
    if root.value.size != 1:
        raise NonScalarRootError(f'backward requires a scalar root, got shape {root.shape}')

    graph = Graph.trace(root)
    for node in graph.nodes:
        if not node.is_leaf:
            node.grad = np.zeros_like(node.value)
    root.grad = root.grad + np.ones_like(root.value)

    for node in reversed(graph.nodes):
        if node.vjp is None:
            continue
        for parent, grad in zip(node.parents, node.vjp(node.grad)):
            if grad is not None and parent.requires_grad:
                parent.grad = parent.grad + grad


def as_node(value: ArrayLike) -> Node:
    '''Wrap constants into non-trainable leaf nodes.'''
    return value if isinstance(value, Node) else Node(value)


from . import ops as _ops  # noqa: E402
