# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/17/2026 14:20'
__version__ = '0.1.0'

from abc import ABC, abstractmethod
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .node import Node


class Module(ABC):
    '''
    Container of trainable nodes.

    Parameters are `Node` attributes with requires_grad=True; child modules are
    attributes holding a `Module` or a list of modules. Attribute order defines
    parameter order.
    '''

    @abstractmethod
    def forward(self, x: Node) -> Node:
        raise NotImplementedError

    def __call__(self, x: Node) -> Node:
        return self.forward(x)

    def _children(self) -> Iterator[Tuple[str, object]]:
        for name, value in vars(self).items():
            if isinstance(value, (list, tuple)):
                for i, item in enumerate(value):
                    yield f'{name}.{i}', item
            else:
                yield name, value

    def named_parameters(self, prefix: str = '') -> List[Tuple[str, Node]]:
        '''Return (dotted name, node) pairs of all trainable nodes.'''
        result: List[Tuple[str, Node]] = []
        for name, value in self._children():
            if isinstance(value, Node) and value.requires_grad:
                result.append((f'{prefix}{name}', value))
            elif isinstance(value, Module):
                result.extend(value.named_parameters(prefix=f'{prefix}{name}.'))
        return result

    def named_modules(self, prefix: str = '') -> List[Tuple[str, 'Module']]:
        '''Return direct child modules.'''
        return [(f'{prefix}{name}', value) for name, value in self._children() if isinstance(value, Module)]

    def parameters(self) -> List[Node]:
        return [node for _, node in self.named_parameters()]

    def param_count(self) -> int:
        '''Number of trainable scalars.'''
        return int(sum(node.value.size for node in self.parameters()))

    def param_table(self) -> List[Tuple[str, int]]:
        '''Trainable scalar count per direct child; own parameters are listed by name.'''
        table: List[Tuple[str, int]] = []
        for name, value in self._children():
            if isinstance(value, Node) and value.requires_grad:
                table.append((name, int(value.value.size)))
            elif isinstance(value, Module) and value.param_count():
                table.append((f'{name}:{value.__class__.__name__}', value.param_count()))
        return table

    def zero_grad(self) -> None:
        for node in self.parameters():
            node.zero_grad()

    def penalty(self) -> Optional[Node]:
        '''Regularization term added to the training loss, None when absent.'''
        total: Optional[Node] = None
        for _, child in self.named_modules():
            term = child.penalty()
            if term is not None:
                total = term if total is None else total + term
        return total

    def state(self) -> Dict[str, np.ndarray]:
        '''Copy of all parameter values by name.'''
        return {name: node.value.copy() for name, node in self.named_parameters()}

    def load_state(self, state: Dict[str, np.ndarray]) -> None:
        '''Overwrite parameter values in place.'''
        for name, node in self.named_parameters():
            node.value[...] = state[name]
