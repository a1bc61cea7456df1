# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/16/2026 09:12'

from . import ops
from .node import Node, Graph, backward, no_grad, as_node
from .module import Module
from .gradcheck import finite_diff_check, check_parameters, relative_error
from .exceptions import AutodiffError, ShapeMismatchError, NonScalarRootError, NonFiniteValueError

__all__ = [
    'ops',
    'Node',
    'Graph',
    'backward',
    'no_grad',
    'as_node',
    'Module',
    'finite_diff_check',
    'check_parameters',
    'relative_error',
    'AutodiffError',
    'ShapeMismatchError',
    'NonScalarRootError',
    'NonFiniteValueError',
]
