# All rights reserved by forest fairy.
# You cannot modify or share anything without sacrifice.
# If you don't agree, keep calm and don't look at code bellow!

__author__ = 'VirtualV <https://github.com/virtualvfix>'
__date__ = '09/19/2026 09:00'

from .exceptions import LayerConfigError
from .linear import Linear, linear_forward, SeedLike
from .kan import KANLayer, kan_edge_eval, activation_gain
from .grkan import GroupRational, GRKANLayer, group_index, rational_gain, variance_preserving_std
from .models import Sequential, build_mlp, build_kan, build_grkan

__all__ = [
    'LayerConfigError',
    'Linear',
    'linear_forward',
    'SeedLike',
    'KANLayer',
    'kan_edge_eval',
    'activation_gain',
    'GroupRational',
    'GRKANLayer',
    'group_index',
    'rational_gain',
    'variance_preserving_std',
    'Sequential',
    'build_mlp',
    'build_kan',
    'build_grkan',
]
