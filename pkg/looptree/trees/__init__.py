# -*- coding: utf-8 -*-
#
# Copyright (C) 2024 The looptree authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, in version 3.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
"""
Rooted trees: deterministic d-ary trees, Galton-Watson samples and the
offspring laws behind them.
"""
from .galton_watson import sample_gw_tree
from .offspring import DEFAULT_TAIL_TOLERANCE
from .offspring import DerivativePowerFunctional
from .offspring import DeterministicOffspring
from .offspring import EmpiricalOffspring
from .offspring import moment_functional
from .offspring import OffspringDistribution
from .offspring import PoissonOffspring
from .offspring import PowerFunctional
from .offspring import ScaledOffspring
from .tree import DEFAULT_VERTEX_BUDGET
from .tree import regular_tree
from .tree import ROOT
from .tree import Tree
from .tree import TreeFileManager

__all__ = ['sample_gw_tree', 'DEFAULT_TAIL_TOLERANCE', 'DerivativePowerFunctional', 'DeterministicOffspring',
           'EmpiricalOffspring', 'moment_functional', 'OffspringDistribution', 'PoissonOffspring',
           'PowerFunctional', 'ScaledOffspring', 'DEFAULT_VERTEX_BUDGET', 'regular_tree', 'ROOT', 'Tree',
           'TreeFileManager']
