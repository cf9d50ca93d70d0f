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
Loops of a link configuration: construction, counting, events about the
root's loops and trajectory tracing.
"""
from .loop_builder import build_loops
from .loop_builder import loop_count
from .loop_builder import LoopPartition
from .loop_events import check_prop1
from .loop_events import event_fail
from .loop_events import event_reach
from .loop_events import Prop1Check
from .loop_events import subtree_loop_counts
from .space_time_index import SpaceTimeIndex
from .union_find import ArcUnionFind

__all__ = ['build_loops', 'loop_count', 'LoopPartition', 'check_prop1', 'event_fail', 'event_reach',
           'Prop1Check', 'subtree_loop_counts', 'SpaceTimeIndex', 'ArcUnionFind']
