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
Event predicates. Every predicate takes a LoopPartition (which carries its
tree and link configuration) and returns a bool.
"""
from __future__ import annotations

from typing import Callable

from looptree.links.root_edges import all_at_most_one
from looptree.links.root_edges import all_empty
from looptree.links.root_edges import root_edge_profile
from looptree.loops.loop_builder import LoopPartition
from looptree.loops.loop_events import event_fail
from looptree.loops.loop_events import event_reach
from looptree.trees.tree import ROOT

Event = Callable[[LoopPartition], bool]


def always() -> Event:
    return lambda partition: True


def reach(m: int) -> Event:
    """ A loop through the root reaches generation m """
    return lambda partition: event_reach(partition, partition.tree, m)


def fail(m: int, vertex: int = ROOT) -> Event:
    """ A loop through `vertex` stays below generation m """
    return lambda partition: event_fail(partition, partition.tree, vertex, m)


def root_edges_at_most_one() -> Event:
    return lambda partition: all_at_most_one(root_edge_profile(partition.tree, partition.config))


def root_edges_empty() -> Event:
    return lambda partition: all_empty(root_edge_profile(partition.tree, partition.config))
