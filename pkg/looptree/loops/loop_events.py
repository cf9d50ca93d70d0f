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
Events about the loops through a vertex, and the comparison between the
loop count of a tree and those of the subtrees below the root.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from looptree.links.link_types import LinkConfig
from looptree.links.root_edges import root_edge_profile
from looptree.loops.loop_builder import build_loops
from looptree.loops.loop_builder import LoopPartition
from looptree.trees.tree import ROOT
from looptree.trees.tree import Tree


def event_reach(partition: LoopPartition, tree: Tree, m: int) -> bool:
    """
    True if a loop through the root visits a vertex of generation m or
    higher.
    """
    return any(partition.max_generation(loop) >= m for loop in partition.loops_at(ROOT))


def event_fail(partition: LoopPartition, tree: Tree, vertex: int, m: int) -> bool:
    """
    True if some loop through `vertex` stays below generation m. A vertex
    can lie on several loops, so this is not the complement of a reach event.
    """
    return any(partition.max_generation(loop) < m for loop in partition.loops_at(vertex))


def subtree_loop_counts(tree: Tree, config: LinkConfig) -> list[int]:
    """
    Loop count of the subtree below each root child, ignoring the links on
    the root edges.
    """
    root_edges = [tree.edge_id(child) for child in tree.root_children]
    partition = build_loops(tree, config.without_edges(root_edges))

    branch = tree.branch
    sizes = np.array(tree.subtree_sizes(), dtype=np.int64)
    touched = np.bincount(branch[np.unique(partition.arc_vertex)], minlength=sizes.shape[0])

    # Without root edge links no loop leaves its subtree, so the branch of
    # the first arc of a loop is the branch of the whole loop
    _, first_arc = np.unique(partition.arc_loop, return_index=True)
    counts = np.bincount(branch[partition.arc_vertex[first_arc]], minlength=sizes.shape[0])

    return (counts + sizes - touched).tolist()


class Prop1Check(NamedTuple):
    holds: bool
    lower_slack: int
    upper_slack: int


def check_prop1(tree: Tree, config: LinkConfig) -> Prop1Check:
    """
    Compare the loop count L of the tree with the subtree counts L_j and the
    root edge link counts N_j:

        -sum N_j <= L - (sum L_j + 1) <= sum (|N_j - 1| - 1)

    with equality on the left when every N_j is 0 or 1.

    :return: Whether the relation holds, and the slack of each side
    """
    total = build_loops(tree, config).loop_count
    subtrees = sum(subtree_loop_counts(tree, config))
    profile = root_edge_profile(tree, config)

    difference = total - (subtrees + 1)
    lower_slack = difference + sum(profile)
    upper_slack = sum(abs(n - 1) - 1 for n in profile) - difference

    holds = lower_slack >= 0 and upper_slack >= 0
    if all(n <= 1 for n in profile):
        holds = holds and lower_slack == 0

    return Prop1Check(holds, lower_slack, upper_slack)
