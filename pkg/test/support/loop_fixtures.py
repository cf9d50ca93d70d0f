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
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from looptree.trees.tree import regular_tree
from looptree.trees.tree import Tree


class LoopFixtures:
    """
    Stock trees and link configurations for tests
    """

    BETA = 1.0

    # 0 - 1 - 2
    PATH_3 = Tree.from_parents([-1, 0, 1])

    # Root with three leaves
    STAR_3 = regular_tree(3, 1)

    # Binary tree of height 2, edges 0, 1 from the root
    BINARY_2 = regular_tree(2, 2)

    # Root with children 1, 2 and a grandchild 3 below vertex 1
    UNEVEN_4 = Tree.from_parents([-1, 0, 0, 1])

    CROSS = LinkKind.CROSS
    BAR = LinkKind.BAR

    PARAMS_THETA_2 = ModelParams(2.0, 0.5)
    PARAMS_THETA_1 = ModelParams(1.0, 0.5)

    @staticmethod
    def config(edge_count: int, links_by_edge: dict, beta: float = BETA) -> LinkConfig:
        """ links_by_edge: edge -> list of (time, kind) """
        return LinkConfig(edge_count, beta, {
            edge: [Link(time, kind) for time, kind in links] for edge, links in links_by_edge.items()
        })
