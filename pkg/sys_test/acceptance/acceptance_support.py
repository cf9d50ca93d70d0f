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
import numpy as np

from looptree.links.link_sampler import sample_links
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from looptree.loops.loop_builder import build_loops
from looptree.loops.space_time_index import SpaceTimeIndex
from looptree.trees.galton_watson import sample_gw_tree
from looptree.trees.offspring import PoissonOffspring
from looptree.trees.tree import regular_tree
from looptree.trees.tree import Tree

ACCEPTANCE_SEED = 42

BETA_VALUES = (0.3, 1.0)
U_VALUES = (0.0, 0.5, 1.0)

SMALL_TREES = [Tree.from_parents(parents) for parents in (
    [-1], [-1, 0], [-1, 0, 0], [-1, 0, 1],
    [-1, 0, 0, 0], [-1, 0, 0, 1], [-1, 0, 1, 1], [-1, 0, 1, 2], [-1, 0, 0, 2],
)]


class AcceptanceSupport:

    @staticmethod
    def random_tree(rng: np.random.Generator) -> Tree:
        """ Alternately a Poisson(3) tree of depth <= 4 or a regular tree with d in {2, 3} and depth <= 3 """
        if rng.random() < 0.5:
            return sample_gw_tree(PoissonOffspring(3.0), int(rng.integers(0, 5)), rng)
        return regular_tree(int(rng.integers(2, 4)), int(rng.integers(0, 4)))

    @staticmethod
    def random_pair(rng: np.random.Generator) -> tuple[Tree, LinkConfig]:
        tree = AcceptanceSupport.random_tree(rng)
        params = ModelParams(1.0, float(rng.choice(BETA_VALUES)), float(rng.choice(U_VALUES)))
        return tree, sample_links(tree, params, rng)

    @staticmethod
    def random_link(rng: np.random.Generator, beta: float) -> Link:
        kind = LinkKind.CROSS if rng.random() < 0.5 else LinkKind.BAR
        return Link(float(rng.uniform(0.0, beta)), kind)

    @staticmethod
    def placements(tree: Tree, max_links: int):
        """ Every multiset of edges with at most max_links entries, with every kind assignment """
        kinds = (LinkKind.CROSS, LinkKind.BAR)
        for link_count in range(0, max_links + 1):
            for edges in _edge_multisets(tree.edge_count, link_count):
                for kind_bits in range(2 ** link_count):
                    yield edges, [kinds[(kind_bits >> i) & 1] for i in range(link_count)]

    @staticmethod
    def config_with_times(tree: Tree, edges, kinds, rng: np.random.Generator, beta: float = 1.0) -> LinkConfig:
        link_count = len(edges)
        times = (rng.permutation(link_count) + rng.uniform(0.0, 1.0, size=link_count)) * (beta / max(link_count, 1))
        links_by_edge = {}
        for edge, kind, time in zip(edges, kinds, times.tolist()):
            links_by_edge.setdefault(edge, []).append(Link(time, kind))
        return LinkConfig(tree.edge_count, beta, links_by_edge)

    @staticmethod
    def traced_loop_count(tree: Tree, config: LinkConfig) -> int:
        return SpaceTimeIndex.from_config(tree, config).trace_loop_count()

    @staticmethod
    def loop_count(tree: Tree, config: LinkConfig) -> int:
        return build_loops(tree, config).loop_count


def _edge_multisets(edge_count, size, first=0):
    if size == 0:
        yield ()
        return
    for edge in range(first, edge_count):
        for rest in _edge_multisets(edge_count, size - 1, edge):
            yield (edge,) + rest
