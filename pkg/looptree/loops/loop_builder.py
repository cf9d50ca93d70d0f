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
Construction of the loops of a link configuration.

The time circle of every vertex is cut at the times of its incident links
into arcs. Arc i of a vertex begins at its i:th incident link (in time
order) and ends at the next one, the last arc wrapping around the circle.
At a link at time t on the edge {x, y}:

* a cross joins the arc of x ending at t with the arc of y beginning at t,
  and the arc of y ending at t with the arc of x beginning at t,
* a bar joins the two arcs ending at t, and the two arcs beginning at t.

Loops are the connected components of arcs under these joins. Vertices
without incident links are not materialised: each of them is a loop of
its own, made of one full circle.
"""
from __future__ import annotations

import logging
from typing import Iterator

import numpy as np

from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.loops.union_find import ArcUnionFind
from looptree.trees.tree import ROOT
from looptree.trees.tree import Tree

logger = logging.getLogger(__name__)


class LoopPartition:
    """
    The loops of one configuration. Loops 0..touched_loop_count-1 are made
    of materialised arcs, the remaining ids are the single vertex loops of
    the untouched vertices in increasing vertex order.
    """

    def __init__(self, tree: Tree, config: LinkConfig, arc_ranges: dict, arc_vertex: np.ndarray,
                 arc_start: np.ndarray, arc_end: np.ndarray, arc_loop: np.ndarray,
                 loop_max_generation: np.ndarray, loop_has_root: np.ndarray) -> None:
        self.tree = tree
        self.config = config
        self._arc_ranges = arc_ranges
        self.arc_vertex = arc_vertex
        self.arc_start = arc_start
        self.arc_end = arc_end
        self.arc_loop = arc_loop
        self._loop_max_generation = loop_max_generation
        self._loop_has_root = loop_has_root

        self._touched = np.array(sorted(arc_ranges), dtype=np.int64)
        # Number of untouched vertices below each touched vertex
        self._untouched_before = self._touched - np.arange(self._touched.shape[0])

        for array in (arc_vertex, arc_start, arc_end, arc_loop, loop_max_generation, loop_has_root):
            array.setflags(write=False)

    @property
    def touched_loop_count(self) -> int:
        return self._loop_max_generation.shape[0]

    @property
    def loop_count(self) -> int:
        return self.touched_loop_count + self.tree.vertex_count - self._touched.shape[0]

    @property
    def arc_count(self) -> int:
        """ Materialised arcs plus one full circle per untouched vertex """
        return self.arc_vertex.shape[0] + self.tree.vertex_count - self._touched.shape[0]

    def is_touched(self, vertex: int) -> bool:
        return vertex in self._arc_ranges

    def loops_at(self, vertex: int) -> list[int]:
        """ Ids of the loops visiting a vertex """
        arcs = self._arc_ranges.get(vertex)
        if arcs is None:
            rank = vertex - int(np.searchsorted(self._touched, vertex))
            return [self.touched_loop_count + rank]
        first, count = arcs
        return sorted(set(self.arc_loop[first:first + count].tolist()))

    def max_generation(self, loop_id: int) -> int:
        if loop_id < self.touched_loop_count:
            return int(self._loop_max_generation[loop_id])
        return int(self.tree.generation[self._untouched_vertex(loop_id)])

    def contains_root(self, loop_id: int) -> bool:
        if loop_id < self.touched_loop_count:
            return bool(self._loop_has_root[loop_id])
        return self._untouched_vertex(loop_id) == ROOT

    def root_loops(self) -> list[int]:
        return self.loops_at(ROOT)

    def _untouched_vertex(self, loop_id: int) -> int:
        rank = loop_id - self.touched_loop_count
        return rank + int(np.searchsorted(self._untouched_before, rank, side='right'))

    def dump_lines(self) -> Iterator[str]:
        """
        Debug listing 'loop_id vertex arc_start arc_end', materialised arcs
        first in loop order, then the full circles of untouched vertices.
        """
        order = np.lexsort((self.arc_start, self.arc_vertex, self.arc_loop))
        for arc in order.tolist():
            yield f'{int(self.arc_loop[arc])} {int(self.arc_vertex[arc])} ' \
                  f'{float(self.arc_start[arc])!r} {float(self.arc_end[arc])!r}'

        beta = self.config.beta
        loop_id = self.touched_loop_count
        for vertex in range(self.tree.vertex_count):
            if vertex not in self._arc_ranges:
                yield f'{loop_id} {vertex} 0.0 {beta!r}'
                loop_id += 1

    def __repr__(self):
        return f'LoopPartition(loops={self.loop_count}, arcs={self.arc_count})'


def build_loops(tree: Tree, config: LinkConfig) -> LoopPartition:
    """
    Build the loops of a configuration by union-find over arcs.

    :param tree: The tree
    :param config: Links on the edges of the tree
    :return: The loop partition
    """
    config.check_tree(tree)

    # (time, edge, link index) of the links incident to each touched vertex
    incident = {}
    for edge, links in config.items():
        parent, child = tree.edge(edge)
        for index, link in enumerate(links):
            incident.setdefault(parent, []).append((link.time, edge, index))
            incident.setdefault(child, []).append((link.time, edge, index))

    arc_ranges = {}
    # Arc beginning at a link, keyed by (vertex, edge, link index)
    begins = {}
    arc_vertex = []
    arc_start = []
    arc_end = []
    for vertex in sorted(incident):
        events = sorted(incident[vertex])
        first = len(arc_vertex)
        count = len(events)
        arc_ranges[vertex] = (first, count)
        for i, (time, edge, index) in enumerate(events):
            begins[(vertex, edge, index)] = first + i
            arc_vertex.append(vertex)
            arc_start.append(time)
            arc_end.append(events[(i + 1) % count][0])

    generation = tree.generation
    union_find = ArcUnionFind([int(generation[v]) for v in arc_vertex], [v == ROOT for v in arc_vertex])

    def ending(vertex, begin_arc):
        first, count = arc_ranges[vertex]
        return first + (begin_arc - first - 1) % count

    for edge, links in config.items():
        x, y = tree.edge(edge)
        for index, link in enumerate(links):
            begin_x = begins[(x, edge, index)]
            begin_y = begins[(y, edge, index)]
            end_x = ending(x, begin_x)
            end_y = ending(y, begin_y)
            if link.kind is LinkKind.CROSS:
                union_find.union(end_x, begin_y)
                union_find.union(end_y, begin_x)
            else:
                union_find.union(end_x, end_y)
                union_find.union(begin_x, begin_y)

    arc_loop = np.empty(len(arc_vertex), dtype=np.int64)
    loop_of_leader = {}
    loop_max_generation = []
    loop_has_root = []
    for arc in range(len(arc_vertex)):
        leader = union_find.find(arc)
        loop_id = loop_of_leader.get(leader)
        if loop_id is None:
            loop_id = len(loop_max_generation)
            loop_of_leader[leader] = loop_id
            loop_max_generation.append(union_find.max_generation(leader))
            loop_has_root.append(union_find.has_root(leader))
        arc_loop[arc] = loop_id

    return LoopPartition(tree, config, arc_ranges,
                         np.array(arc_vertex, dtype=np.int64),
                         np.array(arc_start, dtype=float),
                         np.array(arc_end, dtype=float),
                         arc_loop,
                         np.array(loop_max_generation, dtype=np.int64),
                         np.array(loop_has_root, dtype=bool))


def loop_count(partition: LoopPartition) -> int:
    return partition.loop_count
