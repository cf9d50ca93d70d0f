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
Literal trajectory tracing over a mutable index of the links at every
vertex.

A walker moves along the time circle of a vertex in one time direction
until it meets a link, jumps to the other end point and continues in the
same direction after a cross or the opposite direction after a bar. This
module follows loops that way, independently of the arc wiring of
`loop_builder`, and uses it to get the change of the loop count caused by
adding or removing one link without rebuilding all loops.
"""
from __future__ import annotations

import bisect
import logging
from typing import Iterator

from looptree.exceptions import ChainConsistencyError
from looptree.exceptions import LinkError
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.trees.tree import Tree

logger = logging.getLogger(__name__)

UP = 1
DOWN = -1


class SpaceTimeIndex:
    """
    Links incident to each vertex, ordered by the key (time, edge). Positions
    on a time line are given as keys as well, so that ties between links of
    different edges at a vertex are ordered the same way `build_loops()`
    orders them.
    """

    def __init__(self, tree: Tree) -> None:
        self._tree = tree
        self._keys = {}
        self._ends = {}
        self._link_count = 0

    @classmethod
    def from_config(cls, tree: Tree, config: LinkConfig) -> SpaceTimeIndex:
        config.check_tree(tree)
        index = cls(tree)
        for edge, links in config.items():
            for link in links:
                index.add_link(edge, link)
        return index

    @property
    def link_count(self) -> int:
        return self._link_count

    def add_link(self, edge: int, link: Link) -> None:
        key = (link.time, edge)
        x, y = self._tree.edge(edge)
        for vertex, other in ((x, y), (y, x)):
            keys = self._keys.setdefault(vertex, [])
            position = bisect.bisect_left(keys, key)
            if position < len(keys) and keys[position] == key:
                raise LinkError(f'Edge {edge} already has a link at time {link.time!r}')
            keys.insert(position, key)
            self._ends.setdefault(vertex, []).insert(position, (other, link.kind))
        self._link_count += 1

    def remove_link(self, edge: int, time: float) -> LinkKind:
        """
        Remove the link at `time` on `edge`.

        :return: The kind of the removed link
        """
        key = (time, edge)
        kind = None
        for vertex in self._tree.edge(edge):
            keys = self._keys.get(vertex, [])
            position = bisect.bisect_left(keys, key)
            if position == len(keys) or keys[position] != key:
                raise LinkError(f'Edge {edge} has no link at time {time!r}')
            del keys[position]
            _, kind = self._ends[vertex].pop(position)
            if not keys:
                del self._keys[vertex]
                del self._ends[vertex]
        self._link_count -= 1
        return kind

    def insertion_delta(self, edge: int, time: float, kind: LinkKind) -> int:
        """
        Change of the loop count if a link of `kind` was added at `time` on
        `edge`: -1 when the two points it joins lie on different loops;
        otherwise +1 for a cross at points traversed in the same time
        direction or a bar at points traversed in opposite directions, and 0
        for the remaining twists.
        """
        x, y = self._tree.edge(edge)
        if x not in self._keys or y not in self._keys:
            return -1

        key = (time, edge)
        for vertex, start, end, direction in self._segments(x, key, UP):
            if vertex == y and _inside(start, end, direction, key):
                same_direction = direction == UP
                if kind is LinkKind.CROSS:
                    return 1 if same_direction else 0
                return 0 if same_direction else 1
        return -1

    def deletion_delta(self, edge: int, time: float) -> int:
        """ Change of the loop count if the link at `time` on `edge` was removed """
        kind = self.remove_link(edge, time)
        try:
            return -self.insertion_delta(edge, time, kind)
        finally:
            self.add_link(edge, Link(time, kind))

    def trace_loop_count(self) -> int:
        """
        Count loops by walking every one of them once. Each vertex without
        links is a loop of its own.
        """
        visited = set()
        loops = self._tree.vertex_count - len(self._keys)
        for vertex, keys in self._keys.items():
            for i, key in enumerate(keys):
                if (vertex, i) in visited:
                    continue
                loops += 1
                # A point just after the link key, inside arc i
                inside_arc = (key[0], key[1] + 0.5)
                for on_vertex, start, end, direction in self._segments(vertex, inside_arc, UP):
                    visited.add((on_vertex, self._arc_index(on_vertex, start, end, direction)))
        return loops

    def _arc_index(self, vertex, start, end, direction):
        keys = self._keys[vertex]
        if direction == UP:
            return (bisect.bisect_right(keys, start) - 1) % len(keys)
        return bisect.bisect_left(keys, end)

    def _next_link(self, vertex, key, direction):
        keys = self._keys[vertex]
        if direction == UP:
            position = bisect.bisect_right(keys, key)
            if position == len(keys):
                position = 0
        else:
            position = bisect.bisect_left(keys, key) - 1
            if position < 0:
                position = len(keys) - 1
        return keys[position], self._ends[vertex][position]

    def _segments(self, vertex: int, key: tuple, direction: int) -> Iterator[tuple]:
        """
        Walk the loop through (vertex, key) starting in `direction`, yielding
        (vertex, from key, to key, direction) for every stretch between two
        links, until the walk is back at its starting point.
        """
        if vertex not in self._keys:
            return

        on_vertex, position, heading = vertex, key, direction
        for step in range(2 * self._link_count + 2):
            link_key, (other, kind) = self._next_link(on_vertex, position, heading)
            yield on_vertex, position, link_key, heading
            if step > 0 and on_vertex == vertex and heading == direction and \
                    _inside(position, link_key, heading, key):
                return
            on_vertex, position = other, link_key
            if kind is LinkKind.BAR:
                heading = -heading

        raise ChainConsistencyError(f'Walk from vertex {vertex} at {key!r} did not close')


def _inside(start, end, direction, key) -> bool:
    # Strictly inside the stretch from start to end along the circle
    if direction == UP:
        if start < end:
            return start < key < end
        return key > start or key < end
    if start > end:
        return end < key < start
    return key < start or key > end
