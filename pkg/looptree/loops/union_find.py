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
Union-find over the arcs of a configuration, with per-set summaries.
"""
from __future__ import annotations


class ArcUnionFind:
    """
    Union by rank and path compression over the elements 0..size-1.

    Every set also carries the largest generation of its elements and whether
    it holds an arc of the root; both summaries are merged by `union()`, so
    they are available per set without a second pass.
    """

    def __init__(self, generations: list[int], root_flags: list[bool]) -> None:
        size = len(generations)
        self._leader = list(range(size))
        self._rank = [0] * size
        self._max_generation = list(generations)
        self._has_root = list(root_flags)
        self.cluster_count = size

    def __repr__(self):
        return f'ArcUnionFind: contains {self.cluster_count} clusters.'

    def find(self, element: int) -> int:
        leader = self._leader
        path = []
        while leader[element] != element:
            path.append(element)
            element = leader[element]
        for visited in path:
            leader[visited] = element
        return element

    def union(self, a: int, b: int) -> None:
        s1, s2 = self.find(a), self.find(b)
        if s1 == s2:
            return

        r1, r2 = self._rank[s1], self._rank[s2]
        if r2 > r1:
            s1, s2 = s2, s1
        elif r1 == r2:
            self._rank[s1] += 1

        self._leader[s2] = s1
        if self._max_generation[s2] > self._max_generation[s1]:
            self._max_generation[s1] = self._max_generation[s2]
        self._has_root[s1] = self._has_root[s1] or self._has_root[s2]
        self.cluster_count -= 1

    def max_generation(self, element: int) -> int:
        return self._max_generation[self.find(element)]

    def has_root(self, element: int) -> bool:
        return self._has_root[self.find(element)]
