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
Finite rooted trees stored as index arrays.

Vertices are numbered in breadth-first order with the root as vertex 0, so
the children of any vertex form a contiguous range of vertex ids and every
generation is a contiguous block. Edge e joins vertex e + 1 to its parent.
"""
from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from looptree.exceptions import ParameterError
from looptree.exceptions import TreeFormatError
from looptree.exceptions import TreeSizeError

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_BUDGET = 10**7
ROOT = 0


class Tree:
    """
    Immutable finite rooted tree in breadth-first numbering.

    Use `regular_tree()`, `sample_gw_tree()` or `Tree.from_parents()` to
    create instances.
    """

    def __init__(self, parent: npt.ArrayLike, generation: npt.ArrayLike) -> None:
        self._parent = np.array(parent, dtype=np.int64)
        self._generation = np.array(generation, dtype=np.int64)
        self._parent.setflags(write=False)
        self._generation.setflags(write=False)

        vertex_count = self._parent.shape[0]
        children_of = self._parent[1:]
        vertices = np.arange(vertex_count)
        self._first_child = np.searchsorted(children_of, vertices, side='left') + 1
        self._child_count = np.searchsorted(children_of, vertices, side='right') + 1 - self._first_child
        self._first_child.setflags(write=False)
        self._child_count.setflags(write=False)

        self._branch = None

    @classmethod
    def from_parents(cls, parents: npt.ArrayLike) -> Tree:
        """
        Create a tree from a parent array, validating the numbering.

        :param parents: parents[v] is the parent of vertex v, -1 for the root
        :return: The tree
        """
        parent = np.array(parents, dtype=np.int64)
        if parent.ndim != 1 or parent.shape[0] == 0:
            raise TreeFormatError('A tree needs at least one vertex')
        if parent[0] != -1:
            raise TreeFormatError('Vertex 0 must be the root (parent -1)')

        non_root = parent[1:]
        if np.any(non_root < 0) or np.any(non_root >= np.arange(1, parent.shape[0])):
            raise TreeFormatError('Every vertex must have a parent with a smaller id')
        if np.any(np.diff(non_root) < 0):
            raise TreeFormatError('Vertices are not numbered in breadth-first order')

        return cls(parent, cls._generations_of(parent))

    @staticmethod
    def _generations_of(parent: npt.NDArray) -> npt.NDArray:
        # Vertices whose parent id is below the end of generation g are the
        # ones in generations 0..g+1
        level_sizes = []
        start = 0
        end = 1
        while start < end:
            level_sizes.append(end - start)
            start, end = end, int(np.searchsorted(parent, end, side='left'))

        return np.repeat(np.arange(len(level_sizes)), level_sizes)

    @property
    def vertex_count(self) -> int:
        return self._parent.shape[0]

    @property
    def edge_count(self) -> int:
        return self._parent.shape[0] - 1

    @property
    def parent(self) -> npt.NDArray:
        return self._parent

    @property
    def generation(self) -> npt.NDArray:
        return self._generation

    @property
    def child_count(self) -> npt.NDArray:
        return self._child_count

    @property
    def height(self) -> int:
        """ Largest generation present in the tree """
        return int(self._generation[-1])

    @property
    def leaves(self) -> npt.NDArray:
        return np.flatnonzero(self._child_count == 0)

    @property
    def root_children(self) -> range:
        return self.children(ROOT)

    def children(self, vertex: int) -> range:
        first = int(self._first_child[vertex])
        return range(first, first + int(self._child_count[vertex]))

    def edge(self, edge_id: int) -> tuple[int, int]:
        """
        :param edge_id: The edge
        :return: (parent, child) end points of the edge
        """
        child = edge_id + 1
        return int(self._parent[child]), child

    @staticmethod
    def edge_id(child: int) -> int:
        """ Id of the edge between a non-root vertex and its parent """
        if child == ROOT:
            raise ParameterError('The root has no parent edge')
        return child - 1

    @property
    def branch(self) -> npt.NDArray:
        """
        For every vertex, the position among the root's children of the root
        child whose subtree contains it. The root itself maps to -1.
        """
        if self._branch is None:
            branch = np.full(self.vertex_count, -1, dtype=np.int64)
            root_children = self.root_children
            branch[root_children.start:root_children.stop] = np.arange(len(root_children))
            # Generations are contiguous and parents precede children
            start = root_children.stop
            while start < self.vertex_count:
                end = int(np.searchsorted(self._parent, start, side='left'))
                branch[start:end] = branch[self._parent[start:end]]
                start = end
            branch.setflags(write=False)
            self._branch = branch
        return self._branch

    def subtree_vertices(self, vertex: int) -> npt.NDArray:
        """
        Vertices of the subtree rooted at `vertex`, in increasing order (which
        is also the breadth-first order of the subtree).
        """
        blocks = []
        lo, hi = vertex, vertex + 1
        while lo < hi:
            blocks.append(np.arange(lo, hi))
            next_lo = int(self._first_child[lo])
            next_hi = int(self._first_child[hi - 1] + self._child_count[hi - 1])
            lo, hi = next_lo, next_hi
        return np.concatenate(blocks)

    def subtree(self, vertex: int) -> Tree:
        """
        The subtree rooted at `vertex`, renumbered so that `vertex` becomes 0.
        Vertex i of the result is `subtree_vertices(vertex)[i]` of this tree.
        """
        vertices = self.subtree_vertices(vertex)
        parent = np.empty(vertices.shape[0], dtype=np.int64)
        parent[0] = -1
        parent[1:] = np.searchsorted(vertices, self._parent[vertices[1:]])
        return Tree(parent, self._generation[vertices] - self._generation[vertex])

    def subtree_sizes(self) -> list[int]:
        """ Vertex count of the subtree below each root child """
        counts = np.bincount(self.branch[1:], minlength=len(self.root_children))
        return [int(c) for c in counts]

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return np.array_equal(self._parent, other._parent)

    __hash__ = None

    def __repr__(self):
        return f'Tree(vertices={self.vertex_count}, height={self.height})'


def regular_tree(d: int, n: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Tree:
    """
    The rooted d-ary tree with generations 0..n: every vertex of generation
    below n has exactly d children.

    :param d: Number of children per internal vertex, d >= 1
    :param n: Height of the tree, n >= 0
    :param vertex_budget: Largest vertex count allowed
    :return: The tree
    """
    if int(d) != d or d < 1:
        raise ParameterError(f'd must be an integer >= 1, got {d}')
    if int(n) != n or n < 0:
        raise ParameterError(f'n must be an integer >= 0, got {n}')
    d = int(d)
    n = int(n)

    # Python integers, so the size check itself can not overflow
    level_sizes = [d**g for g in range(n + 1)]
    vertex_count = sum(level_sizes)
    if vertex_count > vertex_budget:
        raise TreeSizeError(f'A regular tree with d={d} and n={n} has {vertex_count} vertices, '
                            f'more than the vertex budget {vertex_budget}')

    parent = np.empty(vertex_count, dtype=np.int64)
    parent[0] = -1
    parent[1:] = np.arange(vertex_count - 1) // d
    generation = np.repeat(np.arange(n + 1), level_sizes)

    logger.debug('Built regular tree d=%d n=%d with %d vertices', d, n, vertex_count)
    return Tree(parent, generation)


class TreeFileManager:
    """
    Text form of a tree: one line 'id parent generation' per vertex in
    breadth-first order, the root's parent written as -1.
    """

    @staticmethod
    def to_lines(tree: Tree) -> list[str]:
        return [f'{v} {p} {g}' for v, (p, g) in enumerate(zip(tree.parent.tolist(), tree.generation.tolist()))]

    @staticmethod
    def from_lines(lines) -> Tree:
        parents = []
        generations = []
        for line_number, line in enumerate(lines):
            line = line.strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 3:
                raise TreeFormatError(f'Line {line_number + 1}: expected "id parent generation"')
            try:
                vertex, parent, generation = (int(f) for f in fields)
            except ValueError as e:
                raise TreeFormatError(f'Line {line_number + 1}: {e}') from e
            if vertex != len(parents):
                raise TreeFormatError(f'Line {line_number + 1}: expected vertex {len(parents)}, got {vertex}')
            parents.append(parent)
            generations.append(generation)

        tree = Tree.from_parents(parents)
        if not np.array_equal(tree.generation, generations):
            raise TreeFormatError('Generations are not consistent with the parents')
        return tree

    @staticmethod
    def write(file_name: str, tree: Tree) -> None:
        file = open(file_name, 'w')
        with file:
            for line in TreeFileManager.to_lines(tree):
                file.write(line + '\n')

    @staticmethod
    def read(file_name: str) -> Tree:
        file = open(file_name, 'r')
        with file:
            return TreeFileManager.from_lines(file.readlines())
