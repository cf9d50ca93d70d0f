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
Sampling of Galton-Watson trees cut at a fixed generation.
"""
from __future__ import annotations

import logging

import numpy as np

from looptree.exceptions import ParameterError
from looptree.exceptions import TreeSizeError
from looptree.trees.offspring import OffspringDistribution
from looptree.trees.tree import DEFAULT_VERTEX_BUDGET
from looptree.trees.tree import Tree

logger = logging.getLogger(__name__)


def sample_gw_tree(dist: OffspringDistribution, n: int, rng: np.random.Generator,
                   vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Tree:
    """
    Sample a Galton-Watson tree with offspring law `dist`, keeping
    generations 0..n. Vertices of a generation draw their offspring counts
    in vertex order, so a deterministic law reproduces `regular_tree()`
    exactly. An extinct tree stops growing at the generation where it died.

    :param dist: Offspring law
    :param n: Last generation kept, n >= 0
    :param rng: Random generator
    :param vertex_budget: Largest vertex count allowed
    :return: The tree
    """
    if int(n) != n or n < 0:
        raise ParameterError(f'n must be an integer >= 0, got {n}')

    parents = [np.array([-1], dtype=np.int64)]
    level_sizes = [1]
    level = np.array([0], dtype=np.int64)
    vertex_count = 1

    for generation in range(1, int(n) + 1):
        counts = np.asarray(dist.sample(rng, level.shape[0]), dtype=np.int64)
        born = int(counts.sum())
        if born == 0:
            logger.debug('Tree died out at generation %d', generation)
            break
        if vertex_count + born > vertex_budget:
            raise TreeSizeError(f'Galton-Watson tree with {dist.descriptor} and n={n} exceeded the vertex '
                                f'budget {vertex_budget} at generation {generation}')

        parents.append(np.repeat(level, counts))
        level = np.arange(vertex_count, vertex_count + born, dtype=np.int64)
        level_sizes.append(born)
        vertex_count += born

    generation = np.repeat(np.arange(len(level_sizes)), level_sizes)
    return Tree(np.concatenate(parents), generation)
