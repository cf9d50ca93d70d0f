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
Sampling of link configurations from the Poisson reference measure.
"""
from __future__ import annotations

import logging

import numpy as np

from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams

logger = logging.getLogger(__name__)


def sample_links(tree, params: ModelParams, rng: np.random.Generator) -> LinkConfig:
    """
    Draw a configuration from the reference measure: on every edge the
    number of crosses is Poisson(u * beta) and the number of bars
    Poisson((1 - u) * beta), independently, with uniform times on [0, beta).

    :param tree: The tree whose edges receive links
    :param params: Model parameters
    :param rng: Random generator
    :return: The configuration
    """
    edge_count = tree.edge_count
    crosses = rng.poisson(params.u * params.beta, size=edge_count)
    bars = rng.poisson((1.0 - params.u) * params.beta, size=edge_count)
    totals = crosses + bars

    occupied = np.flatnonzero(totals)
    times = rng.uniform(0.0, params.beta, size=int(totals.sum()))

    links_by_edge = {}
    offset = 0
    for edge in occupied.tolist():
        count = int(totals[edge])
        edge_times = _distinct(times[offset:offset + count], params.beta, rng)
        offset += count

        cross_count = int(crosses[edge])
        kinds = [LinkKind.CROSS] * cross_count + [LinkKind.BAR] * (count - cross_count)
        links_by_edge[edge] = tuple(sorted((Link(t, kind) for t, kind in zip(edge_times.tolist(), kinds)),
                                           key=lambda link: link.time))

    return LinkConfig(edge_count, params.beta, links_by_edge)


def _distinct(times: np.ndarray, beta: float, rng: np.random.Generator) -> np.ndarray:
    # Equal times on one edge have probability zero but floats can collide,
    # colliding draws are replaced until all times differ
    times = times.copy()
    while True:
        _, first_index = np.unique(times, return_index=True)
        if first_index.shape[0] == times.shape[0]:
            return times
        duplicate = np.ones(times.shape[0], dtype=bool)
        duplicate[first_index] = False
        logger.debug('Resampling %d colliding link times', int(duplicate.sum()))
        times[duplicate] = rng.uniform(0.0, beta, size=int(duplicate.sum()))
