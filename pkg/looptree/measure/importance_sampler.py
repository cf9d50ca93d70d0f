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
Importance sampling of the theta weighted measure: configurations are drawn
from the Poisson reference measure and weighted by theta to the number of
loops.
"""
from __future__ import annotations

import logging
import math
from typing import Mapping
from typing import NamedTuple

import numpy as np

from looptree.exceptions import ParameterError
from looptree.exceptions import PartitionOverflowError
from looptree.links.link_sampler import sample_links
from looptree.links.link_types import ModelParams
from looptree.loops.loop_builder import build_loops
from looptree.measure.events import Event
from looptree.measure.ratio_estimate import DEFAULT_BOOTSTRAP_RESAMPLES
from looptree.measure.ratio_estimate import RatioEstimate
from looptree.measure.ratio_estimate import weighted_ratio
from looptree.measure.workers import as_seed_sequence
from looptree.measure.workers import block_sizes
from looptree.measure.workers import DEFAULT_BLOCK_SIZE
from looptree.measure.workers import derive
from looptree.measure.workers import master_seed
from looptree.measure.workers import WorkerPool
from looptree.trees.tree import Tree

logger = logging.getLogger(__name__)

# Stream ids below the master seed
_SAMPLE_STREAM = 0
_BOOTSTRAP_STREAM = 1


class PartitionEstimate(NamedTuple):
    """
    Estimate of E[theta^L]. `log_value` is always finite, `value` and
    `std_error` are floats when representable.
    """
    value: float
    std_error: float
    log_value: float
    log_scale: float
    n_samples: int


class _Block(NamedTuple):
    loop_counts: np.ndarray
    indicators: np.ndarray


def _sample_block(tree: Tree, params: ModelParams, events: list, seed_sequence, size: int) -> _Block:
    rng = np.random.default_rng(seed_sequence)
    loop_counts = np.empty(size, dtype=np.int64)
    indicators = np.zeros((len(events), size), dtype=bool)
    for i in range(size):
        partition = build_loops(tree, sample_links(tree, params, rng))
        loop_counts[i] = partition.loop_count
        for j, event in enumerate(events):
            indicators[j, i] = event(partition)
    return _Block(loop_counts, indicators)


def sample_loop_counts(tree: Tree, params: ModelParams, n_samples: int, seed_sequence, events: list = (),
                       workers: int = 1, block_size: int = DEFAULT_BLOCK_SIZE) -> _Block:
    """
    Loop counts and event indicators of n_samples independent
    configurations, in block order.
    """
    if n_samples < 2:
        raise ParameterError(f'n_samples must be >= 2, got {n_samples}')
    seed_sequence = as_seed_sequence(seed_sequence)
    events = list(events)

    sizes = block_sizes(n_samples, block_size)
    tasks = [(derive(seed_sequence, _SAMPLE_STREAM, b), size) for b, size in enumerate(sizes)]
    logger.info('Sampling %d configurations on %r in %d blocks', n_samples, tree, len(tasks))

    blocks = WorkerPool(workers).map(lambda task: _sample_block(tree, params, events, *task), tasks)
    return _Block(np.concatenate([b.loop_counts for b in blocks]),
                  np.concatenate([b.indicators for b in blocks], axis=1))


def _relative_weights(loop_counts: np.ndarray, theta: float):
    # theta^(L - max L), no relative weight exceeds 1
    reference = int(loop_counts.max())
    return np.power(theta, (loop_counts - reference).astype(float)), reference


def estimate_weighted_probs(events: Mapping[str, Event], tree: Tree, params: ModelParams, n_samples: int,
                            seed_sequence, workers: int = 1, block_size: int = DEFAULT_BLOCK_SIZE,
                            bootstrap_resamples: int = DEFAULT_BOOTSTRAP_RESAMPLES) -> dict:
    """
    Estimate the weighted probabilities of several events on the same
    samples, so that comparisons between them are paired.

    :param events: name -> event predicate
    :param tree: The tree
    :param params: Model parameters
    :param n_samples: Number of configurations, >= 2
    :param seed_sequence: Master stream (SeedSequence or integer seed)
    :param workers: Number of worker threads, does not change the result
    :param block_size: Samples per seeded block
    :param bootstrap_resamples: Resamples of the bootstrap cross check, 0 to skip it
    :return: name -> RatioEstimate
    """
    seed_sequence = as_seed_sequence(seed_sequence)
    names = list(events)
    block = sample_loop_counts(tree, params, n_samples, seed_sequence, [events[name] for name in names],
                               workers, block_size)

    weights, reference = _relative_weights(block.loop_counts, params.theta)
    log_scale = reference * math.log(params.theta)
    bootstrap_rng = np.random.default_rng(derive(seed_sequence, _BOOTSTRAP_STREAM))

    result = {}
    for j, name in enumerate(names):
        result[name] = weighted_ratio(weights, block.indicators[j], log_scale, bootstrap_rng,
                                      bootstrap_resamples, master_seed(seed_sequence))
    return result


def estimate_weighted_prob(event: Event, tree: Tree, params: ModelParams, n_samples: int, seed_sequence,
                           workers: int = 1, block_size: int = DEFAULT_BLOCK_SIZE,
                           bootstrap_resamples: int = DEFAULT_BOOTSTRAP_RESAMPLES) -> RatioEstimate:
    """
    Estimate P^theta(event) = E[1_event theta^L] / E[theta^L] by drawing
    configurations from the reference measure.
    """
    return estimate_weighted_probs({'event': event}, tree, params, n_samples, seed_sequence, workers,
                                   block_size, bootstrap_resamples)['event']


def estimate_partition_function(tree: Tree, params: ModelParams, n_samples: int, seed_sequence,
                                workers: int = 1, block_size: int = DEFAULT_BLOCK_SIZE) -> PartitionEstimate:
    """
    Estimate E[theta^L] under the reference measure. The mean is computed
    relative to theta^L_ref for a reference loop count L_ref of the sample,
    `log_scale` is log(theta^L_ref).
    """
    block = sample_loop_counts(tree, params, n_samples, seed_sequence, (), workers, block_size)
    weights, reference = _relative_weights(block.loop_counts, params.theta)

    mean = float(np.mean(weights))
    spread = float(np.std(weights, ddof=1))
    log_scale = reference * math.log(params.theta)
    log_value = log_scale + math.log(mean)

    try:
        anchor = params.theta ** reference
    except OverflowError as e:
        raise PartitionOverflowError(f'E[theta^L] overflows on a tree with {tree.vertex_count} vertices '
                                     f'(log value {log_value!r})') from e
    value = anchor * mean
    if not math.isfinite(value):
        raise PartitionOverflowError(f'E[theta^L] overflows on a tree with {tree.vertex_count} vertices '
                                     f'(log value {log_value!r})')

    return PartitionEstimate(value=value, std_error=anchor * spread / math.sqrt(n_samples),
                             log_value=log_value, log_scale=log_scale, n_samples=n_samples)
