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
Quenched estimates on Galton-Watson trees: the weighted probability of a
reach event averaged over tree realisations.
"""
from __future__ import annotations

import logging
import math
from typing import NamedTuple
from typing import Optional
from typing import Sequence

import numpy as np

from looptree.exceptions import ParameterError
from looptree.links.link_types import ModelParams
from looptree.measure import events
from looptree.measure.importance_sampler import estimate_weighted_probs
from looptree.measure.mcmc_sampler import DEFAULT_CHECK_INTERVAL
from looptree.measure.mcmc_sampler import mcmc_sampler_paired
from looptree.measure.ratio_estimate import METHOD_IMPORTANCE
from looptree.measure.ratio_estimate import METHOD_MCMC
from looptree.measure.ratio_estimate import RatioEstimate
from looptree.measure.workers import as_seed_sequence
from looptree.measure.workers import DEFAULT_BLOCK_SIZE
from looptree.measure.workers import derive
from looptree.measure.workers import master_seed
from looptree.measure.workers import WorkerPool
from looptree.trees.galton_watson import sample_gw_tree
from looptree.trees.offspring import OffspringDistribution

logger = logging.getLogger(__name__)

# Stream ids below the master seed
_TREE_STREAM = 0
_INNER_STREAM = 1


class ChainSchedule(NamedTuple):
    n_steps: int
    burn_in: int
    thin: int
    check_interval: int = DEFAULT_CHECK_INTERVAL


class _TreeResult(NamedTuple):
    values: dict
    std_errors: dict
    low_ess: bool


def _inner_estimates(tree, params, m_values, n_samples, inner_stream, method, schedule, block_size):
    reachable = [m for m in m_values if m <= tree.height]
    values = {m: 0.0 for m in m_values}
    std_errors = {m: 0.0 for m in m_values}
    if not reachable:
        # The root's loops can not reach a generation the tree does not have
        return _TreeResult(values, std_errors, False)

    reach_events = {m: events.reach(m) for m in reachable}
    if method == METHOD_IMPORTANCE:
        estimates = estimate_weighted_probs(reach_events, tree, params, n_samples, inner_stream,
                                            block_size=block_size, bootstrap_resamples=0)
    else:
        estimates = mcmc_sampler_paired(tree, params, schedule.n_steps, schedule.burn_in, schedule.thin,
                                        np.random.default_rng(inner_stream), reach_events,
                                        schedule.check_interval)

    for m, estimate in estimates.items():
        values[m] = estimate.value
        std_errors[m] = estimate.std_error
    return _TreeResult(values, std_errors, any(e.low_ess for e in estimates.values()))


def estimate_quenched_paired(dist: OffspringDistribution, n: int, m_values: Sequence[int], params: ModelParams,
                             n_trees: int, n_samples_per_tree: int, seed_sequence, workers: int = 1,
                             method: str = METHOD_IMPORTANCE, schedule: Optional[ChainSchedule] = None,
                             block_size: int = DEFAULT_BLOCK_SIZE) -> dict:
    """
    Quenched probabilities that a root loop reaches generation m, for every
    m in `m_values`, estimated on the same trees and samples.

    Tree i is drawn from stream (0, i) of the master seed and its inner
    estimate uses stream (1, i). A degenerate offspring law gives one tree,
    which is estimated once with n_trees * n_samples_per_tree samples.

    :param dist: Offspring law
    :param n: Last generation of the trees
    :param m_values: Generations to reach, each <= n
    :param params: Model parameters
    :param n_trees: Number of tree realisations
    :param n_samples_per_tree: Inner samples per tree (importance method)
    :param seed_sequence: Master stream (SeedSequence or integer seed)
    :param workers: Trees estimated in parallel, does not change the result
    :param method: 'importance' or 'mcmc' for the inner estimates
    :param schedule: Chain schedule, required for the mcmc method
    :param block_size: Samples per seeded block of the inner estimator
    :return: m -> RatioEstimate
    """
    m_values = list(m_values)
    for m in m_values:
        if m < 0 or m > n:
            raise ParameterError(f'm must be in 0..{n}, got {m}')
    if n_trees < 1:
        raise ParameterError(f'n_trees must be >= 1, got {n_trees}')
    if n_samples_per_tree < 2:
        raise ParameterError(f'n_samples_per_tree must be >= 2, got {n_samples_per_tree}')
    if method not in (METHOD_IMPORTANCE, METHOD_MCMC):
        raise ParameterError(f'Unknown method "{method}"')
    if method == METHOD_MCMC and schedule is None:
        raise ParameterError('The mcmc method needs a chain schedule')
    seed_sequence = as_seed_sequence(seed_sequence)

    def estimate_tree(i, n_samples):
        tree = sample_gw_tree(dist, n, np.random.default_rng(derive(seed_sequence, _TREE_STREAM, i)))
        return _inner_estimates(tree, params, m_values, n_samples, derive(seed_sequence, _INNER_STREAM, i),
                                method, schedule, block_size)

    if dist.is_degenerate:
        logger.info('Degenerate offspring law %s, estimating a single tree', dist.descriptor)
        only = estimate_tree(0, n_trees * n_samples_per_tree)
        results = [only]
        std_errors = {m: only.std_errors[m] for m in m_values}
    else:
        results = WorkerPool(workers).map(lambda i: estimate_tree(i, n_samples_per_tree), list(range(n_trees)))
        std_errors = {}
        for m in m_values:
            values = np.array([r.values[m] for r in results])
            if n_trees >= 2:
                # The spread of per tree estimates holds both the between tree
                # and the within tree variance
                std_errors[m] = float(np.std(values, ddof=1)) / math.sqrt(n_trees)
            else:
                std_errors[m] = results[0].std_errors[m]

    low_ess = any(r.low_ess for r in results)
    seed = master_seed(seed_sequence)
    estimates = {}
    for m in m_values:
        values = [r.values[m] for r in results]
        total = math.fsum(values)
        mean = total / len(values)
        estimates[m] = RatioEstimate(value=min(1.0, max(0.0, mean)), raw_value=mean, numerator_sum=total,
                                     denominator_sum=float(len(values)),
                                     n_samples=n_trees * n_samples_per_tree, std_error=std_errors[m],
                                     method=method, low_ess=low_ess, seed=seed)
    return estimates


def estimate_quenched(dist: OffspringDistribution, n: int, m: int, params: ModelParams, n_trees: int,
                      n_samples_per_tree: int, seed_sequence, workers: int = 1, method: str = METHOD_IMPORTANCE,
                      schedule: Optional[ChainSchedule] = None,
                      block_size: int = DEFAULT_BLOCK_SIZE) -> RatioEstimate:
    """ Quenched probability that a root loop reaches generation m """
    return estimate_quenched_paired(dist, n, [m], params, n_trees, n_samples_per_tree, seed_sequence, workers,
                                    method, schedule, block_size)[m]
