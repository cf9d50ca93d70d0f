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
Metropolis chain on link configurations with stationary law proportional
to theta^L against the Poisson reference measure.

Every step proposes, with probability 1/2 each, to insert a link (uniform
edge, uniform time, cross with probability u) or to delete a uniformly
chosen existing link. The change of L is obtained by tracing one loop and
the cached L is checked against a full rebuild at regular checkpoints.
"""
from __future__ import annotations

import logging
import math
from typing import Mapping
from typing import NamedTuple

import numpy as np
from scipy import stats

from looptree.exceptions import ChainConsistencyError
from looptree.exceptions import ParameterError
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from looptree.loops.loop_builder import build_loops
from looptree.loops.space_time_index import SpaceTimeIndex
from looptree.measure.events import Event
from looptree.measure.ratio_estimate import frequency_estimate
from looptree.measure.ratio_estimate import RatioEstimate
from looptree.trees.tree import Tree

logger = logging.getLogger(__name__)

DEFAULT_CHECK_INTERVAL = 10**4
LOW_ACCEPTANCE_RATE = 0.01


class McmcState:
    """
    Current configuration of a chain with its cached loop count and move
    statistics.
    """

    def __init__(self, tree: Tree, params: ModelParams, config: LinkConfig = None) -> None:
        if config is None:
            config = LinkConfig.empty(tree.edge_count, params.beta)
        config.check_tree(tree)

        self.tree = tree
        self.params = params
        self._log_theta = math.log(params.theta)
        self._log_intensity = math.log(params.beta * tree.edge_count) if tree.edge_count > 0 else None

        self._index = SpaceTimeIndex.from_config(tree, config)
        # Flat list of (edge, time, kind) for uniform deletion, with positions
        self._links = []
        self._positions = {}
        for edge, links in config.items():
            for link in links:
                self._append(edge, link.time, link.kind)

        self.loop_count = build_loops(tree, config).loop_count
        self.steps = 0
        self.insert_proposals = 0
        self.insert_accepted = 0
        self.delete_proposals = 0
        self.delete_accepted = 0

    @property
    def link_count(self) -> int:
        return len(self._links)

    @property
    def log_weight(self) -> float:
        return self.loop_count * self._log_theta

    @property
    def acceptance_rate(self) -> float:
        proposals = self.insert_proposals + self.delete_proposals
        if proposals == 0:
            return 0.0
        return (self.insert_accepted + self.delete_accepted) / proposals

    def any_link_time(self):
        """ Time of the first link of the flat list, its position does not depend on the times """
        if not self._links:
            return None
        return self._links[0][1]

    def config(self) -> LinkConfig:
        links_by_edge = {}
        for edge, time, kind in self._links:
            links_by_edge.setdefault(edge, []).append(Link(time, kind))
        return LinkConfig(self.tree.edge_count, self.params.beta, links_by_edge)

    def step(self, rng: np.random.Generator) -> bool:
        """
        One Metropolis step.

        :return: True if the proposal was accepted
        """
        self.steps += 1
        if self._log_intensity is None:
            return False

        if rng.random() < 0.5:
            self.insert_proposals += 1
            edge = int(rng.integers(self.tree.edge_count))
            time = float(rng.uniform(0.0, self.params.beta))
            kind = LinkKind.CROSS if rng.random() < self.params.u else LinkKind.BAR
            if (edge, time) in self._positions:
                return False

            delta = self._index.insertion_delta(edge, time, kind)
            log_ratio = delta * self._log_theta + self._log_intensity - math.log(len(self._links) + 1)
            if not self._accept(log_ratio, rng):
                return False

            self._index.add_link(edge, Link(time, kind))
            self._append(edge, time, kind)
            self.loop_count += delta
            self.insert_accepted += 1
            return True

        self.delete_proposals += 1
        if not self._links:
            return False
        edge, time, _ = self._links[int(rng.integers(len(self._links)))]
        delta = self._index.deletion_delta(edge, time)
        log_ratio = delta * self._log_theta + math.log(len(self._links)) - self._log_intensity
        if not self._accept(log_ratio, rng):
            return False

        self._index.remove_link(edge, time)
        self._remove(edge, time)
        self.loop_count += delta
        self.delete_accepted += 1
        return True

    def verify(self) -> None:
        """ Raise if the cached loop count disagrees with a full rebuild """
        rebuilt = build_loops(self.tree, self.config()).loop_count
        if rebuilt != self.loop_count:
            raise ChainConsistencyError(f'Cached loop count {self.loop_count} differs from rebuilt count '
                                        f'{rebuilt} after {self.steps} steps')

    @staticmethod
    def _accept(log_ratio, rng):
        if log_ratio >= 0.0:
            return True
        return rng.random() < math.exp(log_ratio)

    def _append(self, edge, time, kind):
        self._positions[(edge, time)] = len(self._links)
        self._links.append((edge, time, kind))

    def _remove(self, edge, time):
        position = self._positions.pop((edge, time))
        last = self._links.pop()
        if position < len(self._links):
            self._links[position] = last
            self._positions[(last[0], last[1])] = position


class ChainRun(NamedTuple):
    """
    Per thinned state: event indicators (name -> array), total link count
    and the time of one link (nan when empty). `state` is the final state.
    """
    indicators: dict
    link_counts: np.ndarray
    link_times: np.ndarray
    state: McmcState

    def link_time_ks_statistic(self, beta: float) -> float:
        """ Kolmogorov-Smirnov statistic of the recorded link times against uniform on [0, beta) """
        times = self.link_times[~np.isnan(self.link_times)]
        return float(stats.kstest(times, stats.uniform(loc=0.0, scale=beta).cdf).statistic)


def run_chain(tree: Tree, params: ModelParams, n_steps: int, burn_in: int, thin: int, rng,
              events: Mapping[str, Event], check_interval: int = DEFAULT_CHECK_INTERVAL,
              initial_config: LinkConfig = None) -> ChainRun:
    """
    Run a chain and record the events on the states after burn in, every
    `thin` steps.

    :param tree: The tree
    :param params: Model parameters
    :param n_steps: Total number of steps, > burn_in
    :param burn_in: Steps discarded before recording
    :param thin: Steps between recorded states, >= 1
    :param rng: Generator, or anything numpy.random.default_rng() accepts
    :param events: name -> event predicate
    :param check_interval: Steps between checks of the cached loop count
    :param initial_config: Start configuration, empty by default
    :return: The recorded run
    """
    if int(thin) != thin or thin < 1:
        raise ParameterError(f'thin must be an integer >= 1, got {thin}')
    if burn_in < 0 or n_steps <= burn_in:
        raise ParameterError(f'n_steps ({n_steps}) must exceed burn_in ({burn_in}) >= 0')
    n_recorded = (n_steps - burn_in) // thin
    if n_recorded < 2:
        raise ParameterError(f'The schedule records {n_recorded} states, at least 2 are needed')
    if check_interval < 1:
        raise ParameterError(f'check_interval must be >= 1, got {check_interval}')

    rng = np.random.default_rng(rng)
    state = McmcState(tree, params, initial_config)
    names = list(events)
    indicators = {name: np.zeros(n_recorded, dtype=bool) for name in names}
    link_counts = np.zeros(n_recorded, dtype=np.int64)
    link_times = np.full(n_recorded, np.nan)

    logger.info('Running chain on %r for %d steps', tree, n_steps)
    recorded = 0
    for step in range(1, n_steps + 1):
        state.step(rng)

        if step % check_interval == 0:
            state.verify()
            logger.debug('Checkpoint at step %d: L=%d, links=%d', step, state.loop_count, state.link_count)

        if step > burn_in and (step - burn_in) % thin == 0 and recorded < n_recorded:
            partition = build_loops(tree, state.config())
            for name in names:
                indicators[name][recorded] = events[name](partition)
            link_counts[recorded] = state.link_count
            time = state.any_link_time()
            if time is not None:
                link_times[recorded] = time
            recorded += 1

    if state.acceptance_rate < LOW_ACCEPTANCE_RATE and tree.edge_count > 0:
        logger.warning('Chain acceptance rate %.4f is below %.2f', state.acceptance_rate, LOW_ACCEPTANCE_RATE)

    return ChainRun(indicators, link_counts, link_times, state)


def mcmc_sampler_paired(tree: Tree, params: ModelParams, n_steps: int, burn_in: int, thin: int, rng,
                        events: Mapping[str, Event], check_interval: int = DEFAULT_CHECK_INTERVAL,
                        seed=None) -> dict:
    """ Event frequencies of several events on the same chain: name -> RatioEstimate """
    run = run_chain(tree, params, n_steps, burn_in, thin, rng, events, check_interval)
    return {name: frequency_estimate(values, seed) for name, values in run.indicators.items()}


def mcmc_sampler(tree: Tree, params: ModelParams, n_steps: int, burn_in: int, thin: int, rng, event: Event,
                 check_interval: int = DEFAULT_CHECK_INTERVAL, seed=None) -> RatioEstimate:
    """
    Frequency of an event over the thinned states of a chain, with a batch
    means standard error.
    """
    return mcmc_sampler_paired(tree, params, n_steps, burn_in, thin, rng, {'event': event},
                               check_interval, seed)['event']
