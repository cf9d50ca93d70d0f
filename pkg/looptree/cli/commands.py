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
The experiment commands. Each returns its output as text; writing it is up
to the caller.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import logging

import numpy as np

from looptree.bounds.analytic import c_d
from looptree.bounds.analytic import laplace_term
from looptree.bounds.analytic import long_loop_ratio
from looptree.bounds.analytic import prob_a_bounds
from looptree.bounds.analytic import q_tilde
from looptree.bounds.conditions import check_theorem2
from looptree.bounds.conditions import ConditionReport
from looptree.bounds.conditions import find_epsilon
from looptree.bounds.searches import corollary3_d0
from looptree.cli.config import COMMAND_CHECK
from looptree.cli.config import COMMAND_MCMC
from looptree.cli.config import COMMAND_SCAN_BETA
from looptree.cli.config import COMMAND_SIMULATE
from looptree.cli.config import ExperimentConfig
from looptree.cli.config import TREE_GW
from looptree.cli.config import TREE_REGULAR
from looptree.measure import events
from looptree.measure.importance_sampler import estimate_weighted_probs
from looptree.measure.mcmc_sampler import mcmc_sampler_paired
from looptree.measure.quenched import estimate_quenched_paired
from looptree.measure.ratio_estimate import METHOD_MCMC
from looptree.measure.workers import as_seed_sequence
from looptree.measure.workers import derive
from looptree.trees.offspring import moment_functional
from looptree.trees.offspring import PowerFunctional
from looptree.trees.tree import regular_tree

logger = logging.getLogger(__name__)

SIMULATE_COLUMNS = ['beta', 'theta', 'u', 'd_or_mu', 'n', 'm', 'method', 'p_hat', 'std_error', 'n_samples', 'seed']
SCAN_COLUMNS = SIMULATE_COLUMNS + ['q_tilde', 'q_tilde_pow', 'a_empty_upper', 'a_lower', 'part1', 'part2']


def _to_csv(header: list, rows: list) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(value) if isinstance(value, float) else value for value in row])
    return buffer.getvalue()


def _estimates_at(config: ExperimentConfig, beta: float, seed_sequence) -> dict:
    """ m -> (p_hat, std_error, n_samples) for every evaluated generation at one beta """
    generations = config.generations

    if beta == 0.0:
        # Without links every loop is a single vertex
        n_samples = config.samples * (config.n_trees if config.tree == TREE_GW else 1)
        return {m: (1.0 if m == 0 else 0.0, 0.0, n_samples) for m in generations}

    params = config.model_params(beta)
    if config.tree == TREE_GW:
        estimates = estimate_quenched_paired(config.offspring(), config.n, generations, params, config.n_trees,
                                             config.samples, seed_sequence, config.workers, config.method,
                                             config.chain_schedule())
    else:
        tree = regular_tree(config.d, config.n)
        reach_events = {m: events.reach(m) for m in generations}
        if config.method == METHOD_MCMC:
            schedule = config.chain_schedule()
            estimates = mcmc_sampler_paired(tree, params, schedule.n_steps, schedule.burn_in, schedule.thin,
                                            np.random.default_rng(seed_sequence), reach_events,
                                            schedule.check_interval, config.seed)
        else:
            estimates = estimate_weighted_probs(reach_events, tree, params, config.samples, seed_sequence,
                                                config.workers, bootstrap_resamples=config.bootstrap)

    for m, estimate in estimates.items():
        if estimate.low_ess:
            logger.warning('Low effective sample size at beta=%s, m=%d', beta, m)
    return {m: (estimate.value, estimate.std_error, estimate.n_samples) for m, estimate in estimates.items()}


def _simulation_rows(config: ExperimentConfig):
    seed_sequence = as_seed_sequence(config.seed)
    for index, beta in enumerate(config.betas):
        logger.info('Estimating beta=%s (%d of %d)', beta, index + 1, len(config.betas))
        estimates = _estimates_at(config, beta, derive(seed_sequence, index))
        for m in config.generations:
            p_hat, std_error, n_samples = estimates[m]
            yield beta, m, [beta, float(config.theta), float(config.u), config.d_or_mu(), config.n, m,
                            config.method, p_hat, std_error, n_samples, config.seed]


def cmd_simulate(config: ExperimentConfig) -> str:
    """
    Estimate the probability that a loop through the root reaches
    generation m, for every beta and m of the configuration.
    """
    config.validate(COMMAND_SIMULATE)
    rows = [row for _, _, row in _simulation_rows(config)]
    return _to_csv(SIMULATE_COLUMNS, rows)


def cmd_mcmc(config: ExperimentConfig) -> str:
    """ As cmd_simulate, with the Markov chain estimator """
    config = dataclasses.replace(config, method=METHOD_MCMC)
    config.validate(COMMAND_MCMC)
    rows = [row for _, _, row in _simulation_rows(config)]
    return _to_csv(SIMULATE_COLUMNS, rows)


class _AnalyticColumns:
    """ The bounds of one beta of a scan, independent of m """

    def __init__(self, config: ExperimentConfig, beta: float) -> None:
        dist = config.offspring()
        if beta == 0.0:
            self.q = 0.0
            self.a_empty_upper = 1.0
            self.a_lower = 1.0
            self.report = ConditionReport.without_links(dist, float(config.theta), config.epsilon)
            return

        params = config.model_params(beta)
        self.q = q_tilde(dist, params)
        if config.tree == TREE_REGULAR:
            self.a_empty_upper, self.a_lower = prob_a_bounds(config.d, params)
        else:
            self.a_empty_upper = laplace_term(dist, params)
            self.a_lower = moment_functional(dist, PowerFunctional(long_loop_ratio(params)))
        epsilon = config.epsilon if config.epsilon is not None else find_epsilon(dist, params)
        self.report = check_theorem2(dist, params, epsilon, trace_length=1)

    def row(self, m: int) -> list:
        q_pow = min(1.0, self.q ** (m - 1)) if m >= 1 else 1.0
        return [self.q, q_pow, self.a_empty_upper, self.a_lower, bool(self.report.part1), self.report.part2]


def cmd_scan_beta(config: ExperimentConfig) -> str:
    """
    Simulation rows for every beta of the grid joined with the analytic
    bounds at that beta.
    """
    config.validate(COMMAND_SCAN_BETA)
    rows = []
    analytic = {}
    for beta, m, row in _simulation_rows(config):
        if beta not in analytic:
            analytic[beta] = _AnalyticColumns(config, beta)
        rows.append(row + analytic[beta].row(m))
    return _to_csv(SCAN_COLUMNS, rows)


def cmd_check(config: ExperimentConfig) -> str:
    """
    The conditions for long loops and for exponential decay at the
    configured beta, as JSON. Without an epsilon one is searched for. For a
    regular tree with beta d < theta the report also holds c_d and d0 for
    q = beta d.
    """
    config.validate(COMMAND_CHECK)
    dist = config.offspring()
    beta = config.betas[0]
    if beta == 0.0:
        return ConditionReport.without_links(dist, float(config.theta), config.epsilon).to_json()

    params = config.model_params(beta)
    epsilon = config.epsilon if config.epsilon is not None else find_epsilon(dist, params)
    report = check_theorem2(dist, params, epsilon)
    if config.tree == TREE_REGULAR:
        q = beta * config.d
        if q < params.theta:
            report = report._replace(c_d=c_d(q, params.theta, config.d), d0=corollary3_d0(q, params.theta))
    return report.to_json()


COMMANDS = {
    COMMAND_SIMULATE: cmd_simulate,
    COMMAND_SCAN_BETA: cmd_scan_beta,
    COMMAND_CHECK: cmd_check,
    COMMAND_MCMC: cmd_mcmc,
}
