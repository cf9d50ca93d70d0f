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
Estimator runs at full sample sizes against the analytic bounds and
against each other.
"""
import math
import unittest

import numpy as np

from looptree.bounds.analytic import partition_bounds
from looptree.bounds.analytic import prob_a_bounds
from looptree.bounds.analytic import q_tilde
from looptree.links.link_types import ModelParams
from looptree.measure import events
from looptree.measure.importance_sampler import estimate_partition_function
from looptree.measure.importance_sampler import estimate_weighted_prob
from looptree.measure.importance_sampler import estimate_weighted_probs
from looptree.measure.mcmc_sampler import mcmc_sampler
from looptree.measure.mcmc_sampler import run_chain
from looptree.measure.quenched import estimate_quenched_paired
from looptree.measure.ratio_estimate import batch_means_std_error
from looptree.trees.offspring import PoissonOffspring
from looptree.trees.tree import regular_tree
from sys_test.acceptance.acceptance_support import ACCEPTANCE_SEED

WORKERS = 4

# Two sided 1% critical value of the Kolmogorov-Smirnov statistic is 1.63 / sqrt(n)
KS_CRITICAL_FACTOR = 1.63


class TestEstimators(unittest.TestCase):

    def test_that_star_partition_function_lies_between_bounds(self):
        # Fixture
        star = regular_tree(3, 1)
        params = ModelParams(2.0, 0.5)
        lower, upper = partition_bounds(3, params, [2.0, 2.0, 2.0])

        # Test
        actual = estimate_partition_function(star, params, 10**6, ACCEPTANCE_SEED, WORKERS)

        # Assert
        self.assertGreaterEqual(actual.value, lower - 3.0 * actual.std_error)
        self.assertLessEqual(actual.value, upper + 3.0 * actual.std_error)

    def test_that_star_partition_function_is_one_at_theta_one(self):
        # Fixture
        star = regular_tree(3, 1)
        params = ModelParams(1.0, 0.5)

        # Test
        actual = estimate_partition_function(star, params, 10**6, ACCEPTANCE_SEED, WORKERS)

        # Assert
        lower, upper = partition_bounds(3, params, [1.0, 1.0, 1.0])
        self.assertAlmostEqual(1.0, lower, places=12)
        self.assertAlmostEqual(1.0, upper, places=12)
        self.assertEqual(1.0, actual.value)
        self.assertEqual(0.0, actual.std_error)

    def test_that_root_edge_events_respect_their_bounds(self):
        for d in (3, 4):
            # Fixture
            star = regular_tree(d, 1)
            params = ModelParams(2.0, 0.5)
            empty_upper, at_most_one_lower = prob_a_bounds(d, params)

            # Test
            actual = estimate_weighted_probs({'empty': events.root_edges_empty(),
                                              'at_most_one': events.root_edges_at_most_one()},
                                             star, params, 2 * 10**5, ACCEPTANCE_SEED + d, WORKERS)

            # Assert
            self.assertLessEqual(actual['empty'].value, empty_upper + 3.0 * actual['empty'].std_error)
            self.assertGreaterEqual(actual['at_most_one'].value,
                                    at_most_one_lower - 3.0 * actual['at_most_one'].std_error)

    def test_that_chain_agrees_with_reweighting(self):
        # Fixture
        tree = regular_tree(3, 3)
        params = ModelParams(2.0, 0.5, 0.5)

        # Test
        weighted = estimate_weighted_prob(events.reach(2), tree, params, 2 * 10**5, ACCEPTANCE_SEED, WORKERS)
        chain = mcmc_sampler(tree, params, 10**6, 10**5, 10, np.random.default_rng(ACCEPTANCE_SEED),
                             events.reach(2))

        # Assert
        combined = math.hypot(weighted.std_error, chain.std_error)
        self.assertLessEqual(abs(weighted.value - chain.value), 3.0 * combined)

    def test_that_chain_at_theta_one_samples_the_poisson_process(self):
        # Fixture
        tree = regular_tree(3, 3)
        params = ModelParams(1.0, 0.5)
        thin = 100
        burn_in = 10**4

        # Test
        run = run_chain(tree, params, burn_in + 10**4 * thin, burn_in, thin,
                        np.random.default_rng(ACCEPTANCE_SEED), {})

        # Assert
        per_edge = run.link_counts / tree.edge_count
        std_error = batch_means_std_error(per_edge)
        self.assertLessEqual(abs(float(np.mean(per_edge)) - params.beta), 3.0 * std_error)

        recorded = int(np.sum(~np.isnan(run.link_times)))
        self.assertLess(run.link_time_ks_statistic(params.beta), KS_CRITICAL_FACTOR / math.sqrt(recorded))

    def test_that_quenched_reach_probabilities_decay_below_the_bound(self):
        # Fixture
        dist = PoissonOffspring(5.0)
        params = ModelParams(2.0, 0.05)
        q = q_tilde(dist, params)
        self.assertLess(q, 1.0)
        m_values = [1, 2, 3, 4]

        # Test
        actual = estimate_quenched_paired(dist, 6, m_values, params, 200, 10**3, ACCEPTANCE_SEED, WORKERS)

        # Assert
        for m in m_values:
            self.assertLessEqual(actual[m].value, q ** (m - 1) + 3.0 * actual[m].std_error, f'm={m}')


if __name__ == '__main__':
    unittest.main()
