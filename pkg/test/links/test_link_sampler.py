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
import math
import unittest

import numpy as np

from looptree.links.link_sampler import sample_links
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from looptree.links.root_edges import all_empty
from looptree.links.root_edges import root_edge_profile
from looptree.trees.tree import regular_tree
from test.support.loop_fixtures import LoopFixtures
from test.support.loop_test_base import LoopTestBase


class TestSampleLinks(LoopTestBase):

    def test_that_tiny_beta_leaves_every_edge_empty(self):
        # Fixture
        rng = np.random.default_rng(11)
        tree = regular_tree(2, 3)
        params = ModelParams(1.0, 1e-9)

        # Test
        empty = sum(sample_links(tree, params, rng).total_link_count == 0 for _ in range(10000))

        # Assert
        self.assertGreaterEqual(empty, 9999)

    def test_that_link_counts_per_edge_have_mean_and_variance_beta(self):
        # Fixture
        rng = np.random.default_rng(12)
        tree = regular_tree(3, 2)
        beta = 1.5
        n = 1500

        for u in (0.0, 0.25, 0.5, 1.0):
            with self.subTest(u=u):
                params = ModelParams(1.0, beta, u)

                # Test
                counts = np.array([[config.link_count(edge) for edge in range(tree.edge_count)]
                                   for config in (sample_links(tree, params, rng) for _ in range(n))]).ravel()

                # Assert
                size = counts.shape[0]
                mean_std_error = math.sqrt(beta / size)
                # Central fourth moment of a Poisson law is beta + 3 beta^2
                variance_std_error = math.sqrt((beta + 2.0 * beta * beta) / size)
                self.assertWithinStdErrors(beta, float(np.mean(counts)), mean_std_error, k=4.0)
                self.assertWithinStdErrors(beta, float(np.var(counts, ddof=1)), variance_std_error, k=4.0)

    def test_that_u_sets_the_fraction_of_crosses(self):
        # Fixture
        rng = np.random.default_rng(13)
        tree = regular_tree(2, 3)
        params = ModelParams(1.0, 2.0, 0.25)

        # Test
        kinds = [link.kind for _ in range(500) for _, links in sample_links(tree, params, rng).items()
                 for link in links]

        # Assert
        fraction = sum(kind is LinkKind.CROSS for kind in kinds) / len(kinds)
        std_error = math.sqrt(0.25 * 0.75 / len(kinds))
        self.assertWithinStdErrors(0.25, fraction, std_error, k=4.0)

    def test_that_u_one_gives_only_crosses(self):
        # Fixture
        rng = np.random.default_rng(14)
        tree = regular_tree(2, 2)

        # Test
        config = sample_links(tree, ModelParams(1.0, 3.0, 1.0), rng)

        # Assert
        self.assertTrue(all(link.kind is LinkKind.CROSS for _, links in config.items() for link in links))

    def test_that_times_are_sorted_and_inside_the_interval(self):
        # Fixture
        rng = np.random.default_rng(15)
        tree = regular_tree(2, 2)

        # Test
        config = sample_links(tree, ModelParams(1.0, 4.0), rng)

        # Assert
        for _, links in config.items():
            times = [link.time for link in links]
            self.assertEqual(sorted(times), times)
            self.assertTrue(all(0.0 <= t < 4.0 for t in times))

    def test_that_empty_root_edges_have_probability_exp_minus_beta_d(self):
        # Fixture
        rng = np.random.default_rng(16)
        tree = LoopFixtures.STAR_3
        params = ModelParams(1.0, 0.5)
        n = 20000

        # Test
        hits = sum(all_empty(root_edge_profile(tree, sample_links(tree, params, rng))) for _ in range(n))

        # Assert
        expected = math.exp(-1.5)
        std_error = math.sqrt(expected * (1.0 - expected) / n)
        self.assertWithinStdErrors(expected, hits / n, std_error, k=4.0)

    def test_that_the_same_seed_gives_the_same_configuration(self):
        # Fixture
        tree = regular_tree(3, 2)
        params = ModelParams(2.0, 1.0)

        # Test
        first = sample_links(tree, params, np.random.default_rng(99))
        second = sample_links(tree, params, np.random.default_rng(99))

        # Assert
        self.assertEqual(first, second)


if __name__ == '__main__':
    unittest.main()
