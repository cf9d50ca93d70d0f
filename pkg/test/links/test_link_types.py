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
import unittest

import numpy as np

from looptree.exceptions import EdgeMismatchError
from looptree.exceptions import LinkError
from looptree.exceptions import ParameterError
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from test.support.loop_fixtures import LoopFixtures


class TestModelParams(unittest.TestCase):

    def test_that_valid_params_are_accepted(self):
        # Fixture
        # Test
        actual = ModelParams(2.0, 0.5, 0.25)

        # Assert
        self.assertEqual((2.0, 0.5, 0.25), (actual.theta, actual.beta, actual.u))

    def test_that_theta_below_one_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            ModelParams(0.5, 1.0)

    def test_that_non_positive_beta_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            ModelParams(1.0, 0.0)

    def test_that_u_outside_unit_interval_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            ModelParams(1.0, 1.0, 1.5)

    def test_that_parameter_error_is_a_value_error(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ValueError):
            ModelParams(1.0, -1.0)

    def test_that_with_beta_keeps_theta_and_u(self):
        # Fixture
        sut = ModelParams(3.0, 1.0, 0.75)

        # Test
        actual = sut.with_beta(0.25)

        # Assert
        self.assertEqual(ModelParams(3.0, 0.25, 0.75), actual)


class TestLinkConfig(unittest.TestCase):

    def test_that_links_are_kept_in_time_order(self):
        # Fixture
        # Test
        sut = LoopFixtures.config(2, {1: [(0.7, LinkKind.BAR), (0.2, LinkKind.CROSS)]})

        # Assert
        self.assertEqual((Link(0.2, LinkKind.CROSS), Link(0.7, LinkKind.BAR)), sut.links(1))
        self.assertEqual((), sut.links(0))
        self.assertEqual(2, sut.total_link_count)
        self.assertEqual([1], sut.occupied_edges)

    def test_that_two_links_at_the_same_time_on_an_edge_raise(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(LinkError):
            LoopFixtures.config(1, {0: [(0.5, LinkKind.BAR), (0.5, LinkKind.CROSS)]})

    def test_that_time_outside_the_interval_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(LinkError):
            LoopFixtures.config(1, {0: [(1.0, LinkKind.BAR)]})

    def test_that_unknown_edge_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(EdgeMismatchError):
            LoopFixtures.config(2, {2: [(0.5, LinkKind.BAR)]})

    def test_that_insert_returns_a_new_configuration(self):
        # Fixture
        sut = LoopFixtures.config(2, {0: [(0.1, LinkKind.CROSS), (0.9, LinkKind.CROSS)]})

        # Test
        actual = sut.insert_link(0, Link(0.5, LinkKind.BAR))

        # Assert
        self.assertEqual(2, sut.total_link_count)
        self.assertEqual(3, actual.total_link_count)
        self.assertEqual([0.1, 0.5, 0.9], [link.time for link in actual.links(0)])

    def test_that_insert_at_an_occupied_time_raises(self):
        # Fixture
        sut = LoopFixtures.config(1, {0: [(0.5, LinkKind.CROSS)]})

        # Test
        # Assert
        with self.assertRaises(LinkError):
            sut.insert_link(0, Link(0.5, LinkKind.BAR))

    def test_that_remove_drops_the_indexed_link(self):
        # Fixture
        sut = LoopFixtures.config(2, {1: [(0.1, LinkKind.CROSS), (0.6, LinkKind.BAR)]})

        # Test
        actual = sut.remove_link(1, 0)

        # Assert
        self.assertEqual((Link(0.6, LinkKind.BAR),), actual.links(1))
        self.assertEqual(1, actual.total_link_count)

    def test_that_removing_the_last_link_frees_the_edge(self):
        # Fixture
        sut = LoopFixtures.config(2, {1: [(0.1, LinkKind.CROSS)]})

        # Test
        actual = sut.remove_link(1, 0)

        # Assert
        self.assertEqual(LinkConfig.empty(2, 1.0), actual)
        self.assertEqual([], actual.occupied_edges)

    def test_that_remove_with_a_bad_index_raises(self):
        # Fixture
        sut = LoopFixtures.config(2, {1: [(0.1, LinkKind.CROSS)]})

        # Test
        # Assert
        with self.assertRaises(LinkError):
            sut.remove_link(1, 1)

    def test_that_insert_then_remove_restores_the_configuration(self):
        # Fixture
        sut = LoopFixtures.config(3, {0: [(0.3, LinkKind.BAR)], 2: [(0.8, LinkKind.CROSS)]})

        # Test
        actual = sut.insert_link(0, Link(0.1, LinkKind.CROSS)).remove_link(0, 0)

        # Assert
        self.assertEqual(sut, actual)

    def test_that_without_edges_and_restricted_to_split_the_links(self):
        # Fixture
        sut = LoopFixtures.config(3, {0: [(0.3, LinkKind.BAR)], 2: [(0.8, LinkKind.CROSS)]})

        # Test
        without = sut.without_edges([0])
        restricted = sut.restricted_to([0])

        # Assert
        self.assertEqual([2], without.occupied_edges)
        self.assertEqual([0], restricted.occupied_edges)
        self.assertEqual(sut.total_link_count, without.total_link_count + restricted.total_link_count)

    def test_that_check_tree_rejects_a_different_edge_count(self):
        # Fixture
        sut = LinkConfig.empty(5, 1.0)

        # Test
        # Assert
        with self.assertRaises(EdgeMismatchError):
            sut.check_tree(LoopFixtures.STAR_3)

    def test_that_random_insert_and_remove_sequences_keep_edges_sorted(self):
        # Fixture
        rng = np.random.default_rng(17)
        edge_count = 4
        beta = 1.0

        for _ in range(50):
            sut = LinkConfig.empty(edge_count, beta)
            expected = {edge: [] for edge in range(edge_count)}

            for _ in range(40):
                edge = int(rng.integers(edge_count))

                # Test
                if expected[edge] and rng.random() < 0.4:
                    index = int(rng.integers(len(expected[edge])))
                    sut = sut.remove_link(edge, index)
                    del expected[edge][index]
                else:
                    kind = LinkKind.CROSS if rng.random() < 0.5 else LinkKind.BAR
                    link = Link(float(rng.uniform(0.0, beta)), kind)
                    sut = sut.insert_link(edge, link)
                    expected[edge] = sorted(expected[edge] + [link], key=lambda item: item.time)

                # Assert
                for e in range(edge_count):
                    times = [link.time for link in sut.links(e)]
                    self.assertTrue(all(a < b for a, b in zip(times, times[1:])), f'Edge {e} not sorted: {times}')
                    self.assertEqual(tuple(expected[e]), sut.links(e))
                self.assertEqual(sum(len(links) for links in expected.values()), sut.total_link_count)


if __name__ == '__main__':
    unittest.main()
