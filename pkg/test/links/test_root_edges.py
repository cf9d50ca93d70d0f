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

from looptree.exceptions import EdgeMismatchError
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.root_edges import all_at_most_one
from looptree.links.root_edges import all_empty
from looptree.links.root_edges import at_least_one_on
from looptree.links.root_edges import exactly_one_on
from looptree.links.root_edges import root_edge_profile
from test.support.loop_fixtures import LoopFixtures


class TestRootEdges(unittest.TestCase):

    def test_that_profile_counts_links_on_root_edges_only(self):
        # Fixture
        tree = LoopFixtures.BINARY_2
        config = LoopFixtures.config(6, {
            0: [(0.1, LinkKind.CROSS)],
            1: [(0.2, LinkKind.BAR), (0.4, LinkKind.BAR)],
            3: [(0.5, LinkKind.CROSS)],
        })

        # Test
        actual = root_edge_profile(tree, config)

        # Assert
        self.assertEqual([1, 2], actual)

    def test_that_profile_of_a_mismatched_configuration_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(EdgeMismatchError):
            root_edge_profile(LoopFixtures.STAR_3, LinkConfig.empty(2, 1.0))

    def test_that_all_at_most_one_accepts_zero_and_one(self):
        # Fixture
        # Test
        # Assert
        self.assertTrue(all_at_most_one([0, 1, 1]))
        self.assertFalse(all_at_most_one([0, 2, 1]))

    def test_that_all_empty_needs_every_count_zero(self):
        # Fixture
        # Test
        # Assert
        self.assertTrue(all_empty([0, 0, 0]))
        self.assertTrue(all_empty([]))
        self.assertFalse(all_empty([0, 1, 0]))

    def test_that_exactly_one_on_matches_the_subset(self):
        # Fixture
        # Test
        # Assert
        self.assertTrue(exactly_one_on([1, 0, 1], [0, 2]))
        self.assertFalse(exactly_one_on([1, 0, 2], [0, 2]))
        self.assertFalse(exactly_one_on([1, 1, 1], [0, 2]))
        self.assertTrue(exactly_one_on([0, 0, 0], []))

    def test_that_at_least_one_on_allows_multiple_links_in_the_subset(self):
        # Fixture
        # Test
        # Assert
        self.assertTrue(at_least_one_on([3, 0, 1], [0, 2]))
        self.assertFalse(at_least_one_on([3, 1, 1], [0, 2]))
        self.assertFalse(at_least_one_on([0, 0, 1], [0, 2]))

    def test_that_empty_subset_events_coincide_with_all_empty(self):
        # Fixture
        profiles = [[0, 0], [1, 0], [0, 2]]

        # Test
        # Assert
        for profile in profiles:
            self.assertEqual(all_empty(profile), exactly_one_on(profile, []))
            self.assertEqual(all_empty(profile), at_least_one_on(profile, []))


if __name__ == '__main__':
    unittest.main()
