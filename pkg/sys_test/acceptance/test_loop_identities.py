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
Exact combinatorial identities of the loop construction, over many sampled
or enumerated configurations.
"""
import unittest

import numpy as np

from looptree.links.root_edges import root_edge_profile
from looptree.loops.loop_events import check_prop1
from looptree.loops.space_time_index import SpaceTimeIndex
from sys_test.acceptance.acceptance_support import ACCEPTANCE_SEED
from sys_test.acceptance.acceptance_support import AcceptanceSupport
from sys_test.acceptance.acceptance_support import SMALL_TREES


class TestLoopIdentities(unittest.TestCase):

    def test_that_root_merge_relation_holds_for_sampled_pairs(self):
        # Fixture
        rng = np.random.default_rng(ACCEPTANCE_SEED)
        violations = []

        # Test
        for i in range(10**4):
            tree, config = AcceptanceSupport.random_pair(rng)
            result = check_prop1(tree, config)
            if not result.holds:
                violations.append((i, repr(tree), result))

        # Assert
        self.assertEqual([], violations)

    def test_that_relation_is_an_equality_with_at_most_one_link_per_root_edge(self):
        # Fixture
        rng = np.random.default_rng(ACCEPTANCE_SEED + 1)
        cases = 0
        violations = 0

        # Test
        while cases < 10**4:
            tree, config = AcceptanceSupport.random_pair(rng)
            if any(count > 1 for count in root_edge_profile(tree, config)):
                continue
            cases += 1
            result = check_prop1(tree, config)
            if not result.holds or result.lower_slack != 0:
                violations += 1

        # Assert
        self.assertEqual(0, violations)

    def test_that_single_insertions_change_the_loop_count_by_at_most_one(self):
        # Fixture
        rng = np.random.default_rng(ACCEPTANCE_SEED + 2)
        insertions = 0
        first_links = 0

        # Test
        while insertions < 10**4:
            tree, config = AcceptanceSupport.random_pair(rng)
            if tree.edge_count == 0:
                continue
            insertions += 1
            edge = int(rng.integers(tree.edge_count))
            link = AcceptanceSupport.random_link(rng, config.beta)
            before = AcceptanceSupport.loop_count(tree, config)
            after = AcceptanceSupport.loop_count(tree, config.insert_link(edge, link))
            predicted = SpaceTimeIndex.from_config(tree, config).insertion_delta(edge, link.time, link.kind)

            # Assert
            self.assertLessEqual(abs(after - before), 1)
            self.assertEqual(after - before, predicted)
            if config.link_count(edge) == 0:
                # The endpoints of an edge without links lie on different loops
                first_links += 1
                self.assertEqual(-1, after - before)

        self.assertGreater(first_links, 1000)

    def test_that_wiring_agrees_with_tracing_on_every_small_placement(self):
        # Fixture
        rng = np.random.default_rng(ACCEPTANCE_SEED + 3)
        mismatches = 0

        # Test
        for tree in SMALL_TREES:
            for edges, kinds in AcceptanceSupport.placements(tree, 4):
                for _ in range(10**3):
                    config = AcceptanceSupport.config_with_times(tree, edges, kinds, rng)
                    if AcceptanceSupport.loop_count(tree, config) != \
                            AcceptanceSupport.traced_loop_count(tree, config):
                        mismatches += 1

        # Assert
        self.assertEqual(0, mismatches)


if __name__ == '__main__':
    unittest.main()
