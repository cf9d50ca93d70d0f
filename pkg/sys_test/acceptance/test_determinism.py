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

from looptree.cli.commands import cmd_simulate
from looptree.cli.config import ExperimentConfig
from sys_test.acceptance.acceptance_support import ACCEPTANCE_SEED


class TestDeterminism(unittest.TestCase):

    def test_that_simulate_output_does_not_depend_on_runs_or_workers(self):
        # Fixture
        outputs = []

        for workers in (1, 4):
            config = ExperimentConfig(seed=ACCEPTANCE_SEED, d=3, n=3, theta=2.0, beta=0.5, samples=50000,
                                      workers=workers)
            for _ in range(2):
                # Test
                outputs.append(cmd_simulate(config))

        # Assert
        self.assertEqual(1, len(set(outputs)))
        self.assertEqual(5, len(outputs[0].splitlines()))


if __name__ == '__main__':
    unittest.main()
