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

from looptree.exceptions import ParameterError
from looptree.measure.ratio_estimate import batch_means_std_error
from looptree.measure.ratio_estimate import frequency_estimate
from looptree.measure.ratio_estimate import METHOD_IMPORTANCE
from looptree.measure.ratio_estimate import METHOD_MCMC
from looptree.measure.ratio_estimate import weighted_ratio


class TestWeightedRatio(unittest.TestCase):

    def test_that_ratio_and_delta_method_error_are_computed(self):
        # Fixture
        weights = [1.0, 1.0, 2.0, 0.0]
        indicators = [1, 0, 1, 1]

        # Test
        actual = weighted_ratio(weights, indicators)

        # Assert
        self.assertAlmostEqual(0.75, actual.value)
        self.assertAlmostEqual(3.0, actual.numerator_sum)
        self.assertAlmostEqual(4.0, actual.denominator_sum)
        self.assertAlmostEqual(math.sqrt(0.875) / 4.0, actual.std_error)
        self.assertAlmostEqual(16.0 / 6.0, actual.effective_sample_size)
        self.assertEqual(4, actual.n_samples)
        self.assertEqual(METHOD_IMPORTANCE, actual.method)
        self.assertIsNone(actual.bootstrap_std_error)

    def test_that_an_event_that_always_holds_has_no_error(self):
        # Fixture
        # Test
        actual = weighted_ratio([0.5, 2.0, 1.0], [True, True, True])

        # Assert
        self.assertEqual(1.0, actual.value)
        self.assertEqual(0.0, actual.std_error)

    def test_that_bootstrap_error_is_close_to_delta_method(self):
        # Fixture
        rng = np.random.default_rng(51)
        weights = rng.exponential(size=2000)
        indicators = rng.random(2000) < 0.3

        # Test
        actual = weighted_ratio(weights, indicators, bootstrap_rng=np.random.default_rng(52))

        # Assert
        self.assertLess(abs(actual.bootstrap_std_error - actual.std_error), 0.3 * actual.std_error)

    def test_that_low_effective_sample_size_is_flagged(self):
        # Fixture
        weights = [1.0] + [1e-9] * 199

        # Test
        with self.assertLogs('looptree.measure.ratio_estimate', level='WARNING'):
            actual = weighted_ratio(weights, [0] * 200)

        # Assert
        self.assertTrue(actual.low_ess)

    def test_that_one_sample_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            weighted_ratio([1.0], [1])

    def test_that_zero_weights_raise(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            weighted_ratio([0.0, 0.0], [1, 0])

    def test_that_record_holds_the_result_fields(self):
        # Fixture
        estimate = weighted_ratio([1.0, 1.0], [1, 0], seed=7)

        # Test
        actual = estimate.as_record()

        # Assert
        self.assertEqual(0.5, actual['value'])
        self.assertEqual(7, actual['seed'])
        self.assertEqual(2, actual['n_samples'])
        self.assertEqual(METHOD_IMPORTANCE, actual['method'])
        self.assertIn('std_error', actual)


class TestChainEstimates(unittest.TestCase):

    def test_that_batch_means_error_of_a_constant_is_zero(self):
        # Fixture
        # Test
        actual = batch_means_std_error(np.ones(100))

        # Assert
        self.assertEqual(0.0, actual)

    def test_that_batch_means_error_uses_the_batch_spread(self):
        # Fixture
        values = [0.0] * 5 + [1.0] * 5

        # Test
        actual = batch_means_std_error(values, n_batches=2)

        # Assert
        self.assertAlmostEqual(0.5, actual)

    def test_that_frequency_is_the_fraction_of_states(self):
        # Fixture
        # Test
        actual = frequency_estimate([1, 0, 1, 1], seed=3)

        # Assert
        self.assertEqual(0.75, actual.value)
        self.assertEqual(METHOD_MCMC, actual.method)
        self.assertEqual(3, actual.seed)

    def test_that_short_chain_raises(self):
        # Fixture
        # Test
        # Assert
        with self.assertRaises(ParameterError):
            frequency_estimate([1])


if __name__ == '__main__':
    unittest.main()
