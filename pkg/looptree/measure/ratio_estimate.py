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
Ratio estimates of weighted probabilities and their standard errors.
"""
from __future__ import annotations

import logging
import math
from typing import NamedTuple
from typing import Optional

import numpy as np
import numpy.typing as npt

from looptree.exceptions import ParameterError

logger = logging.getLogger(__name__)

DEFAULT_BOOTSTRAP_RESAMPLES = 200
LOW_ESS_FRACTION = 0.01

METHOD_IMPORTANCE = 'importance'
METHOD_MCMC = 'mcmc'


class RatioEstimate(NamedTuple):
    """
    Estimate of a probability written as numerator_sum / denominator_sum.
    `value` is clamped to [0, 1], `raw_value` is the ratio itself. Sums of
    weighted estimates are expressed in units of exp(log_scale).
    """
    value: float
    raw_value: float
    numerator_sum: float
    denominator_sum: float
    n_samples: int
    std_error: float
    method: str
    log_scale: float = 0.0
    effective_sample_size: Optional[float] = None
    low_ess: bool = False
    bootstrap_std_error: Optional[float] = None
    seed: Optional[int] = None

    def as_record(self) -> dict:
        """ Machine readable summary, suitable for json """
        return {
            'value': self.value,
            'raw_value': self.raw_value,
            'std_error': self.std_error,
            'n_samples': self.n_samples,
            'method': self.method,
            'effective_sample_size': self.effective_sample_size,
            'low_ess': self.low_ess,
            'bootstrap_std_error': self.bootstrap_std_error,
            'seed': self.seed,
        }


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def weighted_ratio(weights: npt.ArrayLike, indicators: npt.ArrayLike, log_scale: float = 0.0,
                   bootstrap_rng: np.random.Generator = None,
                   bootstrap_resamples: int = DEFAULT_BOOTSTRAP_RESAMPLES,
                   seed: Optional[int] = None) -> RatioEstimate:
    """
    Self normalised estimate sum(w * y) / sum(w) with a delta method
    standard error and an optional bootstrap cross check.

    :param weights: Non negative sample weights, not all zero
    :param indicators: Event indicator per sample
    :param log_scale: Log of the unit the weights are expressed in
    :param bootstrap_rng: Generator for the bootstrap, None to skip it
    :param bootstrap_resamples: Number of bootstrap resamples
    :param seed: Master seed, recorded in the estimate
    :return: The estimate
    """
    w = np.asarray(weights, dtype=float)
    y = np.asarray(indicators, dtype=float)
    n = w.shape[0]
    if n < 2:
        raise ParameterError(f'At least 2 samples are needed, got {n}')

    denominator = float(np.sum(w))
    if not denominator > 0:
        raise ParameterError('All weights are zero')
    numerator = float(np.sum(w * y))
    ratio = numerator / denominator

    std_error = math.sqrt(float(np.sum((w * (y - ratio))**2))) / denominator
    ess = denominator**2 / float(np.sum(w * w))
    low_ess = ess < LOW_ESS_FRACTION * n
    if low_ess:
        logger.warning('Effective sample size %.1f is below %.0f%% of %d samples', ess, 100 * LOW_ESS_FRACTION, n)

    bootstrap_std_error = None
    if bootstrap_rng is not None and bootstrap_resamples > 0:
        bootstrap_std_error = _bootstrap_std_error(w, y, bootstrap_rng, bootstrap_resamples)

    return RatioEstimate(value=_clamp(ratio), raw_value=ratio, numerator_sum=numerator,
                         denominator_sum=denominator, n_samples=n, std_error=std_error,
                         method=METHOD_IMPORTANCE, log_scale=log_scale, effective_sample_size=ess,
                         low_ess=low_ess, bootstrap_std_error=bootstrap_std_error, seed=seed)


def _bootstrap_std_error(w, y, rng, resamples):
    n = w.shape[0]
    ratios = np.empty(resamples)
    for b in range(resamples):
        picked = rng.integers(0, n, size=n)
        ratios[b] = np.sum(w[picked] * y[picked]) / np.sum(w[picked])
    return float(np.std(ratios, ddof=1))


def batch_means_std_error(values: npt.ArrayLike, n_batches: Optional[int] = None) -> float:
    """
    Standard error of the mean of a correlated sequence from the spread of
    the means of consecutive batches.

    :param values: The sequence, in chain order
    :param n_batches: Number of batches, the square root of the length by default
    :return: The standard error
    """
    x = np.asarray(values, dtype=float)
    n = x.shape[0]
    if n < 2:
        raise ParameterError(f'At least 2 values are needed, got {n}')
    if n_batches is None:
        n_batches = int(math.sqrt(n))
    n_batches = max(2, min(n_batches, n))

    batch_size = n // n_batches
    batch_means = x[:batch_size * n_batches].reshape(n_batches, batch_size).mean(axis=1)
    return float(np.std(batch_means, ddof=1) / math.sqrt(n_batches))


def frequency_estimate(indicators: npt.ArrayLike, seed: Optional[int] = None) -> RatioEstimate:
    """ Event frequency over the thinned states of a chain """
    y = np.asarray(indicators, dtype=float)
    n = y.shape[0]
    if n < 2:
        raise ParameterError(f'At least 2 chain samples are needed, got {n}')

    count = float(np.sum(y))
    ratio = count / n
    return RatioEstimate(value=_clamp(ratio), raw_value=ratio, numerator_sum=count, denominator_sum=float(n),
                         n_samples=n, std_error=batch_means_std_error(y), method=METHOD_MCMC, seed=seed)
