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
Sufficient conditions for long loops and for exponential decay of loop
lengths on Galton-Watson trees, and the search for their epsilon.
"""
from __future__ import annotations

import json
import logging
import math
from typing import NamedTuple
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from looptree.bounds.analytic import laplace_term
from looptree.bounds.analytic import long_loop_step
from looptree.bounds.analytic import q_tilde
from looptree.bounds.analytic import zeta_recursion_lower
from looptree.exceptions import ParameterError
from looptree.links.link_types import ModelParams
from looptree.trees.offspring import OffspringDistribution

logger = logging.getLogger(__name__)

EPSILON_GRID_POINTS = 1000
EPSILON_MAX = 0.5
DEFAULT_TRACE_LENGTH = 10


class ConditionReport(NamedTuple):
    """
    The quantities behind both sufficient conditions for one offspring law
    and parameter pair. Fields that were not evaluated are None.

    zeta_1 is E[e^{-beta X / theta}] and long_loop_difference is the
    recursion step evaluated at 1 - epsilon. Long loops occur if
    zeta_1 <= 1 - epsilon and long_loop_difference >= epsilon, loop lengths
    decay exponentially if q_tilde < 1.
    """
    distribution: str
    theta: float
    beta: float
    epsilon: Optional[float]
    zeta_1: float
    long_loop_difference: Optional[float]
    q_tilde: float
    zeta_m: Optional[tuple] = None
    c_d: Optional[float] = None
    lambda0: Optional[int] = None
    d0: Optional[int] = None

    @property
    def laplace_ok(self) -> Optional[bool]:
        if self.epsilon is None:
            return None
        return self.zeta_1 <= 1.0 - self.epsilon

    @property
    def difference_ok(self) -> Optional[bool]:
        if self.epsilon is None:
            return None
        return self.long_loop_difference >= self.epsilon

    @property
    def part1(self) -> Optional[bool]:
        if self.epsilon is None:
            return None
        return self.laplace_ok and self.difference_ok

    @property
    def part2(self) -> bool:
        return self.q_tilde < 1.0

    def as_record(self) -> dict:
        record = self._asdict()
        if self.zeta_m is not None:
            record['zeta_m'] = list(self.zeta_m)
        record['part1_laplace'] = self.laplace_ok
        record['part1_difference'] = self.difference_ok
        record['part1'] = self.part1
        record['part2'] = self.part2
        return record

    def to_json(self) -> str:
        return json.dumps(self.as_record(), indent=2, sort_keys=True)

    @classmethod
    def without_links(cls, dist: OffspringDistribution, theta: float, epsilon: Optional[float] = None,
                      trace_length: int = DEFAULT_TRACE_LENGTH) -> ConditionReport:
        """ The report at beta = 0, where no edge carries a link and every loop is a single vertex """
        if epsilon is None:
            return cls(dist.descriptor, theta, 0.0, None, 1.0, None, 0.0)
        return cls(dist.descriptor, theta, 0.0, epsilon, 1.0, 0.0, 0.0, zeta_m=(1.0,) * trace_length)


def check_theorem2(dist: OffspringDistribution, params: ModelParams, epsilon: Optional[float] = None,
                   trace_length: int = DEFAULT_TRACE_LENGTH) -> ConditionReport:
    """
    Evaluates both conditions. Without epsilon only the decay condition is
    decided.

    :param dist: Offspring law
    :param params: Model parameters, u is not used
    :param epsilon: Margin of the long loop condition, in (0, 1)
    :param trace_length: Number of recursion iterates reported in zeta_m
    """
    zeta_1 = laplace_term(dist, params)
    q = q_tilde(dist, params)
    if epsilon is None:
        return ConditionReport(dist.descriptor, params.theta, params.beta, None, zeta_1, None, q)

    if not 0.0 < epsilon < 1.0:
        raise ParameterError(f'epsilon must lie in (0, 1), got {epsilon}')
    difference = long_loop_step(dist, params, 1.0 - epsilon)
    trace = zeta_recursion_lower(dist, params, epsilon, trace_length)
    return ConditionReport(dist.descriptor, params.theta, params.beta, epsilon, zeta_1, difference, q,
                           zeta_m=trace.zeta_upper)


def _epsilon_slack(dist: OffspringDistribution, params: ModelParams, zeta_1: float, epsilon: float) -> float:
    difference = long_loop_step(dist, params, 1.0 - epsilon)
    return min(1.0 - epsilon - zeta_1, difference - epsilon)


def find_epsilon(dist: OffspringDistribution, params: ModelParams) -> Optional[float]:
    """
    Searches (0, 1/2] for an epsilon that satisfies both long loop
    conditions and returns the one with the largest slack, or None.
    """
    zeta_1 = laplace_term(dist, params)
    grid = np.arange(1, EPSILON_GRID_POINTS + 1) * (EPSILON_MAX / EPSILON_GRID_POINTS)
    slack = np.array([_epsilon_slack(dist, params, zeta_1, float(epsilon)) for epsilon in grid])

    best = int(np.argmax(slack))
    epsilon = float(grid[best])
    if slack[best] < 0.0:
        step = EPSILON_MAX / EPSILON_GRID_POINTS
        low = max(epsilon - step, step / 10.0)
        high = min(epsilon + step, EPSILON_MAX)
        result = minimize_scalar(lambda e: -_epsilon_slack(dist, params, zeta_1, e),
                                 bounds=(low, high), method='bounded')
        if -result.fun < 0.0:
            logger.debug('No epsilon for %s at beta=%s, best slack %s', dist.descriptor, params.beta, -result.fun)
            return None
        epsilon = float(result.x)

    if not check_theorem2(dist, params, epsilon, trace_length=1).part1:
        logger.warning('Epsilon %s did not verify for %s at beta=%s', epsilon, dist.descriptor, params.beta)
        return None
    return epsilon


def poisson_regime_epsilon(a: float, theta: float) -> float:
    """
    The epsilon in (0, 1/2] that maximises 1 - e^{-a epsilon / theta} - epsilon,
    the margin of the long loop conditions for Poisson offspring with
    beta = a / mu as mu grows.
    """
    if a <= theta:
        raise ParameterError(f'a must exceed theta, got a={a}, theta={theta}')
    epsilon = min(EPSILON_MAX, (theta / a) * math.log(a / theta))
    return epsilon


def poisson_regime_beta(a: float, mu: float) -> float:
    if mu <= 0.0:
        raise ParameterError(f'mu must be positive, got {mu}')
    return a / mu
