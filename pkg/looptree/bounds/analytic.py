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
Closed form bounds of the theta weighted loop measure on trees.

All quantities are evaluated through expm1/log1p forms where e^x - 1 would
cancel at small beta.
"""
from __future__ import annotations

import logging
import math
from typing import NamedTuple
from typing import Sequence

from looptree.exceptions import ParameterError
from looptree.links.link_types import ModelParams
from looptree.trees.offspring import DerivativePowerFunctional
from looptree.trees.offspring import moment_functional
from looptree.trees.offspring import OffspringDistribution
from looptree.trees.offspring import PowerFunctional

logger = logging.getLogger(__name__)


class RecursionTrace(NamedTuple):
    """
    Iterates of the generation recursion for m = 1..m_max. Index 0 holds m = 1.

    long_loop_lower[i] is a lower bound on the probability that a loop from
    the root reaches generation i + 1, zeta_upper[i] = 1 - long_loop_lower[i]
    and sigma_upper[i] = min(1, q_tilde^i).
    """
    long_loop_lower: tuple
    zeta_upper: tuple
    sigma_upper: tuple
    epsilon: float
    invariant_maintained: bool
    first_violation: int | None

    @property
    def m_max(self) -> int:
        return len(self.long_loop_lower)


def _check_degree(d: int) -> None:
    if int(d) != d or d < 0:
        raise ParameterError(f'The degree must be a non negative integer, got {d}')


def cross_weight(params: ModelParams) -> float:
    """ (e^{beta theta} - 1) / theta^2 """
    return math.expm1(params.beta * params.theta) / params.theta ** 2


def long_loop_ratio(params: ModelParams) -> float:
    """ (theta^2 + beta theta) / (theta^2 + e^{beta theta} - 1) """
    theta = params.theta
    return (theta * theta + params.beta * theta) / (theta * theta + math.expm1(params.beta * theta))


def partition_bounds(d: int, params: ModelParams, subtree_factors: Sequence[float]) -> tuple[float, float]:
    """
    Lower and upper bound on E[theta^L] of a tree whose root has d children,
    given the factors E[theta^{L_j}] of the d subtrees.
    """
    _check_degree(d)
    if len(subtree_factors) != d:
        raise ParameterError(f'Expected {d} subtree factors, got {len(subtree_factors)}')
    if any(factor <= 0.0 for factor in subtree_factors):
        raise ParameterError('Subtree factors must be positive')

    theta, beta = params.theta, params.beta
    log_product = math.fsum(math.log(factor) for factor in subtree_factors)
    log_lower = math.log(theta) - beta * d + beta * d / theta + log_product
    log_upper = math.log(theta) - beta * d + d * math.log1p(cross_weight(params)) + log_product
    return math.exp(log_lower), math.exp(log_upper)


def prob_a_bounds(d: int, params: ModelParams) -> tuple[float, float]:
    """
    Returns (upper bound on P(no root edge carries a link),
             lower bound on P(every root edge carries at most one link))
    """
    _check_degree(d)
    empty_upper = math.exp(-params.beta * d / params.theta)
    at_most_one_lower = long_loop_ratio(params) ** d
    return empty_upper, at_most_one_lower


def a_cap_b_upper(d: int, params: ModelParams, subtree_fail_probs: Sequence[float]) -> float:
    """
    Upper bound on the probability that every root edge carries at most one
    link and no loop through the root reaches generation m, given for each
    root child j the probability p_j that the loops of its subtree fail to
    reach generation m.
    """
    _check_degree(d)
    if len(subtree_fail_probs) != d:
        raise ParameterError(f'Expected {d} subtree probabilities, got {len(subtree_fail_probs)}')
    if any(p < 0.0 or p > 1.0 for p in subtree_fail_probs):
        raise ParameterError('Subtree probabilities must lie in [0, 1]')

    ratio = params.beta / params.theta
    log_value = -ratio * d + math.fsum(math.log1p(ratio * p) for p in subtree_fail_probs)
    return min(1.0, math.exp(log_value))


def laplace_term(dist: OffspringDistribution, params: ModelParams) -> float:
    """ E[e^{-beta X / theta}], the bound on the probability that no root edge carries a link """
    return moment_functional(dist, PowerFunctional(math.exp(-params.beta / params.theta)))


def long_loop_step(dist: OffspringDistribution, params: ModelParams, zeta_previous: float) -> float:
    """
    One step of the generation recursion: the lower bound on the long loop
    probability at level m given the upper bound zeta_previous at level m - 1.
    """
    ratio = params.beta / params.theta
    stay = math.exp(-ratio) * (1.0 + ratio * zeta_previous)
    return (moment_functional(dist, PowerFunctional(long_loop_ratio(params))) -
            moment_functional(dist, PowerFunctional(stay)))


def q_tilde(dist: OffspringDistribution, params: ModelParams) -> float:
    """
    c e^{-beta/theta} E[X s^{X-1}] with c = (e^{beta theta} - 1) / theta^2 and
    s = e^{-beta/theta}(1 + c). Loops from the root reach generation m with
    probability at most q_tilde^{m-1}.
    """
    weight = cross_weight(params)
    decay = math.exp(-params.beta / params.theta)
    if weight == 0.0:
        return 0.0
    derivative = moment_functional(dist, DerivativePowerFunctional(decay * (1.0 + weight)))
    return weight * decay * derivative


def c_d(q: float, theta: float, d: int) -> float:
    """ The bound on q_tilde of the d-ary tree at beta = q / d """
    if d < 1:
        raise ParameterError(f'd must be at least 1, got {d}')
    if q <= 0.0 or theta <= 0.0:
        raise ParameterError(f'q and theta must be positive, got q={q}, theta={theta}')
    x = q * theta / d
    scale = d / theta ** 2
    grow = math.expm1(x)
    return scale * grow * math.exp(scale * (grow - x))


def _clamp(value: float) -> float:
    return min(1.0, max(0.0, value))


def zeta_recursion_lower(dist: OffspringDistribution, params: ModelParams, epsilon: float,
                         m_max: int) -> RecursionTrace:
    """
    Iterates the bound on the probability that loops through the root do not
    reach generation m, starting from E[e^{-beta X / theta}] at m = 1, and
    records whether 1 - zeta^m >= epsilon holds for all m <= m_max.
    """
    if not 0.0 < epsilon < 1.0:
        raise ParameterError(f'epsilon must lie in (0, 1), got {epsilon}')
    if int(m_max) != m_max or m_max < 1:
        raise ParameterError(f'm_max must be an integer >= 1, got {m_max}')

    long_loop = []
    zeta = []
    lower = _clamp(1.0 - laplace_term(dist, params))
    for m in range(1, m_max + 1):
        if m > 1:
            lower = _clamp(long_loop_step(dist, params, zeta[-1]))
        long_loop.append(lower)
        zeta.append(1.0 - lower)

    q = q_tilde(dist, params)
    sigma = tuple(min(1.0, q ** i) for i in range(m_max))

    first_violation = next((m for m, lower in enumerate(long_loop, start=1) if lower < epsilon), None)
    if first_violation is not None:
        logger.debug('Long loop bound drops below %s at m=%d', epsilon, first_violation)
    return RecursionTrace(tuple(long_loop), tuple(zeta), sigma, epsilon, first_violation is None, first_violation)
