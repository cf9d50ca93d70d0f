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
Parameter searches: the beta where q_tilde crosses 1, and the integer
thresholds beyond which the sufficient conditions are guaranteed.
"""
from __future__ import annotations

import logging
import math
from typing import NamedTuple
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from looptree.bounds.analytic import c_d
from looptree.bounds.analytic import q_tilde
from looptree.bounds.conditions import check_theorem2
from looptree.exceptions import ConvergenceError
from looptree.exceptions import ParameterError
from looptree.exceptions import SearchError
from looptree.links.link_types import ModelParams
from looptree.trees.offspring import DeterministicOffspring
from looptree.trees.offspring import moment_functional
from looptree.trees.offspring import OffspringDistribution
from looptree.trees.offspring import PowerFunctional
from looptree.trees.offspring import ScaledOffspring

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 10**6
ROOT_TOLERANCE = 1e-9
# Thresholds must hold on [d, GUARD_FACTOR * d]
GUARD_FACTOR = 4
VERIFY_POINTS = 5

_BRACKET_START = 1e-3
_MIN_BETA = 1e-300
# e^{beta theta} overflows beyond this
_MAX_BETA_THETA = 700.0
_MONOTONE_POINTS = 64
# epsilon is taken this fraction below its upper limit so that the
# verification does not hinge on the last bit
_EPSILON_MARGIN = 1e-6


class Lambda0Result(NamedTuple):
    lambda0: int
    epsilon: float
    p_bx: float
    betas: tuple


class C1GridResult(NamedTuple):
    """ c1 * P(B_X) for every c1 of the grid and the maximising c1 """
    c1_values: tuple
    probabilities: tuple
    products: tuple
    best_c1: float
    best_product: float


def _q_excess(dist: OffspringDistribution, theta: float, beta: float) -> float:
    try:
        return q_tilde(dist, ModelParams(theta, beta)) - 1.0
    except OverflowError:
        return math.inf


def _bracket(dist: OffspringDistribution, theta: float) -> tuple[float, float]:
    beta = _BRACKET_START
    while _q_excess(dist, theta, beta) > 0.0:
        beta /= 2.0
        if beta < _MIN_BETA:
            raise SearchError(f'q_tilde exceeds 1 at every beta for {dist.descriptor}')

    low = beta
    high = 2.0 * beta
    while _q_excess(dist, theta, high) <= 0.0:
        low = high
        high *= 2.0
        if high * theta > _MAX_BETA_THETA:
            raise SearchError(f'No sign change of q_tilde - 1 below beta={high} for {dist.descriptor}')
    return low, high


def critical_beta_subcritical(dist: OffspringDistribution, theta: float) -> float:
    """
    The beta at which q_tilde reaches 1. Below it, loops through the root
    decay exponentially in length.

    :raises SearchError: q_tilde does not cross 1 or is not increasing on the bracket
    """
    low, high = _bracket(dist, theta)

    grid = np.linspace(low, high, _MONOTONE_POINTS)
    values = np.array([_q_excess(dist, theta, float(beta)) for beta in grid])
    values = np.minimum(values, np.finfo(float).max)
    if np.any(np.diff(values) < 0.0):
        raise SearchError(f'q_tilde is not increasing on [{low}, {high}] for {dist.descriptor}')

    if _q_excess(dist, theta, low) == 0.0:
        return low
    beta = brentq(lambda b: _q_excess(dist, theta, b), low, high, xtol=1e-15, rtol=4 * np.finfo(float).eps,
                  maxiter=500)
    excess = _q_excess(dist, theta, beta)
    if abs(excess) > ROOT_TOLERANCE:
        raise ConvergenceError(f'q_tilde - 1 = {excess} at beta={beta} for {dist.descriptor}')
    logger.info('Critical beta of %s at theta=%s: %s', dist.descriptor, theta, beta)
    return float(beta)


def _least_guarded(ok: np.ndarray) -> int | None:
    """ Least index i with ok[i:GUARD_FACTOR * (i + 1)] all true, counting from 1 """
    failures = np.concatenate(([0], np.cumsum(~ok)))
    index = np.arange(1, len(ok) // GUARD_FACTOR + 1)
    window_failures = failures[GUARD_FACTOR * index] - failures[index - 1]
    candidates = np.flatnonzero(window_failures == 0)
    if len(candidates) == 0:
        return None
    return int(index[candidates[0]])


def bx_probability(dist: OffspringDistribution, c1: float, c2: float) -> float:
    """ P(c1 <= X / E[X] <= c2) """
    if not 0.0 < c1 <= c2:
        raise ParameterError(f'Expected 0 < c1 <= c2, got c1={c1}, c2={c2}')
    mean = dist.mean
    if mean <= 0.0:
        raise ParameterError(f'{dist.descriptor} has mean 0')
    return dist.probability(lambda k: c1 * mean <= k <= c2 * mean)


def corollary3_lambda0(base_dist: OffspringDistribution, a: float, b: float, c1: float, c2: float, theta: float,
                       cap: int = DEFAULT_SEARCH_CAP) -> Lambda0Result:
    """
    The least integer scale lambda0 such that the offspring law lambda0 * X
    has long loops for every beta in [a, b] / (E[lambda0 X] c1 P(B_X)),
    where B_X is the event c1 <= X / E[X] <= c2.

    The returned scale is verified with check_theorem2 at VERIFY_POINTS
    values of beta across the window.
    """
    if a <= theta:
        raise ParameterError(f'a must exceed theta, got a={a}, theta={theta}')
    if b < a:
        raise ParameterError(f'b must be at least a, got a={a}, b={b}')
    p_bx = bx_probability(base_dist, c1, c2)
    if p_bx <= 0.0:
        raise ParameterError(f'P(B_X) is 0 for c1={c1}, c2={c2} and {base_dist.descriptor}')
    mean = base_dist.mean

    # The margin of the first condition and the maximiser of the gap of the second
    decay = math.exp(-a / (theta * c1 * p_bx * mean))
    epsilon_first = 1.0 - moment_functional(base_dist, PowerFunctional(decay))
    gap_argmax = (theta / a) * math.log(a / theta)
    epsilon = min(epsilon_first, p_bx * gap_argmax) * (1.0 - _EPSILON_MARGIN)
    relative = epsilon / p_bx
    threshold = relative + math.exp(-(a / theta) * relative)
    if epsilon <= 0.0 or threshold >= 1.0:
        raise SearchError(f'No valid epsilon for a={a}, theta={theta} and {base_dist.descriptor}')

    scale = np.arange(1, cap + 1, dtype=float)
    mean_degree = scale * mean
    z = b * theta / (c1 * p_bx * mean_degree)
    with np.errstate(over='ignore', invalid='ignore'):
        tail = np.expm1(z) - z
        lhs = np.exp(-mean_degree * c2 * np.log1p(tail / theta ** 2))
    lambda0 = _least_guarded(np.nan_to_num(lhs, nan=0.0) >= threshold)
    if lambda0 is None:
        raise SearchError(f'No lambda0 up to {cap} for a={a}, b={b}, c1={c1}, c2={c2}, theta={theta}')

    scaled = ScaledOffspring(lambda0, base_dist)
    betas = tuple(float(beta) for beta in np.linspace(a, b, VERIFY_POINTS) / (scaled.mean * c1 * p_bx))
    for beta in betas:
        report = check_theorem2(scaled, ModelParams(theta, beta), epsilon, trace_length=1)
        if not report.part1:
            raise SearchError(f'lambda0={lambda0} fails the long loop conditions at beta={beta} '
                              f'(zeta_1={report.zeta_1}, difference={report.long_loop_difference})')

    logger.info('lambda0=%d, epsilon=%s for %s', lambda0, epsilon, base_dist.descriptor)
    return Lambda0Result(lambda0, epsilon, p_bx, betas)


def corollary3_d0(q: float, theta: float, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """
    The least d such that c_d < 1 for all of d..4d. For such d the d-ary tree
    has q_tilde < 1 at every beta <= q / d.
    """
    if not 0.0 < q < theta:
        raise ParameterError(f'Expected 0 < q < theta, got q={q}, theta={theta}')

    d = np.arange(1, cap + 1, dtype=float)
    x = q * theta / d
    weight = d / theta ** 2
    with np.errstate(over='ignore', invalid='ignore'):
        grow = np.expm1(x)
        values = weight * grow * np.exp(weight * (grow - x))
    d0 = _least_guarded(np.nan_to_num(values, nan=np.inf) < 1.0)
    if d0 is None:
        raise SearchError(f'No d0 up to {cap} for q={q}, theta={theta}')

    bound = c_d(q, theta, d0)
    q_value = q_tilde(DeterministicOffspring(d0), ModelParams(theta, q / d0))
    if q_value > bound:
        raise SearchError(f'q_tilde={q_value} exceeds c_d={bound} at d0={d0}')
    logger.info('d0=%d for q=%s, theta=%s (c_d=%s)', d0, q, theta, bound)
    return d0


def c1_grid(base_dist: OffspringDistribution, c2: float, c1_values: Sequence[float]) -> C1GridResult:
    if len(c1_values) == 0:
        raise ParameterError('The c1 grid is empty')
    probabilities = tuple(bx_probability(base_dist, c1, c2) for c1 in c1_values)
    products = tuple(c1 * p for c1, p in zip(c1_values, probabilities))
    best = int(np.argmax(products))
    return C1GridResult(tuple(c1_values), probabilities, products, c1_values[best], products[best])
