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
Offspring laws of Galton-Watson trees and expectations of functionals of
the offspring count.
"""
from __future__ import annotations

import logging
import math
from typing import Callable
from typing import Iterator
from typing import Optional

import numpy as np
import numpy.typing as npt
from scipy import stats

from looptree.exceptions import ConvergenceError
from looptree.exceptions import ParameterError

logger = logging.getLogger(__name__)

DEFAULT_TAIL_TOLERANCE = 1e-12

_MAX_SERIES_TERMS = 10**6
# A series of an infinite support law stops once the remaining mass is below
# the tail tolerance and terms no longer move the sum
_TERM_RELATIVE_TOLERANCE = 1e-18


class PowerFunctional:
    """ k -> s**k, recognised by moment_functional() as a generating function """

    def __init__(self, s: float) -> None:
        self.s = s

    def __call__(self, k):
        return self.s ** k


class DerivativePowerFunctional:
    """ k -> k * s**(k - 1), recognised by moment_functional() """

    def __init__(self, s: float) -> None:
        self.s = s

    def __call__(self, k):
        if k == 0:
            return 0.0
        return k * self.s ** (k - 1)


class OffspringDistribution:
    """
    Base class of offspring laws on the non negative integers
    """

    finite_support = True

    @property
    def mean(self) -> float:
        raise NotImplementedError

    @property
    def is_degenerate(self) -> bool:
        return False

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    def pmf(self, k: int) -> float:
        raise NotImplementedError

    def terms(self) -> Iterator[tuple[int, float]]:
        """
        (k, P[X = k]) for k in the support in increasing order. Infinite
        supports yield forever, the caller decides when to stop.
        """
        raise NotImplementedError

    def sample(self, rng: np.random.Generator, size: int) -> npt.NDArray:
        raise NotImplementedError

    def pgf(self, s: float) -> Optional[float]:
        """ E[s^X] in closed form, or None when there is none """
        return None

    def pgf_derivative(self, s: float) -> Optional[float]:
        """ E[X s^(X-1)] in closed form, or None when there is none """
        return None

    def probability(self, predicate: Callable[[int], bool],
                    tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> float:
        """ P[predicate(X)] """
        value = moment_functional(self, lambda k: 1.0 if predicate(k) else 0.0, tail_tolerance)
        # Summed terms can overshoot 1 by rounding
        return min(1.0, max(0.0, value))

    @staticmethod
    def from_descriptor(text: str) -> OffspringDistribution:
        """
        Parse 'deterministic:<d>', 'poisson:<mu>',
        'empirical:<k>=<p>,<k>=<p>,...' or 'scaled:<lambda>:<base descriptor>'.
        """
        kind, _, rest = text.strip().partition(':')
        try:
            if kind == 'deterministic':
                return DeterministicOffspring(int(rest))
            if kind == 'poisson':
                return PoissonOffspring(float(rest))
            if kind == 'empirical':
                pmf = {}
                for item in rest.split(','):
                    k, _, p = item.partition('=')
                    pmf[int(k)] = float(p)
                return EmpiricalOffspring(pmf)
            if kind == 'scaled':
                factor, _, base = rest.partition(':')
                return ScaledOffspring(int(factor), OffspringDistribution.from_descriptor(base))
        except ValueError as e:
            raise ParameterError(f'Can not parse offspring distribution "{text}": {e}') from e

        raise ParameterError(f'Unknown offspring distribution "{text}"')

    def __repr__(self):
        return f'{self.__class__.__name__}({self.descriptor})'


class DeterministicOffspring(OffspringDistribution):
    """ Every vertex has exactly d children, giving the d-ary tree """

    def __init__(self, d: int) -> None:
        if int(d) != d or d < 0:
            raise ParameterError(f'Deterministic offspring needs an integer d >= 0, got {d}')
        self.d = int(d)

    @property
    def mean(self) -> float:
        return float(self.d)

    @property
    def is_degenerate(self) -> bool:
        return True

    @property
    def descriptor(self) -> str:
        return f'deterministic:{self.d}'

    def pmf(self, k: int) -> float:
        return 1.0 if k == self.d else 0.0

    def terms(self):
        yield self.d, 1.0

    def sample(self, rng, size):
        return np.full(size, self.d, dtype=np.int64)

    def pgf(self, s):
        return s ** self.d

    def pgf_derivative(self, s):
        if self.d == 0:
            return 0.0
        return self.d * s ** (self.d - 1)


class PoissonOffspring(OffspringDistribution):
    finite_support = False

    def __init__(self, mu: float) -> None:
        if not mu > 0 or not math.isfinite(mu):
            raise ParameterError(f'Poisson offspring needs a finite mean mu > 0, got {mu}')
        self.mu = float(mu)

    @property
    def mean(self):
        return self.mu

    @property
    def descriptor(self):
        return f'poisson:{self.mu!r}'

    def pmf(self, k):
        return float(stats.poisson.pmf(k, self.mu))

    def terms(self):
        log_mu = math.log(self.mu)
        k = 0
        while True:
            yield k, math.exp(k * log_mu - self.mu - math.lgamma(k + 1))
            k += 1

    def sample(self, rng, size):
        return rng.poisson(self.mu, size=size).astype(np.int64)

    def pgf(self, s):
        return math.exp(self.mu * (s - 1.0))

    def pgf_derivative(self, s):
        return self.mu * math.exp(self.mu * (s - 1.0))


class EmpiricalOffspring(OffspringDistribution):
    """ Finite table of probabilities {k: P[X = k]} """

    def __init__(self, pmf: dict, tail_tolerance: float = DEFAULT_TAIL_TOLERANCE) -> None:
        if len(pmf) == 0:
            raise ParameterError('Empirical offspring needs at least one value')
        for k, p in pmf.items():
            if int(k) != k or k < 0:
                raise ParameterError(f'Offspring counts must be integers >= 0, got {k}')
            if not p >= 0:
                raise ParameterError(f'Probabilities must be >= 0, got P[X={k}]={p}')
        total = math.fsum(pmf.values())
        if abs(total - 1.0) > tail_tolerance:
            raise ParameterError(f'Probabilities sum to {total!r}, not 1')

        self._values = np.array(sorted(int(k) for k in pmf if pmf[k] > 0), dtype=np.int64)
        self._probabilities = np.array([pmf[k] for k in self._values.tolist()], dtype=float) / total

    @property
    def mean(self):
        return float(np.dot(self._values, self._probabilities))

    @property
    def is_degenerate(self):
        return self._values.shape[0] == 1

    @property
    def descriptor(self):
        table = ','.join(f'{k}={p!r}' for k, p in zip(self._values.tolist(), self._probabilities.tolist()))
        return f'empirical:{table}'

    def pmf(self, k):
        index = np.searchsorted(self._values, k)
        if index < self._values.shape[0] and self._values[index] == k:
            return float(self._probabilities[index])
        return 0.0

    def terms(self):
        yield from zip(self._values.tolist(), self._probabilities.tolist())

    def sample(self, rng, size):
        return rng.choice(self._values, size=size, p=self._probabilities)


class ScaledOffspring(OffspringDistribution):
    """ The law of factor * Y where Y follows the base law """

    def __init__(self, factor: int, base: OffspringDistribution) -> None:
        if int(factor) != factor or factor < 1:
            raise ParameterError(f'The scale factor must be an integer >= 1, got {factor}')
        self.factor = int(factor)
        self.base = base
        self.finite_support = base.finite_support

    @property
    def mean(self):
        return self.factor * self.base.mean

    @property
    def is_degenerate(self):
        return self.base.is_degenerate

    @property
    def descriptor(self):
        return f'scaled:{self.factor}:{self.base.descriptor}'

    def pmf(self, k):
        if k % self.factor != 0:
            return 0.0
        return self.base.pmf(k // self.factor)

    def terms(self):
        for k, p in self.base.terms():
            yield self.factor * k, p

    def sample(self, rng, size):
        return self.factor * self.base.sample(rng, size)

    def pgf(self, s):
        return self.base.pgf(s ** self.factor)

    def pgf_derivative(self, s):
        inner = self.base.pgf_derivative(s ** self.factor)
        if inner is None:
            return None
        return self.factor * s ** (self.factor - 1) * inner


def moment_functional(dist: OffspringDistribution, f: Callable[[int], float],
                      tail_tolerance: float = DEFAULT_TAIL_TOLERANCE, force_series: bool = False) -> float:
    """
    E[f(X)] for X drawn from `dist`.

    Generating functions (PowerFunctional, DerivativePowerFunctional) use the
    closed form of the law when it has one. Otherwise finite supports are
    summed exactly and infinite supports are summed until the remaining
    probability mass is below `tail_tolerance` and the terms have stopped
    contributing.

    :param dist: The offspring law
    :param f: Function of the offspring count
    :param tail_tolerance: Largest neglected probability mass
    :param force_series: Always sum the series, used to cross check closed forms
    :return: The expectation
    """
    if not force_series:
        closed_form = None
        if isinstance(f, PowerFunctional):
            closed_form = dist.pgf(f.s)
        elif isinstance(f, DerivativePowerFunctional):
            closed_form = dist.pgf_derivative(f.s)
        if closed_form is not None:
            return closed_form

    if dist.finite_support:
        return math.fsum(p * f(k) for k, p in dist.terms())

    terms = []
    mass = []
    running_total = 0.0
    for index, (k, p) in enumerate(dist.terms()):
        term = p * f(k)
        terms.append(term)
        mass.append(p)
        running_total += term

        if k >= dist.mean and abs(term) <= _TERM_RELATIVE_TOLERANCE * abs(running_total):
            if 1.0 - math.fsum(mass) <= tail_tolerance:
                return math.fsum(terms)

        if index >= _MAX_SERIES_TERMS:
            raise ConvergenceError(f'The series for {dist!r} did not converge within {_MAX_SERIES_TERMS} terms')
