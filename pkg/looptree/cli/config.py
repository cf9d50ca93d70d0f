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
Experiment configuration: the fields of a run, read from a JSON (or YAML)
file and overridden field by field from the command line.
"""
from __future__ import annotations

import dataclasses
import json
import logging
import numbers
from dataclasses import dataclass
from typing import Mapping
from typing import Optional

import yaml

from looptree.exceptions import ConfigurationError
from looptree.exceptions import ParameterError
from looptree.links.link_types import ModelParams
from looptree.measure.mcmc_sampler import DEFAULT_CHECK_INTERVAL
from looptree.measure.quenched import ChainSchedule
from looptree.measure.ratio_estimate import DEFAULT_BOOTSTRAP_RESAMPLES
from looptree.measure.ratio_estimate import METHOD_IMPORTANCE
from looptree.measure.ratio_estimate import METHOD_MCMC
from looptree.trees.offspring import DeterministicOffspring
from looptree.trees.offspring import OffspringDistribution
from looptree.trees.offspring import PoissonOffspring

logger = logging.getLogger(__name__)

TREE_REGULAR = 'regular'
TREE_GW = 'gw'

COMMAND_SIMULATE = 'simulate'
COMMAND_SCAN_BETA = 'scan-beta'
COMMAND_CHECK = 'check'
COMMAND_MCMC = 'mcmc'

_SEED_LIMIT = 2**64


def _is_int(value) -> bool:
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def _is_real(value) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One experiment. `beta_grid` takes precedence over `beta` and `m_values`
    over `m`; without either m every generation 0..n is evaluated.
    """
    seed: Optional[int] = None
    tree: str = TREE_REGULAR
    d: Optional[int] = None
    distribution: Optional[str] = None
    mu: Optional[float] = None
    n: int = 3
    theta: float = 1.0
    beta: Optional[float] = None
    beta_grid: Optional[tuple] = None
    u: float = 0.5
    m: Optional[int] = None
    m_values: Optional[tuple] = None
    method: str = METHOD_IMPORTANCE
    samples: int = 10000
    n_trees: int = 100
    steps: int = 100000
    burn_in: int = 10000
    thin: int = 10
    epsilon: Optional[float] = None
    bootstrap: int = DEFAULT_BOOTSTRAP_RESAMPLES
    workers: int = 1
    out: Optional[str] = None

    @staticmethod
    def field_names() -> tuple:
        return tuple(field.name for field in dataclasses.fields(ExperimentConfig))

    @classmethod
    def from_mapping(cls, data: Mapping) -> ExperimentConfig:
        names = cls.field_names()
        unknown = sorted(str(key) for key in data if key not in names)
        if unknown:
            raise ConfigurationError([f'{key}: unknown field' for key in unknown])
        values = dict(data)
        for key in ('beta_grid', 'm_values'):
            if isinstance(values.get(key), list):
                values[key] = tuple(values[key])
        return cls(**values)

    def as_mapping(self) -> dict:
        data = {}
        for name in self.field_names():
            value = getattr(self, name)
            if value is not None:
                data[name] = list(value) if isinstance(value, tuple) else value
        return data

    def with_overrides(self, overrides: Mapping) -> ExperimentConfig:
        """ A copy with every non None entry of `overrides` replacing the field """
        changes = {}
        for name, value in overrides.items():
            if value is None:
                continue
            if name not in self.field_names():
                raise ConfigurationError([f'{name}: unknown field'])
            current = getattr(self, name)
            if current is not None and current != value and current != getattr(_DEFAULTS, name):
                logger.warning('Command line replaces %s=%r from the configuration file with %r',
                               name, current, value)
            changes[name] = tuple(value) if isinstance(value, list) else value
        return dataclasses.replace(self, **changes)

    def validate(self, command: str = COMMAND_SIMULATE) -> ExperimentConfig:
        """
        Check every field and raise one ConfigurationError naming all the
        problems found.
        """
        problems = []

        if self.seed is None:
            problems.append('seed: missing, a seed is required')
        elif not _is_int(self.seed) or not 0 <= self.seed < _SEED_LIMIT:
            problems.append(f'seed: must be an integer in [0, 2^64), got {self.seed!r}')

        if self.tree == TREE_REGULAR:
            if not _is_int(self.d) or self.d < 1:
                problems.append(f'd: a regular tree needs an integer degree >= 1, got {self.d!r}')
        elif self.tree == TREE_GW:
            if self.distribution is None and self.mu is None:
                problems.append('distribution: a gw tree needs a distribution or mu')
            elif self.distribution is not None:
                try:
                    OffspringDistribution.from_descriptor(self.distribution)
                except ParameterError as e:
                    problems.append(f'distribution: {e}')
            elif not _is_real(self.mu) or self.mu <= 0:
                problems.append(f'mu: must be a positive number, got {self.mu!r}')
        else:
            problems.append(f'tree: must be "{TREE_REGULAR}" or "{TREE_GW}", got {self.tree!r}')

        if not _is_int(self.n) or self.n < 0:
            problems.append(f'n: must be an integer >= 0, got {self.n!r}')
        if not _is_real(self.theta) or self.theta < 1:
            problems.append(f'theta: must be a number >= 1, got {self.theta!r}')
        if not _is_real(self.u) or not 0 <= self.u <= 1:
            problems.append(f'u: must be a number in [0, 1], got {self.u!r}')

        problems.extend(self._beta_problems(command))
        if command != COMMAND_CHECK:
            problems.extend(self._m_problems())
            problems.extend(self._estimator_problems(command))

        if self.epsilon is not None and (not _is_real(self.epsilon) or not 0 < self.epsilon < 1):
            problems.append(f'epsilon: must lie in (0, 1), got {self.epsilon!r}')
        if not _is_int(self.workers) or self.workers < 1:
            problems.append(f'workers: must be an integer >= 1, got {self.workers!r}')

        if problems:
            raise ConfigurationError(problems)
        return self

    def _beta_problems(self, command):
        problems = []
        if self.beta_grid is not None:
            if len(self.beta_grid) == 0:
                problems.append('beta_grid: must not be empty')
            elif not all(_is_real(beta) and beta >= 0 for beta in self.beta_grid):
                problems.append('beta_grid: every value must be a number >= 0')
            elif list(self.beta_grid) != sorted(self.beta_grid):
                problems.append('beta_grid: must be sorted')
        elif command == COMMAND_SCAN_BETA:
            problems.append('beta_grid: missing, scan-beta needs a grid')
        if self.beta is not None and (not _is_real(self.beta) or self.beta < 0):
            problems.append(f'beta: must be a number >= 0, got {self.beta!r}')
        elif self.beta is None and self.beta_grid is None and command != COMMAND_SCAN_BETA:
            problems.append('beta: missing')
        return problems

    def _m_problems(self):
        problems = []
        if self.m_values is not None:
            if len(self.m_values) == 0:
                problems.append('m_values: must not be empty')
            elif not all(_is_int(m) and 0 <= m for m in self.m_values):
                problems.append('m_values: every value must be an integer >= 0')
            elif _is_int(self.n) and max(self.m_values) > self.n:
                problems.append(f'm_values: every value must be <= n={self.n}')
        elif self.m is not None:
            if not _is_int(self.m) or self.m < 0:
                problems.append(f'm: must be an integer >= 0, got {self.m!r}')
            elif _is_int(self.n) and self.m > self.n:
                problems.append(f'm: must be <= n={self.n}, got {self.m}')
        return problems

    def _estimator_problems(self, command):
        problems = []
        if self.method not in (METHOD_IMPORTANCE, METHOD_MCMC):
            problems.append(f'method: must be "{METHOD_IMPORTANCE}" or "{METHOD_MCMC}", got {self.method!r}')
        if not _is_int(self.samples) or self.samples < 2:
            problems.append(f'samples: must be an integer >= 2, got {self.samples!r}')
        if not _is_int(self.n_trees) or self.n_trees < 1:
            problems.append(f'n_trees: must be an integer >= 1, got {self.n_trees!r}')
        if not _is_int(self.bootstrap) or self.bootstrap < 0:
            problems.append(f'bootstrap: must be an integer >= 0, got {self.bootstrap!r}')
        if self.method == METHOD_MCMC or command == COMMAND_MCMC:
            if not _is_int(self.thin) or self.thin < 1:
                problems.append(f'thin: must be an integer >= 1, got {self.thin!r}')
            elif not _is_int(self.burn_in) or self.burn_in < 0:
                problems.append(f'burn_in: must be an integer >= 0, got {self.burn_in!r}')
            elif not _is_int(self.steps) or (self.steps - self.burn_in) // self.thin < 2:
                problems.append(f'steps: must leave at least 2 recorded states after burn_in={self.burn_in} '
                                f'with thin={self.thin}, got {self.steps!r}')
        return problems

    @property
    def betas(self) -> list[float]:
        if self.beta_grid is not None:
            return [float(beta) for beta in self.beta_grid]
        return [float(self.beta)]

    @property
    def generations(self) -> list[int]:
        if self.m_values is not None:
            return sorted(set(self.m_values))
        if self.m is not None:
            return [self.m]
        return list(range(self.n + 1))

    def offspring(self) -> OffspringDistribution:
        if self.tree == TREE_REGULAR:
            return DeterministicOffspring(self.d)
        if self.distribution is not None:
            return OffspringDistribution.from_descriptor(self.distribution)
        return PoissonOffspring(self.mu)

    def d_or_mu(self):
        """ The tree column of the csv output: d, mu or the distribution descriptor """
        if self.tree == TREE_REGULAR:
            return self.d
        if self.distribution is not None:
            return self.distribution
        return self.mu

    def model_params(self, beta: float) -> ModelParams:
        return ModelParams(float(self.theta), beta, float(self.u))

    def chain_schedule(self) -> ChainSchedule:
        return ChainSchedule(self.steps, self.burn_in, self.thin, DEFAULT_CHECK_INTERVAL)


_DEFAULTS = ExperimentConfig()


class ExperimentConfigFileManager:
    TYPE_ID = 'type'
    TYPE = 'looptree_experiment'
    VERSION_ID = 'version'
    VERSION = '1'

    @staticmethod
    def write(file_name: str, config: ExperimentConfig) -> None:
        file = open(file_name, 'w')
        with file:
            data = {
                ExperimentConfigFileManager.TYPE_ID: ExperimentConfigFileManager.TYPE,
                ExperimentConfigFileManager.VERSION_ID: ExperimentConfigFileManager.VERSION,
            }
            data.update(config.as_mapping())
            json.dump(data, file, indent=2)

    @staticmethod
    def read(file_name: str) -> ExperimentConfig:
        file = open(file_name, 'r')
        with file:
            # YAML reads 1e-3 as a string, JSON files go through the json parser
            try:
                if file_name.endswith('.json'):
                    data = json.load(file)
                else:
                    data = yaml.safe_load(file)
            except (json.JSONDecodeError, yaml.YAMLError) as e:
                raise ConfigurationError([f'{file_name}: not readable, {e}']) from e

        if not isinstance(data, dict):
            raise ConfigurationError([f'{file_name}: expected a mapping of fields'])

        data = dict(data)
        file_type = data.pop(ExperimentConfigFileManager.TYPE_ID, ExperimentConfigFileManager.TYPE)
        if file_type != ExperimentConfigFileManager.TYPE:
            raise ConfigurationError([f'type: unsupported file type {file_type!r}'])
        version = str(data.pop(ExperimentConfigFileManager.VERSION_ID, ExperimentConfigFileManager.VERSION))
        if version != ExperimentConfigFileManager.VERSION:
            raise ConfigurationError([f'version: unsupported file version {version!r}'])

        return ExperimentConfig.from_mapping(data)
