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
Estimators of probabilities under the theta weighted measure and the
quenched measure on Galton-Watson trees.
"""
from . import events
from .importance_sampler import estimate_partition_function
from .importance_sampler import estimate_weighted_prob
from .importance_sampler import estimate_weighted_probs
from .importance_sampler import PartitionEstimate
from .mcmc_sampler import ChainRun
from .mcmc_sampler import mcmc_sampler
from .mcmc_sampler import mcmc_sampler_paired
from .mcmc_sampler import McmcState
from .mcmc_sampler import run_chain
from .quenched import ChainSchedule
from .quenched import estimate_quenched
from .quenched import estimate_quenched_paired
from .ratio_estimate import RatioEstimate
from .workers import derive
from .workers import WorkerPool

__all__ = ['events', 'estimate_partition_function', 'estimate_weighted_prob', 'estimate_weighted_probs',
           'PartitionEstimate', 'ChainRun', 'mcmc_sampler', 'mcmc_sampler_paired', 'McmcState', 'run_chain',
           'ChainSchedule', 'estimate_quenched', 'estimate_quenched_paired', 'RatioEstimate', 'derive',
           'WorkerPool']
