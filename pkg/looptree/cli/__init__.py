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
Command line experiments: simulations, beta scans, condition checks and a
self test.
"""
from .commands import cmd_check
from .commands import cmd_mcmc
from .commands import cmd_scan_beta
from .commands import cmd_simulate
from .config import ExperimentConfig
from .config import ExperimentConfigFileManager
from .selftest import cmd_selftest

__all__ = ['cmd_check', 'cmd_mcmc', 'cmd_scan_beta', 'cmd_simulate', 'ExperimentConfig',
           'ExperimentConfigFileManager', 'cmd_selftest']
