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
Analytic bounds and sufficient conditions for long loops, evaluated for a
given offspring law.
"""
from .analytic import a_cap_b_upper
from .analytic import c_d
from .analytic import partition_bounds
from .analytic import prob_a_bounds
from .analytic import q_tilde
from .analytic import RecursionTrace
from .analytic import zeta_recursion_lower
from .conditions import check_theorem2
from .conditions import ConditionReport
from .conditions import find_epsilon
from .conditions import poisson_regime_beta
from .conditions import poisson_regime_epsilon
from .searches import c1_grid
from .searches import corollary3_d0
from .searches import corollary3_lambda0
from .searches import critical_beta_subcritical

__all__ = ['a_cap_b_upper', 'c_d', 'partition_bounds', 'prob_a_bounds', 'q_tilde', 'RecursionTrace',
           'zeta_recursion_lower', 'check_theorem2', 'ConditionReport', 'find_epsilon', 'poisson_regime_beta',
           'poisson_regime_epsilon', 'c1_grid', 'corollary3_d0', 'corollary3_lambda0', 'critical_beta_subcritical']
