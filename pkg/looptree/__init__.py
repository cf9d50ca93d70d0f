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
Simulation and analytic bound checking for theta-weighted random loop models
on d-ary and Galton-Watson trees.

Every edge of a finite rooted tree carries a Poisson process of links on the
circle [0, beta). A link is a cross with probability u and a bar otherwise.
Following vertex time-lines and jumping along links yields a set of closed
loops; the configuration is weighted by theta to the number of loops.

The library answers two kinds of questions about the root's loops:
how likely they are to reach generation m (simulation), and whether the
analytic criteria for long/short loops hold (bounds).

Example of estimating the probability that a root loop reaches generation 2
on the binary tree of height 3:
```python
from looptree.links import ModelParams
from looptree.measure import estimate_weighted_prob, events
from looptree.trees import regular_tree

tree = regular_tree(2, 3)
params = ModelParams(theta=2.0, beta=0.5, u=0.5)
estimate = estimate_weighted_prob(events.reach(2), tree, params, 10000, seed_sequence=1)
print(estimate.value, estimate.std_error)
```

Example of checking the subcritical criterion on a Poisson tree:
```python
from looptree.bounds import check_theorem2
from looptree.trees import PoissonOffspring

report = check_theorem2(PoissonOffspring(3.0), params)
print(report.to_json())
```
"""
