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
Exceptions raised by the looptree library. Library code raises, the command
line front end maps them to exit codes.
"""

__all__ = ['LoopTreeError', 'ParameterError', 'TreeSizeError', 'TreeFormatError', 'LinkError',
           'EdgeMismatchError', 'ConvergenceError', 'SearchError', 'PartitionOverflowError',
           'ChainConsistencyError', 'ConfigurationError']


class LoopTreeError(Exception):
    """ Base class of all errors raised by looptree """
    pass


class ParameterError(LoopTreeError, ValueError):
    """ A model parameter, distribution or argument is out of range """
    pass


class TreeSizeError(LoopTreeError):
    """ A tree would exceed the vertex budget """
    pass


class TreeFormatError(LoopTreeError):
    """ Tree text could not be parsed into a valid breadth-first tree """
    pass


class LinkError(LoopTreeError):
    """ Invalid link operation or link text """
    pass


class EdgeMismatchError(LoopTreeError):
    """ A link configuration does not belong to the tree it is used with """
    pass


class ConvergenceError(LoopTreeError):
    """ A truncated series or numerical search did not converge """
    pass


class SearchError(LoopTreeError):
    """ An integer search hit its cap or a root search had no bracket """
    pass


class PartitionOverflowError(LoopTreeError, OverflowError):
    """ The partition function is not representable as a float """
    pass


class ChainConsistencyError(LoopTreeError):
    """ The cached loop count of a Markov chain disagrees with a recomputation """
    pass


class ConfigurationError(LoopTreeError):
    """
    Experiment configuration failed validation. `problems` holds one
    'field: message' string per offending field.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__('; '.join(self.problems))
