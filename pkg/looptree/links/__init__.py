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
Link configurations on the edges of a tree: parameters, sampling, text form
and the root edge events.
"""
from .link_file_manager import LinkConfigFileManager
from .link_sampler import sample_links
from .link_types import Link
from .link_types import LinkConfig
from .link_types import LinkKind
from .link_types import ModelParams
from .root_edges import all_at_most_one
from .root_edges import all_empty
from .root_edges import at_least_one_on
from .root_edges import exactly_one_on
from .root_edges import root_edge_profile

__all__ = ['LinkConfigFileManager', 'sample_links', 'Link', 'LinkConfig', 'LinkKind', 'ModelParams',
           'all_at_most_one', 'all_empty', 'at_least_one_on', 'exactly_one_on', 'root_edge_profile']
