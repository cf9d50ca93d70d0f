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
Link counts on the edges between the root and its children, and the
events defined by their pattern. Subsets J are given as positions in the
profile, that is 0-based indices among the root's children.
"""
from __future__ import annotations

from typing import Iterable

from looptree.links.link_types import LinkConfig


def root_edge_profile(tree, config: LinkConfig) -> list[int]:
    """ Number of links on the edge to each root child, in child order """
    config.check_tree(tree)
    return [config.link_count(tree.edge_id(child)) for child in tree.root_children]


def all_at_most_one(profile: list[int]) -> bool:
    """ Event A: no root edge carries more than one link """
    return all(count <= 1 for count in profile)


def all_empty(profile: list[int]) -> bool:
    """ Event A_empty: no root edge carries a link """
    return all(count == 0 for count in profile)


def exactly_one_on(profile: list[int], subset: Iterable[int]) -> bool:
    """ Event A_J: one link on each edge in J, none elsewhere """
    subset = set(subset)
    return all(count == (1 if j in subset else 0) for j, count in enumerate(profile))


def at_least_one_on(profile: list[int], subset: Iterable[int]) -> bool:
    """ Event with at least one link on each edge in J, none elsewhere """
    subset = set(subset)
    return all((count >= 1) if j in subset else (count == 0) for j, count in enumerate(profile))
