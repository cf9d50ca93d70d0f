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
Model parameters and link configurations.

A link is a point on the time circle [0, beta) of one edge. Crosses and
bars differ in how the two vertex time-lines are reconnected at the link.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable
from typing import Iterator
from typing import Mapping
from typing import NamedTuple

from looptree.exceptions import EdgeMismatchError
from looptree.exceptions import LinkError
from looptree.exceptions import ParameterError


@dataclass(frozen=True)
class ModelParams:
    """
    theta: weight per loop, >= 1
    beta: length of the time circle (inverse temperature), > 0
    u: probability that a link is a cross, in [0, 1]
    """
    theta: float
    beta: float
    u: float = 0.5

    def __post_init__(self):
        if not (math.isfinite(self.theta) and self.theta >= 1.0):
            raise ParameterError(f'theta must be finite and >= 1, got {self.theta}')
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ParameterError(f'beta must be finite and > 0, got {self.beta}')
        if not (0.0 <= self.u <= 1.0):
            raise ParameterError(f'u must be in [0, 1], got {self.u}')

    def with_beta(self, beta: float) -> ModelParams:
        return ModelParams(self.theta, beta, self.u)


class LinkKind(Enum):
    CROSS = 'X'
    BAR = 'B'


class Link(NamedTuple):
    time: float
    kind: LinkKind


class LinkConfig:
    """
    Immutable set of links on the edges of a tree, stored sparsely: only
    edges carrying links are kept, each as a time ordered tuple of links.
    Modifying operations return a new configuration.
    """

    def __init__(self, edge_count: int, beta: float, links_by_edge: Mapping[int, Iterable[Link]] = None) -> None:
        self._edge_count = int(edge_count)
        self._beta = float(beta)
        self._links = {}

        if links_by_edge is not None:
            for edge, links in links_by_edge.items():
                links = tuple(sorted(links, key=lambda link: link.time))
                if len(links) == 0:
                    continue
                self._check_edge(edge)
                for link in links:
                    self._check_time(link.time)
                for previous, link in zip(links, links[1:]):
                    if previous.time == link.time:
                        raise LinkError(f'Two links at time {link.time!r} on edge {edge}')
                self._links[int(edge)] = links

        self._total = sum(len(links) for links in self._links.values())

    @classmethod
    def empty(cls, edge_count: int, beta: float) -> LinkConfig:
        return cls(edge_count, beta)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def beta(self) -> float:
        return self._beta

    @property
    def total_link_count(self) -> int:
        return self._total

    @property
    def occupied_edges(self) -> list[int]:
        return sorted(self._links)

    def links(self, edge: int) -> tuple[Link, ...]:
        return self._links.get(edge, ())

    def link_count(self, edge: int) -> int:
        return len(self._links.get(edge, ()))

    def items(self) -> Iterator[tuple[int, tuple[Link, ...]]]:
        """ (edge, links) for every occupied edge in increasing edge order """
        for edge in self.occupied_edges:
            yield edge, self._links[edge]

    def insert_link(self, edge: int, link: Link) -> LinkConfig:
        """
        A copy of this configuration with one more link.

        :param edge: Edge receiving the link
        :param link: The link, its time must be in [0, beta) and not already used on the edge
        :return: The new configuration
        """
        self._check_edge(edge)
        self._check_time(link.time)
        links = list(self._links.get(edge, ()))
        position = bisect.bisect_left([existing.time for existing in links], link.time)
        if position < len(links) and links[position].time == link.time:
            raise LinkError(f'Edge {edge} already has a link at time {link.time!r}')
        links.insert(position, link)
        return self._replaced(edge, links)

    def remove_link(self, edge: int, index: int) -> LinkConfig:
        """
        A copy of this configuration without the index:th link (in time order) of an edge.
        """
        self._check_edge(edge)
        links = list(self._links.get(edge, ()))
        if not 0 <= index < len(links):
            raise LinkError(f'Edge {edge} has {len(links)} links, can not remove link {index}')
        del links[index]
        return self._replaced(edge, links)

    def without_edges(self, edges: Iterable[int]) -> LinkConfig:
        dropped = set(edges)
        return LinkConfig(self._edge_count, self._beta,
                          {e: links for e, links in self._links.items() if e not in dropped})

    def restricted_to(self, edges: Iterable[int]) -> LinkConfig:
        kept = set(edges)
        return LinkConfig(self._edge_count, self._beta,
                          {e: links for e, links in self._links.items() if e in kept})

    def check_tree(self, tree) -> None:
        if tree.edge_count != self._edge_count:
            raise EdgeMismatchError(f'Configuration has {self._edge_count} edges, the tree has {tree.edge_count}')

    def _replaced(self, edge, links):
        result = LinkConfig.__new__(LinkConfig)
        result._edge_count = self._edge_count
        result._beta = self._beta
        result._links = dict(self._links)
        if links:
            result._links[edge] = tuple(links)
        else:
            result._links.pop(edge, None)
        result._total = self._total - len(self._links.get(edge, ())) + len(links)
        return result

    def _check_edge(self, edge):
        if not 0 <= edge < self._edge_count:
            raise EdgeMismatchError(f'Edge {edge} is not in a tree with {self._edge_count} edges')

    def _check_time(self, time):
        if not 0.0 <= time < self._beta:
            raise LinkError(f'Link time {time!r} is outside [0, {self._beta!r})')

    def __eq__(self, other):
        if not isinstance(other, LinkConfig):
            return NotImplemented
        return (self._edge_count == other._edge_count and self._beta == other._beta and
                self._links == other._links)

    __hash__ = None

    def __repr__(self):
        return f'LinkConfig(edges={self._edge_count}, links={self._total})'
