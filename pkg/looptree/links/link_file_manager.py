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
Text form of link configurations: one line 'edge_id time kind' per link,
kind 'X' for a cross and 'B' for a bar. Times are written with repr() and
read back bit-exact.
"""
from __future__ import annotations

from looptree.exceptions import LinkError
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind


class LinkConfigFileManager:

    @staticmethod
    def to_lines(config: LinkConfig) -> list[str]:
        return [f'{edge} {link.time!r} {link.kind.value}' for edge, links in config.items() for link in links]

    @staticmethod
    def from_lines(lines, edge_count: int, beta: float) -> LinkConfig:
        links_by_edge = {}
        for line_number, line in enumerate(lines):
            line = line.strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 3:
                raise LinkError(f'Line {line_number + 1}: expected "edge_id time kind"')
            try:
                edge = int(fields[0])
                time = float(fields[1])
                kind = LinkKind(fields[2])
            except ValueError as e:
                raise LinkError(f'Line {line_number + 1}: {e}') from e
            links_by_edge.setdefault(edge, []).append(Link(time, kind))

        return LinkConfig(edge_count, beta, links_by_edge)

    @staticmethod
    def write(file_name: str, config: LinkConfig) -> None:
        file = open(file_name, 'w')
        with file:
            for line in LinkConfigFileManager.to_lines(config):
                file.write(line + '\n')

    @staticmethod
    def read(file_name: str, edge_count: int, beta: float) -> LinkConfig:
        file = open(file_name, 'r')
        with file:
            return LinkConfigFileManager.from_lines(file.readlines(), edge_count, beta)
