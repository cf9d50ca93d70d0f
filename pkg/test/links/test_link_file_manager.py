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
import unittest
from unittest.mock import mock_open
from unittest.mock import patch

from looptree.exceptions import LinkError
from looptree.links.link_file_manager import LinkConfigFileManager
from looptree.links.link_types import LinkKind
from test.support.loop_fixtures import LoopFixtures


class TestLinkConfigFileManager(unittest.TestCase):

    def setUp(self):
        self.config = LoopFixtures.config(3, {
            0: [(0.1, LinkKind.CROSS), (0.30000000000000004, LinkKind.BAR)],
            2: [(0.9, LinkKind.BAR)],
        })

    def test_that_lines_hold_edge_time_and_kind(self):
        # Fixture
        # Test
        actual = LinkConfigFileManager.to_lines(self.config)

        # Assert
        self.assertEqual(['0 0.1 X', '0 0.30000000000000004 B', '2 0.9 B'], actual)

    def test_that_times_are_read_back_exactly(self):
        # Fixture
        lines = LinkConfigFileManager.to_lines(self.config)

        # Test
        actual = LinkConfigFileManager.from_lines(lines, 3, 1.0)

        # Assert
        self.assertEqual(self.config, actual)

    def test_that_unknown_kind_raises(self):
        # Fixture
        lines = ['0 0.5 Y']

        # Test
        # Assert
        with self.assertRaises(LinkError):
            LinkConfigFileManager.from_lines(lines, 3, 1.0)

    def test_that_missing_field_raises(self):
        # Fixture
        lines = ['0 0.5']

        # Test
        # Assert
        with self.assertRaises(LinkError):
            LinkConfigFileManager.from_lines(lines, 3, 1.0)

    def test_that_read_opens_the_file(self):
        # Fixture
        file_name = 'some/links.txt'

        # Test
        with patch('builtins.open', mock_open(read_data='2 0.9 B\n')) as mock_file:
            actual = LinkConfigFileManager.read(file_name, 3, 1.0)

        # Assert
        mock_file.assert_called_with(file_name, 'r')
        self.assertEqual(LoopFixtures.config(3, {2: [(0.9, LinkKind.BAR)]}), actual)

    def test_that_write_writes_one_line_per_link(self):
        # Fixture
        file_name = 'some/links.txt'

        # Test
        with patch('builtins.open', mock_open()) as mock_file:
            LinkConfigFileManager.write(file_name, self.config)

        # Assert
        mock_file.assert_called_with(file_name, 'w')
        self.assertEqual(3, mock_file().write.call_count)


if __name__ == '__main__':
    unittest.main()
