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
Command line front end: `looptree <command> [--config FILE] [overrides]`.

Exit codes: 0 success, 1 invalid configuration, 2 runtime failure,
3 selftest failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional

from looptree.cli.commands import COMMANDS
from looptree.cli.config import COMMAND_CHECK
from looptree.cli.config import COMMAND_MCMC
from looptree.cli.config import COMMAND_SCAN_BETA
from looptree.cli.config import COMMAND_SIMULATE
from looptree.cli.config import ExperimentConfig
from looptree.cli.config import ExperimentConfigFileManager
from looptree.cli.selftest import cmd_selftest
from looptree.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIGURATION = 1
EXIT_FAILURE = 2
EXIT_SELFTEST = 3

COMMAND_SELFTEST = 'selftest'

# flag -> ExperimentConfig field
_OVERRIDES = {
    'seed': int, 'workers': int, 'out': str, 'tree': str, 'beta': float, 'theta': float, 'u': float,
    'd': int, 'mu': float, 'distribution': str, 'n': int, 'm': int, 'samples': int, 'method': str,
    'trees': int, 'steps': int, 'burn_in': int, 'thin': int, 'epsilon': float, 'bootstrap': int,
}
_FIELD_OF_FLAG = {'trees': 'n_trees'}


def _comma_separated(kind):
    def parse(text):
        return [kind(item) for item in text.split(',') if item.strip()]
    return parse


class _ArgumentParser(argparse.ArgumentParser):
    """ Reports unusable flags with the configuration exit code """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIGURATION, f'{self.prog}: configuration error: {message}\n')


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='looptree',
                             description='Random loop models on trees: simulations and bounds')
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level (default WARNING)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for command in (COMMAND_SIMULATE, COMMAND_SCAN_BETA, COMMAND_CHECK, COMMAND_MCMC):
        sub = subparsers.add_parser(command)
        sub.add_argument('--config', help='JSON or YAML experiment configuration')
        for flag, kind in _OVERRIDES.items():
            sub.add_argument('--' + flag.replace('_', '-'), dest=flag, type=kind, default=None)
        sub.add_argument('--beta-grid', dest='beta_grid', type=_comma_separated(float), default=None,
                         help='Comma separated beta values')
        sub.add_argument('--m-values', dest='m_values', type=_comma_separated(int), default=None,
                         help='Comma separated generations')

    subparsers.add_parser(COMMAND_SELFTEST)
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """ The configuration file, if any, with the command line flags applied on top """
    config = ExperimentConfig()
    if args.config is not None:
        config = ExperimentConfigFileManager.read(args.config)

    overrides = {}
    for flag in list(_OVERRIDES) + ['beta_grid', 'm_values']:
        overrides[_FIELD_OF_FLAG.get(flag, flag)] = getattr(args, flag)
    return config.with_overrides(overrides)


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    file = open(out, 'w', newline='')
    with file:
        file.write(text)
    logger.info('Wrote results to [%s]', out)


def run(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CONFIGURATION
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')

    if args.command == COMMAND_SELFTEST:
        result = cmd_selftest()
        for line in result.lines:
            print(line)
        return EXIT_OK if result.passed else EXIT_SELFTEST

    try:
        config = config_from_args(args)
        text = COMMANDS[args.command](config)
        if args.command == COMMAND_CHECK and not text.endswith('\n'):
            text += '\n'
        _write_output(text, config.out)
    except ConfigurationError as e:
        for problem in e.problems:
            print(f'configuration error: {problem}', file=sys.stderr)
        return EXIT_CONFIGURATION
    except Exception as e:
        logger.exception('looptree %s failed', args.command)
        print(f'error: {e}', file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
