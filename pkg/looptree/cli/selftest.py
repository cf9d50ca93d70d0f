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
Quick invariant checks of an installed looptree, run by `looptree selftest`.
Every check is seeded and finishes in a few seconds.
"""
from __future__ import annotations

import logging
import math
from typing import Callable
from typing import NamedTuple

import numpy as np

from looptree.bounds.analytic import partition_bounds
from looptree.bounds.analytic import q_tilde
from looptree.bounds.conditions import check_theorem2
from looptree.links.link_file_manager import LinkConfigFileManager
from looptree.links.link_sampler import sample_links
from looptree.links.link_types import Link
from looptree.links.link_types import LinkConfig
from looptree.links.link_types import LinkKind
from looptree.links.link_types import ModelParams
from looptree.loops.loop_builder import build_loops
from looptree.loops.loop_events import check_prop1
from looptree.loops.space_time_index import SpaceTimeIndex
from looptree.measure import events
from looptree.measure.importance_sampler import estimate_weighted_prob
from looptree.trees.galton_watson import sample_gw_tree
from looptree.trees.offspring import DerivativePowerFunctional
from looptree.trees.offspring import DeterministicOffspring
from looptree.trees.offspring import moment_functional
from looptree.trees.offspring import PoissonOffspring
from looptree.trees.tree import regular_tree
from looptree.trees.tree import TreeFileManager

logger = logging.getLogger(__name__)

_SEED = 20240601


class SelftestResult(NamedTuple):
    passed: bool
    lines: list


class CheckFailed(Exception):
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _random_pairs(rng, count, beta_values=(0.3, 1.0)):
    for i in range(count):
        if i % 2 == 0:
            tree = sample_gw_tree(PoissonOffspring(3.0), int(rng.integers(1, 4)), rng)
        else:
            tree = regular_tree(int(rng.integers(2, 4)), int(rng.integers(1, 4)))
        params = ModelParams(1.0, beta_values[i % len(beta_values)], float(rng.choice([0.0, 0.5, 1.0])))
        yield tree, sample_links(tree, params, rng)


def check_tree_construction() -> None:
    rng = np.random.default_rng(_SEED + 3)
    for d, n in ((1, 3), (2, 3), (3, 2)):
        tree = regular_tree(d, n)
        _expect(sample_gw_tree(DeterministicOffspring(d), n, rng) == tree,
                f'a deterministic({d}) Galton-Watson tree differs from the regular tree of depth {n}')
        _expect(tree.vertex_count == sum(d ** k for k in range(n + 1)), f'wrong vertex count for d={d}, n={n}')
    for _ in range(50):
        tree = sample_gw_tree(PoissonOffspring(2.0), 3, rng)
        _expect(TreeFileManager.from_lines(TreeFileManager.to_lines(tree)) == tree,
                f'text form of {tree!r} does not read back')


def check_link_sampling() -> None:
    rng = np.random.default_rng(_SEED + 4)
    tree = regular_tree(3, 2)
    params = ModelParams(1.0, 0.8)
    total = 0
    samples = 2000
    for _ in range(samples):
        config = sample_links(tree, params, rng)
        for edge, links in config.items():
            times = [link.time for link in links]
            _expect(all(0.0 <= t < params.beta for t in times), f'link time outside [0, beta) on edge {edge}')
            _expect(all(a < b for a, b in zip(times, times[1:])), f'link times not sorted on edge {edge}')
        lines = LinkConfigFileManager.to_lines(config)
        read_back = LinkConfigFileManager.from_lines(lines, tree.edge_count, params.beta)
        _expect(read_back == config, 'text form of a configuration does not read back')
        total += config.total_link_count
    mean = total / (samples * tree.edge_count)
    std_error = math.sqrt(params.beta / (samples * tree.edge_count))
    _expect(abs(mean - params.beta) <= 4.0 * std_error, f'mean link count per edge {mean}, expected {params.beta}')


def check_single_edge_table() -> None:
    tree = regular_tree(1, 1)
    expected = {(LinkKind.CROSS, LinkKind.CROSS): 2, (LinkKind.BAR, LinkKind.BAR): 2,
                (LinkKind.CROSS, LinkKind.BAR): 1, (LinkKind.BAR, LinkKind.CROSS): 1}
    for (first, second), count in expected.items():
        config = LinkConfig(1, 1.0, {0: [Link(0.25, first), Link(0.75, second)]})
        _expect(build_loops(tree, config).loop_count == count,
                f'two links {first.name}, {second.name} on one edge should give {count} loops')


def check_wiring_against_tracing() -> None:
    rng = np.random.default_rng(_SEED)
    for tree, config in _random_pairs(rng, 300):
        built = build_loops(tree, config).loop_count
        traced = SpaceTimeIndex.from_config(tree, config).trace_loop_count()
        _expect(built == traced, f'build_loops gives {built} loops, tracing gives {traced} on {tree!r}')


def check_boundary_merge() -> None:
    rng = np.random.default_rng(_SEED + 1)
    for tree, config in _random_pairs(rng, 300):
        result = check_prop1(tree, config)
        _expect(result.holds, f'root merge relation violated on {tree!r}: {result}')


def check_insertion_delta() -> None:
    rng = np.random.default_rng(_SEED + 2)
    for tree, config in _random_pairs(rng, 200):
        if tree.edge_count == 0:
            continue
        edge = int(rng.integers(tree.edge_count))
        link = Link(float(rng.uniform(0.0, config.beta)), LinkKind.CROSS if rng.random() < 0.5 else LinkKind.BAR)
        delta = SpaceTimeIndex.from_config(tree, config).insertion_delta(edge, link.time, link.kind)
        after = build_loops(tree, config.insert_link(edge, link)).loop_count
        before = build_loops(tree, config).loop_count
        _expect(after - before == delta, f'insertion changes L by {after - before}, predicted {delta}')
        _expect(abs(delta) <= 1, f'insertion changes L by {delta}')


def check_bounds() -> None:
    for d in range(0, 6):
        for beta in (0.1, 0.5, 2.0):
            for theta in (1.0, 2.0, 4.0):
                lower, upper = partition_bounds(d, ModelParams(theta, beta), [theta] * d)
                _expect(lower <= upper * (1.0 + 1e-12),
                        f'partition bounds out of order at d={d}, beta={beta}, theta={theta}')

    params = ModelParams(2.0, 0.05)
    dist = PoissonOffspring(5.0)
    closed = q_tilde(dist, params)
    weight = math.expm1(params.beta * params.theta) / params.theta ** 2
    decay = math.exp(-params.beta / params.theta)
    series = weight * decay * moment_functional(dist, DerivativePowerFunctional(decay * (1.0 + weight)),
                                                force_series=True)
    _expect(abs(closed - series) <= 1e-10 * abs(closed), f'q_tilde closed form {closed} vs series {series}')
    _expect(check_theorem2(dist, params).part2, 'Poisson(5) at theta=2, beta=0.05 should have q_tilde < 1')


def check_empty_root_edges() -> None:
    tree = regular_tree(3, 1)
    params = ModelParams(1.0, 0.5)
    estimate = estimate_weighted_prob(events.root_edges_empty(), tree, params, 4000, _SEED, bootstrap_resamples=0)
    expected = math.exp(-1.5)
    _expect(abs(estimate.value - expected) <= 4.0 * estimate.std_error,
            f'P(no root edge link) = {estimate.value} +- {estimate.std_error}, expected {expected}')


CHECKS: list[tuple[str, Callable[[], None]]] = [
    ('tree construction', check_tree_construction),
    ('link sampling', check_link_sampling),
    ('single edge loop table', check_single_edge_table),
    ('wiring against trajectory tracing', check_wiring_against_tracing),
    ('root merge relation', check_boundary_merge),
    ('incremental insertion delta', check_insertion_delta),
    ('analytic bounds', check_bounds),
    ('empty root edges at theta=1', check_empty_root_edges),
]


def cmd_selftest() -> SelftestResult:
    """ Run every check and collect one summary line per check """
    lines = []
    passed = True
    for name, check in CHECKS:
        try:
            check()
            lines.append(f'PASS {name}')
        except CheckFailed as e:
            passed = False
            lines.append(f'FAIL {name}: {e}')
            logger.error('Selftest check "%s" failed: %s', name, e)
        except Exception as e:
            passed = False
            lines.append(f'FAIL {name}: {type(e).__name__}: {e}')
            logger.exception('Selftest check "%s" raised', name)
    lines.append('selftest passed' if passed else 'selftest FAILED')
    return SelftestResult(passed, lines)
