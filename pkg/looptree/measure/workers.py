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
Seeded random streams and the worker pool used by the replication level
estimators.

Samples are produced in blocks of a fixed size. Block b of stream s draws
from the child SeedSequence with spawn key (parent key..., s, b), whatever
worker runs it, and results are merged in block order. Estimates therefore
do not depend on the number of workers.
"""
from __future__ import annotations

import logging
from threading import Thread
from typing import Callable
from typing import Sequence

import numpy as np

from looptree.exceptions import LoopTreeError
from looptree.exceptions import ParameterError

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 1000


def as_seed_sequence(seed) -> np.random.SeedSequence:
    """
    :param seed: An integer seed or a SeedSequence
    :return: The SeedSequence
    """
    if isinstance(seed, np.random.SeedSequence):
        return seed
    if seed is None:
        raise ParameterError('A seed is required')
    return np.random.SeedSequence(int(seed))


def derive(seed_sequence: np.random.SeedSequence, *key: int) -> np.random.SeedSequence:
    """ The child stream with the spawn key of the parent extended by `key` """
    return np.random.SeedSequence(entropy=seed_sequence.entropy,
                                  spawn_key=tuple(seed_sequence.spawn_key) + tuple(key),
                                  pool_size=seed_sequence.pool_size)


def master_seed(seed_sequence: np.random.SeedSequence):
    """ The integer seed behind a stream, for records """
    entropy = seed_sequence.entropy
    return entropy if isinstance(entropy, int) else None


def block_sizes(n_samples: int, block_size: int = DEFAULT_BLOCK_SIZE) -> list[int]:
    if block_size < 1:
        raise ParameterError(f'block_size must be >= 1, got {block_size}')
    full, rest = divmod(n_samples, block_size)
    return [block_size] * full + ([rest] if rest else [])


class WorkerPool:
    """
    Runs a function over a list of tasks on a number of threads. Worker w
    handles tasks w, w + workers, w + 2 * workers, ... and the results are
    returned in task order. If one or more tasks raise, the pool raises
    after all threads are joined.
    """

    def __init__(self, workers: int = 1) -> None:
        if int(workers) != workers or workers < 1:
            raise ParameterError(f'workers must be an integer >= 1, got {workers}')
        self._workers = int(workers)

    @property
    def workers(self) -> int:
        return self._workers

    def map(self, func: Callable, tasks: Sequence) -> list:
        results = [None] * len(tasks)
        if self._workers == 1 or len(tasks) <= 1:
            for i, task in enumerate(tasks):
                results[i] = func(task)
            return results

        threads = []
        reporter = self.Reporter()
        for worker in range(min(self._workers, len(tasks))):
            thread = Thread(target=self._thread_function_wrapper,
                            args=[func, reporter, tasks, results, worker])
            threads.append(thread)
            thread.start()

        for thread in threads:
            thread.join()

        if reporter.is_error_reported():
            first_error = reporter.errors[0]
            raise LoopTreeError('One or more workers raised an exception when '
                                'executing parallel task') from first_error

        return results

    def _thread_function_wrapper(self, func, reporter, tasks, results, worker):
        try:
            for i in range(worker, len(tasks), self._workers):
                results[i] = func(tasks[i])
                logger.debug('Worker %d finished task %d', worker, i)
        except Exception as e:
            reporter.report_error(e)

    class Reporter:
        def __init__(self):
            self.error_reported = False
            self._errors = []

        @property
        def errors(self):
            return self._errors

        def report_error(self, e):
            self.error_reported = True
            self._errors.append(e)

        def is_error_reported(self):
            return self.error_reported
