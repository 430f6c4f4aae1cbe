# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Callable, TypeVar, List

from dimples.utils import Logging


T = TypeVar('T')

WORKERS_ENV = 'PSPIN_WORKERS'


def worker_count(default: Optional[int] = None) -> int:
    """ $PSPIN_WORKERS, else the configured default, else the CPU count """
    value = os.environ.get(WORKERS_ENV)
    if value is not None and len(value.strip()) > 0:
        try:
            count = int(value)
        except ValueError:
            count = 0
        if count > 0:
            return count
    if default is not None and default > 0:
        return default
    return os.cpu_count() or 1


class TaskPool(Logging):
    """ Runs independent indexed tasks; results come back in index order """

    DEFAULT_WORKERS = None  # set from config.ini [pool] workers

    def __init__(self, workers: Optional[int] = None):
        super().__init__()
        if workers is None:
            workers = worker_count(default=self.DEFAULT_WORKERS)
        self.__workers = max(1, workers)

    @property
    def workers(self) -> int:
        return self.__workers

    # Override
    def __str__(self) -> str:
        return '<%s workers=%d />' % (self.__class__.__name__, self.workers)

    # Override
    def __repr__(self) -> str:
        return '<%s workers=%d />' % (self.__class__.__name__, self.workers)

    def map(self, task: Callable[[int], T], count: int) -> List[T]:
        if count <= 0:
            return []
        if self.__workers == 1 or count == 1:
            return [task(index) for index in range(count)]
        self.debug(msg='running %d task(s) on %d worker(s)' % (count, self.__workers))
        with ThreadPoolExecutor(max_workers=min(self.__workers, count)) as executor:
            return list(executor.map(task, range(count)))
