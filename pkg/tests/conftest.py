# -*- coding: utf-8 -*-

import os

import pytest

from libs.common import ResourceGates
from libs.utils import TaskPool


# one worker thread unless the caller asks for more
os.environ.setdefault('PSPIN_WORKERS', '1')


@pytest.fixture
def gates() -> ResourceGates:
    """ the process-wide gates, restored after the test """
    shared = ResourceGates()
    saved = dict(vars(shared))
    yield shared
    for key, value in saved.items():
        setattr(shared, key, value)


@pytest.fixture
def pool() -> TaskPool:
    return TaskPool(workers=1)
