# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Utils
    ~~~~~

    Logging, configuration and JSON helpers are borrowed from the <dimples>
    package so that every module logs and reads settings the same way;
    random streams and the task pool are local.
"""

from dimples import Dictionary

from dimples.utils import Log, Logging
from dimples.utils import Config
from dimples.utils import Singleton
from dimples.utils import json_encode, json_decode

from .rng import check_seed, derive_seed, derive_rng
from .rng import philox_words, standard_normals
from .pool import TaskPool, worker_count


__all__ = [

    'Dictionary',

    'Log', 'Logging',
    'Config',
    'Singleton',
    'json_encode', 'json_decode',

    #
    #   Random streams
    #
    'check_seed', 'derive_seed', 'derive_rng',
    'philox_words', 'standard_normals',

    #
    #   Task pool
    #
    'TaskPool', 'worker_count',

]
