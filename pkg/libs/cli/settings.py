# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Settings from config.ini
    ~~~~~~~~~~~~~~~~~~~~~~~~

        [log]     level = debug | develop | release
        [pool]    workers
        [exact]   max_n, max_n_two_point, max_n_sampling,
                  max_n_decomposition, max_p_decomposition, max_n_cavity
        [theory]  quad_order
        [mcmc]    min_ess
        [output]  root
"""

from typing import Optional

from dimples.utils import Log
from dimples.utils import Config

from ..common import ResourceGates
from ..theory import QuadratureRule
from ..utils import TaskPool


LOG_LEVELS = {
    'debug': Log.DEBUG,
    'develop': Log.DEVELOP,
    'release': Log.RELEASE,
}

_GATE_OPTIONS = [
    'max_n', 'max_n_two_point', 'max_n_sampling',
    'max_n_decomposition', 'max_p_decomposition', 'max_n_cavity',
]


def _positive(config: Config, section: str, option: str) -> Optional[int]:
    value = config.get_integer(section=section, option=option)
    if value is None or value <= 0:
        return None
    return value


def apply_settings(config: Config) -> str:
    """ push config values into the process-wide settings; returns the output root """
    level = config.get_string(section='log', option='level')
    if level is not None and level.lower() in LOG_LEVELS:
        Log.LEVEL = LOG_LEVELS[level.lower()]
    workers = _positive(config, section='pool', option='workers')
    if workers is not None:
        TaskPool.DEFAULT_WORKERS = workers
    gates = ResourceGates()
    for option in _GATE_OPTIONS:
        value = _positive(config, section='exact', option=option)
        if value is not None:
            setattr(gates, option, value)
    min_ess = _positive(config, section='mcmc', option='min_ess')
    if min_ess is not None:
        gates.min_ess = min_ess
    order = _positive(config, section='theory', option='quad_order')
    if order is not None:
        QuadratureRule.DEFAULT_ORDER = order
    root = config.get_string(section='output', option='root')
    if root is None:
        root = '/tmp/pspin'
    Log.info(msg='settings applied: %s, workers=%s, quad_order=%d' % (gates, workers, QuadratureRule.DEFAULT_ORDER))
    return root
