# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Markov Chain Monte Carlo
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Glauber and Metropolis single-site dynamics for independent replicas
    of one disorder draw, with overlap series and autocorrelation times.
"""

from .sampler import KINDS, SamplerConfig, ChainState
from .sampler import accept_flips, sweep
from .series import MIN_LENGTH, OverlapSeries
from .series import autocorrelation, dump_series_csv
from .ensemble import CHAIN_STREAM, ReplicaEnsemble
from .ensemble import all_pairs, run_replicas, empirical_state_law


__all__ = [

    'KINDS', 'SamplerConfig', 'ChainState',
    'accept_flips', 'sweep',

    #
    #   Series
    #
    'MIN_LENGTH', 'OverlapSeries',
    'autocorrelation', 'dump_series_csv',

    #
    #   Replicas
    #
    'CHAIN_STREAM', 'ReplicaEnsemble',
    'all_pairs', 'run_replicas', 'empirical_state_law',

]
