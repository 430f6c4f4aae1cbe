# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Exact Enumeration
    ~~~~~~~~~~~~~~~~~

    log Z, Gibbs correlations, exact replica draws and the overlap-power
    decomposition for small N.
"""

from .enumeration import energy_table, gray_code_sweep, gray_energy_table
from .summary import METHODS, ExactSummary
from .summary import exact_summary, overlap_moment_exact
from .summary import sample_states, exact_replica_sample
from .summary import energy_derivative, pn_sample
from .decomposition import TDecomposition, t_decomposition
from .decomposition import correlation_tensor, contract, t_terms


__all__ = [

    'energy_table', 'gray_code_sweep', 'gray_energy_table',

    'METHODS', 'ExactSummary',
    'exact_summary', 'overlap_moment_exact',
    'sample_states', 'exact_replica_sample',
    'energy_derivative', 'pn_sample',

    #
    #   Decomposition
    #
    'TDecomposition', 't_decomposition',
    'correlation_tensor', 'contract', 't_terms',

]
