# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Combinatorics
    ~~~~~~~~~~~~~

    Binomial tables, colex ranking of index tuples and the cardinalities
    of the index sets the coupling sums run over.
"""

from .binomial import BinomialTable, binom, shared_table
from .colex import IndexTuple
from .colex import rank_colex, unrank_colex
from .colex import colex_tuples, colex_array, couplings_containing
from .cardinality import card_A, card_Q, card_Q_bar, card_Q_tilde
from .cardinality import card_N, card_barN, card_barNc, u_N
from .enumerate import enumerate_A, enumerate_Q, enumerate_Q_bar, enumerate_Q_tilde
from .enumerate import enumerate_N, enumerate_barN, enumerate_barNc


__all__ = [

    'BinomialTable', 'binom', 'shared_table',

    #
    #   Colex order
    #
    'IndexTuple',
    'rank_colex', 'unrank_colex',
    'colex_tuples', 'colex_array', 'couplings_containing',

    #
    #   Cardinalities
    #
    'card_A', 'card_Q', 'card_Q_bar', 'card_Q_tilde',
    'card_N', 'card_barN', 'card_barNc', 'u_N',

    #
    #   Enumerators
    #
    'enumerate_A', 'enumerate_Q', 'enumerate_Q_bar', 'enumerate_Q_tilde',
    'enumerate_N', 'enumerate_barN', 'enumerate_barNc',

]
