# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Model
    ~~~~~

    Parameters, quenched disorder, spin configurations and the Hamiltonian.
"""

from .params import ModelParams
from .disorder import Disorder, sample_disorder
from .spins import SpinConfig, MAX_SPINS
from .spins import overlap, overlaps, spins_from_bits, bits_from_spins, random_config
from .hamiltonian import CouplingGraph, coupling_graph, parity_signs
from .hamiltonian import neg_hamiltonian, neg_hamiltonian_batch, local_fields
from .hamiltonian import LocalFieldCache, delta_neg_h_flip


__all__ = [

    'ModelParams',
    'Disorder', 'sample_disorder',

    #
    #   Configurations
    #
    'SpinConfig', 'MAX_SPINS',
    'overlap', 'overlaps', 'spins_from_bits', 'bits_from_spins', 'random_config',

    #
    #   Hamiltonian
    #
    'CouplingGraph', 'coupling_graph', 'parity_signs',
    'neg_hamiltonian', 'neg_hamiltonian_batch', 'local_fields',
    'LocalFieldCache', 'delta_neg_h_flip',

]
