# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Enumeration of all 2^N configurations
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    The table of -H is built by doubling: configurations below 2^k have
    every spin from k up pointing down, so setting spin k gives

        E[x + 2^k] = E[x] + 2 (beta u_N field_k(x) + h),    x < 2^k

    which is one single-spin flip per new entry, vectorized over x.
    The sequential Gray-code sweep visits the same table one flip at a time
    with a LocalFieldCache and serves as its cross-check.
"""

from typing import Iterator, Tuple

import numpy as np

from ..common import ResourceGates
from ..model import ModelParams, Disorder, SpinConfig
from ..model import coupling_graph, parity_signs
from ..model import neg_hamiltonian, LocalFieldCache, delta_neg_h_flip


_CHUNK_ENTRIES = 1 << 21


def energy_table(d: Disorder, params: ModelParams) -> np.ndarray:
    """ -H(x) for every bit-packed configuration x in [0, 2^N) """
    d.check_params(params=params)
    n = params.n
    p = params.p
    ResourceGates().check_exact(n=n)
    scale = params.beta * params.u
    h = params.h
    table = np.empty(1 << n, dtype=np.float64)
    # all spins down: sigma_J = (-1)^p
    table[0] = scale * (-1) ** p * float(np.sum(d.couplings)) - h * n
    if scale == 0.0:
        for k in range(n):
            size = 1 << k
            table[size:2 * size] = table[:size] + 2.0 * h
        return table
    graph = coupling_graph(n=n, p=p)
    for k in range(n):
        size = 1 << k
        masks = graph.other_masks(k)
        g_k = d.couplings[graph.ranks(k)]
        chunk = max(256, _CHUNK_ENTRIES // max(1, masks.size))
        for start in range(0, size, chunk):
            stop = min(size, start + chunk)
            states = np.arange(start, stop, dtype=np.uint64)
            fields = parity_signs(states=states, masks=masks, size=p - 1) @ g_k
            table[size + start:size + stop] = table[start:stop] + 2.0 * (scale * fields + h)
    return table


def gray_code_sweep(d: Disorder, params: ModelParams) -> Iterator[Tuple[int, float]]:
    """ (bits, -H) over all configurations in reflected Gray-code order """
    d.check_params(params=params)
    ResourceGates().check_exact(n=params.n)
    config = SpinConfig(bits=0, n=params.n)
    cache = LocalFieldCache(config=config, d=d)
    value = neg_hamiltonian(config=config, d=d, params=params)
    yield config.bits, value
    for step in range(1, 1 << params.n):
        # the bit that changes between gray(step - 1) and gray(step)
        site = (step & -step).bit_length()
        value += delta_neg_h_flip(config=config, site=site, cache=cache, params=params)
        cache.apply_flip(site=site)
        config = config.flipped(site=site)
        yield config.bits, value


def gray_energy_table(d: Disorder, params: ModelParams) -> np.ndarray:
    table = np.empty(1 << params.n, dtype=np.float64)
    for bits, value in gray_code_sweep(d=d, params=params):
        table[bits] = value
    return table
