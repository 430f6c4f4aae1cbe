# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Hamiltonian and local fields
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    -H(sigma) = beta u_N sum_{J in A_N^p} g_J sigma_J + h sum_i sigma_i

    Products sigma_J over bit-packed states come from parities:
    sigma_J = (-1)^(p - popcount(bits & mask_J)).
"""

from functools import lru_cache
import numpy as np
from scipy import sparse

from ..common import ValidationError, InternalError
from ..combinatorics import colex_array

from .params import ModelParams
from .disorder import Disorder
from .spins import SpinConfig


class CouplingGraph:
    """ Site/coupling incidence of A_N^p in colex order """

    def __init__(self, n: int, p: int):
        super().__init__()
        tuples = colex_array(w=n, r=p)
        shifts = np.left_shift(np.uint64(1), tuples.astype(np.uint64))
        masks = np.bitwise_or.reduce(shifts, axis=1)
        masks.setflags(write=False)
        self.__n = n
        self.__p = p
        self.__tuples = tuples
        self.__masks = masks
        ranks = []
        others = []
        for site in range(n):
            rows = np.nonzero(np.any(tuples == site, axis=1))[0]
            rest = tuples[rows]
            rest = rest[rest != site].reshape(rows.size, p - 1)
            rows.setflags(write=False)
            rest.setflags(write=False)
            ranks.append(rows)
            others.append(rest)
        self.__ranks = ranks
        self.__others = others
        self.__other_masks = [np.bitwise_or.reduce(np.left_shift(np.uint64(1), o.astype(np.uint64)), axis=1)
                              for o in others]
        self.__spread = [None] * n

    @property
    def n(self) -> int:
        return self.__n

    @property
    def p(self) -> int:
        return self.__p

    @property
    def tuples(self) -> np.ndarray:
        """ (C(N, p), p) 0-based site indices """
        return self.__tuples

    @property
    def masks(self) -> np.ndarray:
        return self.__masks

    def ranks(self, site: int) -> np.ndarray:
        """ colex ranks of the couplings containing 0-based `site` """
        return self.__ranks[site]

    def others(self, site: int) -> np.ndarray:
        """ (M, p-1) co-members of `site` in each of its couplings """
        return self.__others[site]

    def other_masks(self, site: int) -> np.ndarray:
        return self.__other_masks[site]

    def spread(self, site: int) -> sparse.csr_matrix:
        """ (M, N) 0/1 matrix sending coupling m to the co-members of `site` """
        matrix = self.__spread[site]
        if matrix is None:
            rest = self.__others[site]
            rows = np.repeat(np.arange(rest.shape[0]), self.__p - 1)
            data = np.ones(rows.size, dtype=np.float64)
            matrix = sparse.csr_matrix((data, (rows, rest.reshape(-1))), shape=(rest.shape[0], self.__n))
            self.__spread[site] = matrix
        return matrix

    # Override
    def __str__(self) -> str:
        return '<%s N=%d p=%d couplings=%d />' % (self.__class__.__name__, self.__n, self.__p, self.__masks.size)

    # Override
    def __repr__(self) -> str:
        return self.__str__()


@lru_cache(maxsize=32)
def coupling_graph(n: int, p: int) -> CouplingGraph:
    return CouplingGraph(n=n, p=p)


def parity_signs(states: np.ndarray, masks: np.ndarray, size: int) -> np.ndarray:
    """
        (len(states), len(masks)) array of prod_{j in mask} sigma_j,
        each mask holding `size` sites.
    """
    states = np.asarray(states, dtype=np.uint64)
    up = np.bitwise_count(states[:, None] & masks[None, :])
    down = (size - up.astype(np.int64)) & 1
    return 1.0 - 2.0 * down


def neg_hamiltonian(config: SpinConfig, d: Disorder, params: ModelParams) -> float:
    d.check_params(params=params)
    if config.n != params.n:
        raise ValidationError('configuration has %d spins, model has %d' % (config.n, params.n))
    states = np.array([config.bits], dtype=np.uint64)
    return float(neg_hamiltonian_batch(states=states, d=d, params=params)[0])


def neg_hamiltonian_batch(states: np.ndarray, d: Disorder, params: ModelParams) -> np.ndarray:
    graph = coupling_graph(n=params.n, p=params.p)
    states = np.asarray(states, dtype=np.uint64)
    signs = parity_signs(states=states, masks=graph.masks, size=params.p)
    up = np.bitwise_count(states).astype(np.float64)
    return params.beta * params.u * (signs @ d.couplings) + params.h * (2.0 * up - params.n)


def local_fields(spins: np.ndarray, d: Disorder) -> np.ndarray:
    """
        field_i = sum_{J containing i} g_J prod_{j in J, j != i} sigma_j,
        for +1/-1 spins of shape (N,) or (R, N).
    """
    graph = coupling_graph(n=d.n, p=d.p)
    spins = np.asarray(spins, dtype=np.float64)
    single = spins.ndim == 1
    batch = spins.reshape(-1, d.n)
    products = np.prod(batch[:, graph.tuples], axis=2) * d.couplings[None, :]
    fields = np.zeros_like(batch)
    for row in range(batch.shape[0]):
        contributions = np.repeat(products[row], d.p)
        fields[row] = np.bincount(graph.tuples.reshape(-1), weights=contributions, minlength=d.n)
    fields *= batch
    return fields[0] if single else fields


class LocalFieldCache:
    """ Local fields of one configuration, kept current across single flips """

    def __init__(self, config: SpinConfig, d: Disorder):
        super().__init__()
        if config.n != d.n:
            raise ValidationError('configuration has %d spins, disorder has %d' % (config.n, d.n))
        self.__disorder = d
        self.__graph = coupling_graph(n=d.n, p=d.p)
        self.__bits = config.bits
        self.__spins = config.spins().astype(np.float64)
        self.__fields = local_fields(spins=self.__spins, d=d)

    @property
    def bits(self) -> int:
        """ the configuration the fields belong to """
        return self.__bits

    @property
    def fields(self) -> np.ndarray:
        return self.__fields

    def field(self, site: int) -> float:
        """ field at 1-based `site` """
        return float(self.__fields[site - 1])

    def recompute(self, config: SpinConfig):
        self.__bits = config.bits
        self.__spins = config.spins().astype(np.float64)
        self.__fields = local_fields(spins=self.__spins, d=self.__disorder)

    def apply_flip(self, site: int):
        """ update for sigma_site -> -sigma_site (1-based), O(C(N-1, p-1) p) """
        s = site - 1
        graph = self.__graph
        spins = self.__spins
        others = graph.others(s)
        couplings = self.__disorder.couplings[graph.ranks(s)]
        products = np.prod(spins[others], axis=1) * couplings
        delta = -2.0 * spins[s] * (graph.spread(s).T @ products)
        delta *= spins
        delta[s] = 0.0
        self.__fields += delta
        spins[s] = -spins[s]
        self.__bits ^= 1 << s

    def check(self, config: SpinConfig):
        if config.bits != self.__bits:
            raise InternalError('field cache holds 0x%x, configuration is 0x%x' % (self.__bits, config.bits))

    def drift(self) -> float:
        """ largest deviation from a fresh recomputation """
        fresh = local_fields(spins=self.__spins, d=self.__disorder)
        return float(np.max(np.abs(fresh - self.__fields)))


def delta_neg_h_flip(config: SpinConfig, site: int, cache: LocalFieldCache, params: ModelParams) -> float:
    """ change of -H when spin `site` flips: -2 sigma_s (beta u_N field_s + h) """
    if __debug__:
        cache.check(config=config)
    sigma = config.spin(site)
    return -2.0 * sigma * (params.beta * params.u * cache.field(site) + params.h)
