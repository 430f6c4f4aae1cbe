# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Colexicographic ranking
    ~~~~~~~~~~~~~~~~~~~~~~~

    Strictly increasing tuples (i_1 < ... < i_r) are ordered by their
    largest element first; the rank is sum_j C(i_j - 1, j).
"""

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Tuple

import numpy as np

from ..common import ValidationError
from .binomial import binom


class IndexTuple:
    """ Strictly increasing tuple of 1-based site indices """

    def __init__(self, indices: Iterable[int]):
        super().__init__()
        indices = tuple(int(i) for i in indices)
        if len(indices) == 0:
            raise ValidationError('index tuple must not be empty')
        if indices[0] < 1:
            raise ValidationError('site indices start at 1: %s' % (indices,))
        for a, b in zip(indices, indices[1:]):
            if a >= b:
                raise ValidationError('index tuple not strictly increasing: %s' % (indices,))
        self.__indices = indices

    @property
    def indices(self) -> Tuple[int, ...]:
        return self.__indices

    @property
    def width(self) -> int:
        return self.__indices[-1]

    def check_bound(self, w: int):
        if self.__indices[-1] > w:
            raise ValidationError('index tuple %s exceeds w = %d' % (self.__indices, w))

    def __len__(self) -> int:
        return len(self.__indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.__indices)

    def __getitem__(self, item):
        return self.__indices[item]

    def __eq__(self, other) -> bool:
        if isinstance(other, IndexTuple):
            return self.__indices == other.indices
        return self.__indices == other

    def __hash__(self) -> int:
        return hash(self.__indices)

    # Override
    def __str__(self) -> str:
        return '<%s %s />' % (self.__class__.__name__, self.__indices)

    # Override
    def __repr__(self) -> str:
        return '<%s %s />' % (self.__class__.__name__, self.__indices)


def rank_colex(t) -> int:
    if not isinstance(t, IndexTuple):
        t = IndexTuple(t)
    return sum(binom(i - 1, j) for j, i in enumerate(t, start=1))


def unrank_colex(k: int, r: int, w: int) -> IndexTuple:
    if r < 1 or r > w:
        raise ValidationError('need 1 <= r <= w, got r = %d, w = %d' % (r, w))
    total = binom(w, r)
    if k < 0 or k >= total:
        raise ValidationError('rank %d outside [0, %d)' % (k, total))
    indices = [0] * r
    upper = w - 1
    for j in range(r, 0, -1):
        # largest c <= upper with C(c, j) <= k
        c = upper
        while binom(c, j) > k:
            c -= 1
        indices[j - 1] = c + 1
        k -= binom(c, j)
        upper = c - 1
    return IndexTuple(indices)


def colex_tuples(w: int, r: int) -> Iterator[Tuple[int, ...]]:
    """ all r-subsets of {1..w} in colex order """
    if r < 0 or r > w:
        return iter(())
    combos = itertools.combinations(range(1, w + 1), r)
    return iter(sorted(combos, key=lambda c: c[::-1]))


@lru_cache(maxsize=64)
def colex_array(w: int, r: int) -> np.ndarray:
    """ (C(w, r), r) array of 0-based site indices, row k is unrank_colex(k) - 1 """
    rows = list(colex_tuples(w=w, r=r))
    array = np.array(rows, dtype=np.int64).reshape(len(rows), r) - 1
    array.setflags(write=False)
    return array


def couplings_containing(site: int, n: int, p: int) -> Iterator[IndexTuple]:
    """ the p-tuples of A_N^p that contain `site`, in colex order """
    if site < 1 or site > n:
        raise ValidationError('site %d outside 1..%d' % (site, n))
    others = [i for i in range(1, n + 1) if i != site]
    tuples = [tuple(sorted(c + (site,))) for c in itertools.combinations(others, p - 1)]
    for t in sorted(tuples, key=lambda c: c[::-1]):
        yield IndexTuple(t)
