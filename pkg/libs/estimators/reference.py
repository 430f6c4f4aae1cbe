# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Product-measure reference values
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    At beta = 0 every replica is a product of independent spins with mean
    tanh(h), so moments of overlap sums S_ab = sum_i sigma^a_i sigma^b_i
    are exact finite-N polynomials: summing over the equality pattern of
    the site indices,

        E[prod_k S_{c_k}] = sum_{partitions P} (N)_{|P|} prod_{B in P} E[prod_{k in B} w_{c_k}]

    with (N)_m the falling factorial and w the single-site products.
"""

import math
from collections import Counter
from typing import Iterator, List, Sequence, Tuple

from ..common import ValidationError


def set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    items = list(items)
    if len(items) == 0:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def _block_moment(pairs: Sequence[Tuple[int, int]], m: float) -> float:
    counts = Counter()
    for a, b in pairs:
        counts[a] += 1
        counts[b] += 1
    odd = sum(1 for c in counts.values() if c % 2 == 1)
    return m ** odd


def overlap_sum_moment(n: int, h: float, pairs: Sequence[Tuple[int, int]]) -> float:
    """ E[prod_k S_{pairs[k]}] for independent spins with field h """
    m = math.tanh(h)
    total = 0.0
    for partition in set_partitions(range(len(pairs))):
        blocks = len(partition)
        if blocks > n:
            continue
        term = float(math.perm(n, blocks))
        for block in partition:
            term *= _block_moment([pairs[k] for k in block], m)
        total += term
    return total


def product_measure_delta_sq(n: int, p: int, h: float) -> float:
    """ exact E[Delta^2] at beta = 0 for replicas (1, 2, 3, 4) """
    if p < 2 or p > 4:
        raise ValidationError('product-measure Delta^2 covers 2 <= p <= 4, got %d' % p)
    r = p - 1
    terms = [((0, 2), 1.0), ((0, 3), -1.0), ((1, 2), -1.0), ((1, 3), 1.0)]
    total = 0.0
    for pair_a, sign_a in terms:
        for pair_b, sign_b in terms:
            total += sign_a * sign_b * overlap_sum_moment(n=n, h=h, pairs=[pair_a] * r + [pair_b] * r)
    return total / float(n) ** (2 * r)


def product_measure_central_moment(n: int, h: float, k: int) -> float:
    """ exact E[(R - q)^k] at beta = 0, q = tanh^2(h) """
    if k < 0:
        raise ValidationError('moment order must be >= 0: %d' % k)
    q = math.tanh(h) ** 2
    total = 0.0
    # (R - q)^k = sum_j C(k, j) R^j (-q)^(k - j), with R^j = S^j / N^j
    for j in range(k + 1):
        moment = overlap_sum_moment(n=n, h=h, pairs=[(0, 1)] * j) / float(n) ** j
        total += math.comb(k, j) * moment * (-q) ** (k - j)
    return total
