# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Index-set cardinalities
    ~~~~~~~~~~~~~~~~~~~~~~~

    A_w^r       strictly increasing r-tuples in {1..w}
    Q_{N,k}^p   p-tuples meeting the last k sites
    Qbar        those whose second-largest entry is also among the last k
    Qtilde      Q minus Qbar (exactly one entry among the last k)
    N_r         all ordered r-tuples
    barN_r      ordered r-tuples with distinct entries
    barN_r^c    ordered r-tuples with a repeat
"""

import math

from ..common import ValidationError
from .binomial import binom


def _check_np(n: int, p: int):
    if p < 2 or p > n:
        raise ValidationError('need 2 <= p <= N, got N = %d, p = %d' % (n, p))


def _check_k(n: int, k: int):
    if k < 1 or k >= n:
        raise ValidationError('need 1 <= k < N, got N = %d, k = %d' % (n, k))


def card_A(w: int, r: int) -> int:
    if w < 0 or r < 0:
        raise ValidationError('need w, r >= 0, got w = %d, r = %d' % (w, r))
    return binom(w, r)


def card_Q(n: int, k: int, p: int) -> int:
    _check_np(n=n, p=p)
    _check_k(n=n, k=k)
    return binom(n, p) - binom(n - k, p)


def card_Q_bar(n: int, k: int, p: int) -> int:
    _check_np(n=n, p=p)
    _check_k(n=n, k=k)
    return binom(n, p) - binom(n - k, p) - k * binom(n - k, p - 1)


def card_Q_tilde(n: int, k: int, p: int) -> int:
    return card_Q(n=n, k=k, p=p) - card_Q_bar(n=n, k=k, p=p)


def card_N(n: int, r: int) -> int:
    if n < 1 or r < 0:
        raise ValidationError('need N >= 1, r >= 0, got N = %d, r = %d' % (n, r))
    return n ** r


def card_barN(n: int, r: int) -> int:
    if n < 1 or r < 0:
        raise ValidationError('need N >= 1, r >= 0, got N = %d, r = %d' % (n, r))
    return math.perm(n, r)


def card_barNc(n: int, r: int) -> int:
    return card_N(n=n, r=r) - card_barN(n=n, r=r)


def u_N(n: int, p: int) -> float:
    """ coupling normalization sqrt(p! / (2 N^(p-1))) """
    _check_np(n=n, p=p)
    return math.sqrt(math.factorial(p) / (2.0 * n ** (p - 1)))
