# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import threading
from typing import List

from ..common import ValidationError, NumericalError


INT128_MAX = (1 << 127) - 1


class BinomialTable:
    """
        Pascal table of C(n, k) for 0 <= n <= n_max, 0 <= k <= k_max,
        exact integers with a signed 128-bit ceiling.
    """

    def __init__(self, n_max: int, k_max: int):
        super().__init__()
        if n_max < 0 or k_max < 0:
            raise ValidationError('table bounds must be non-negative: n_max=%d, k_max=%d' % (n_max, k_max))
        self.__n_max = n_max
        self.__k_max = k_max
        self.__rows = _pascal_rows(n_max=n_max, k_max=k_max)

    @property
    def n_max(self) -> int:
        return self.__n_max

    @property
    def k_max(self) -> int:
        return self.__k_max

    # Override
    def __str__(self) -> str:
        return '<%s n_max=%d k_max=%d />' % (self.__class__.__name__, self.__n_max, self.__k_max)

    # Override
    def __repr__(self) -> str:
        return '<%s n_max=%d k_max=%d />' % (self.__class__.__name__, self.__n_max, self.__k_max)

    def covers(self, n: int, k: int) -> bool:
        return 0 <= n <= self.__n_max and 0 <= k <= self.__k_max

    def binom(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValidationError('binomial arguments must be non-negative: C(%d, %d)' % (n, k))
        if k > n:
            return 0
        if n > self.__n_max or k > self.__k_max:
            raise ValidationError('C(%d, %d) is outside the table bounds (%d, %d)' % (
                n, k, self.__n_max, self.__k_max
            ))
        return self.__rows[n][k]


def _pascal_rows(n_max: int, k_max: int) -> List[List[int]]:
    rows = [[1] + [0] * k_max]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [1] + [0] * k_max
        for k in range(1, min(n, k_max) + 1):
            value = prev[k - 1] + prev[k]
            if value > INT128_MAX:
                raise NumericalError('C(%d, %d) overflows 128-bit integers' % (n, k))
            row[k] = value
        rows.append(row)
    return rows


#
#   Shared table, grown on demand
#

_shared_lock = threading.Lock()
_shared_table = BinomialTable(n_max=64, k_max=8)


def shared_table(n: int = 0, k: int = 0) -> BinomialTable:
    """ process-wide table covering at least (n, k) """
    global _shared_table
    with _shared_lock:
        table = _shared_table
        if not table.covers(n=n, k=k):
            table = BinomialTable(n_max=max(n, table.n_max), k_max=max(k, table.k_max))
            _shared_table = table
        return table


def binom(n: int, k: int) -> int:
    if n >= 0 and k > n:
        return 0
    if 0 <= k <= n and k > n - k:
        k = n - k
    return shared_table(n=n, k=max(k, 0)).binom(n=n, k=k)
