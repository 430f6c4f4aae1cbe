# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Brute-force enumerators, the reference for the counting formulas
"""

import itertools
from typing import Iterator, Tuple

from .colex import colex_tuples


def enumerate_A(w: int, r: int) -> Iterator[Tuple[int, ...]]:
    return colex_tuples(w=w, r=r)


def enumerate_Q(n: int, k: int, p: int) -> Iterator[Tuple[int, ...]]:
    return (t for t in colex_tuples(w=n, r=p) if t[-1] > n - k)


def enumerate_Q_bar(n: int, k: int, p: int) -> Iterator[Tuple[int, ...]]:
    return (t for t in colex_tuples(w=n, r=p) if t[-2] > n - k)


def enumerate_Q_tilde(n: int, k: int, p: int) -> Iterator[Tuple[int, ...]]:
    return (t for t in colex_tuples(w=n, r=p) if t[-1] > n - k >= t[-2])


def enumerate_N(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    return itertools.product(range(1, n + 1), repeat=r)


def enumerate_barN(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1), r)


def enumerate_barNc(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    return (t for t in enumerate_N(n=n, r=r) if len(set(t)) < r)
