# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Spin configurations
    ~~~~~~~~~~~~~~~~~~~

    A configuration of N <= 64 spins is a bit word: bit i-1 set means
    sigma_i = +1. Batches of configurations are uint64 arrays.
"""

from typing import Iterable, Optional

import numpy as np

from ..common import ValidationError


MAX_SPINS = 64


class SpinConfig:

    def __init__(self, bits: int, n: int):
        super().__init__()
        if n < 1 or n > MAX_SPINS:
            raise ValidationError('bit-packed configurations hold 1..%d spins, got %d' % (MAX_SPINS, n))
        bits = int(bits)
        if bits < 0 or bits >> n:
            raise ValidationError('bits 0x%x do not fit %d spins' % (bits, n))
        self.__bits = bits
        self.__n = n

    @classmethod
    def from_spins(cls, spins: Iterable[int]):
        spins = np.asarray(list(spins) if not isinstance(spins, np.ndarray) else spins)
        if spins.ndim != 1 or not np.all(np.abs(spins) == 1):
            raise ValidationError('spins must be a flat sequence of +1/-1')
        bits = 0
        for i, s in enumerate(spins):
            if s > 0:
                bits |= 1 << i
        return cls(bits=bits, n=len(spins))

    @property
    def bits(self) -> int:
        return self.__bits

    @property
    def n(self) -> int:
        return self.__n

    def spin(self, site: int) -> int:
        """ sigma at 1-based `site` """
        if site < 1 or site > self.__n:
            raise ValidationError('site %d outside 1..%d' % (site, self.__n))
        return 1 if (self.__bits >> (site - 1)) & 1 else -1

    def spins(self) -> np.ndarray:
        return spins_from_bits(bits=np.uint64(self.__bits), n=self.__n)

    def flipped(self, site: int):
        if site < 1 or site > self.__n:
            raise ValidationError('site %d outside 1..%d' % (site, self.__n))
        return SpinConfig(bits=self.__bits ^ (1 << (site - 1)), n=self.__n)

    def magnetization(self) -> int:
        up = bin(self.__bits).count('1')
        return 2 * up - self.__n

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinConfig):
            return False
        return self.__bits == other.bits and self.__n == other.n

    def __hash__(self) -> int:
        return hash((self.__bits, self.__n))

    # Override
    def __str__(self) -> str:
        text = ''.join('+' if (self.__bits >> i) & 1 else '-' for i in range(self.__n))
        return '<%s N=%d %s />' % (self.__class__.__name__, self.__n, text)

    # Override
    def __repr__(self) -> str:
        return '<%s N=%d bits=0x%x />' % (self.__class__.__name__, self.__n, self.__bits)


def overlap(c1: SpinConfig, c2: SpinConfig, n: Optional[int] = None) -> float:
    """ R = (1/N) sum_i sigma1_i sigma2_i; `n`, when given, must be the N of both """
    if c1.n != c2.n:
        raise ValidationError('overlap of configurations with N = %d and N = %d' % (c1.n, c2.n))
    if n is not None and n != c1.n:
        raise ValidationError('overlap asked for N = %d of configurations with N = %d' % (n, c1.n))
    differ = bin(c1.bits ^ c2.bits).count('1')
    return (c1.n - 2 * differ) / c1.n


def overlaps(states1: np.ndarray, states2: np.ndarray, n: int) -> np.ndarray:
    """ element-wise overlaps of two uint64 batches """
    states1 = np.asarray(states1, dtype=np.uint64)
    states2 = np.asarray(states2, dtype=np.uint64)
    differ = np.bitwise_count(states1 ^ states2).astype(np.float64)
    return (n - 2.0 * differ) / n


def spins_from_bits(bits, n: int) -> np.ndarray:
    """ +1/-1 int8 array of shape bits.shape + (n,) """
    bits = np.asarray(bits, dtype=np.uint64)
    shifts = np.arange(n, dtype=np.uint64)
    up = (bits[..., None] >> shifts) & np.uint64(1)
    return (2 * up.astype(np.int8) - 1).astype(np.int8)


def bits_from_spins(spins: np.ndarray) -> np.ndarray:
    """ inverse of spins_from_bits over the last axis """
    spins = np.asarray(spins)
    n = spins.shape[-1]
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    up = (spins > 0).astype(np.uint64)
    return np.bitwise_or.reduce(up * weights, axis=-1)


def random_config(n: int, rng: np.random.Generator) -> SpinConfig:
    spins = np.where(rng.random(n) < 0.5, -1, 1)
    return SpinConfig.from_spins(spins)
