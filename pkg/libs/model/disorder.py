# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Quenched disorder
    ~~~~~~~~~~~~~~~~~

    One standard Gaussian coupling g_J per J in A_N^p, stored in colex order
    of J. The r-th coupling of a seeded draw depends only on (seed, r), so the
    couplings among the first N-1 sites are a prefix of the draw for N sites.
"""

import os
from typing import Optional

import numpy as np

from dimples.utils import Log

from ..common import ValidationError
from ..combinatorics import IndexTuple, rank_colex, card_A
from ..utils import standard_normals, check_seed

from .params import ModelParams


class Disorder:

    BINARY_MAGIC = b'PSPN'
    NO_SEED = -1

    def __init__(self, n: int, p: int, couplings: np.ndarray, seed: Optional[int] = None):
        super().__init__()
        couplings = np.array(couplings, dtype=np.float64).reshape(-1)
        expected = card_A(w=n, r=p)
        if couplings.size != expected:
            raise ValidationError('disorder for N = %d, p = %d needs %d couplings, got %d' % (
                n, p, expected, couplings.size
            ))
        if not np.all(np.isfinite(couplings)):
            raise ValidationError('disorder contains non-finite couplings')
        couplings.setflags(write=False)
        self.__n = n
        self.__p = p
        self.__couplings = couplings
        self.__seed = seed

    @classmethod
    def zeros(cls, n: int, p: int):
        return cls(n=n, p=p, couplings=np.zeros(card_A(w=n, r=p)))

    @classmethod
    def from_values(cls, n: int, p: int, values):
        return cls(n=n, p=p, couplings=np.asarray(values, dtype=np.float64))

    @property
    def n(self) -> int:
        return self.__n

    @property
    def p(self) -> int:
        return self.__p

    @property
    def seed(self) -> Optional[int]:
        return self.__seed

    @property
    def couplings(self) -> np.ndarray:
        """ read-only array in colex order """
        return self.__couplings

    def coupling(self, t) -> float:
        if not isinstance(t, IndexTuple):
            t = IndexTuple(t)
        if len(t) != self.__p:
            raise ValidationError('coupling index needs %d sites, got %s' % (self.__p, t.indices))
        t.check_bound(w=self.__n)
        return float(self.__couplings[rank_colex(t)])

    def prefix(self, n: int):
        """ the couplings among the first n sites """
        count = card_A(w=n, r=self.__p)
        return Disorder(n=n, p=self.__p, couplings=self.__couplings[:count], seed=self.__seed)

    def check_params(self, params: ModelParams):
        if params.n != self.__n or params.p != self.__p:
            raise ValidationError('disorder (N = %d, p = %d) does not match %s' % (self.__n, self.__p, params))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Disorder):
            return False
        return self.__n == other.n and self.__p == other.p and np.array_equal(self.__couplings, other.couplings)

    # Override
    def __str__(self) -> str:
        return '<%s N=%d p=%d count=%d seed=%s />' % (
            self.__class__.__name__, self.__n, self.__p, self.__couplings.size, self.__seed
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()

    #
    #   Storage
    #

    def save(self, path: str, binary: bool = False):
        seed = self.NO_SEED if self.__seed is None else self.__seed
        if binary:
            has_seed = 0 if self.__seed is None else 1
            header = np.array([self.__n, self.__p, has_seed, max(seed, 0)], dtype='<u8').tobytes()
            with open(path, 'wb') as file:
                file.write(self.BINARY_MAGIC)
                file.write(header)
                file.write(self.__couplings.astype('<f8').tobytes())
        else:
            np.savetxt(path, self.__couplings, fmt='%.17g', header='N=%d p=%d seed=%d' % (self.__n, self.__p, seed))
        Log.debug(msg='disorder saved: %s -> %s' % (self, path))

    @classmethod
    def load(cls, path: str):
        if not os.path.exists(path):
            raise ValidationError('disorder file not found: %s' % path)
        with open(path, 'rb') as file:
            magic = file.read(len(cls.BINARY_MAGIC))
        if magic == cls.BINARY_MAGIC:
            return cls.__load_binary(path=path)
        return cls.__load_text(path=path)

    @classmethod
    def __load_binary(cls, path: str):
        with open(path, 'rb') as file:
            raw = file.read()
        offset = len(cls.BINARY_MAGIC)
        n, p, has_seed, seed = (int(v) for v in np.frombuffer(raw, dtype='<u8', count=4, offset=offset))
        values = np.frombuffer(raw, dtype='<f8', offset=offset + 32)
        return cls(n=n, p=p, couplings=values, seed=seed if has_seed else None)

    @classmethod
    def __load_text(cls, path: str):
        with open(path, 'r') as file:
            first = file.readline().strip()
        if not first.startswith('#'):
            raise ValidationError('disorder file has no header: %s' % path)
        fields = {}
        for item in first.lstrip('#').split():
            key, _, value = item.partition('=')
            fields[key] = value
        try:
            n = int(fields['N'])
            p = int(fields['p'])
            seed = int(fields['seed'])
        except (KeyError, ValueError):
            raise ValidationError('bad disorder header: %s' % first)
        values = np.loadtxt(path, dtype=np.float64, ndmin=1)
        return cls(n=n, p=p, couplings=values, seed=None if seed == cls.NO_SEED else seed)


def sample_disorder(params: ModelParams, seed: int) -> Disorder:
    seed = check_seed(seed)
    count = params.coupling_count
    values = standard_normals(seed=seed, count=count)
    return Disorder(n=params.n, p=params.p, couplings=values, seed=seed)
