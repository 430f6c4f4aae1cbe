# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import math
import numbers
from typing import Optional, Dict

from ..common import ValidationError
from ..combinatorics import u_N, card_A


class ModelParams:
    """ (N, p, beta, h) of the p-spin model """

    def __init__(self, n: int, p: int, beta: float, h: float):
        super().__init__()
        if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 2:
            raise ValidationError('N must be an integer >= 2: %r' % (n,))
        if isinstance(p, bool) or not isinstance(p, numbers.Integral) or p < 2 or p > n:
            raise ValidationError('p must be an integer with 2 <= p <= N: p = %r, N = %d' % (p, n))
        n = int(n)
        p = int(p)
        try:
            beta = float(beta)
            h = float(h)
        except (TypeError, ValueError):
            raise ValidationError('beta and h must be numbers: %r, %r' % (beta, h))
        if not math.isfinite(beta) or beta < 0:
            raise ValidationError('beta must be finite and >= 0: %r' % beta)
        if not math.isfinite(h) or h <= 0:
            raise ValidationError('h must be finite and > 0: %r' % h)
        self.__n = n
        self.__p = p
        self.__beta = beta
        self.__h = h

    @classmethod
    def theory_only(cls, p: int, beta: float, h: float):
        """ parameters for the N-independent theory quantities """
        return cls(n=max(p, 2), p=p, beta=beta, h=h)

    @property
    def n(self) -> int:
        return self.__n

    @property
    def p(self) -> int:
        return self.__p

    @property
    def beta(self) -> float:
        return self.__beta

    @property
    def h(self) -> float:
        return self.__h

    @property
    def u(self) -> float:
        return u_N(n=self.__n, p=self.__p)

    @property
    def coupling_count(self) -> int:
        return card_A(w=self.__n, r=self.__p)

    @property
    def rigorous_regime(self) -> bool:
        """ beta <= beta_H(p) """
        from ..theory import beta_H
        return self.__beta <= beta_H(p=self.__p)

    def with_n(self, n: int):
        return ModelParams(n=n, p=self.__p, beta=self.__beta, h=self.__h)

    def with_beta(self, beta: float):
        return ModelParams(n=self.__n, p=self.__p, beta=beta, h=self.__h)

    def with_h(self, h: float):
        return ModelParams(n=self.__n, p=self.__p, beta=self.__beta, h=h)

    def reduced(self):
        """
            The (N-1)-spin system with the same coupling strength beta * u_N:
            beta' = beta * ((N-1)/N)^((p-1)/2).
        """
        n = self.__n - 1
        if n < self.__p:
            raise ValidationError('cannot remove a spin from N = %d at p = %d' % (self.__n, self.__p))
        beta = self.__beta * ((n / self.__n) ** ((self.__p - 1) / 2.0))
        return ModelParams(n=n, p=self.__p, beta=beta, h=self.__h)

    def to_dict(self) -> Dict[str, float]:
        return {'N': self.__n, 'p': self.__p, 'beta': self.__beta, 'h': self.__h}

    @classmethod
    def from_dict(cls, info: Optional[dict]):
        if not isinstance(info, dict):
            raise ValidationError('model section missing')
        try:
            return cls(n=info['N'], p=info['p'], beta=info['beta'], h=info['h'])
        except KeyError as error:
            raise ValidationError('model field missing: %s' % error)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelParams):
            return False
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.__n, self.__p, self.__beta, self.__h))

    # Override
    def __str__(self) -> str:
        return '<%s N=%d p=%d beta=%g h=%g />' % (self.__class__.__name__, self.__n, self.__p, self.__beta, self.__h)

    # Override
    def __repr__(self) -> str:
        return '<%s N=%d p=%d beta=%g h=%g />' % (self.__class__.__name__, self.__n, self.__p, self.__beta, self.__h)
