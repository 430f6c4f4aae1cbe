# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Overlap-power decomposition
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~

    With r = p - 1, eta^l the r-fold tensor power of replica l and
    b = <eta>, the sums over all ordered r-tuples

        T_{l,l'} = (1/N^r) sum (eta^l - b)(eta^l' - b)
        T_l      = (1/N^r) sum (eta^l - b) b
        T        = (1/N^r) sum b^2 - q^r

    add up to R_{l,l'}^r - q^r.
"""

import string

import numpy as np

from ..common import ValidationError, InternalError, ResourceGates
from ..model import ModelParams, Disorder, SpinConfig, overlap
from ..model import spins_from_bits

from .summary import ExactSummary, exact_summary


_CHUNK = 1 << 14

RESIDUAL_LIMIT = 1e-9


class TDecomposition:

    def __init__(self, t_pair: float, t_single: tuple, t_const: float, lhs: float):
        super().__init__()
        self.__t_pair = t_pair
        self.__t_single = t_single
        self.__t_const = t_const
        self.__lhs = lhs

    @property
    def t_pair(self) -> float:
        return self.__t_pair

    @property
    def t_single(self) -> tuple:
        return self.__t_single

    @property
    def t_const(self) -> float:
        return self.__t_const

    @property
    def lhs(self) -> float:
        """ R^(p-1) - q^(p-1) """
        return self.__lhs

    @property
    def total(self) -> float:
        return self.__t_pair + self.__t_single[0] + self.__t_single[1] + self.__t_const

    @property
    def residual(self) -> float:
        return abs(self.total - self.__lhs)

    def to_dict(self) -> dict:
        return {
            'T_pair': self.__t_pair,
            'T_single': list(self.__t_single),
            'T': self.__t_const,
            'lhs': self.__lhs,
            'residual': self.residual,
        }

    # Override
    def __str__(self) -> str:
        return '<%s pair=%.6g single=(%.6g, %.6g) const=%.6g residual=%.3g />' % (
            self.__class__.__name__, self.__t_pair, self.__t_single[0], self.__t_single[1],
            self.__t_const, self.residual
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()


def correlation_tensor(summary: ExactSummary, r: int) -> np.ndarray:
    """ b = <sigma_{i1} ... sigma_{ir}> as an (N,)*r array """
    n = summary.n
    if r < 1:
        raise ValidationError('tensor order must be >= 1: %d' % r)
    if r == 1:
        return summary.one_point.copy()
    if r == 2 and summary.two_point is not None:
        return summary.two_point.copy()
    letters = string.ascii_lowercase[:r]
    subscripts = 'x,' + ','.join('x' + c for c in letters) + '->' + letters
    log_weights = summary.log_weights
    if log_weights is None:
        raise ValidationError('correlation tensor needs the weight table')
    tensor = np.zeros((n,) * r)
    for start in range(0, log_weights.size, _CHUNK):
        stop = min(log_weights.size, start + _CHUNK)
        w = np.exp(log_weights[start:stop])
        spins = spins_from_bits(bits=np.arange(start, stop, dtype=np.uint64), n=n).astype(np.float64)
        tensor += np.einsum(subscripts, w, *([spins] * r), optimize=True)
    return tensor


def contract(tensor: np.ndarray, spins: np.ndarray) -> np.ndarray:
    """ <tensor, sigma^{(x)r}> for each row of an (M, N) spin batch """
    spins = np.asarray(spins, dtype=np.float64)
    m, n = spins.shape
    r = tensor.ndim
    out = spins @ tensor.reshape(n, -1)
    for _ in range(r - 1):
        out = np.einsum('man,ma->mn', out.reshape(m, n, -1), spins)
    return out.reshape(m)


def t_terms(tensor: np.ndarray, spins1: np.ndarray, spins2: np.ndarray, q: float) -> dict:
    """ per-pair arrays of the four terms for (M, N) replica batches """
    n = spins1.shape[1]
    r = tensor.ndim
    volume = float(n) ** r
    norm = float(np.sum(tensor ** 2))
    b1 = contract(tensor=tensor, spins=spins1)
    b2 = contract(tensor=tensor, spins=spins2)
    dot = np.sum(np.asarray(spins1, dtype=np.float64) * spins2, axis=1)
    return {
        'pair': (dot ** r - b1 - b2 + norm) / volume,
        'single_1': (b1 - norm) / volume,
        'single_2': (b2 - norm) / volume,
        'const': norm / volume - q ** r,
        'lhs': (dot / n) ** r - q ** r,
    }


def t_decomposition(d: Disorder, params: ModelParams, c1: SpinConfig, c2: SpinConfig, q: float,
                    summary: ExactSummary = None) -> TDecomposition:
    ResourceGates().check_decomposition(n=params.n, p=params.p)
    if summary is None:
        summary = exact_summary(d=d, params=params, want_two_point=params.p == 3)
    r = params.p - 1
    b = correlation_tensor(summary=summary, r=r)
    volume = float(params.n) ** r
    eta1 = _tensor_power(spins=c1.spins().astype(np.float64), r=r)
    eta2 = _tensor_power(spins=c2.spins().astype(np.float64), r=r)
    t_pair = float(np.sum((eta1 - b) * (eta2 - b)) / volume)
    t_1 = float(np.sum((eta1 - b) * b) / volume)
    t_2 = float(np.sum((eta2 - b) * b) / volume)
    t_const = float(np.sum(b * b) / volume - q ** r)
    lhs = overlap(c1, c2) ** r - q ** r
    result = TDecomposition(t_pair=t_pair, t_single=(t_1, t_2), t_const=t_const, lhs=lhs)
    if result.residual > RESIDUAL_LIMIT:
        raise InternalError('T-decomposition does not close: %s' % result)
    return result


def _tensor_power(spins: np.ndarray, r: int) -> np.ndarray:
    tensor = spins
    for _ in range(r - 1):
        tensor = np.multiply.outer(tensor, spins)
    return tensor
