# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Overlap time series
    ~~~~~~~~~~~~~~~~~~~

    Integrated autocorrelation time with the self-consistent window of
    Madras and Sokal: tau(M) = 1/2 + sum_{t=1..M} rho(t), taking the
    smallest M with M >= c tau(M).
"""

import csv
from typing import Dict, Optional, Tuple

import numpy as np

from ..common import ValidationError, QualityError


MIN_LENGTH = 100

DEFAULT_WINDOW = 6.0


def autocorrelation(values, c: float = DEFAULT_WINDOW) -> Tuple[float, float]:
    """ (tau, ess) with ess = n / (2 tau) """
    x = np.asarray(values, dtype=np.float64)
    n = x.size
    if n < MIN_LENGTH:
        raise ValidationError('series too short for autocorrelation: %d < %d' % (n, MIN_LENGTH))
    if not np.all(np.isfinite(x)):
        raise QualityError('series contains non-finite values')
    x = x - x.mean()
    if np.ptp(x) == 0.0:
        raise QualityError('constant series has no autocorrelation time')
    size = 1
    while size < 2 * n:
        size <<= 1
    spectrum = np.fft.rfft(x, n=size)
    acf = np.fft.irfft(spectrum * np.conjugate(spectrum), n=size)[:n]
    acf /= acf[0]
    taus = np.cumsum(acf) - 0.5
    lags = np.arange(n)
    inside = lags >= c * taus
    window = int(np.argmax(inside)) if np.any(inside) else n - 1
    tau = max(0.5, float(taus[window]))
    return tau, n / (2.0 * tau)


class OverlapSeries:
    """ R_{a,b} recorded every `thin` sweeps after burn-in """

    def __init__(self, pair: Tuple[int, int], values: np.ndarray, sweeps: Optional[np.ndarray] = None):
        super().__init__()
        self.__pair = pair
        self.__values = np.asarray(values, dtype=np.float64)
        self.__values.setflags(write=False)
        if sweeps is None:
            sweeps = np.arange(self.__values.size)
        self.__sweeps = np.asarray(sweeps, dtype=np.int64)
        if self.__sweeps.shape != self.__values.shape:
            raise ValidationError('sweep indices do not match values: %s vs %s' % (
                self.__sweeps.shape, self.__values.shape
            ))
        self.__sweeps.setflags(write=False)
        self.__stats = None

    @property
    def pair(self) -> Tuple[int, int]:
        return self.__pair

    @property
    def pair_id(self) -> str:
        return '%d_%d' % self.__pair

    @property
    def values(self) -> np.ndarray:
        return self.__values

    @property
    def sweeps(self) -> np.ndarray:
        """ sweep number (counted from the chain start) of each recorded value """
        return self.__sweeps

    def __len__(self) -> int:
        return self.__values.size

    def __stats_pair(self) -> Tuple[float, float]:
        if self.__stats is None:
            self.__stats = autocorrelation(values=self.__values)
        return self.__stats

    @property
    def tau(self) -> float:
        return self.__stats_pair()[0]

    @property
    def ess(self) -> float:
        return self.__stats_pair()[1]

    def mean(self) -> float:
        return float(np.mean(self.__values))

    def std_err(self) -> float:
        """ standard error of the mean, inflated by 2 tau """
        return float(np.std(self.__values) * np.sqrt(2.0 * self.tau / self.__values.size))

    def central_moment(self, q: float, k: int) -> float:
        return float(np.mean((self.__values - q) ** k))

    def central_moment_var(self, q: float, k: int) -> float:
        """ within-chain variance of central_moment(q, k), using the overlap's ESS """
        return float(np.var((self.__values - q) ** k) / self.ess)

    # Override
    def __str__(self) -> str:
        return '<%s pair=%s length=%d />' % (self.__class__.__name__, self.__pair, self.__values.size)

    # Override
    def __repr__(self) -> str:
        return self.__str__()


CSV_HEADER = ['sweep_index', 'pair_id', 'overlap']


def dump_series_csv(series: Dict[Tuple[int, int], OverlapSeries], path: str):
    """ long format: one row per (sweep, pair) """
    pairs = sorted(series.keys())
    if len(pairs) == 0:
        raise ValidationError('no series to write')
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(CSV_HEADER)
        length = max(len(series[pair]) for pair in pairs)
        for t in range(length):
            for pair in pairs:
                item = series[pair]
                if t < len(item):
                    writer.writerow([int(item.sweeps[t]), item.pair_id, repr(float(item.values[t]))])
