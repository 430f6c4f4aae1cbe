# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

from typing import Callable, Optional, Tuple

import numpy as np
from scipy import stats

from ..common import ValidationError, NumericalError


PROVENANCES = ('exact', 'exact-replicas', 'mcmc', 'theory')


class NuEstimate:
    """ Quenched average over disorder draws with its jackknife error """

    def __init__(self, mean: float, std_err: float, n_disorder: int, provenance: str):
        super().__init__()
        if provenance not in PROVENANCES:
            raise ValidationError('unknown provenance: %s' % provenance)
        if not np.isfinite(mean):
            raise NumericalError('estimate is not finite: %r' % mean)
        self.__mean = float(mean)
        self.__std_err = float(std_err)
        self.__n_disorder = int(n_disorder)
        self.__provenance = provenance

    @property
    def mean(self) -> float:
        return self.__mean

    @property
    def std_err(self) -> float:
        return self.__std_err

    @property
    def n_disorder(self) -> int:
        return self.__n_disorder

    @property
    def provenance(self) -> str:
        return self.__provenance

    def scaled(self, factor: float):
        return NuEstimate(mean=self.__mean * factor, std_err=self.__std_err * abs(factor),
                          n_disorder=self.__n_disorder, provenance=self.__provenance)

    def within(self, value: float, sigmas: float = 4.0, slack: float = 0.0) -> bool:
        return abs(self.__mean - value) <= sigmas * self.__std_err + slack

    def to_dict(self) -> dict:
        return {
            'mean': self.__mean,
            'std_err': self.__std_err if np.isfinite(self.__std_err) else None,
            'n_disorder': self.__n_disorder,
            'provenance': self.__provenance,
        }

    # Override
    def __str__(self) -> str:
        return '<%s %.6g +/- %.2g n=%d %s />' % (
            self.__class__.__name__, self.__mean, self.__std_err, self.__n_disorder, self.__provenance
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()


def jackknife(samples, statistic: Optional[Callable[[np.ndarray], float]] = None) -> Tuple[float, float]:
    """
        Delete-one jackknife over the first axis.
        Without `statistic` this is the sample mean and its standard error;
        with it, `statistic` maps a vector of column means to a number.
    """
    x = np.asarray(samples, dtype=np.float64)
    if x.ndim == 0 or x.shape[0] == 0:
        raise ValidationError('jackknife needs at least one sample')
    n = x.shape[0]
    full_mean = x.mean(axis=0)
    if statistic is None:
        def statistic(m):
            return m
    estimate = float(statistic(full_mean))
    if n < 2:
        return estimate, float('inf')
    left_out = (x.sum(axis=0)[None, ...] - x) / (n - 1)
    values = np.array([float(statistic(m)) for m in left_out])
    spread = values - values.mean()
    return estimate, float(np.sqrt((n - 1) / n * np.sum(spread ** 2)))


def nu_estimate(values, provenance: str, statistic: Optional[Callable[[np.ndarray], float]] = None,
                chain_var=None) -> NuEstimate:
    """
        Jackknife over draws. For time averages, `chain_var` holds each
        draw's within-chain variance (sample variance over ESS); its mean
        over draws, divided by the draw count, is added to the squared error.
    """
    values = np.asarray(values, dtype=np.float64)
    mean, std_err = jackknife(samples=values, statistic=statistic)
    if chain_var is not None:
        chain_var = np.asarray(chain_var, dtype=np.float64)
        if chain_var.shape != values.shape:
            raise ValidationError('chain variances do not match values: %s vs %s' % (chain_var.shape, values.shape))
        if np.any(chain_var < 0.0) or not np.all(np.isfinite(chain_var)):
            raise NumericalError('chain variances must be finite and >= 0')
        std_err = float(np.sqrt(std_err ** 2 + np.mean(chain_var) / values.shape[0]))
    return NuEstimate(mean=mean, std_err=std_err, n_disorder=values.shape[0], provenance=provenance)


class RunsTest:
    """ Wald-Wolfowitz runs test on the signs of a residual sequence """

    def __init__(self, residuals):
        super().__init__()
        signs = np.sign(np.asarray(residuals, dtype=np.float64))
        signs = signs[signs != 0]
        n1 = int(np.sum(signs > 0))
        n2 = int(np.sum(signs < 0))
        n = n1 + n2
        self.__runs = 1 + int(np.sum(signs[1:] != signs[:-1])) if n > 0 else 0
        if n1 == 0 or n2 == 0 or n < 3:
            self.__expected = float(self.__runs)
            self.__z = 0.0
            self.__p_value = 1.0
            return
        self.__expected = 2.0 * n1 * n2 / n + 1.0
        variance = 2.0 * n1 * n2 * (2.0 * n1 * n2 - n) / (n * n * (n - 1.0))
        self.__z = (self.__runs - self.__expected) / np.sqrt(variance) if variance > 0 else 0.0
        self.__p_value = float(2.0 * stats.norm.sf(abs(self.__z)))

    @property
    def runs(self) -> int:
        return self.__runs

    @property
    def expected(self) -> float:
        return self.__expected

    @property
    def z(self) -> float:
        return float(self.__z)

    @property
    def p_value(self) -> float:
        return self.__p_value

    def to_dict(self) -> dict:
        return {'runs': self.__runs, 'expected': self.__expected, 'z': self.z, 'p_value': self.__p_value}


def inverse_n_fit(ns, means, std_errs) -> dict:
    """
        Weighted least squares of y_N = a + c / N (weights 1 / se^2, or equal
        weights when every se vanishes); returns a, c and their errors.
    """
    ns = np.asarray(ns, dtype=np.float64)
    y = np.asarray(means, dtype=np.float64)
    se = np.asarray(std_errs, dtype=np.float64)
    if ns.size < 2:
        raise ValidationError('fit needs at least two sizes')
    design = np.column_stack([np.ones_like(ns), 1.0 / ns])
    weighted = bool(np.all(se > 0) and np.all(np.isfinite(se)))
    weights = 1.0 / se ** 2 if weighted else np.ones_like(ns)
    root = np.sqrt(weights)
    coef, _, _, _ = np.linalg.lstsq(design * root[:, None], y * root, rcond=None)
    residuals = y - design @ coef
    normal = design.T @ (design * weights[:, None])
    covariance = np.linalg.pinv(normal)
    if not weighted and ns.size > 2:
        covariance = covariance * float(residuals @ residuals) / (ns.size - 2)
    elif not weighted:
        covariance = covariance * 0.0
    return {
        'intercept': float(coef[0]),
        'intercept_err': float(np.sqrt(max(covariance[0, 0], 0.0))),
        'slope': float(coef[1]),
        'slope_err': float(np.sqrt(max(covariance[1, 1], 0.0))),
        'residuals': residuals.tolist(),
        'weighted': weighted,
    }


def log_log_slope(ns, values) -> Optional[float]:
    """ slope of log|values| against log N; None if any value is zero """
    values = np.abs(np.asarray(values, dtype=np.float64))
    if np.any(values <= 0.0) or len(values) < 2:
        return None
    slope, _ = np.polyfit(np.log(np.asarray(ns, dtype=np.float64)), np.log(values), 1)
    return float(slope)
