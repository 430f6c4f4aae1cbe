# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Commands
    ~~~~~~~~

    Every command builds its payload from a seed and parameters alone, so
    a record replays to the same payload bytes.
"""

import os
import time
from typing import Callable, Dict, List, Optional, Tuple

from dimples.utils import Log
from dimples.utils import json_encode

from ..common import ValidationError
from ..model import ModelParams
from ..exact import exact_summary, exact_replica_sample, energy_derivative, pn_sample, t_decomposition
from ..mcmc import SamplerConfig, run_replicas, dump_series_csv
from ..theory import QuadratureRule, TheorySolution, solve_theory, delta_sq_prediction
from ..estimators import nu_overlap_moments, delta_sq_estimate
from ..estimators import self_averaging_scan, clt_moment_check, pn_vs_phi_scan
from ..estimators import energy_derivative_scan, variance_components_check, cavity_derivative_check
from ..estimators import ScanResult, ScanRow, write_scan_csv, draw_disorder
from ..utils import derive_seed

from .records import RunConfig, ResultRecord


from .. import __version__ as VERSION


def theory_solution(params: ModelParams, quad_order: int = None, variant: str = 'proof',
                    with_beta_at: bool = False, strict: bool = True) -> TheorySolution:
    return solve_theory(params=params, rule=QuadratureRule(order=quad_order), variant=variant,
                        strict=strict, with_beta_at=with_beta_at)


def cmd_theory(p: int, beta: float, h: float, quad_order: int = None, variant: str = 'proof',
               with_beta_at: bool = False) -> str:
    """ TheorySolution as JSON text """
    params = ModelParams.theory_only(p=p, beta=beta, h=h)
    solution = theory_solution(params=params, quad_order=quad_order, variant=variant, with_beta_at=with_beta_at)
    return json_encode(obj=solution.dictionary)


def cmd_exact(params: ModelParams, seed: int, two_point: bool = False, method: str = 'table',
              index: int = 0) -> dict:
    d = draw_disorder(params=params, seed=seed, index=index)
    summary = exact_summary(d=d, params=params, want_two_point=two_point, method=method)
    info = summary.to_dict()
    info['disorder_seed'] = d.seed
    info['p_N'] = summary.log_z / params.n
    info['energy_derivative'] = energy_derivative(d=d, params=params, summary=summary)
    return info


def cmd_mcmc(params: ModelParams, sampler: SamplerConfig, replicas: int = 2, index: int = 0,
             series_path: Optional[str] = None) -> dict:
    d = draw_disorder(params=params, seed=sampler.seed, index=index)
    series = run_replicas(d=d, params=params, n_replicas=replicas, cfg=sampler)
    if series_path is not None:
        dump_series_csv(series=series, path=series_path)
    pairs = []
    for pair in sorted(series.keys()):
        s = series[pair]
        pairs.append({
            'pair': list(pair),
            'mean': s.mean(),
            'std_err': s.std_err(),
            'tau': s.tau,
            'ess': s.ess,
            'length': len(s),
        })
    return {'disorder_seed': d.seed, 'sampler': sampler.to_dict(), 'pairs': pairs}


SCANS = {
    'self_averaging': self_averaging_scan,
    'clt_moments': clt_moment_check,
    'pn_vs_phi': pn_vs_phi_scan,
    'energy_derivative': energy_derivative_scan,
    'variance_components': variance_components_check,
}


def cmd_scan(stat: str, params: ModelParams, ns: List[int], n_disorder: int, seed: int,
             engine: str = 'exact', ks: List[int] = None, sampler: SamplerConfig = None) -> ScanResult:
    fn = SCANS.get(stat)
    if fn is None:
        raise ValidationError('unknown scan %r, expected one of %s' % (stat, sorted(SCANS.keys())))
    kwargs = {}
    if stat in ('self_averaging', 'clt_moments'):
        kwargs['engine'] = engine
        if engine == 'mcmc' and sampler is not None:
            kwargs['sampler'] = sampler
    if stat == 'clt_moments':
        kwargs['ks'] = ks or [1, 2, 3, 4]
    return fn(params=params, ns=ns, n_disorder=n_disorder, seed=seed, **kwargs)


#
#   Batch runs
#

def _sampler(config: RunConfig, seed: int) -> Optional[SamplerConfig]:
    info = config.engine.get('sampler')
    if info is None:
        return None
    return SamplerConfig.from_dict(info=info, seed=seed)


def _rows_payload(result: ScanResult) -> Tuple[dict, List[ScanRow]]:
    return result.to_dict(), result.rows


def _op_theory(config: RunConfig, params: ModelParams, estimator: dict):
    solution = theory_solution(params=params, quad_order=estimator.get('quad_order'),
                               variant=estimator.get('variant', 'proof'),
                               with_beta_at=bool(estimator.get('beta_at', False)))
    return solution.dictionary, None


def _op_exact_summary(config: RunConfig, params: ModelParams, estimator: dict):
    info = cmd_exact(params=params, seed=config.seed, two_point=bool(estimator.get('two_point', False)),
                     method=config.engine.get('method', 'table'), index=int(estimator.get('index', 0)))
    return info, None


def _op_pn_sample(config: RunConfig, params: ModelParams, estimator: dict):
    index = int(estimator.get('index', 0))
    return {'p_N': pn_sample(params=params, seed=derive_seed(config.seed, 0, index))}, None


def _op_t_decomposition(config: RunConfig, params: ModelParams, estimator: dict):
    index = int(estimator.get('index', 0))
    d = draw_disorder(params=params, seed=config.seed, index=index)
    summary = exact_summary(d=d, params=params, want_two_point=params.p == 3)
    c1, c2 = exact_replica_sample(summary=summary, count=2, seed=derive_seed(config.seed, 2, index))
    q = theory_solution(params=params, strict=False).q
    result = t_decomposition(d=d, params=params, c1=c1, c2=c2, q=q, summary=summary)
    return result.to_dict(), None


def _op_mcmc_overlap(config: RunConfig, params: ModelParams, estimator: dict):
    sampler = _sampler(config, seed=config.seed)
    if sampler is None:
        sampler = SamplerConfig(kind='glauber', sweeps=int(estimator.get('sweeps', 2000)), seed=config.seed)
    return cmd_mcmc(params=params, sampler=sampler, replicas=int(estimator.get('replicas', 2)),
                    index=int(estimator.get('index', 0))), None


def _op_nu_overlap_moments(config: RunConfig, params: ModelParams, estimator: dict):
    ks = estimator.get('ks', [1, 2])
    result = nu_overlap_moments(params=params, ks=ks, n_disorder=int(estimator.get('n_disorder', 100)),
                                seed=config.seed, engine=config.engine.get('kind', 'exact'),
                                sampler=_sampler(config, seed=config.seed))
    return {str(k): v.to_dict() for k, v in sorted(result.items())}, None


def _op_delta_sq_estimate(config: RunConfig, params: ModelParams, estimator: dict):
    estimate = delta_sq_estimate(params=params, n_disorder=int(estimator.get('n_disorder', 100)),
                                 seed=config.seed, engine=config.engine.get('kind', 'exact'),
                                 quadruples=int(estimator.get('quadruples', 4000)),
                                 sampler=_sampler(config, seed=config.seed))
    solution = theory_solution(params=params, strict=False)
    prediction = None
    if solution.at_margin > 0:
        prediction = delta_sq_prediction(n=params.n, params=params, q=solution.q, q4=solution.q_hat(4),
                                         margin=solution.at_margin)
    return {'estimate': estimate.to_dict(), 'prediction': prediction}, None


def _scan_op(stat: str):
    def op(config: RunConfig, params: ModelParams, estimator: dict):
        ns = estimator.get('ns')
        if not isinstance(ns, list):
            raise ValidationError('estimator.ns must be a list of sizes')
        result = cmd_scan(stat=stat, params=params, ns=ns, n_disorder=int(estimator.get('n_disorder', 100)),
                          seed=config.seed, engine=config.engine.get('kind', 'exact'), ks=estimator.get('ks'),
                          sampler=_sampler(config, seed=config.seed))
        return _rows_payload(result)
    return op


def _op_cavity(config: RunConfig, params: ModelParams, estimator: dict):
    rows = cavity_derivative_check(params=params, t_grid=estimator.get('t_grid', [0.25, 0.5, 0.75]),
                                   n_disorder=int(estimator.get('n_disorder', 100)), seed=config.seed,
                                   delta=float(estimator.get('delta', 0.02)))
    return {'rows': [row.to_dict() for row in rows]}, None


OPERATIONS: Dict[str, Callable] = {
    'theory': _op_theory,
    'exact_summary': _op_exact_summary,
    'pn_sample': _op_pn_sample,
    't_decomposition': _op_t_decomposition,
    'mcmc_overlap': _op_mcmc_overlap,
    'nu_overlap_moments': _op_nu_overlap_moments,
    'delta_sq_estimate': _op_delta_sq_estimate,
    'self_averaging_scan': _scan_op('self_averaging'),
    'clt_moment_check': _scan_op('clt_moments'),
    'pn_vs_phi_scan': _scan_op('pn_vs_phi'),
    'energy_derivative_scan': _scan_op('energy_derivative'),
    'variance_components_check': _scan_op('variance_components'),
    'cavity_derivative_check': _op_cavity,
}


def execute(config: RunConfig) -> Tuple[ResultRecord, Optional[List[ScanRow]]]:
    op = OPERATIONS.get(config.op)
    if op is None:
        raise ValidationError('unknown operation %r, expected one of %s' % (config.op, sorted(OPERATIONS.keys())))
    params = config.model
    start = time.perf_counter()
    payload, rows = op(config, params, config.estimator)
    elapsed = time.perf_counter() - start
    flags = theory_solution(params=params, strict=False)
    record = ResultRecord.create(config=config, version=VERSION, elapsed=elapsed, payload=payload,
                                 rigorous_regime=bool(flags.inside_H), at_region=bool(flags.at_margin > 0))
    if not flags.inside_H:
        Log.warning(msg='outside rigorous regime: beta = %g > beta_H = %g' % (params.beta, flags.beta_H))
    return record, rows


def cmd_run(config_path: str, root: str) -> Tuple[ResultRecord, str]:
    """ execute a RunConfig file and persist its record; returns (record, output path) """
    config = RunConfig.load(path=config_path)
    record, rows = execute(config=config)
    path = config.output_path(root=root)
    folder = os.path.dirname(path)
    if len(folder) > 0:
        os.makedirs(folder, exist_ok=True)
    if config.output_format == 'csv':
        if rows is None:
            raise ValidationError('operation %s has no tabular output; use format "json"' % config.op)
        write_scan_csv(rows=rows, path=path)
        record.save(path='%s.record.json' % path)
    else:
        record.save(path=path)
    Log.info(msg='run %s done in %.3fs -> %s' % (config.op, record.get(key='elapsed'), path))
    return record, path


def replay(record: ResultRecord) -> bool:
    """ re-execute the embedded config and compare payload bytes """
    again, _ = execute(config=record.config)
    return again.payload_text() == record.payload_text()
