#! /usr/bin/env python3
# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    p-spin toolkit
    ~~~~~~~~~~~~~~

    Command line entry: theory, run, verify, exact, mcmc, scan
"""

import getopt
import sys
from typing import List, Optional

from dimples.utils import Path

path = Path.abs(path=__file__)
path = Path.dir(path=path)
path = Path.dir(path=path)
Path.add(path=path)

from libs.utils import Log
from libs.utils import json_encode
from libs.common import ToolkitError, ValidationError
from libs.model import ModelParams
from libs.mcmc import SamplerConfig
from libs.estimators import write_scan_csv
from libs.cli import VERSION, parse_int_list
from libs.cli import cmd_theory, cmd_run, cmd_exact, cmd_mcmc, cmd_scan, cmd_verify

from runners.shared import GlobalVariable
from runners.shared import show_help, parse_options, create_config, default_config_path


APP_NAME = 'p-spin toolkit %s' % VERSION

# exit code of a verify run with at least one failing criterion
VERIFY_FAILED = 2


def _int(options: dict, key: str, default: Optional[int] = None) -> Optional[int]:
    text = options.get(key)
    if text is None:
        return default
    try:
        return int(text)
    except ValueError:
        raise ValidationError('--%s expects an integer, got %r' % (key, text))


def _float(options: dict, key: str) -> float:
    text = options.get(key)
    if text is None:
        raise ValidationError('--%s is required' % key)
    try:
        return float(text)
    except ValueError:
        raise ValidationError('--%s expects a number, got %r' % (key, text))


def _seed(options: dict) -> int:
    seed = _int(options, 'seed')
    if seed is None:
        raise ValidationError('--seed is required')
    return seed


def _params(options: dict) -> ModelParams:
    n = _int(options, 'N')
    if n is None:
        raise ValidationError('--N is required')
    return ModelParams(n=n, p=_int(options, 'p'), beta=_float(options, 'beta'), h=_float(options, 'h'))


def _sampler(options: dict, seed: int) -> SamplerConfig:
    return SamplerConfig(kind=options.get('kind', 'glauber'), sweeps=_int(options, 'sweeps', 10000), seed=seed,
                         burn_in_sweeps=_int(options, 'burn-in'), random_scan='random-scan' in options)


#
#   Subcommands
#

def run_theory(options: dict, args: List[str]) -> int:
    p = _int(options, 'p')
    if p is None:
        raise ValidationError('--p is required')
    text = cmd_theory(p=p, beta=_float(options, 'beta'), h=_float(options, 'h'),
                      quad_order=_int(options, 'quad-order'), variant=options.get('a2-variant', 'proof'),
                      with_beta_at='beta-at' in options)
    print(text)
    return 0


def run_config(options: dict, args: List[str]) -> int:
    if len(args) != 1:
        raise ValidationError('run expects exactly one config file, got %d' % len(args))
    root = options.get('out', GlobalVariable().output_root)
    record, out = cmd_run(config_path=args[0], root=root)
    print(out)
    return 0


def run_verify(options: dict, args: List[str]) -> int:
    level = 'full' if 'full' in options else 'quick'
    seed = _seed(options)
    report = cmd_verify(level=level, seed=seed, variant=options.get('a2-variant', 'proof'))
    for item in report['criteria']:
        print('%2d. %-28s %s  margin=%+.3g  (%.1fs)' % (
            item['criterion'], item['name'], item['status'].upper(), item['margin'], item['elapsed']
        ))
    out = options.get('out')
    if out is not None:
        with open(out, 'w') as file:
            file.write(json_encode(obj=report))
    if report['passed']:
        print('all criteria passed (%s)' % level)
        return 0
    if len(report['failed']) == 0:
        print('no criterion failed, %d inconclusive (%s): %s' % (
            len(report['inconclusive']), level, report['inconclusive']
        ))
        return 0
    Log.error(msg='acceptance failed at level %s' % level)
    return VERIFY_FAILED


def run_exact(options: dict, args: List[str]) -> int:
    info = cmd_exact(params=_params(options), seed=_seed(options), two_point='two-point' in options,
                     method=options.get('method', 'table'), index=_int(options, 'index', 0))
    print(json_encode(obj=info))
    return 0


def run_mcmc(options: dict, args: List[str]) -> int:
    seed = _seed(options)
    info = cmd_mcmc(params=_params(options), sampler=_sampler(options, seed=seed),
                    replicas=_int(options, 'replicas', 2), index=_int(options, 'index', 0),
                    series_path=options.get('out'))
    print(json_encode(obj=info))
    return 0


def run_scan(options: dict, args: List[str]) -> int:
    stat = options.get('stat')
    ns = parse_int_list(options.get('ns'))
    if stat is None or ns is None:
        raise ValidationError('scan needs --stat and --ns')
    seed = _seed(options)
    params = ModelParams(n=ns[0], p=_int(options, 'p'), beta=_float(options, 'beta'), h=_float(options, 'h'))
    engine = options.get('engine', 'exact')
    sampler = _sampler(options, seed=seed) if engine == 'mcmc' else None
    result = cmd_scan(stat=stat, params=params, ns=ns, n_disorder=_int(options, 'n-disorder', 100), seed=seed,
                      engine=engine, ks=parse_int_list(options.get('ks')), sampler=sampler)
    out = options.get('out')
    fmt = options.get('format', 'csv')
    if fmt not in ('csv', 'json'):
        raise ValidationError('--format must be csv or json: %r' % fmt)
    if fmt == 'json':
        text = json_encode(obj=result.to_dict())
        if out is None:
            print(text)
        else:
            with open(out, 'w') as file:
                file.write(text)
    elif out is None:
        write_scan_csv(rows=result.rows, path='/dev/stdout')
    else:
        write_scan_csv(rows=result.rows, path=out)
    return 0


COMMANDS = {
    'theory': run_theory,
    'run': run_config,
    'verify': run_verify,
    'exact': run_exact,
    'mcmc': run_mcmc,
    'scan': run_scan,
}


DEFAULT_CONFIG = default_config_path()


def main(argv: List[str] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        options, args = parse_options(argv=argv)
    except getopt.GetoptError as error:
        show_help(app_name=APP_NAME, default_config=DEFAULT_CONFIG)
        print('!!! %s' % error)
        return 1
    if 'help' in options or len(args) == 0:
        show_help(app_name=APP_NAME, default_config=DEFAULT_CONFIG)
        return 0 if 'help' in options else 1
    name = args[0]
    command = COMMANDS.get(name)
    if command is None:
        show_help(app_name=APP_NAME, default_config=DEFAULT_CONFIG)
        print('!!! unknown command: %s' % name)
        return 1
    if create_config(ini_file=options.get('config'), app_name=APP_NAME, default_config=DEFAULT_CONFIG) is None:
        return 1
    try:
        return command(options, args[1:])
    except ToolkitError as error:
        Log.error(msg='%s failed: %s' % (name, error))
        print('!!! %s: %s' % (error.kind, error))
        return error.exit_code


if __name__ == '__main__':
    sys.exit(main())
