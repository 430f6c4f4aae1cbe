# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import getopt
import os
import sys
from typing import List, Optional, Tuple

from dimples.utils import Config
from dimples.utils import Path

from libs.utils import Singleton
from libs.cli import apply_settings


@Singleton
class GlobalVariable:

    def __init__(self):
        super().__init__()
        self.__config: Optional[Config] = None
        self.__output_root: Optional[str] = None

    @property
    def config(self) -> Config:
        return self.__config

    @property
    def output_root(self) -> str:
        return self.__output_root

    def prepare(self, config: Config):
        self.__config = config
        self.__output_root = apply_settings(config=config)


def default_config_path() -> str:
    """ etc/config.ini next to the runners directory """
    path = Path.abs(path=__file__)
    path = Path.dir(path=path)
    path = Path.dir(path=path)
    return os.path.join(path, 'etc', 'config.ini')


SUBCOMMANDS = [
    ('theory', '--p P --beta B --h H [--quad-order K] [--a2-variant proof|printed] [--beta-at]'),
    ('run', '<config.json> [--out ROOT]'),
    ('verify', '[--quick|--full] --seed S [--a2-variant proof|printed]'),
    ('exact', '--N N --p P --beta B --h H --seed S [--two-point] [--method table|gray] [--index I]'),
    ('mcmc', '--N N --p P --beta B --h H --seed S [--sweeps T] [--kind K] [--replicas R] [--out CSV]'),
    ('scan', '--stat S --ns 8,10,12 --p P --beta B --h H --seed S --n-disorder D'
             ' [--engine exact|mcmc] [--ks 1,2] [--out PATH] [--format csv|json]'),
]

LONG_OPTIONS = [
    'help', 'config=',
    'p=', 'beta=', 'h=', 'N=', 'seed=', 'index=',
    'quad-order=', 'a2-variant=', 'beta-at',
    'n-disorder=', 'engine=', 'out=', 'format=',
    'ns=', 'ks=', 'stat=',
    'sweeps=', 'burn-in=', 'replicas=', 'kind=', 'random-scan',
    'two-point', 'method=',
    'quick', 'full',
]


def show_help(app_name: str, default_config: str):
    cmd = sys.argv[0]
    print('')
    print('    %s' % app_name)
    print('')
    print('usages:')
    for name, usage in SUBCOMMANDS:
        print('    %s %s %s' % (cmd, name, usage))
    print('    %s [-h|--help]' % cmd)
    print('')
    print('optional arguments:')
    print('    --config        config file path (default: "%s")' % default_config)
    print('    --help, -h      show this help message and exit')
    print('')
    print('environment:')
    print('    PSPIN_WORKERS   worker threads for disorder averages (default: CPU count)')
    print('')
    print('exit codes: 0 ok, 1 usage/validation, 2 numerical/regime/failed check, 3 resource gate')
    print('')


def parse_options(argv: List[str]) -> Tuple[dict, List[str]]:
    """ long options into a dict keyed without dashes; raises getopt.GetoptError """
    opts, args = getopt.gnu_getopt(args=argv, shortopts='h', longopts=LONG_OPTIONS)
    options = {}
    for opt, arg in opts:
        if opt == '-h':
            opt = '--help'
        options[opt[2:]] = arg
    return options, args


def create_config(ini_file: Optional[str], app_name: str, default_config: str) -> Optional[Config]:
    """ load config.ini and apply it; None when the file is missing """
    if ini_file is None:
        ini_file = default_config
    if not os.path.isfile(ini_file):
        show_help(app_name=app_name, default_config=default_config)
        print('')
        print('!!! config file not exists: %s' % ini_file)
        print('')
        return None
    config = Config.load(file=ini_file)
    GlobalVariable().prepare(config=config)
    return config
