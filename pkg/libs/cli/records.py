# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import os
from typing import Optional, List

from dimples import Dictionary
from dimples.utils import json_encode, json_decode

from ..common import ValidationError
from ..model import ModelParams
from ..utils import check_seed


SCHEMA_VERSION = 1

OUTPUT_FORMATS = ('json', 'csv')


class RunConfig(Dictionary):
    """
        Batch run description:

            {
                "schema": 1,
                "seed": 7,
                "model": {"N": 12, "p": 3, "beta": 0.0586, "h": 0.5},
                "engine": {"kind": "exact", "method": "table", "sampler": {...}},
                "estimator": {"op": "self_averaging_scan", "ns": [8, 10, 12], "n_disorder": 100},
                "output": {"path": "/tmp/pspin/scan.csv", "format": "csv"}
            }
    """

    @classmethod
    def load(cls, path: str):
        if not os.path.exists(path):
            raise ValidationError('config file not found: %s' % path)
        with open(path, 'r') as file:
            text = file.read()
        return cls.parse(text=text)

    @classmethod
    def parse(cls, text: str):
        try:
            info = json_decode(string=text)
        except ValueError as error:
            raise ValidationError('config is not valid JSON: %s' % error)
        if not isinstance(info, dict):
            raise ValidationError('config must be a JSON object')
        config = cls(dictionary=info)
        config.validate()
        return config

    def validate(self):
        schema = self.get(key='schema')
        if schema != SCHEMA_VERSION:
            raise ValidationError('unsupported config schema: %r' % (schema,))
        check_seed(self.get(key='seed'))
        ModelParams.from_dict(self.get(key='model'))
        estimator = self.estimator
        if not isinstance(estimator.get('op'), str):
            raise ValidationError('estimator.op missing')
        engine = self.engine.get('kind', 'exact')
        if engine not in ('exact', 'mcmc'):
            raise ValidationError('engine.kind must be exact or mcmc: %r' % engine)
        fmt = self.output.get('format', 'json')
        if fmt not in OUTPUT_FORMATS:
            raise ValidationError('output.format must be one of %s: %r' % (OUTPUT_FORMATS, fmt))

    @property
    def seed(self) -> int:
        return check_seed(self.get(key='seed'))

    @property
    def model(self) -> ModelParams:
        return ModelParams.from_dict(self.get(key='model'))

    @property
    def engine(self) -> dict:
        return self.get(key='engine', default={}) or {}

    @property
    def estimator(self) -> dict:
        value = self.get(key='estimator')
        if not isinstance(value, dict):
            raise ValidationError('estimator section missing')
        return value

    @property
    def output(self) -> dict:
        return self.get(key='output', default={}) or {}

    @property
    def op(self) -> str:
        return self.estimator['op']

    @property
    def output_format(self) -> str:
        return self.output.get('format', 'json')

    def output_path(self, root: str) -> str:
        path = self.output.get('path')
        if path is None:
            extension = 'csv' if self.output_format == 'csv' else 'json'
            path = os.path.join(root, '%s-%d.%s' % (self.op, self.seed, extension))
        return path


class ResultRecord(Dictionary):
    """ config echo, toolkit version, timing, payload and regime flags """

    @classmethod
    def create(cls, config: RunConfig, version: str, elapsed: float, payload: dict,
               rigorous_regime: bool, at_region: bool):
        info = {
            'schema': SCHEMA_VERSION,
            'version': version,
            'config': config.dictionary,
            'elapsed': elapsed,
            'payload': payload,
            'rigorous_regime': rigorous_regime,
            'at_region': at_region,
        }
        return cls(dictionary=info)

    @property
    def config(self) -> RunConfig:
        return RunConfig(dictionary=self.get(key='config'))

    @property
    def payload(self) -> dict:
        return self.get(key='payload')

    @property
    def rigorous_regime(self) -> bool:
        return self.get(key='rigorous_regime')

    @property
    def at_region(self) -> bool:
        return self.get(key='at_region')

    def payload_text(self) -> str:
        return json_encode(obj=self.payload)

    def save(self, path: str):
        folder = os.path.dirname(path)
        if len(folder) > 0:
            os.makedirs(folder, exist_ok=True)
        with open(path, 'w') as file:
            file.write(json_encode(obj=self.dictionary))

    @classmethod
    def load(cls, path: str):
        if not os.path.exists(path):
            raise ValidationError('record not found: %s' % path)
        with open(path, 'r') as file:
            info = json_decode(string=file.read())
        if not isinstance(info, dict):
            raise ValidationError('record is not a JSON object: %s' % path)
        return cls(dictionary=info)


def parse_int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(item) for item in text.split(',') if len(item.strip()) > 0]
    except ValueError:
        raise ValidationError('expected a comma-separated list of integers: %r' % text)


def parse_float_list(text: Optional[str]) -> Optional[List[float]]:
    if text is None:
        return None
    try:
        return [float(item) for item in text.split(',') if len(item.strip()) > 0]
    except ValueError:
        raise ValidationError('expected a comma-separated list of numbers: %r' % text)
