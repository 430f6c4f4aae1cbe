# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Deterministic Random Streams
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Every random quantity is a pure function of (seed, path): disorder values
    are read word by word from a Philox counter stream keyed by the seed, and
    per-task generators are spawned from a SeedSequence with the task path as
    spawn key. No wall-clock seeding anywhere.
"""

from typing import Any

import numpy as np
from scipy.special import ndtri

from ..common import ValidationError


SEED_LIMIT = 1 << 64

_DOUBLE_SCALE = 2.0 ** -53


def check_seed(seed: Any) -> int:
    if seed is None:
        raise ValidationError('seed missing: every run must be seeded explicitly')
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValidationError('seed must be an integer: %r' % (seed,))
    seed = int(seed)
    if seed < 0 or seed >= SEED_LIMIT:
        raise ValidationError('seed out of 64-bit range: %d' % seed)
    return seed


def derive_seed(seed: int, *path: int) -> int:
    """ 64-bit child seed for the task at `path` """
    seq = np.random.SeedSequence(entropy=check_seed(seed), spawn_key=tuple(int(i) for i in path))
    lo, hi = seq.generate_state(2, dtype=np.uint32)
    return (int(hi) << 32) | int(lo)


def derive_rng(seed: int, *path: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=check_seed(seed), spawn_key=tuple(int(i) for i in path))
    return np.random.Generator(np.random.Philox(seq))


def philox_words(seed: int, count: int) -> np.ndarray:
    """ first `count` raw 64-bit words of the Philox stream keyed by `seed` """
    bit_generator = np.random.Philox(key=check_seed(seed))
    if count <= 0:
        return np.zeros(0, dtype=np.uint64)
    return np.asarray(bit_generator.random_raw(size=count), dtype=np.uint64)


def standard_normals(seed: int, count: int) -> np.ndarray:
    """
        Standard normal values, the r-th one depending only on (seed, r):
        u_r = ((w_r >> 11) + 0.5) / 2^53 lies strictly inside (0, 1),
        and the value is the inverse normal CDF of u_r.
    """
    words = philox_words(seed=seed, count=count)
    uniforms = ((words >> np.uint64(11)).astype(np.float64) + 0.5) * _DOUBLE_SCALE
    return ndtri(uniforms)
