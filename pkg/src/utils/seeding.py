"""
Deterministic Seed Derivation
=============================

Every random decision in netgroups flows from one master seed. Child seeds
are derived by hashing the master seed together with a tuple of keys
(method name, run index, iteration, ...), so adding runs or changing the
degree of parallelism never perturbs the streams of existing runs.

Usage:
------
    >>> from src.utils.seeding import derive_seed, make_rng
    >>> run_seed = derive_seed(7, "rd", 3)
    >>> rng = make_rng(run_seed, "sample")
"""

import hashlib
from typing import Any

import numpy as np

_SEED_MASK = (1 << 63) - 1


def derive_seed(master: int, *keys: Any) -> int:
    """
    Derive a 63-bit child seed from a master seed and a key path.

    The keys are rendered with repr() so that ("rd", 1) and ("rd", "1")
    produce different streams.
    """
    payload = repr((int(master),) + tuple(keys)).encode("utf-8")
    digest = hashlib.blake2b(payload, digest_size=8).digest()
    return int.from_bytes(digest, "big") & _SEED_MASK


def make_rng(master: int, *keys: Any) -> np.random.Generator:
    """Return an independent numpy Generator for (master, *keys)."""
    if not keys:
        return np.random.default_rng(int(master) & _SEED_MASK)
    return np.random.default_rng(derive_seed(master, *keys))


def spawn_seeds(rng: np.random.Generator, count: int) -> list:
    """Draw `count` child seeds up front from a parent generator."""
    return [int(x) for x in rng.integers(0, _SEED_MASK, size=count, dtype=np.int64)]
