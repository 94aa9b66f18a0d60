"""
Unit tests for deterministic seed derivation.
"""

import numpy as np
import pytest

from src.utils.seeding import derive_seed, make_rng, spawn_seeds


class TestDeriveSeed:
    def test_stable(self):
        assert derive_seed(7, "rd", 3) == derive_seed(7, "rd", 3)

    def test_keys_matter(self):
        seeds = {derive_seed(7, "rd", 3), derive_seed(7, "rd", 4), derive_seed(7, "bf", 3), derive_seed(8, "rd", 3)}
        assert len(seeds) == 4

    def test_key_types_matter(self):
        assert derive_seed(1, "rd", 1) != derive_seed(1, "rd", "1")

    def test_range(self):
        for i in range(50):
            assert 0 <= derive_seed(i, "x") < 2 ** 63


class TestMakeRng:
    def test_same_keys_same_stream(self):
        a = make_rng(3, "search", 0).integers(0, 1000, size=10)
        b = make_rng(3, "search", 0).integers(0, 1000, size=10)
        assert a.tolist() == b.tolist()

    def test_different_keys_different_stream(self):
        a = make_rng(3, "search", 0).random(5)
        b = make_rng(3, "search", 1).random(5)
        assert not np.allclose(a, b)

    def test_bare_master_seed(self):
        assert make_rng(5).random() == np.random.default_rng(5).random()

    def test_spawn_seeds(self):
        seeds = spawn_seeds(np.random.default_rng(0), 4)
        assert len(seeds) == 4
        assert seeds == spawn_seeds(np.random.default_rng(0), 4)
        assert all(isinstance(s, int) for s in seeds)

    @pytest.mark.parametrize("count", [0, 1])
    def test_spawn_small_counts(self, count):
        assert len(spawn_seeds(np.random.default_rng(1), count)) == count
