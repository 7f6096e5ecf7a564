# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Test-specific scale settings."""

from dataclasses import dataclass
import os


@dataclass
class TestSettings:
    exhaustive_ranks: tuple
    exhaustive_depth: int
    verify_depth: int
    sample_size: int
    sample_seed: int


def get_test_settings() -> TestSettings:
    """Scales for the exhaustive sweeps; GKCRYSTAL_TEST_DEPTH shrinks them for quick runs."""
    depth = int(os.getenv("GKCRYSTAL_TEST_DEPTH", "6"))
    return TestSettings(
        exhaustive_ranks=(1, 2, 3),
        exhaustive_depth=depth,
        verify_depth=depth,
        sample_size=int(os.getenv("GKCRYSTAL_TEST_SAMPLES", "10000")),
        sample_seed=20250417,
    )
