"""Bundled sample data."""

from importlib import resources
from pathlib import Path


def constants_sample_path() -> Path:
    """CSV of 183 synthetic physical-constant-style values whose first-digit
    census is (63, 37, 18, 15, 15, 13, 7, 7, 8) for digits 1..9."""
    return Path(resources.files("benfordkit").joinpath("data/constants_sample.csv"))
