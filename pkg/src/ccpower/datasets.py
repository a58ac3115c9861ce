"""Bundled game description files.

* ``example35`` -- a 4-player game [3; 1, 2, 2, 1] with three overlapping
  blocks, small enough to verify every intermediate table by hand.
* ``eu28`` -- the European Parliament after the 2013 accession (28 member
  states, 751 seats, simple-majority quota 376), with a 6-block cover that
  groups the states geographically (4 blocks) and by GDP per capita
  (2 further blocks; the third economic group coincides with one of the
  geographic blocks and a cover contains each distinct block once).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .gamefile import load_configured_game
from .model import ConfiguredGame

DATASET_NAMES = ("example35", "eu28")


def dataset_path(name: str) -> Path:
    """Filesystem path of a bundled dataset (usable as a CLI argument)."""
    if name not in DATASET_NAMES:
        raise KeyError(f"unknown dataset {name!r}; available: {DATASET_NAMES}")
    return Path(str(resources.files(__package__) / "data" / f"{name}.json"))


def load(name: str) -> ConfiguredGame:
    """Load and validate a bundled dataset."""
    return load_configured_game(dataset_path(name))
