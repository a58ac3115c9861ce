"""Reading and writing game description files.

A game file is a single JSON document::

    {
      "quota": 3,
      "weights": [1, 2, 2, 1],
      "labels": ["a", "b", "c", "d"],          # optional
      "configuration": [[1, 2, 3], [2, 3], [3, 4]]
    }

Player indices in ``configuration`` are 1-based (matching the usual notation
for voting bodies); the conversion to the library's 0-based representation
happens here and only here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .model import (
    CoalitionConfiguration,
    ConfiguredGame,
    WeightedMajorityGame,
    validate,
)


class GameFileError(ValueError):
    """Malformed game file; the message carries the position when known."""


@dataclass(frozen=True)
class GameFile:
    """The raw, 1-based content of a game description file."""

    quota: int
    weights: tuple[int, ...]
    labels: tuple[str, ...] | None
    configuration: tuple[tuple[int, ...], ...]


def _require_int(value, what: str):
    if isinstance(value, bool) or not isinstance(value, int):
        raise GameFileError(f"{what} must be an integer, got {value!r}")
    return value


def parse_game_json(text: str, source: str = "<string>") -> GameFile:
    """Parse a JSON game description (schema check only, no game semantics)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GameFileError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise GameFileError(f"{source}: top level must be a JSON object")
    for key in ("quota", "weights", "configuration"):
        if key not in doc:
            raise GameFileError(f"{source}: missing required key {key!r}")
    unknown = set(doc) - {"quota", "weights", "labels", "configuration"}
    if unknown:
        raise GameFileError(f"{source}: unknown keys {sorted(unknown)}")

    quota = _require_int(doc["quota"], "quota")
    weights_raw = doc["weights"]
    if not isinstance(weights_raw, list) or not weights_raw:
        raise GameFileError(f"{source}: 'weights' must be a nonempty array")
    weights = tuple(_require_int(w, "weight") for w in weights_raw)

    labels = None
    if doc.get("labels") is not None:
        labels_raw = doc["labels"]
        if not isinstance(labels_raw, list) or not all(
            isinstance(s, str) for s in labels_raw
        ):
            raise GameFileError(f"{source}: 'labels' must be an array of strings")
        if len(labels_raw) != len(weights):
            raise GameFileError(
                f"{source}: {len(labels_raw)} labels for {len(weights)} players"
            )
        labels = tuple(labels_raw)

    config_raw = doc["configuration"]
    if not isinstance(config_raw, list) or not config_raw:
        raise GameFileError(f"{source}: 'configuration' must be a nonempty array")
    blocks = []
    for b, block in enumerate(config_raw):
        if not isinstance(block, list):
            raise GameFileError(f"{source}: block {b + 1} must be an array")
        blocks.append(tuple(_require_int(i, f"player in block {b + 1}") for i in block))

    return GameFile(
        quota=quota,
        weights=weights,
        labels=labels,
        configuration=tuple(blocks),
    )


def to_configured_game(gf: GameFile) -> ConfiguredGame:
    """1-based file content -> validated 0-based ConfiguredGame."""
    game = WeightedMajorityGame(gf.weights, gf.quota, gf.labels)
    config = CoalitionConfiguration([[i - 1 for i in block] for block in gf.configuration])
    return validate(game, config)


def from_configured_game(cg: ConfiguredGame) -> GameFile:
    """ConfiguredGame -> canonical (sorted-block) 1-based file content."""
    return GameFile(
        quota=cg.game.quota,
        weights=cg.game.weights,
        labels=cg.game.labels,
        configuration=tuple(
            tuple(sorted(i + 1 for i in block)) for block in cg.config.blocks
        ),
    )


def serialize_game_file(gf: GameFile) -> str:
    """Canonical JSON rendering (stable key order, 2-space indent)."""
    doc: dict = {"quota": gf.quota, "weights": list(gf.weights)}
    if gf.labels is not None:
        doc["labels"] = list(gf.labels)
    doc["configuration"] = [list(block) for block in gf.configuration]
    return json.dumps(doc, indent=2) + "\n"


def load_game_file(path: str | Path) -> GameFile:
    path = Path(path)
    return parse_game_json(path.read_text(encoding="utf-8"), source=str(path))


def load_configured_game(path: str | Path) -> ConfiguredGame:
    return to_configured_game(load_game_file(path))


def save_game_file(gf: GameFile, path: str | Path) -> None:
    Path(path).write_text(serialize_game_file(gf), encoding="utf-8")


def labels_or_default(gf: GameFile) -> Sequence[str]:
    if gf.labels is not None:
        return gf.labels
    return [f"player {i + 1}" for i in range(len(gf.weights))]
