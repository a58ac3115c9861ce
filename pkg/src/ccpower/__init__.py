"""Exact power indices for weighted majority games with coalition configurations.

A coalition configuration is a cover of the player set by (possibly
overlapping) blocks.  This package computes the generalized Banzhaf-Coleman
index and the configuration index of such games exactly, using a
generating-function-style counting engine, and ships a definitional
brute-force oracle for cross-checking.

Quick start::

    from ccpower import WeightedMajorityGame, CoalitionConfiguration, validate
    from ccpower.indices import banzhaf_coleman_cc, configuration_index

    game = WeightedMajorityGame([1, 2, 2, 1], quota=3)
    cover = CoalitionConfiguration([[0, 1, 2], [1, 2], [2, 3]])
    cg = validate(game, cover)
    print(banzhaf_coleman_cc(cg))   # (1/8, 1/4, 3/8, 1/8)
    print(configuration_index(cg))  # (1/9, 5/18, 4/9, 1/6)
"""

from .model import (
    BlockDoesNotContainPlayer,
    CoalitionConfiguration,
    ConfiguredGame,
    DuplicateBlock,
    DuplicatePlayer,
    EmptyBlock,
    GameError,
    NonpositiveQuota,
    NotACover,
    PlayerId,
    PlayerOutOfRange,
    QuotaUnreachable,
    WeightedMajorityGame,
    evaluate,
    membership,
    validate,
)
from .genfun import TriCounts, WeightCounts, tri_counts, weight_counts
from .indices import (
    IndexReport,
    PlayerPower,
    Rational,
    SwingCounts,
    banzhaf_coleman_cc,
    classical_indices,
    configuration_index,
    index_report,
    normalize,
    swing_counts,
    swing_table,
    swing_window,
)
from .oracle import (
    InstanceTooLarge,
    MarginalRecord,
    enumerate_significant,
    oracle_banzhaf_cc,
    oracle_configuration_index,
)
from .gamefile import (
    GameFile,
    GameFileError,
    from_configured_game,
    load_configured_game,
    load_game_file,
    parse_game_json,
    serialize_game_file,
    to_configured_game,
)
from . import datasets

__version__ = "0.1.0"

__all__ = [
    "BlockDoesNotContainPlayer",
    "CoalitionConfiguration",
    "ConfiguredGame",
    "DuplicateBlock",
    "DuplicatePlayer",
    "EmptyBlock",
    "GameError",
    "GameFile",
    "GameFileError",
    "IndexReport",
    "InstanceTooLarge",
    "MarginalRecord",
    "NonpositiveQuota",
    "NotACover",
    "PlayerId",
    "PlayerOutOfRange",
    "PlayerPower",
    "QuotaUnreachable",
    "Rational",
    "SwingCounts",
    "TriCounts",
    "WeightCounts",
    "WeightedMajorityGame",
    "banzhaf_coleman_cc",
    "classical_indices",
    "configuration_index",
    "datasets",
    "enumerate_significant",
    "evaluate",
    "from_configured_game",
    "index_report",
    "load_configured_game",
    "load_game_file",
    "membership",
    "normalize",
    "oracle_banzhaf_cc",
    "oracle_configuration_index",
    "parse_game_json",
    "serialize_game_file",
    "swing_counts",
    "swing_table",
    "swing_window",
    "to_configured_game",
    "tri_counts",
    "validate",
    "weight_counts",
]
