"""Weighted majority games and coalition configurations.

A weighted majority game ``[q; w_1, ..., w_p]`` gives every player an integer
weight; a coalition wins exactly when its total weight reaches the quota.  A
coalition configuration is a cover of the player set by nonempty blocks --
unlike a partition, blocks may overlap, so a player can sit in several blocks
at once.

Players are indexed 0-based throughout the library.  File formats are 1-based
and converted at the I/O boundary (see :mod:`ccpower.gamefile`).

All types are frozen dataclasses validated at construction; once built they
are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

PlayerId = int
"""0-based player index into a game's weight vector."""


class GameError(ValueError):
    """Base class for every game/configuration validation failure."""


class EmptyBlock(GameError):
    """A configuration block contains no players."""


class NotACover(GameError):
    """Some player belongs to no configuration block."""


class PlayerOutOfRange(GameError):
    """A player index falls outside [0, p)."""


class QuotaUnreachable(GameError):
    """The quota exceeds the total weight, so the grand coalition would lose."""


class NonpositiveQuota(GameError):
    """The quota must be a positive integer."""


class DuplicateBlock(GameError):
    """Two configuration blocks contain exactly the same player set."""


class DuplicatePlayer(GameError):
    """A player is listed more than once inside a single block."""


class BlockDoesNotContainPlayer(GameError):
    """An (i, k) query requires player i to be a member of block k."""


def _as_int(value, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise GameError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class WeightedMajorityGame:
    """A game ``[quota; weights]``: a coalition wins iff its weight >= quota.

    Weights are nonnegative integers (zero-weight null players are allowed),
    the quota is a positive integer no larger than the total weight, so the
    grand coalition always wins.
    """

    weights: tuple[int, ...]
    quota: int
    labels: tuple[str, ...] | None = None

    def __init__(
        self,
        weights: Sequence[int],
        quota: int,
        labels: Sequence[str] | None = None,
    ):
        weights = tuple(_as_int(w, "weight") for w in weights)
        if not weights:
            raise GameError("a game needs at least one player")
        for w in weights:
            if w < 0:
                raise GameError(f"weights must be nonnegative, got {w}")
        _as_int(quota, "quota")
        if quota < 1:
            raise NonpositiveQuota(f"quota must be >= 1, got {quota}")
        if quota > sum(weights):
            raise QuotaUnreachable(
                f"quota {quota} exceeds total weight {sum(weights)}; "
                "the grand coalition could never win"
            )
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(weights):
                raise GameError(
                    f"got {len(labels)} labels for {len(weights)} players"
                )
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "quota", quota)
        object.__setattr__(self, "labels", labels)

    @property
    def num_players(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight_of(self, coalition: Iterable[int]) -> int:
        """Total weight of a coalition (duplicates count once)."""
        members = set(coalition)
        self._check_players(members)
        return sum(self.weights[i] for i in members)

    def label_of(self, i: int) -> str:
        if not 0 <= i < self.num_players:
            raise PlayerOutOfRange(f"player {i} not in [0, {self.num_players})")
        if self.labels is not None:
            return self.labels[i]
        return f"player {i + 1}"

    def _check_players(self, players: Iterable[int]) -> None:
        p = self.num_players
        for i in players:
            if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < p:
                raise PlayerOutOfRange(f"player {i!r} not in [0, {p})")


def evaluate(game: WeightedMajorityGame, coalition: Iterable[int]) -> int:
    """Characteristic function: 1 iff the coalition's weight reaches the quota."""
    return 1 if game.weight_of(coalition) >= game.quota else 0


@dataclass(frozen=True)
class CoalitionConfiguration:
    """An ordered list of nonempty player blocks; blocks may overlap.

    Identical blocks are rejected rather than silently merged: the index
    formulas count blocks by position, so a silent dedup would change
    results without any warning.
    """

    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = []
        for k, block in enumerate(blocks):
            members = list(block)
            for i in members:
                _as_int(i, f"player in block {k + 1}")
            block_set = frozenset(members)
            if not block_set:
                raise EmptyBlock(f"block {k + 1} is empty")
            if len(block_set) != len(members):
                raise DuplicatePlayer(
                    f"block {k + 1} lists some player more than once"
                )
            normalized.append(block_set)
        for k, block_set in enumerate(normalized):
            if block_set in normalized[:k]:
                raise DuplicateBlock(
                    f"block {k + 1} repeats an earlier block: "
                    f"{sorted(x + 1 for x in block_set)}"
                )
        if not normalized:
            raise EmptyBlock("a configuration needs at least one block")
        object.__setattr__(self, "blocks", tuple(normalized))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def covered_players(self) -> frozenset[int]:
        return frozenset().union(*self.blocks)

    def containing(self, i: int) -> tuple[int, ...]:
        """Indices of the blocks that contain player i (never empty in a cover)."""
        found = tuple(k for k, b in enumerate(self.blocks) if i in b)
        if not found:
            raise PlayerOutOfRange(f"player {i!r} is in no block")
        return found

    def not_containing(self, i: int) -> tuple[int, ...]:
        """Indices of the blocks that do not contain player i (the complement)."""
        self.containing(i)  # raises for unknown players
        return tuple(k for k, b in enumerate(self.blocks) if i not in b)

    def is_partition(self) -> bool:
        """True when the blocks are pairwise disjoint."""
        seen: set[int] = set()
        for block in self.blocks:
            if seen & block:
                return False
            seen |= block
        return True


def membership(config: CoalitionConfiguration, i: int) -> tuple[int, ...]:
    """Block indices containing player i; see also ``config.not_containing``."""
    return config.containing(i)


@dataclass(frozen=True)
class ConfiguredGame:
    """A weighted majority game together with a cover of its player set."""

    game: WeightedMajorityGame
    config: CoalitionConfiguration
    # cached per-player block memberships, computed in __post_init__
    _containing: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        p = self.game.num_players
        for k, block in enumerate(self.config.blocks):
            for i in block:
                if not 0 <= i < p:
                    raise PlayerOutOfRange(
                        f"block {k + 1} mentions player {i + 1}, "
                        f"but the game has only {p} players"
                    )
        covered = self.config.covered_players
        missing = sorted(set(range(p)) - covered)
        if missing:
            raise NotACover(
                "players in no block: "
                + ", ".join(str(i + 1) for i in missing)
            )
        object.__setattr__(
            self,
            "_containing",
            tuple(self.config.containing(i) for i in range(p)),
        )

    @property
    def num_players(self) -> int:
        return self.game.num_players

    @property
    def num_blocks(self) -> int:
        return self.config.num_blocks

    def blocks_containing(self, i: int) -> tuple[int, ...]:
        if not 0 <= i < self.num_players:
            raise PlayerOutOfRange(f"player {i!r} not in [0, {self.num_players})")
        return self._containing[i]

    def blocks_not_containing(self, i: int) -> tuple[int, ...]:
        inside = set(self.blocks_containing(i))
        return tuple(k for k in range(self.num_blocks) if k not in inside)

    def block_weight(self, k: int) -> int:
        return self.game.weight_of(self.config.blocks[k])


def validate(
    game: WeightedMajorityGame, config: CoalitionConfiguration
) -> ConfiguredGame:
    """Check that ``config`` covers exactly the game's player set.

    Raises EmptyBlock, NotACover, PlayerOutOfRange, QuotaUnreachable,
    NonpositiveQuota, DuplicateBlock or DuplicatePlayer (the first five may
    already fire when the component objects are constructed).
    """
    return ConfiguredGame(game, config)
