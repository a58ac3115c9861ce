"""Seeded random instances for benchmarking and randomized testing.

All generation is driven by a caller-supplied ``random.Random`` so a fixed
seed reproduces the exact same instances on every run and platform.
"""

from __future__ import annotations

from random import Random

from .model import CoalitionConfiguration, ConfiguredGame, WeightedMajorityGame


def random_game(
    rng: Random,
    num_players: int,
    max_weight: int = 20,
    zero_weight_prob: float = 0.1,
) -> WeightedMajorityGame:
    """Random weights in [0, max_weight] (some zeros, so null players occur)
    and a uniform quota in [1, total]."""
    weights = [
        0 if rng.random() < zero_weight_prob else rng.randint(1, max_weight)
        for _ in range(num_players)
    ]
    if sum(weights) == 0:
        weights[rng.randrange(num_players)] = rng.randint(1, max_weight)
    quota = rng.randint(1, sum(weights))
    return WeightedMajorityGame(weights, quota)


def random_cover(rng: Random, num_players: int, num_blocks: int) -> CoalitionConfiguration:
    """Random cover with possibly overlapping blocks, no two identical.

    Requires num_blocks <= 2^num_players - 1 (the number of distinct
    nonempty blocks available).
    """
    if num_blocks > (1 << num_players) - 1:
        raise ValueError(
            f"cannot build {num_blocks} distinct nonempty blocks from "
            f"{num_players} players"
        )
    for _ in range(1000):
        blocks = []
        for _k in range(num_blocks):
            density = rng.uniform(0.2, 0.7)
            members = {i for i in range(num_players) if rng.random() < density}
            if not members:
                members = {rng.randrange(num_players)}
            blocks.append(members)
        covered = set().union(*blocks)
        for i in set(range(num_players)) - covered:
            blocks[rng.randrange(num_blocks)].add(i)
        as_sets = [frozenset(b) for b in blocks]
        if len(set(as_sets)) == num_blocks:
            return CoalitionConfiguration(as_sets)
    raise RuntimeError("could not sample a duplicate-free cover")


def random_configured_game(
    rng: Random,
    num_players: int,
    num_blocks: int,
    max_weight: int = 20,
) -> ConfiguredGame:
    return ConfiguredGame(
        random_game(rng, num_players, max_weight),
        random_cover(rng, num_players, num_blocks),
    )


def random_instance(
    rng: Random,
    max_players: int = 10,
    max_blocks: int = 5,
    max_weight: int = 20,
) -> ConfiguredGame:
    """Random size, then a random configured game of that size."""
    p = rng.randint(1, max_players)
    c = rng.randint(1, min(max_blocks, (1 << p) - 1))
    return random_configured_game(rng, p, c, max_weight)
