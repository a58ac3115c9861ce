from random import Random

import pytest

from ccpower.model import (
    CoalitionConfiguration,
    ConfiguredGame,
    WeightedMajorityGame,
    validate,
)
from ccpower.randgames import random_game, random_instance

CORPUS_SEED = 20260809
GAMES_SEED = 715


@pytest.fixture(scope="session")
def textbook():
    """4-player game [3; 1,2,2,1] with three overlapping blocks."""
    game = WeightedMajorityGame([1, 2, 2, 1], 3)
    config = CoalitionConfiguration([[0, 1, 2], [1, 2], [2, 3]])
    return validate(game, config)


@pytest.fixture(scope="session")
def corpus():
    """200 seeded random configured games, p <= 10, c <= 5, weights <= 20."""
    rng = Random(CORPUS_SEED)
    return [random_instance(rng) for _ in range(200)]


@pytest.fixture(scope="session")
def plain_games():
    """50 seeded random plain games (no configuration), p <= 10."""
    rng = Random(GAMES_SEED)
    return [random_game(rng, rng.randint(1, 10)) for _ in range(50)]


@pytest.fixture(scope="session")
def small_corpus(corpus):
    """A cheap slice of the corpus for per-module randomized checks."""
    return corpus[:30]


def single_block(game: WeightedMajorityGame) -> ConfiguredGame:
    return validate(
        game, CoalitionConfiguration([range(game.num_players)])
    )


def singleton_partition(game: WeightedMajorityGame) -> ConfiguredGame:
    return validate(
        game, CoalitionConfiguration([[i] for i in range(game.num_players)])
    )
