"""Power indices assembled from the counting tables, as exact rationals.

Two indices are computed for a configured game:

* the generalized Banzhaf-Coleman index, which weights every construction
  pair of each block equally, and
* the configuration index, which weights a pair by an order-statistic
  coefficient in the number of blocks and home-block players it uses
  (generalizing the Owen value / Shapley-Shubik index).

Every value is a :class:`fractions.Fraction`; decimal output is a rendering
concern (:mod:`ccpower.report`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from . import genfun
from .model import ConfiguredGame, CoalitionConfiguration, PlayerOutOfRange, WeightedMajorityGame

Rational = Fraction


def swing_window(game: WeightedMajorityGame, i: int) -> range:
    """Weights m at which player i turns a losing coalition into a winning one.

    A coalition of weight m loses but wins once i joins exactly when
    max(0, quota - w_i) <= m <= quota - 1.  Empty for null players (w_i = 0).
    """
    if not 0 <= i < game.num_players:
        raise PlayerOutOfRange(f"player {i!r} not in [0, {game.num_players})")
    return range(max(0, game.quota - game.weights[i]), game.quota)


@dataclass(frozen=True)
class SwingCounts:
    """Swing totals for one (player, block) pair.

    ``sigma`` counts the construction pairs whose coalition flips from losing
    to winning when the player joins; ``sigma_rt[r][t]`` splits that count by
    blocks used and home-block players used.
    """

    player: int
    block: int
    sigma: int
    sigma_rt: tuple[tuple[int, ...], ...]


def _window_bounds(game: WeightedMajorityGame, i: int) -> tuple[int, int]:
    win = swing_window(game, i)
    return win.start, win.stop  # half-open


def swing_counts(cg: ConfiguredGame, i: int, k: int) -> SwingCounts:
    """Sum the counting tables of (i, k) over the swing window."""
    lo, hi = _window_bounds(cg.game, i)
    wt = genfun._weight_table(cg, i, k)
    tri = genfun._tri_table(cg, i, k)
    if isinstance(wt, np.ndarray):
        sigma = int(wt[lo:hi].sum())
        sig_rt = tuple(
            tuple(int(v) for v in row) for row in tri[:, :, lo:hi].sum(axis=2).tolist()
        )
    else:
        sigma = sum(wt[lo:hi])
        sig_rt = tuple(
            tuple(sum(tri[r][t][lo:hi]) for t in range(len(tri[r])))
            for r in range(len(tri))
        )
    return SwingCounts(player=i, block=k, sigma=sigma, sigma_rt=sig_rt)


def swing_table(cg: ConfiguredGame) -> dict[tuple[int, int], SwingCounts]:
    """Swing counts for every (player, containing-block) pair."""
    return {
        (i, k): swing_counts(cg, i, k)
        for i in range(cg.num_players)
        for k in cg.blocks_containing(i)
    }


def banzhaf_coleman_cc(cg: ConfiguredGame) -> tuple[Fraction, ...]:
    """Generalized Banzhaf-Coleman index vector.

    Per player: sum over containing blocks C_k of (swing count) / 2^(c + c_k - 2).
    """
    c = cg.num_blocks
    out = []
    for i in range(cg.num_players):
        lo, hi = _window_bounds(cg.game, i)
        total = Fraction(0)
        for k in cg.blocks_containing(i):
            wt = genfun._weight_table(cg, i, k)
            if isinstance(wt, np.ndarray):
                sigma = int(wt[lo:hi].sum())
            else:
                sigma = sum(wt[lo:hi])
            c_k = len(cg.config.blocks[k])
            total += Fraction(sigma, 1 << (c + c_k - 2))
        out.append(total)
    return tuple(out)


def configuration_index(cg: ConfiguredGame) -> tuple[Fraction, ...]:
    """Configuration index vector.

    Per player: sum over containing blocks C_k and over (r, t) of
    r!(c-r-1)!/c! * t!(c_k-t-1)!/c_k! * (swings using r blocks, t players).
    """
    c = cg.num_blocks
    fact_c = factorial(c)
    out = []
    for i in range(cg.num_players):
        lo, hi = _window_bounds(cg.game, i)
        total = Fraction(0)
        for k in cg.blocks_containing(i):
            tri = genfun._tri_table(cg, i, k)
            if isinstance(tri, np.ndarray):
                sig_rt = tri[:, :, lo:hi].sum(axis=2).tolist()
            else:
                sig_rt = [
                    [sum(tri[r][t][lo:hi]) for t in range(len(tri[r]))]
                    for r in range(len(tri))
                ]
            c_k = len(cg.config.blocks[k])
            denom = fact_c * factorial(c_k)
            for r, row in enumerate(sig_rt):
                rpart = factorial(r) * factorial(c - r - 1)
                for t, count in enumerate(row):
                    if count:
                        total += Fraction(
                            rpart * factorial(t) * factorial(c_k - t - 1) * int(count),
                            denom,
                        )
        out.append(total)
    return tuple(out)


def classical_indices(
    game: WeightedMajorityGame,
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """(Banzhaf-Coleman, Shapley-Shubik) of the plain game.

    Obtained by running the configured-game indices on the one-block
    configuration {P}: the pair weight collapses to 1/2^(p-1) for the first
    index and to t!(p-t-1)!/p! for the second.
    """
    cfg = CoalitionConfiguration([range(game.num_players)])
    cg = ConfiguredGame(game, cfg)
    return banzhaf_coleman_cc(cg), configuration_index(cg)


@dataclass(frozen=True)
class PlayerPower:
    """One report row: a player's indices plus rendering context."""

    player: int  # 0-based
    label: str
    weight: int
    blocks: tuple[int, ...]  # 0-based indices of the containing blocks
    beta: Fraction | None
    phi: Fraction | None


@dataclass(frozen=True)
class IndexReport:
    quota: int
    total_weight: int
    num_blocks: int
    rows: tuple[PlayerPower, ...]


def index_report(
    cg: ConfiguredGame,
    beta=None,
    phi=None,
) -> IndexReport:
    """Assemble per-player rows from already-computed index vectors."""
    rows = []
    for i in range(cg.num_players):
        rows.append(
            PlayerPower(
                player=i,
                label=cg.game.label_of(i),
                weight=cg.game.weights[i],
                blocks=cg.blocks_containing(i),
                beta=None if beta is None else beta[i],
                phi=None if phi is None else phi[i],
            )
        )
    return IndexReport(
        quota=cg.game.quota,
        total_weight=cg.game.total_weight,
        num_blocks=cg.num_blocks,
        rows=tuple(rows),
    )


def normalize(values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Scale a nonnegative vector to sum to 1 (requires a nonzero sum)."""
    total = sum(values)
    if total == 0:
        raise ValueError("cannot normalize an all-zero index vector")
    return tuple(v / total for v in values)
