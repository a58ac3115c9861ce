"""Exact counting of coalition constructions by total weight.

For a player ``i`` and a block ``C_k`` containing ``i``, a construction pair
is ``(T, R)`` where ``T`` is a subset of ``C_k \\ {i}`` and ``R`` is a set of
blocks not containing ``i``.  The pair stands for the coalition
``T ∪ (union of the players of R)``; because blocks overlap, a player picked
in ``T`` may already be contributed by a block in ``R``, and two blocks in
``R`` may share players, yet each player's weight must count exactly once.

:func:`weight_counts` tabulates, per total weight ``m``, how many pairs build
a coalition of weight ``m``.  :func:`tri_counts` additionally splits the
count by ``r = |R|`` and ``t = |T|``.  Both are computed by enumerating ``R``
explicitly and folding a shift-add polynomial product over the players of
``C_k \\ {i}``, where a player already covered by the union of ``R`` adds
weight zero.  That "zero the marginal weight of covered players" rule is what
keeps every player counted once per pair.

Counts are exact.  When the pair total ``2^((c_k - 1) + (c - c^i))`` fits
safely in int64 the fold runs on numpy arrays; above that bound an identical
pure-Python big-integer fold takes over, so no instance size can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import BlockDoesNotContainPlayer, ConfiguredGame

# Every coefficient is bounded by the pair total 2^(#members + #outside);
# below this exponent the int64 dynamic program is provably exact.
_INT64_SAFE_EXPONENT = 62


@dataclass(frozen=True)
class WeightCounts:
    """Dense table ``counts[m]`` = number of pairs of union weight ``m``."""

    player: int
    block: int
    counts: tuple[int, ...]

    def total(self) -> int:
        """Number of pairs = table evaluated with every marker set to 1."""
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {m: v for m, v in enumerate(self.counts) if v}

    def window_sum(self, lo: int, hi: int) -> int:
        """Sum of counts with lo <= m <= hi (clamped to the table)."""
        return sum(self.counts[max(lo, 0) : hi + 1])


@dataclass(frozen=True)
class TriCounts:
    """Dense table ``counts[m][r][t]``: pairs of union weight ``m`` using
    ``r`` blocks and ``t`` players of the home block."""

    player: int
    block: int
    counts: tuple[tuple[tuple[int, ...], ...], ...]

    def total(self) -> int:
        return sum(v for plane in self.counts for row in plane for v in row)

    def weight_marginal(self) -> tuple[int, ...]:
        """Collapse (r, t): must reproduce the matching WeightCounts table."""
        return tuple(sum(v for row in plane for v in row) for plane in self.counts)

    def nonzero(self) -> dict[tuple[int, int, int], int]:
        return {
            (m, r, t): v
            for m, plane in enumerate(self.counts)
            for r, row in enumerate(plane)
            for t, v in enumerate(row)
            if v
        }


def _setup(cg: ConfiguredGame, i: int, k: int) -> tuple[list[int], list[int]]:
    """Validate (i, k) and return (outside block indices, fold players)."""
    containing = cg.blocks_containing(i)  # raises PlayerOutOfRange
    if k not in containing:
        raise BlockDoesNotContainPlayer(
            f"block {k + 1} does not contain player {i + 1}"
        )
    outside = list(cg.blocks_not_containing(i))
    members = sorted(cg.config.blocks[k] - {i})
    return outside, members


def _block_unions(cg: ConfiguredGame, outside: list[int]):
    """Yield (covered-player mask, popcount of R, union weight) per R subset.

    R subsets are enumerated by ascending bitmask over ``outside`` in
    configuration order; unions grow by the lowest-bit recurrence.
    """
    weights = cg.game.weights
    bmasks = [
        sum(1 << j for j in cg.config.blocks[l]) for l in outside
    ]
    n = len(outside)
    masks = [0] * (1 << n)
    for rbits in range(1, 1 << n):
        low = rbits & -rbits
        masks[rbits] = masks[rbits ^ low] | bmasks[low.bit_length() - 1]
    for rbits, mask in enumerate(masks):
        base = 0
        m = mask
        while m:
            lb = m & -m
            base += weights[lb.bit_length() - 1]
            m ^= lb
        yield mask, bin(rbits).count("1"), base


def _fold_weights_numpy(cg, outside, members) -> np.ndarray:
    weights = cg.game.weights
    acc = np.zeros(cg.game.total_weight + 1, dtype=np.int64)
    member_weights = [(j, weights[j]) for j in members]
    for covered, _r, base in _block_unions(cg, outside):
        deltas = [0 if covered >> j & 1 else wj for j, wj in member_weights]
        poly = np.zeros(sum(deltas) + 1, dtype=np.int64)
        poly[0] = 1
        ln = 1
        for d in deltas:
            if d == 0:
                poly[:ln] *= 2
            else:
                poly[d : ln + d] += poly[:ln].copy()
                ln += d
        acc[base : base + ln] += poly[:ln]
    return acc


def _fold_weights_bigint(cg, outside, members) -> list[int]:
    weights = cg.game.weights
    acc = [0] * (cg.game.total_weight + 1)
    member_weights = [(j, weights[j]) for j in members]
    for covered, _r, base in _block_unions(cg, outside):
        deltas = [0 if covered >> j & 1 else wj for j, wj in member_weights]
        poly = [0] * (sum(deltas) + 1)
        poly[0] = 1
        ln = 1
        for d in deltas:
            if d == 0:
                for idx in range(ln):
                    poly[idx] *= 2
            else:
                for idx in range(ln - 1, -1, -1):
                    poly[idx + d] += poly[idx]
                ln += d
        for idx in range(ln):
            acc[base + idx] += poly[idx]
    return acc


def _fold_tri_numpy(cg, outside, members) -> np.ndarray:
    """Accumulator of shape (r, t, m)."""
    weights = cg.game.weights
    r_dim = len(outside) + 1
    t_dim = len(members) + 1
    acc = np.zeros((r_dim, t_dim, cg.game.total_weight + 1), dtype=np.int64)
    member_weights = [(j, weights[j]) for j in members]
    for covered, r, base in _block_unions(cg, outside):
        deltas = [0 if covered >> j & 1 else wj for j, wj in member_weights]
        poly = np.zeros((t_dim, sum(deltas) + 1), dtype=np.int64)
        poly[0, 0] = 1
        ln = 1
        tl = 1
        for d in deltas:
            # accept the player: one more member of T, weight shifted by d
            poly[1 : tl + 1, d : ln + d] += poly[:tl, :ln].copy()
            tl += 1
            ln += d
        acc[r, :, base : base + ln] += poly[:, :ln]
    return acc


def _fold_tri_bigint(cg, outside, members) -> list[list[list[int]]]:
    """Accumulator indexed [r][t][m]."""
    weights = cg.game.weights
    r_dim = len(outside) + 1
    t_dim = len(members) + 1
    wtot = cg.game.total_weight
    acc = [[[0] * (wtot + 1) for _ in range(t_dim)] for _ in range(r_dim)]
    member_weights = [(j, weights[j]) for j in members]
    for covered, r, base in _block_unions(cg, outside):
        deltas = [0 if covered >> j & 1 else wj for j, wj in member_weights]
        poly = [[0] * (sum(deltas) + 1) for _ in range(t_dim)]
        poly[0][0] = 1
        ln = 1
        tl = 1
        for d in deltas:
            for t in range(tl, 0, -1):
                src = poly[t - 1]
                dst = poly[t]
                for idx in range(ln):
                    dst[idx + d] += src[idx]
            tl += 1
            ln += d
        plane = acc[r]
        for t in range(t_dim):
            row = plane[t]
            src = poly[t]
            for idx in range(ln):
                row[base + idx] += src[idx]
    return acc


def _use_int64(outside: list[int], members: list[int]) -> bool:
    return len(outside) + len(members) <= _INT64_SAFE_EXPONENT


def _weight_table(cg: ConfiguredGame, i: int, k: int):
    """Internal: dense weight table as int64 ndarray or Python-int list."""
    outside, members = _setup(cg, i, k)
    if _use_int64(outside, members):
        return _fold_weights_numpy(cg, outside, members)
    return _fold_weights_bigint(cg, outside, members)


def _tri_table(cg: ConfiguredGame, i: int, k: int):
    """Internal: dense (r, t, m) table as int64 ndarray or nested lists."""
    outside, members = _setup(cg, i, k)
    if _use_int64(outside, members):
        return _fold_tri_numpy(cg, outside, members)
    return _fold_tri_bigint(cg, outside, members)


def weight_counts(cg: ConfiguredGame, i: int, k: int) -> WeightCounts:
    """Pair counts by union weight for player ``i`` and its block ``k``."""
    table = _weight_table(cg, i, k)
    if isinstance(table, np.ndarray):
        counts = tuple(int(v) for v in table.tolist())
    else:
        counts = tuple(table)
    return WeightCounts(player=i, block=k, counts=counts)


def tri_counts(cg: ConfiguredGame, i: int, k: int) -> TriCounts:
    """Pair counts by (union weight, #blocks used, #home-block players used)."""
    table = _tri_table(cg, i, k)
    if isinstance(table, np.ndarray):
        nested = table.transpose(2, 0, 1).tolist()  # (m, r, t)
    else:
        r_dim = len(table)
        t_dim = len(table[0])
        m_dim = len(table[0][0])
        nested = [
            [[table[r][t][m] for t in range(t_dim)] for r in range(r_dim)]
            for m in range(m_dim)
        ]
    counts = tuple(tuple(tuple(row) for row in plane) for plane in nested)
    return TriCounts(player=i, block=k, counts=counts)
