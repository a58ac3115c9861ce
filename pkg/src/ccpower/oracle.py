"""Definitional brute force for both indices, used as ground truth in tests.

Everything here enumerates the construction pairs (T, R) explicitly, forms
the coalition T ∪ S_R -- where S_R is the set of all players of the chosen
blocks -- as an actual player set (bitmask representation), and evaluates the
characteristic function twice per pair, with and without the player, taking
the difference.  No counting table, no polynomial, no swing window: this
module must stay independent of :mod:`ccpower.genfun` so the two routes can
check each other.

Enumeration cost is 2^((c - c^i) + (c_k - 1)) per (player, block) pair, so a
guard refuses instances where that exponent exceeds PAIR_GUARD_EXPONENT.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .model import BlockDoesNotContainPlayer, ConfiguredGame

PAIR_GUARD_EXPONENT = 25


class InstanceTooLarge(ValueError):
    """The brute-force enumeration would exceed the size guard."""


@dataclass(frozen=True)
class MarginalRecord:
    """One construction pair and the player's marginal contribution to it.

    ``selected_blocks`` is R (indices of chosen blocks not containing the
    player), ``selected_members`` is T (chosen co-members of the home block);
    ``marginal`` is f(T ∪ S_R ∪ {i}) - f(T ∪ S_R), which monotonicity pins
    to 0 or 1.
    """

    player: int
    block: int
    selected_blocks: frozenset[int]
    selected_members: frozenset[int]
    marginal: int


def _mask_weight_fn(weights):
    """O(1) weight of a player-set bitmask, via chunked lookup tables."""
    chunked = []
    for start in range(0, len(weights), 16):
        ws = weights[start : start + 16]
        table = [0] * (1 << len(ws))
        for m in range(1, len(table)):
            low = m & -m
            table[m] = table[m ^ low] + ws[low.bit_length() - 1]
        chunked.append((start, table, (1 << len(ws)) - 1))

    def weight(mask: int) -> int:
        return sum(table[(mask >> start) & width] for start, table, width in chunked)

    return weight


def _setup(cg: ConfiguredGame, i: int, k: int) -> tuple[list[int], list[int]]:
    """Summation domain of (i, k): blocks without i, and C_k's other members.

    Deliberately re-derived here (not imported from the engine) so the two
    routes share nothing.
    """
    if k not in cg.blocks_containing(i):
        raise BlockDoesNotContainPlayer(
            f"block {k + 1} does not contain player {i + 1}"
        )
    outside = [l for l in range(cg.num_blocks) if i not in cg.config.blocks[l]]
    members = sorted(j for j in cg.config.blocks[k] if j != i)
    return outside, members


def _guard(outside, members, i, k):
    cost = len(outside) + len(members)
    if cost > PAIR_GUARD_EXPONENT:
        raise InstanceTooLarge(
            f"player {i + 1}, block {k + 1}: 2^{cost} construction pairs "
            f"exceed the 2^{PAIR_GUARD_EXPONENT} enumeration guard"
        )


def check_instance(cg: ConfiguredGame) -> None:
    """Raise InstanceTooLarge if any (player, block) pair is unenumerable."""
    for i in range(cg.num_players):
        for k in cg.blocks_containing(i):
            outside, members = _setup(cg, i, k)
            _guard(outside, members, i, k)


def _block_union_list(cg, outside):
    """S_R masks for every R subset, by ascending bitmask over ``outside``."""
    bmasks = [sum(1 << j for j in cg.config.blocks[l]) for l in outside]
    unions = [0] * (1 << len(outside))
    for rbits in range(1, len(unions)):
        low = rbits & -rbits
        unions[rbits] = unions[rbits ^ low] | bmasks[low.bit_length() - 1]
    return unions


def oracle_banzhaf_cc(cg: ConfiguredGame) -> tuple[Fraction, ...]:
    """Generalized Banzhaf-Coleman index, straight from its defining sum."""
    check_instance(cg)
    weight = _mask_weight_fn(cg.game.weights)
    q = cg.game.quota
    c = cg.num_blocks
    out = []
    for i in range(cg.num_players):
        ibit = 1 << i
        beta = Fraction(0)
        for k in cg.blocks_containing(i):
            outside, members = _setup(cg, i, k)
            pmasks = [1 << j for j in members]
            n = len(pmasks)
            marginal_total = 0
            for base in _block_union_list(cg, outside):
                cur = 0
                for step in range(1 << n):
                    u = base | cur
                    marginal_total += (1 if weight(u | ibit) >= q else 0) - (
                        1 if weight(u) >= q else 0
                    )
                    nxt = step + 1
                    if nxt < 1 << n:  # Gray-code walk over T
                        cur ^= pmasks[(nxt & -nxt).bit_length() - 1]
            c_k = len(cg.config.blocks[k])
            beta += Fraction(marginal_total, 1 << (c + c_k - 2))
        out.append(beta)
    return tuple(out)


def oracle_configuration_index(cg: ConfiguredGame) -> tuple[Fraction, ...]:
    """Configuration index, straight from its defining sum with coefficients
    r!(c-r-1)!/c! * t!(c_k-t-1)!/c_k!."""
    check_instance(cg)
    weight = _mask_weight_fn(cg.game.weights)
    q = cg.game.quota
    c = cg.num_blocks
    fact_c = factorial(c)
    out = []
    for i in range(cg.num_players):
        ibit = 1 << i
        phi = Fraction(0)
        for k in cg.blocks_containing(i):
            outside, members = _setup(cg, i, k)
            pmasks = [1 << j for j in members]
            n = len(pmasks)
            unions = _block_union_list(cg, outside)
            counts = [[0] * (n + 1) for _ in range(len(outside) + 1)]
            for rbits, base in enumerate(unions):
                r = rbits.bit_count()
                row = counts[r]
                cur = 0
                t = 0
                for step in range(1 << n):
                    u = base | cur
                    row[t] += (1 if weight(u | ibit) >= q else 0) - (
                        1 if weight(u) >= q else 0
                    )
                    nxt = step + 1
                    if nxt < 1 << n:
                        flip = pmasks[(nxt & -nxt).bit_length() - 1]
                        cur ^= flip
                        t += 1 if cur & flip else -1
            c_k = len(cg.config.blocks[k])
            denom = fact_c * factorial(c_k)
            for r, row in enumerate(counts):
                rpart = factorial(r) * factorial(c - r - 1)
                for t, cnt in enumerate(row):
                    if cnt:
                        phi += Fraction(
                            rpart * factorial(t) * factorial(c_k - t - 1) * cnt, denom
                        )
        out.append(phi)
    return tuple(out)


def enumerate_significant(cg: ConfiguredGame, i: int, k: int) -> list[MarginalRecord]:
    """All construction pairs of (i, k) with marginal 1, in deterministic
    order: R bitmask ascending, then T bitmask ascending."""
    outside, members = _setup(cg, i, k)
    _guard(outside, members, i, k)
    weight = _mask_weight_fn(cg.game.weights)
    q = cg.game.quota
    ibit = 1 << i
    records = []
    for rbits, base in enumerate(_block_union_list(cg, outside)):
        chosen_blocks = frozenset(
            outside[b] for b in range(len(outside)) if rbits >> b & 1
        )
        for tbits in range(1 << len(members)):
            chosen = [members[b] for b in range(len(members)) if tbits >> b & 1]
            u = base
            for j in chosen:
                u |= 1 << j
            marginal = (1 if weight(u | ibit) >= q else 0) - (
                1 if weight(u) >= q else 0
            )
            if marginal == 1:
                records.append(
                    MarginalRecord(
                        player=i,
                        block=k,
                        selected_blocks=chosen_blocks,
                        selected_members=frozenset(chosen),
                        marginal=1,
                    )
                )
    return records
