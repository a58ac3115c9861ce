"""
A four-player game, step by step
================================

A small weighted majority game [3; 1, 2, 2, 1] whose players are grouped
into three overlapping blocks.  We walk through everything the library
computes: the counting tables, the swing counts behind each index, and the
two power indices themselves, all in exact arithmetic.
"""

from fractions import Fraction

from ccpower import (
    CoalitionConfiguration,
    WeightedMajorityGame,
    enumerate_significant,
    validate,
)
from ccpower.genfun import tri_counts, weight_counts
from ccpower.indices import (
    banzhaf_coleman_cc,
    configuration_index,
    swing_counts,
    swing_window,
)

# Quota 3; players 1 and 4 carry weight 1, players 2 and 3 carry weight 2.
game = WeightedMajorityGame([1, 2, 2, 1], quota=3)

# Three blocks (0-based player ids): {1,2,3}, {2,3}, {3,4}.  They overlap:
# player 3 sits in all of them, player 2 in the first two.
config = CoalitionConfiguration([[0, 1, 2], [1, 2], [2, 3]])
cg = validate(game, config)

print("player block memberships (1-based):")
for i in range(cg.num_players):
    blocks = ", ".join(str(k + 1) for k in cg.blocks_containing(i))
    print(f"  player {i + 1} (weight {game.weights[i]}): blocks {blocks}")

# ---------------------------------------------------------------------------
# Counting table for player 1 and its block {1,2,3}.
#
# Each entry counts the ways to build a coalition of a given total weight by
# picking some co-members of the block plus some whole blocks that do not
# contain player 1.  Overlaps are handled exactly: a player contributes their
# weight once even when picked twice.
wc = weight_counts(cg, 0, 0)
print("\npairs by coalition weight for player 1, block 1:")
for m, count in sorted(wc.nonzero().items()):
    print(f"  weight {m}: {count}")
print(f"  total pairs: {wc.total()} (= 2^4)")

# The refined table also records how many blocks (r) and how many block
# co-members (t) each construction used.
tc = tri_counts(cg, 0, 0)
print("\nthe same pairs split by (weight, blocks used, members used):")
for (m, r, t), count in sorted(tc.nonzero().items()):
    print(f"  m={m} r={r} t={t}: {count}")

# ---------------------------------------------------------------------------
# Swings: player 1 has weight 1 and the quota is 3, so only coalitions of
# weight exactly 2 flip from losing to winning when player 1 joins.
window = swing_window(game, 0)
print(f"\nswing window for player 1: weights {list(window)}")
sc = swing_counts(cg, 0, 0)
print(f"swing count for (player 1, block 1): {sc.sigma}")

for rec in enumerate_significant(cg, 0, 0):
    members = sorted(j + 1 for j in rec.selected_members)
    blocks = sorted(k + 1 for k in rec.selected_blocks)
    print(f"  swing: members {members}, blocks {blocks}")

# ---------------------------------------------------------------------------
# The indices.  Both are exact rationals; the second weighs each swing by how
# many blocks and members it uses, the first treats all swings of a block
# alike.
beta = banzhaf_coleman_cc(cg)
phi = configuration_index(cg)
print("\ngeneralized Banzhaf-Coleman index:")
for i, v in enumerate(beta):
    print(f"  player {i + 1}: {v} = {float(v)}")
print("configuration index:")
for i, v in enumerate(phi):
    print(f"  player {i + 1}: {v} = {float(v)}")
print(f"sum of configuration index values: {sum(phi, Fraction(0))}")
