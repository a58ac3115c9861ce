"""
Voting power in the 2015 European Parliament
============================================

The bundled ``eu28`` dataset models the 28 member states with their seat
counts (751 seats, simple-majority quota 376) and a six-block cover: four
geographic groups plus two GDP-per-capita groups (the third economic group
coincides with one geographic block, and a cover lists each distinct block
once).  Because the groupings overlap, most states belong to two blocks.
"""

from ccpower import datasets
from ccpower.indices import banzhaf_coleman_cc, configuration_index, index_report
from ccpower.report import render_report

cg = datasets.load("eu28")
print(f"states: {cg.num_players}, blocks: {cg.num_blocks}, "
      f"seats: {cg.game.total_weight}, quota: {cg.game.quota}")

for k, block in enumerate(cg.config.blocks):
    names = ", ".join(cg.game.label_of(i) for i in sorted(block))
    print(f"block {k + 1}: {names}")

beta = banzhaf_coleman_cc(cg)
phi = configuration_index(cg)
report = index_report(cg, beta=beta, phi=phi)
print()
print(render_report(report).as_table())

# Ranking by the two indices disagrees in interesting places: Italy and the
# United Kingdom have the same seat count and share a geographic block, but
# sit in different economic blocks.
by_beta = sorted(range(28), key=lambda i: beta[i], reverse=True)
by_phi = sorted(range(28), key=lambda i: phi[i], reverse=True)
print("top five by generalized Banzhaf-Coleman index:")
for i in by_beta[:5]:
    print(f"  {cg.game.label_of(i)}: {float(beta[i]):.9f}")
print("top five by configuration index:")
for i in by_phi[:5]:
    print(f"  {cg.game.label_of(i)}: {float(phi[i]):.9f}")

uk = list(cg.game.labels).index("United Kingdom")
it = list(cg.game.labels).index("Italy")
print(f"\nItaly  vs United Kingdom, beta: {float(beta[it]):.9f} vs {float(beta[uk]):.9f}")
print(f"Italy  vs United Kingdom, phi:  {float(phi[it]):.9f} vs {float(phi[uk]):.9f}")

print(f"\nconfiguration index sums to {sum(phi)} (exactly)")
least = min(range(28), key=lambda i: phi[i])
print(f"lowest configuration index: {cg.game.label_of(least)} "
      f"({float(phi[least]):.9f}) - a small state alone with Sweden in a "
      "two-state geographic block")
