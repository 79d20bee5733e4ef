"""Walkthrough: sampling the chains and checking the long-run laws.

Discrete paths started in an absorbing state never move. Continuous
paths started inside a closed particle sector equilibrate to the uniform
law on that sector; with a fixed seed everything is reproducible.
"""

import numpy as np

from lattice_markov import (ChainSpec, build_an_markov, closed_sets,
                            empirical_distribution, occupation_summary,
                            simulate_ctmc, simulate_dtmc)

p = build_an_markov(ChainSpec(1, 3), "transition")
traj = simulate_dtmc(p, 1, 10_000, seed=7)
print(f"discrete path from absorbing state 1: visited {sorted(set(traj.states))} "
      f"over {len(traj.states) - 1} steps")

traj = simulate_dtmc(p, 2, 10_000, seed=7)
print(f"discrete path from state 2: visited {sorted(set(traj.states))} "
      f"(the one-particle sector)")

q = build_an_markov(ChainSpec(1, 3), "intensity")
traj = simulate_ctmc(q, 2, 1000.0, seed=7)
occ = empirical_distribution(traj)
print(f"\ncontinuous path from state 2, horizon 1000: {len(traj.states) - 1} jumps")
print("  occupation:", np.round(occ, 4))
print("  uniform target on {2,3,5}: 1/3 each")
print("  summary:", occupation_summary(q, traj))

# reproducibility: the same seed gives the same path
again = simulate_ctmc(q, 2, 1000.0, seed=7)
print("\nsame seed reproduces the path exactly:",
      traj.states == again.states and traj.times == again.times)

q4 = build_an_markov(ChainSpec(1, 4), "intensity")
for sector in closed_sets(q4).closed_sets:
    if len(sector) > 1:
        traj = simulate_ctmc(q4, sector[0], 1000.0, seed=11)
        occ = empirical_distribution(traj)
        print(f"L=4 sector {sector}: occupation "
              f"{[round(float(occ[s - 1]), 3) for s in sector]} "
              f"(uniform target {round(1 / len(sector), 3)})")
