import math

import numpy as np
import pytest

from lattice_markov import simulate as sim
from lattice_markov.lattice_an import ChainSpec
from lattice_markov.markov import LadderParams, MarkovChain, build_an_markov, build_ladder_markov


def test_dtmc_determinism():
    chain = build_an_markov(ChainSpec(1, 3), "transition")
    a = sim.simulate_dtmc(chain, 2, 500, seed=123)
    b = sim.simulate_dtmc(chain, 2, 500, seed=123)
    c = sim.simulate_dtmc(chain, 2, 500, seed=124)
    assert a.states == b.states
    assert a.states != c.states


def test_dtmc_from_absorbing_state_is_constant():
    chain = build_an_markov(ChainSpec(1, 3), "transition")
    traj = sim.simulate_dtmc(chain, 1, 2000, seed=5)
    assert set(traj.states) == {1}


def test_dtmc_identity_matrix_constant():
    chain = MarkovChain(kind="transition", spec=None, matrix=np.eye(4))
    traj = sim.simulate_dtmc(chain, 3, 100, seed=0)
    assert set(traj.states) == {3}


def test_dtmc_stays_in_closed_sector():
    chain = build_an_markov(ChainSpec(1, 3), "transition")
    traj = sim.simulate_dtmc(chain, 2, 20000, seed=11)
    assert set(traj.states) == {2, 3, 5}


def test_dtmc_transitions_have_support():
    chain = build_an_markov(ChainSpec(2, 3), "transition")
    traj = sim.simulate_dtmc(chain, 4, 2000, seed=2)
    for frm, to in zip(traj.states, traj.states[1:]):
        assert chain.matrix[to - 1, frm - 1] > 0.0


def test_ctmc_determinism_and_support():
    chain = build_an_markov(ChainSpec(1, 4), "intensity")
    a = sim.simulate_ctmc(chain, 2, 200.0, seed=42)
    b = sim.simulate_ctmc(chain, 2, 200.0, seed=42)
    assert a.states == b.states and a.times == b.times
    for frm, to in zip(a.states, a.states[1:]):
        assert chain.matrix[to - 1, frm - 1] > 0.0


def test_ctmc_absorbing_start_holds_forever():
    chain = build_an_markov(ChainSpec(1, 3), "intensity")
    traj = sim.simulate_ctmc(chain, 1, 100.0, seed=9)
    assert traj.states == [1]
    assert traj.times == [0.0]


def test_ctmc_two_state_symmetric_occupation():
    q = MarkovChain(kind="intensity", spec=None,
                    matrix=np.array([[-1.0, 1.0], [1.0, -1.0]]))
    traj = sim.simulate_ctmc(q, 1, 4000.0, seed=31)
    occ = sim.empirical_distribution(traj)
    jumps = len(traj.states) - 1
    sigma = math.sqrt(0.25 / jumps)
    assert abs(occ[0] - 0.5) < 3.0 * sigma
    assert abs(occ[1] - 0.5) < 3.0 * sigma


def test_ctmc_uniform_on_closed_sector():
    chain = build_an_markov(ChainSpec(1, 4), "intensity")
    # sector of one occupied site: states (0,0,0,1)... encode to {2,3,5,9}
    traj = sim.simulate_ctmc(chain, 2, 3000.0, seed=17)
    assert set(traj.states) == {2, 3, 5, 9}
    occ = sim.empirical_distribution(traj)
    jumps = len(traj.states) - 1
    p = 0.25
    sigma = math.sqrt(p * (1 - p) / jumps)
    for s in (2, 3, 5, 9):
        assert abs(occ[s - 1] - p) < 3.0 * sigma


def test_empirical_distribution_point_mass_and_alternation():
    traj = sim.Trajectory(kind="dtmc", states=[4] * 50, times=None, t_max=None,
                          num_states=6, init=4, seed=0)
    occ = sim.empirical_distribution(traj, burn_in=0)
    assert occ[3] == 1.0
    traj = sim.Trajectory(kind="dtmc", states=[1, 2] * 50, times=None, t_max=None,
                          num_states=2, init=1, seed=0)
    occ = sim.empirical_distribution(traj, burn_in=0)
    assert np.allclose(occ, [0.5, 0.5])


def test_empirical_distribution_time_weighted():
    traj = sim.Trajectory(kind="ctmc", states=[1, 2], times=[0.0, 1.0], t_max=4.0,
                          num_states=2, init=1, seed=0)
    occ = sim.empirical_distribution(traj, burn_in=0.0)
    assert np.allclose(occ, [0.25, 0.75])


def test_empirical_distribution_burn_in_errors():
    traj = sim.Trajectory(kind="ctmc", states=[1], times=[0.0], t_max=1.0,
                          num_states=2, init=1, seed=0)
    with pytest.raises(ValueError):
        sim.empirical_distribution(traj, burn_in=2.0)


def test_occupation_summary():
    chain = build_an_markov(ChainSpec(1, 3), "intensity")
    traj = sim.simulate_ctmc(chain, 2, 2000.0, seed=8)
    summary = sim.occupation_summary(chain, traj)
    assert summary["closed_set"] == [2, 3, 5]
    assert summary["init"] == 2
    assert summary["seed"] == 8
    assert summary["max_dev_sigma"] < 3.0
    assert sum(summary["occupation"]) == pytest.approx(1.0)


def test_simulation_rejects_invalid_inputs():
    chain = build_an_markov(ChainSpec(1, 3), "transition")
    with pytest.raises(ValueError):
        sim.simulate_dtmc(chain, 0, 10, seed=1)
    with pytest.raises(ValueError):
        sim.simulate_dtmc(chain, 1, -1, seed=1)
    q = build_an_markov(ChainSpec(1, 3), "intensity")
    with pytest.raises(ValueError):
        sim.simulate_ctmc(q, 1, 0.0, seed=1)
    with pytest.raises(ValueError):
        sim.simulate_dtmc(q, 1, 10, seed=1)
    with pytest.raises(ValueError):
        sim.simulate_ctmc(chain, 1, 10.0, seed=1)


def test_ladder_ctmc_runs():
    chain = build_ladder_markov(LadderParams(16.0, 0.0, 0.0), 2, "intensity")
    traj = sim.simulate_ctmc(chain, 1, 5.0, seed=3)
    assert len(traj.states) > 1  # no absorbing states in the ladder process


def test_trajectory_csv_export(tmp_path):
    spec = ChainSpec(1, 3)
    chain = build_an_markov(spec, "transition")
    traj = sim.simulate_dtmc(chain, 2, 10, seed=1)
    path = tmp_path / "traj.csv"
    sim.trajectory_to_csv(traj, path, spec)
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "step_or_time,state_index,label"
    assert len(lines) == 12
    first = lines[1].split(",", 2)
    assert first[0] == "0" and first[1] == "2"
