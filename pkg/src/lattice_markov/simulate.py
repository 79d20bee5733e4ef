"""Trajectory sampling for the discrete- and continuous-time chains.

Randomness comes from a counter-based Philox generator seeded per
trajectory, so identical (chain, init, seed) inputs reproduce identical
trajectories on every platform. Categorical draws use inverse-CDF lookup
over Kahan-compensated cumulative sums; the final bucket absorbs rounding
slack up to 1e-12.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .markov import MarkovChain, closed_sets, decode, validate
from .reporting import DEFAULT_TOL, Tolerance

_CDF_SLACK = 1e-12


@dataclass
class Trajectory:
    """A sampled path. times holds state entry times (continuous case only)."""

    kind: str  # "dtmc" | "ctmc"
    states: list[int]  # 1-based state indices
    times: list[float] | None
    t_max: float | None
    num_states: int
    init: int
    seed: int

    def __post_init__(self) -> None:
        if not self.states:
            raise ValueError("trajectory must contain at least the initial state")
        if self.times is not None:
            if len(self.times) != len(self.states):
                raise ValueError("times must align with states")
            if any(b <= a for a, b in zip(self.times, self.times[1:])):
                raise ValueError("times must be strictly increasing")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _kahan_cdf(column: np.ndarray) -> np.ndarray:
    total = 0.0
    comp = 0.0
    out = np.empty(column.shape[0])
    for i, p in enumerate(column):
        y = float(p) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        out[i] = total
    if abs(out[-1] - 1.0) > _CDF_SLACK:
        raise ValueError(f"column mass {out[-1]} is not 1 within {_CDF_SLACK}")
    out[-1] = 1.0
    return out


def _draw(rng: np.random.Generator, cdf: np.ndarray) -> int:
    u = rng.random()
    return int(np.searchsorted(cdf, u, side="right"))


def simulate_dtmc(chain: MarkovChain, init: int, steps: int, seed: int) -> Trajectory:
    """Sample a discrete-time path of the given length from a transition matrix."""
    if chain.kind != "transition":
        raise ValueError("discrete-time simulation needs a transition matrix")
    report = validate(chain)
    if not report.passed:
        raise ValueError(f"invalid transition matrix: {report.residuals}")
    if not 1 <= init <= chain.num_states:
        raise ValueError(f"initial state {init} out of range")
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = _rng(seed)
    cdf_cache: dict[int, np.ndarray] = {}
    states = [init]
    current = init
    for _ in range(steps):
        if current not in cdf_cache:
            column = np.clip(chain.matrix[:, current - 1], 0.0, None)
            cdf_cache[current] = _kahan_cdf(column)
        current = _draw(rng, cdf_cache[current]) + 1
        states.append(current)
    return Trajectory(kind="dtmc", states=states, times=None, t_max=None,
                      num_states=chain.num_states, init=init, seed=seed)


def simulate_ctmc(chain: MarkovChain, init: int, t_max: float, seed: int,
                  tol: Tolerance = DEFAULT_TOL) -> Trajectory:
    """Sample a continuous-time path up to t_max from an intensity matrix.

    In state j the holding time is exponential with rate |q_jj| and the
    jump lands on i with probability q_ij / |q_jj|; states with zero exit
    rate hold forever.
    """
    if chain.kind != "intensity":
        raise ValueError("continuous-time simulation needs an intensity matrix")
    report = validate(chain)
    if not report.passed:
        raise ValueError(f"invalid intensity matrix: {report.residuals}")
    if not 1 <= init <= chain.num_states:
        raise ValueError(f"initial state {init} out of range")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    rng = _rng(seed)
    states = [init]
    times = [0.0]
    current = init
    t = 0.0
    cdf_cache: dict[int, tuple[float, np.ndarray]] = {}
    while True:
        if current not in cdf_cache:
            rate = -float(chain.matrix[current - 1, current - 1])
            if rate <= tol.abs_tol:
                cdf_cache[current] = (0.0, np.empty(0))
            else:
                column = np.clip(chain.matrix[:, current - 1], 0.0, None)
                column[current - 1] = 0.0
                cdf_cache[current] = (rate, _kahan_cdf(column / rate))
        rate, cdf = cdf_cache[current]
        if rate == 0.0:
            break  # absorbing: holds forever
        t += rng.exponential(1.0 / rate)
        if t >= t_max:
            break
        current = _draw(rng, cdf) + 1
        states.append(current)
        times.append(t)
    return Trajectory(kind="ctmc", states=states, times=times, t_max=t_max,
                      num_states=chain.num_states, init=init, seed=seed)


def empirical_distribution(traj: Trajectory, burn_in: float | None = None) -> np.ndarray:
    """Occupation frequencies after burn-in; sums to one.

    Discrete paths are counted per step (burn_in counts steps, default 10
    percent); continuous paths are weighted by holding time (burn_in is a
    time, default 10 percent of the horizon, and the final holding
    interval extends to the horizon).
    """
    out = np.zeros(traj.num_states)
    if traj.kind == "dtmc":
        cut = int(0.1 * (len(traj.states) - 1)) if burn_in is None else int(burn_in)
        window = traj.states[cut:]
        if not window:
            raise ValueError("burn-in removed the whole trajectory")
        for s in window:
            out[s - 1] += 1.0
        return out / out.sum()
    assert traj.times is not None and traj.t_max is not None
    cut = 0.1 * traj.t_max if burn_in is None else float(burn_in)
    if cut >= traj.t_max:
        raise ValueError("burn-in removed the whole trajectory")
    entries = traj.times + [traj.t_max]
    for state, start, stop in zip(traj.states, entries, entries[1:]):
        lo, hi = max(start, cut), min(stop, traj.t_max)
        if hi > lo:
            out[state - 1] += hi - lo
    return out / out.sum()


def occupation_summary(chain: MarkovChain, traj: Trajectory,
                       burn_in: float | None = None) -> dict:
    """Summary of a run against the closed set containing its initial state.

    max_dev_sigma is the worst deviation of the empirical occupation from
    the uniform law on that closed set, in units of the binomial standard
    error with the number of recorded moves as sample size.
    """
    occupation = empirical_distribution(traj, burn_in)
    analysis = closed_sets(chain)
    home = next((s for s in analysis.closed_sets if traj.init in s), None)
    summary = {
        "seed": traj.seed,
        "init": traj.init,
        "occupation": [float(x) for x in occupation],
        "closed_set": home,
        "max_dev_sigma": None,
    }
    moves = len(traj.states) - 1
    if home is not None and moves > 0:
        p = 1.0 / len(home)
        sigma = math.sqrt(p * (1.0 - p) / moves)
        if sigma > 0:
            dev = max(abs(float(occupation[s - 1]) - p) for s in home)
            summary["max_dev_sigma"] = dev / sigma
    return summary


def trajectory_to_csv(traj: Trajectory, path, spec=None) -> None:
    """Write (step_or_time, state_index, decoded_label) rows."""
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step_or_time", "state_index", "label"])
        for k, state in enumerate(traj.states):
            stamp = k if traj.times is None else traj.times[k]
            label = "" if spec is None else str(decode(state, spec))
            writer.writerow([stamp, state, label])
