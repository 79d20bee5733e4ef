"""Stochastic matrices and intensity matrices built from the lattice models.

Convention: entry (i, j) of a transition matrix is the probability of
moving TO state i FROM state j, so columns sum to one. Intensity matrices
have non-negative off-diagonal entries and zero column sums. States are
indexed 1-based at the API surface.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice_an import ChainSpec, hamiltonian
from .linalg import as_matrix, intensity_exp, symmetric_eigenvalues
from .reporting import DEFAULT_TOL, Tolerance, VerificationReport
from .su2_ladder import column_sum_value, entry_values, h_doubleprime

EDGE_THRESHOLD = 1e-12  # assembled entries are exact rationals; true zeros are exact

# indices (0-based) into entry_values that can appear off the diagonal
_OFFDIAG_VALUE_INDICES = (1, 2, 3, 5, 6, 7, 8)


@dataclass(frozen=True)
class LadderParams:
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class LadderSpec:
    """A two-leg ladder with L rungs; each rung holds four states."""

    params: LadderParams
    L: int

    def __post_init__(self) -> None:
        if self.L < 2:
            raise ValueError("need at least two rungs")

    @property
    def local_dim(self) -> int:
        return 4

    @property
    def dim(self) -> int:
        return 4 ** self.L

    def guard_dense(self) -> None:
        if self.dim > 4096:
            raise ValueError(f"state space {self.dim} exceeds dense guard 4096")


@dataclass
class MarkovChain:
    """A transition or intensity matrix plus its state encoding.

    spec may be None for ad-hoc matrices that carry no lattice encoding.
    """

    kind: str  # "transition" | "intensity"
    matrix: np.ndarray
    spec: ChainSpec | LadderSpec | None

    def __post_init__(self) -> None:
        if self.kind not in ("transition", "intensity"):
            raise ValueError("kind must be 'transition' or 'intensity'")
        self.matrix = as_matrix(self.matrix)

    @property
    def num_states(self) -> int:
        return self.matrix.shape[0]


# ---------------------------------------------------------------------------
# state encoding: site 1 is the most significant digit, indices are 1-based


def encode(label, spec: ChainSpec | LadderSpec) -> int:
    if isinstance(spec, ChainSpec):
        digits = list(label)
        base = spec.local_dim
        if len(digits) != spec.L:
            raise ValueError(f"label length {len(digits)} != L = {spec.L}")
        if any(not 0 <= v < base for v in digits):
            raise ValueError("site value out of range")
    else:
        pairs = list(label)
        if len(pairs) != spec.L:
            raise ValueError(f"label length {len(pairs)} != L = {spec.L}")
        digits = []
        for leg1, leg2 in pairs:
            if leg1 not in (0, 1) or leg2 not in (0, 1):
                raise ValueError("leg values must be 0 or 1")
            digits.append(2 * leg1 + leg2)
        base = 4
    index = 0
    for v in digits:
        index = index * base + v
    return index + 1


def decode(index: int, spec: ChainSpec | LadderSpec):
    if not 1 <= index <= spec.dim:
        raise ValueError(f"index {index} out of range 1..{spec.dim}")
    value = index - 1
    base = spec.local_dim
    digits = []
    for _ in range(spec.L):
        digits.append(value % base)
        value //= base
    digits.reverse()
    if isinstance(spec, ChainSpec):
        return tuple(digits)
    return tuple((v >> 1, v & 1) for v in digits)


# ---------------------------------------------------------------------------
# construction


def build_an_markov(spec: ChainSpec, kind: str) -> MarkovChain:
    """Chain-model Markov matrices: P = H/((L-1)(n+1)), Q = H - (n+1)(L-1) I."""
    spec.guard_dense()
    h = hamiltonian(spec).matrix
    norm = (spec.L - 1) * (spec.n + 1)
    if kind == "transition":
        matrix = h / norm
    elif kind == "intensity":
        matrix = h - norm * np.eye(spec.dim)
    else:
        raise ValueError("kind must be 'transition' or 'intensity'")
    return MarkovChain(kind=kind, matrix=matrix, spec=spec)


def build_ladder_markov(params: LadderParams, L: int, kind: str) -> MarkovChain:
    """Ladder Markov matrices from the transformed density.

    transition: (sum of embedded densities) / (4 (L-1) (18 + 4a + 4b + c));
    intensity: sum of embedded (density - column-sum * identity).
    """
    spec = LadderSpec(params=params, L=L)
    spec.guard_dense()
    a, b, c = params.a, params.b, params.c
    vals = entry_values(a, b, c)
    norm = column_sum_value(a, b, c)
    if norm == 0.0:
        raise ValueError("degenerate normalizer: 18 + 4a + 4b + c = 0")
    if kind == "transition":
        if min(vals) < 0:
            raise ValueError(f"parameters outside the non-negativity region "
                             f"(min entry value {min(vals)})")
    elif kind == "intensity":
        off = [vals[i] for i in _OFFDIAG_VALUE_INDICES]
        if min(off) < 0:
            raise ValueError(f"parameters give a negative off-diagonal rate "
                             f"(min off-diagonal value {min(off)})")
    else:
        raise ValueError("kind must be 'transition' or 'intensity'")
    density = h_doubleprime(a, b, c)
    if kind == "intensity":
        density = density - norm * np.eye(16)
    total = np.zeros((spec.dim, spec.dim))
    for i in range(1, L):
        left = np.eye(4 ** (i - 1))
        right = np.eye(4 ** (L - i - 1))
        total += np.kron(np.kron(left, density), right)
    if kind == "transition":
        total /= (L - 1) * norm
    return MarkovChain(kind=kind, matrix=total, spec=spec)


# ---------------------------------------------------------------------------
# validation and structure


def validate(chain: MarkovChain, tol: Tolerance = DEFAULT_TOL) -> VerificationReport:
    """Stochasticity / intensity validation under the column convention.

    Reports the worst entry (off-diagonal for intensity matrices), the
    worst column-sum deviation, and, informationally, whether rows satisfy
    the same normalization (true for symmetric matrices).
    """
    m = chain.matrix
    target = 1.0 if chain.kind == "transition" else 0.0
    col_dev = float(np.max(np.abs(m.sum(axis=0) - target)))
    row_dev = float(np.max(np.abs(m.sum(axis=1) - target)))
    if chain.kind == "transition":
        min_entry = float(m.min())
    else:
        off = m - np.diag(np.diag(m))
        min_entry = float(off.min())
    passed = min_entry >= -tol.abs_tol and col_dev <= tol.abs_tol
    return VerificationReport(
        name=f"markov_{chain.kind}",
        residuals={"min_entry": min_entry, "column_sum_deviation": col_dev},
        tol=tol.abs_tol,
        passed=passed,
        info={"row_normalized": row_dev <= tol.abs_tol, "row_sum_deviation": row_dev},
    )


def absorbing_states(chain: MarkovChain, tol: Tolerance = DEFAULT_TOL) -> list[int]:
    """States with unit self-probability and zero coupling to the rest."""
    if chain.kind != "transition":
        raise ValueError("absorbing-state detection expects a transition matrix")
    m = chain.matrix
    out = []
    for idx in range(m.shape[0]):
        row = np.abs(np.delete(m[idx, :], idx)).max() if m.shape[0] > 1 else 0.0
        col = np.abs(np.delete(m[:, idx], idx)).max() if m.shape[0] > 1 else 0.0
        if abs(m[idx, idx] - 1.0) <= tol.abs_tol and max(row, col) <= tol.abs_tol:
            out.append(idx + 1)
    return out


def absorbing_states_formula(spec: ChainSpec) -> list[int]:
    """Closed-form absorbing set of the chain model: the all-equal states.

    State (l, l, ..., l) has index l ((n+1)^L - 1)/n + 1 for l = 0..n.
    """
    n, L = spec.n, spec.L
    step = ((n + 1) * ((n + 1) ** (L - 1) - 1) + n) // n
    return [l * step + 1 for l in range(n + 1)]


@dataclass
class ChainAnalysis:
    absorbing: list[int]
    closed_sets: list[list[int]]
    reducible: bool


def _strongly_connected_components(adjacency: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Returns components as lists of 0-based nodes."""
    n = len(adjacency)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, ptr = work.pop()
            if ptr == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for k in range(ptr, len(adjacency[node])):
                nxt = adjacency[node][k]
                if index[nxt] == -1:
                    work.append((node, k + 1))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == node:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return components


def closed_sets(chain: MarkovChain, threshold: float = EDGE_THRESHOLD) -> ChainAnalysis:
    """Minimal closed sets of the chain: sink components of the flow graph.

    The directed graph has an edge j -> i whenever the (i, j) entry exceeds
    the threshold (off the diagonal), i.e. whenever probability can flow
    from j to i. Sink components of the condensation have no outgoing
    flow, so they are exactly the minimal closed sets; a proper closed set
    exists (the chain is reducible) whenever there is more than one
    component.
    """
    m = chain.matrix
    n = m.shape[0]
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        for i in range(n):
            if i != j and m[i, j] > threshold:
                adjacency[j].append(i)
    comps = _strongly_connected_components(adjacency)
    comp_of = [0] * n
    for cid, comp in enumerate(comps):
        for node in comp:
            comp_of[node] = cid
    is_sink = [True] * len(comps)
    for j in range(n):
        for i in adjacency[j]:
            if comp_of[i] != comp_of[j]:
                is_sink[comp_of[j]] = False
    sinks = [sorted(node + 1 for node in comp)
             for cid, comp in enumerate(comps) if is_sink[cid]]
    sinks.sort()
    absorbing = [s[0] for s in sinks if len(s) == 1]
    return ChainAnalysis(absorbing=absorbing, closed_sets=sinks,
                         reducible=len(comps) > 1)


def _null_space_1d(a: np.ndarray, tol: float) -> np.ndarray:
    """One-dimensional null space of a small square matrix by Gaussian elimination."""
    m = a.shape[0]
    work = a.astype(float).copy()
    piv_cols: list[int] = []
    row = 0
    scale = max(1.0, float(np.abs(work).max()))
    for col in range(m):
        if row == m:
            break
        pivot = row + int(np.argmax(np.abs(work[row:, col])))
        if abs(work[pivot, col]) <= tol * scale:
            continue
        work[[row, pivot]] = work[[pivot, row]]
        work[row] = work[row] / work[row, col]
        for r in range(m):
            if r != row and work[r, col] != 0.0:
                work[r] -= work[r, col] * work[row]
        piv_cols.append(col)
        row += 1
    free = [c for c in range(m) if c not in piv_cols]
    if len(free) != 1:
        raise ValueError(f"null space dimension {len(free)} != 1; "
                         "stationary distribution is not unique on this set")
    vec = np.zeros(m)
    vec[free[0]] = 1.0
    for r, col in enumerate(piv_cols):
        vec[col] = -work[r, free[0]]
    return vec


def stationary_distribution(chain: MarkovChain, closed_set,
                            tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Stationary law of an intensity matrix restricted to a closed set.

    Solves Q pi = 0 on the set, normalized to total mass one; the result
    is returned as a full-length vector supported on the set. Raises if
    the set is not closed or the stationary law on it is not unique.
    """
    if chain.kind != "intensity":
        raise ValueError("stationary distributions are computed for intensity matrices")
    members = sorted(int(s) for s in closed_set)
    if not members:
        raise ValueError("closed set is empty")
    idx = [s - 1 for s in members]
    outside = sorted(set(range(chain.num_states)) - set(idx))
    q = chain.matrix
    if outside:
        leak = float(np.abs(q[np.ix_(outside, idx)]).max())
        if leak > EDGE_THRESHOLD:
            raise ValueError(f"set is not closed: outgoing rate {leak}")
    sub = q[np.ix_(idx, idx)]
    vec = _null_space_1d(sub, tol.abs_tol)
    total = vec.sum()
    if abs(total) < tol.abs_tol:
        raise ValueError("null vector has zero mass")
    vec = vec / total
    if vec.min() < -1e-9:
        raise ValueError("stationary solution has a negative entry")
    vec = np.clip(vec, 0.0, None)
    vec = vec / vec.sum()
    full = np.zeros(chain.num_states)
    full[idx] = vec
    return full


def spectrum_coincidence(h, chain: MarkovChain, scale: float, shift: float,
                         tol: Tolerance = DEFAULT_TOL) -> float:
    """Largest eigenvalue mismatch between the chain and an affine image of h.

    Both matrices must be symmetric (true for every chain built here); the
    spectra are compared sorted, elementwise, after mapping the reference
    spectrum through x -> scale * x + shift.
    """
    h = as_matrix(h)
    if h.shape != chain.matrix.shape:
        raise ValueError("dimension mismatch between reference and chain")
    ref = symmetric_eigenvalues(h, tol)
    got = symmetric_eigenvalues(chain.matrix, tol)
    return float(np.max(np.abs(got - (scale * ref + shift))))


def transition_semigroup(chain: MarkovChain, t: float,
                         tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """e^(Q t) for an intensity chain; a valid transition matrix for t >= 0."""
    if chain.kind != "intensity":
        raise ValueError("semigroup is generated by an intensity matrix")
    return intensity_exp(chain.matrix, t, tol)
