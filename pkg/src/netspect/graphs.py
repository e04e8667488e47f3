"""Undirected simple graphs: generators (ER / BA / WS), edge-list IO, queries.

Node indices are 0-based contiguous integers.  Edge-list files with arbitrary
integer labels are remapped on load and the label table is kept on the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, ParseError


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    edges are stored as a frozenset of sorted (i, j) tuples with i < j.
    """

    n: int
    edges: frozenset
    labels: tuple = ()  # original node labels for graphs loaded from files

    def __post_init__(self):
        for (i, j) in self.edges:
            if i == j:
                raise ParameterError(f"self-loop at node {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ParameterError(f"edge ({i},{j}) out of range for n={self.n}")
            if i > j:
                raise ParameterError(f"edge ({i},{j}) not in canonical (min,max) order")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency matrix."""
        A = np.zeros((self.n, self.n), dtype=bool)
        for (i, j) in self.edges:
            A[i, j] = A[j, i] = True
        return A

    def neighbors(self, i: int) -> np.ndarray:
        return np.nonzero(self.adjacency()[i])[0]

    def density(self) -> float:
        pairs = self.n * (self.n - 1) / 2
        return self.m / pairs if pairs else 0.0


def from_adjacency(A: np.ndarray, labels: tuple = ()) -> Graph:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ParameterError("adjacency must be square")
    if not np.array_equal(A, A.T):
        raise ParameterError("adjacency must be symmetric")
    if np.any(np.diag(A)):
        raise ParameterError("adjacency has nonzero diagonal")
    ii, jj = np.nonzero(np.triu(A, 1))
    return Graph(A.shape[0], frozenset(zip(ii.tolist(), jj.tolist())), labels)


def from_edges(n: int, edges) -> Graph:
    canon = frozenset((min(i, j), max(i, j)) for i, j in edges)
    return Graph(n, canon)


@dataclass(frozen=True)
class GraphModelSpec:
    """Parameters for one of the three synthetic generators."""

    model: str  # "ER" | "BA" | "WS"
    n: int
    p: float | None = None       # ER edge probability
    m: int | None = None         # BA attachment count
    ring_k: int | None = None    # WS ring degree (even)
    p_rw: float | None = None    # WS rewiring probability
    seed: int = 0

    def validate(self):
        if self.n < 1:
            raise ParameterError("n must be positive")
        if self.model == "ER":
            if self.p is None or not (0.0 <= self.p <= 1.0):
                raise ParameterError("ER probability must be in [0,1]")
        elif self.model == "BA":
            if self.m is None or not (1 <= self.m < self.n):
                raise ParameterError("BA m must satisfy 1 <= m < n")
        elif self.model == "WS":
            if self.ring_k is None or self.ring_k % 2 or not (0 < self.ring_k < self.n):
                raise ParameterError("WS ring degree must be even and < n")
            if self.p_rw is None or not (0.0 <= self.p_rw <= 1.0):
                raise ParameterError("WS rewiring probability must be in [0,1]")
        else:
            raise ParameterError(f"unknown model {self.model!r}")


def generate(spec: GraphModelSpec) -> Graph:
    """Draw a simple undirected graph from the named model, deterministically."""
    spec.validate()
    if spec.model == "ER":
        return erdos_renyi(spec.n, spec.p, spec.seed)
    if spec.model == "BA":
        return barabasi_albert(spec.n, spec.m, spec.seed)
    return watts_strogatz(spec.n, spec.ring_k, spec.p_rw, spec.seed)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return from_adjacency(upper | upper.T)


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Preferential attachment seeded with an m-node path core.

    Each new node attaches to m distinct existing nodes chosen proportionally
    to degree (repeated-endpoint sampling).  Edge count: (m-1) + (n-m)*m.
    """
    rng = np.random.default_rng(seed)
    A = np.zeros((n, n), dtype=bool)
    # endpoint multiset: core nodes appear once plus once per core edge end
    reps = list(range(m))
    for i in range(m - 1):
        A[i, i + 1] = A[i + 1, i] = True
        reps.extend((i, i + 1))
    for v in range(m, n):
        chosen = set()
        while len(chosen) < m:
            j = reps[int(rng.random() * len(reps))]
            if j != v and not A[v, j]:
                chosen.add(j)
        for j in chosen:
            A[v, j] = A[j, v] = True
            reps.extend((v, j))
    return from_adjacency(A)


def watts_strogatz(n: int, k: int, p_rw: float, seed: int) -> Graph:
    """Ring lattice of degree k with independent per-edge rewiring.

    Each clockwise edge (i, i+d) is rewired with probability p_rw to a uniform
    random endpoint, skipping self-loops and duplicates (edge kept if no valid
    target exists).
    """
    rng = np.random.default_rng(seed)
    A = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for d in range(1, k // 2 + 1):
            j = (i + d) % n
            A[i, j] = A[j, i] = True
    for d in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + d) % n
            if rng.random() < p_rw:
                candidates = np.nonzero(~(A[i] | (np.arange(n) == i)))[0]
                if candidates.size == 0:
                    continue
                w = candidates[int(rng.random() * candidates.size)]
                A[i, j] = A[j, i] = False
                A[i, w] = A[w, i] = True
    return from_adjacency(A)


def degree_sequence(graph: Graph) -> np.ndarray:
    deg = np.zeros(graph.n, dtype=np.int64)
    for (i, j) in graph.edges:
        deg[i] += 1
        deg[j] += 1
    return deg


def load_edge_list(path) -> Graph:
    """Parse whitespace-separated integer pairs, one edge per line.

    `#` starts a comment.  Arbitrary integer labels are remapped to 0..n-1 in
    sorted label order; the label table is stored on the graph.
    """
    pairs = []
    n_header = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            stripped = raw.strip()
            if stripped.startswith("#"):
                for tok in stripped[1:].split():
                    if tok.startswith("n=") and tok[2:].isdigit():
                        n_header = int(tok[2:])
                continue
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected two integers, got {raw.strip()!r}", lineno)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer token in {raw.strip()!r}", lineno) from None
            if a < 0 or b < 0:
                raise ParseError(f"negative node index in {raw.strip()!r}", lineno)
            if a == b:
                raise ParseError(f"self-loop {a}", lineno)
            pairs.append((a, b))
    if not pairs:
        return Graph(n_header or 0, frozenset())
    labels = sorted({v for e in pairs for v in e})
    contiguous = labels == list(range(len(labels)))
    if contiguous or n_header is not None:
        n = n_header if n_header is not None else 1 + max(labels)
        if n <= max(v for e in pairs for v in e):
            raise ParseError(f"header n={n} smaller than max node index")
        return from_edges(n, pairs)
    index = {lab: k for k, lab in enumerate(labels)}
    remapped = [(index[a], index[b]) for a, b in pairs]
    g = from_edges(len(labels), remapped)
    return Graph(g.n, g.edges, tuple(labels))


def save_edge_list(graph: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"# n={graph.n} m={graph.m}\n")
        for (i, j) in sorted(graph.edges):
            fh.write(f"{i} {j}\n")
