"""Efficiency of a weight vector via strong connectivity of the induced digraph.

For a reciprocal ``A`` and positive ``w`` the digraph ``G(A, w)`` has an
edge ``i -> j`` (``i != j``) iff ``w_i / w_j >= a_ij``. The vector ``w`` is
efficient (Pareto optimal) for ``A`` iff ``G(A, w)`` is strongly connected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OrderTooLarge
from .matrix import _as_array, as_weights, principal_submatrix

EDGE_TOL = 0.0
# for structurally tied ratios (entries equal to 1 after a diagonal similarity)
RELAXED_EDGE_TOL = 1e-9
ORACLE_MAX_ORDER = 12


@dataclass(frozen=True, eq=False)
class InducedDigraph:
    adjacency: np.ndarray

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    def successors(self, i: int) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[i])]

    def out_degree(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def in_degree(self) -> np.ndarray:
        return self.adjacency.sum(axis=0)

    def sinks(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.out_degree() == 0)]

    def sources(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.in_degree() == 0)]


@dataclass(frozen=True, eq=False)
class EfficiencyReport:
    efficient: bool
    digraph: InducedDigraph
    condensation: list[list[int]]
    sinks: list[int]
    sources: list[int]

    @property
    def scc_count(self) -> int:
        return len(self.condensation)

    def to_dict(self) -> dict:
        """Serializable form; vertex labels are 1-based."""
        return {
            "efficient": self.efficient,
            "sccs": [[v + 1 for v in comp] for comp in self.condensation],
            "sinks": [v + 1 for v in self.sinks],
            "sources": [v + 1 for v in self.sources],
            "adjacency": self.digraph.adjacency.astype(int).tolist(),
        }


def _check_dims(a: np.ndarray, w) -> np.ndarray:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return as_weights(w, a.shape[0])


def induced_digraph(a, w, edge_tol: float = EDGE_TOL) -> InducedDigraph:
    arr = _as_array(a)
    v = _check_dims(arr, w)
    adj = (v[:, None] / v[None, :]) >= arr * (1.0 - edge_tol)
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return InducedDigraph(adj)


def strongly_connected_components(succ: list[list[int]]) -> list[list[int]]:
    """Tarjan's lowlink algorithm, iterative, vertices visited in order 0..n-1.

    Components are returned in topological order of the condensation
    (a component appears before every component it has edges into), each
    sorted ascending.
    """
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    found: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            nbrs = succ[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                u = nbrs[pos]
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                found.append(sorted(comp))
    # Tarjan emits components in reverse topological order
    found.reverse()
    return found


def report_for_digraph(g: InducedDigraph) -> EfficiencyReport:
    succ = [g.successors(i) for i in range(g.order)]
    comps = strongly_connected_components(succ)
    return EfficiencyReport(
        efficient=len(comps) == 1,
        digraph=g,
        condensation=comps,
        sinks=g.sinks(),
        sources=g.sources(),
    )


def is_efficient(a, w, edge_tol: float = EDGE_TOL) -> EfficiencyReport:
    return report_for_digraph(induced_digraph(a, w, edge_tol))


def efficiency_oracle(a, w, edge_tol: float = EDGE_TOL) -> bool:
    """Independent check by Warshall transitive closure (cubic time).

    Builds its own edge relation and closure; shares no code with the
    SCC path beyond argument validation.
    """
    arr = _as_array(a)
    v = _check_dims(arr, w)
    n = arr.shape[0]
    if n > ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"oracle limited to order {ORACLE_MAX_ORDER}, got {n}")
    reach = [[i == j or v[i] / v[j] >= arr[i, j] * (1.0 - edge_tol) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return all(all(row) for row in reach)


def subvector_efficiency_profile(a, w, edge_tol: float = EDGE_TOL) -> np.ndarray:
    """Entry ``i`` tells whether ``w(i)`` is efficient for ``A(i)``."""
    arr = _as_array(a)
    v = _check_dims(arr, w)
    n = arr.shape[0]
    if n < 3:
        raise DimensionMismatch("subvector profile needs order at least 3")
    out = np.zeros(n, dtype=bool)
    for i in range(n):
        sub = principal_submatrix(arr, [i])
        out[i] = is_efficient(sub, np.delete(v, i), edge_tol).efficient
    return out
