"""Graph view of the known comparisons.

Connectivity of this graph decides whether the eigenvalue-optimal
completion exists and is unique, so everything downstream gates on it.
"""

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class ComparisonGraph:
    """Undirected graph with one edge per known off-diagonal pair."""

    n: int
    edges: frozenset  # of 2-tuples (i, j) with i < j

    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


def build_graph(matrix):
    """Graph of an IncompleteMatrix: edge (i, j) iff the entry is known."""
    n = matrix.n
    missing = set(matrix.missing_pairs)
    edges = frozenset((i, j) for i in range(n) for j in range(i + 1, n)
                      if (i, j) not in missing)
    return ComparisonGraph(n, edges)


def components(graph):
    """Connected components as a list of sorted vertex lists."""
    adj = graph.adjacency()
    seen = [False] * graph.n
    out = []
    for start in range(graph.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for nb in adj[v]:
                if not seen[nb]:
                    seen[nb] = True
                    queue.append(nb)
        out.append(sorted(comp))
    return out


def is_connected(graph):
    """Breadth-first reachability from vertex 0."""
    if graph.n <= 1:
        return True
    adj = graph.adjacency()
    seen = [False] * graph.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for nb in adj[v]:
            if not seen[nb]:
                seen[nb] = True
                count += 1
                queue.append(nb)
    return count == graph.n


def is_spanning_tree(graph):
    """Connected with exactly n - 1 edges."""
    return len(graph.edges) == graph.n - 1 and is_connected(graph)


def max_missing_for_connectivity(n):
    """Largest m that still admits a connected configuration."""
    if n < 3:
        raise ValueError("requires n >= 3")
    return (n - 1) * (n - 2) // 2
