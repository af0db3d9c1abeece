"""Random network generators and an independent resistance oracle.

pinv_resistance deliberately takes a different route than the production
solver (dense Moore-Penrose pseudoinverse of the full Laplacian, no
grounding), so the two can check each other.
"""

import itertools

import numpy as np

from cogres import ResistorNetwork


def _conductance(rng):
    return float(10.0 ** rng.uniform(-1.0, 1.0))


def random_connected_network(rng, max_nodes=8):
    """Random connected multigraph: a spanning tree plus extra edges."""
    n = int(rng.integers(2, max_nodes + 1))
    edges = []
    for node in range(1, n):
        edges.append((node, int(rng.integers(0, node)), _conductance(rng)))
    for _ in range(int(rng.integers(0, 2 * n))):
        a = int(rng.integers(0, n))
        b = int(rng.integers(0, n))
        if a != b:
            edges.append((a, b, _conductance(rng)))
    return ResistorNetwork(n, tuple(edges), 0, n - 1)


def random_series_parallel(rng, max_depth=4):
    """Random two-terminal series-parallel network and its known resistance.

    The expected value comes from the recursive construction itself
    (series sums, parallel product-over-sum), independent of any solver.
    """
    edges = []
    fresh = itertools.count(2)

    def build(s, t, depth):
        if depth == 0 or rng.random() < 0.35:
            r = 1.0 / _conductance(rng)
            edges.append((s, t, 1.0 / r))
            return r
        if rng.random() < 0.5:
            mid = next(fresh)
            return build(s, mid, depth - 1) + build(mid, t, depth - 1)
        r1 = build(s, t, depth - 1)
        r2 = build(s, t, depth - 1)
        return r1 * r2 / (r1 + r2)

    expected = build(0, 1, max_depth)
    node_count = max(max(a, b) for a, b, _ in edges) + 1
    return ResistorNetwork(node_count, tuple(edges), 0, 1), expected


def pinv_resistance(net):
    """Two-terminal resistance via the Laplacian pseudoinverse."""
    lap = np.zeros((net.node_count, net.node_count))
    for a, b, g in net.edges:
        lap[a, a] += g
        lap[b, b] += g
        lap[a, b] -= g
        lap[b, a] -= g
    probe = np.zeros(net.node_count)
    probe[net.source] = 1.0
    probe[net.sink] = -1.0
    return float(probe @ np.linalg.pinv(lap) @ probe)


def fully_connected(edges, node_count):
    """True if the edges tie all node_count nodes into one component."""
    parent = list(range(node_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in edges:
        parent[find(a)] = find(b)
    roots = {find(x) for x in range(node_count)}
    return len(roots) == 1
