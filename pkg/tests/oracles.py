"""Independent reference implementations used only by the tests.

These deliberately avoid the package's propagation engine and solver paths:
propagation is a plain set-based fixpoint, pdn is a raw subset scan, and
articulation points come from delete-and-count.
"""

import itertools
import random

from powerdom import Graph


def oracle_power_dominate(g: Graph, pmus) -> set:
    observed = set(pmus)
    for v in pmus:
        observed.update(g.neighbors(v))
    changed = True
    while changed:
        changed = False
        for v in list(observed):
            unobserved = [u for u in g.neighbors(v) if u not in observed]
            if len(unobserved) == 1:
                observed.add(unobserved[0])
                changed = True
    return observed


def oracle_is_pds(g: Graph, pmus) -> bool:
    return len(oracle_power_dominate(g, pmus)) == g.node_count


def oracle_pdn(g: Graph) -> int:
    """Smallest PDS size by exhaustive enumeration (nonempty graphs)."""
    nodes = sorted(g.nodes)
    for k in range(1, g.node_count + 1):
        for subset in itertools.combinations(nodes, k):
            if oracle_is_pds(g, subset):
                return k
    raise AssertionError("V(G) itself must be a PDS")


def oracle_min_pds_sets(g: Graph):
    k = oracle_pdn(g)
    return [
        frozenset(s)
        for s in itertools.combinations(sorted(g.nodes), k)
        if oracle_is_pds(g, s)
    ]


def oracle_articulation_points(g: Graph) -> set:
    def component_count(graph: Graph) -> int:
        remaining = set(graph.nodes)
        count = 0
        while remaining:
            count += 1
            stack = [remaining.pop()]
            while stack:
                v = stack.pop()
                for u in graph.neighbors(v):
                    if u in remaining:
                        remaining.remove(u)
                        stack.append(u)
        return count

    base = component_count(g)
    cut = set()
    for v in g.nodes:
        rest = [u for u in g.nodes if u != v]
        if component_count(g.induced(rest)) > base:
            cut.add(v)
    return cut


def oracle_shortest_distance(g: Graph, source, target):
    """Shortest path length by enumerating simple paths (tiny graphs only)."""
    best = None

    def dfs(v, visited, length):
        nonlocal best
        if v == target:
            if best is None or length < best:
                best = length
            return
        if best is not None and length >= best:
            return
        for u in g.neighbors(v):
            if u not in visited:
                dfs(u, visited | {u}, length + 1)

    dfs(source, {source}, 0)
    return best


def random_graph(seed: int, n: int, p: float) -> Graph:
    """Seeded G(n, p) without any connectivity requirement."""
    rng = random.Random(seed)
    labels = [str(i) for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(labels, edges)
