"""Pre-processing: contraction of degree-2 runs, preferred-node detection
via terminal forts, redundant-node elimination, and qualitative scoring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import NotFoundError, PreconditionError
from .graph import Graph, connected_components, articulation_points, label_key, multi_source_distances
from .propagation import power_dominate

__all__ = [
    "ContractionReport",
    "PreferredReport",
    "ScoredCandidate",
    "contract",
    "preferred_nodes",
    "redundant_nodes",
    "qualitative_scores",
    "candidate_list",
]


@dataclass(frozen=True)
class ContractionReport:
    contracted: Graph
    removed: FrozenSet[str]
    rules: Dict[str, str]  # removed node -> "terminal" | "non_terminal"


@dataclass(frozen=True)
class PreferredReport:
    b_preferred: FrozenSet[str]
    f_preferred: FrozenSet[str]
    forts: Dict[str, FrozenSet[str]]  # f-preferred node -> observed terminal fort
    p_preferred: Optional[str]
    pref: FrozenSet[str]


@dataclass(frozen=True)
class ScoredCandidate:
    """Node with its search-ordering score.

    The score is degree plus a fraction in [0, 1) that grows with distance
    from the preferred set, so comparing candidates is identical to
    comparing (degree, pref_distance) lexicographically. pref_distance None
    means unreachable (or no preferred nodes), which sorts above every
    finite distance of the same degree.
    """

    node: str
    degree: int
    pref_distance: Optional[int]

    @property
    def score(self) -> Fraction:
        if self.pref_distance is None:
            return Fraction(self.degree + 1)
        return self.degree + 1 - Fraction(1, self.pref_distance + 1)

    def sort_key(self):
        d = float("inf") if self.pref_distance is None else self.pref_distance
        return (self.degree, d)

    def __lt__(self, other: "ScoredCandidate"):
        return self.sort_key() < other.sort_key()


# -- contraction -----------------------------------------------------------


def _walk_run(adj, deg, anchor: int, first: int):
    """Follow a chain of degree<=2 nodes from an anchor through one
    neighbor. Returns (run node indices, kind) with kind "terminal" when the
    run ends at a degree-1 node and "non_terminal" when it ends at a node of
    degree >= 3 (possibly the anchor itself)."""
    run = []
    prev, cur = anchor, first
    while True:
        run.append(cur)
        if deg[cur] == 1:
            return run, "terminal"
        nxt = next(u for u in adj[cur] if u != prev)
        if deg[nxt] >= 3 or nxt == anchor:
            return run, "non_terminal"
        prev, cur = cur, nxt


def contract(g: Graph) -> ContractionReport:
    """Shorten every maximal degree-2 run: leaf-ending runs keep only the
    node next to the anchor; interior runs longer than two keep their first
    and last nodes, joined by an edge. Kept nodes retain their labels."""
    adj = g.adjacency
    n = g.node_count
    deg = [len(a) for a in adj]
    for comp in connected_components(g):
        if not any(deg[g.index_of(v)] >= 3 for v in comp):
            raise PreconditionError(
                "contract requires every component to contain a node of degree >= 3"
            )
    removed: Dict[int, str] = {}
    added_edges: List[Tuple[int, int]] = []
    seen_runs = set()
    for a in range(n):
        if deg[a] < 3:
            continue
        for u in adj[a]:
            if deg[u] >= 3:
                continue
            run, kind = _walk_run(adj, deg, a, u)
            key = frozenset(run)
            if key in seen_runs:
                continue
            seen_runs.add(key)
            if kind == "terminal":
                for v in run[1:]:
                    removed[v] = "terminal"
            elif len(run) > 2:
                for v in run[1:-1]:
                    removed[v] = "non_terminal"
                added_edges.append((run[0], run[-1]))
    keep = [i for i in range(n) if i not in removed]
    keep_set = set(keep)
    labels = [g.label_at(i) for i in keep]
    edges = [
        (g.label_at(i), g.label_at(j))
        for i, j in g.edges_by_index()
        if i in keep_set and j in keep_set
    ]
    edges.extend((g.label_at(i), g.label_at(j)) for i, j in added_edges)
    return ContractionReport(
        contracted=Graph(labels, edges),
        removed=frozenset(g.label_at(i) for i in removed),
        rules={g.label_at(i): tag for i, tag in removed.items()},
    )


# -- preferred nodes -------------------------------------------------------


def _terminal_path_count(g: Graph, node: str) -> int:
    """Number of maximal leaf-ending degree-2 runs anchored at the node."""
    adj = g.adjacency
    deg = [len(a) for a in adj]
    i = g.index_of(node)
    count = 0
    for u in adj[i]:
        if deg[u] > 2:
            continue
        _, kind = _walk_run(adj, deg, i, u)
        if kind == "terminal":
            count += 1
    return count


def _components_without(g: Graph, v: str) -> List[FrozenSet[str]]:
    vi = g.index_of(v)
    n = g.node_count
    adj = g.adjacency
    seen = bytearray(n)
    seen[vi] = 1
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = 1
        queue = deque([start])
        block = [start]
        while queue:
            x = queue.popleft()
            for u in adj[x]:
                if not seen[u]:
                    seen[u] = 1
                    block.append(u)
                    queue.append(u)
        comps.append(frozenset(g.label_at(i) for i in block))
    return comps


def preferred_nodes(g: Graph) -> PreferredReport:
    """Detect b-, f-, and p-preferred nodes of a connected graph.

    b-preferred: two or more terminal paths. f-preferred: a cut node whose
    fully-observed components of g - v (under the process seeded with {v})
    attach to v by at least two edges in total; the stored fort is that
    maximal union. p-preferred: the first (label order) f-preferred node for
    which a single such component attached by >= 2 edges contains another
    f-preferred node.
    """
    if g.node_count == 0 or len(connected_components(g)) != 1:
        raise PreconditionError("preferred_nodes requires a connected, nonempty graph")
    b_pref = frozenset(
        v for v in g.nodes if _terminal_path_count(g, v) >= 2
    )
    f_pref = set()
    forts: Dict[str, FrozenSet[str]] = {}
    witness_comps: Dict[str, List[FrozenSet[str]]] = {}
    for v in sorted(articulation_points(g), key=label_key):
        observed = power_dominate(g, {v}).observed
        nbrs = set(g.neighbors(v))
        full = [c for c in _components_without(g, v) if c <= observed]
        union = frozenset().union(*full) if full else frozenset()
        if sum(1 for u in nbrs if u in union) >= 2:
            f_pref.add(v)
            forts[v] = union
            witness_comps[v] = [
                c for c in full if sum(1 for u in nbrs if u in c) >= 2
            ]
    p_pref = None
    for v in sorted(f_pref, key=label_key):
        others = f_pref - {v}
        if any(c & others for c in witness_comps[v]):
            p_pref = v
            break
    pref = frozenset({p_pref}) if p_pref is not None else frozenset(b_pref | f_pref)
    return PreferredReport(
        b_preferred=b_pref,
        f_preferred=frozenset(f_pref),
        forts=forts,
        p_preferred=p_pref,
        pref=pref,
    )


# -- redundancy and scoring ------------------------------------------------


def redundant_nodes(g: Graph, pref: Iterable[str]) -> FrozenSet[str]:
    """Nodes whose closed neighborhood is entirely observed after running
    the process on the preferred set."""
    pref = set(pref)
    observed = power_dominate(g, pref).observed
    out = []
    for v in g.nodes:
        if v in observed and all(u in observed for u in g.neighbors(v)):
            out.append(v)
    return frozenset(out)


def qualitative_scores(g: Graph, pref: Iterable[str]) -> Dict[str, ScoredCandidate]:
    """Score every node by degree plus a fraction growing with its distance
    to the nearest preferred node."""
    pref = set(pref)
    for v in pref:
        g.index_of(v)
    dist = multi_source_distances(g, pref)
    return {
        v: ScoredCandidate(node=v, degree=g.degree(v), pref_distance=dist[v])
        for v in g.nodes
    }


def candidate_list(g: Graph, pref: Iterable[str]) -> List[ScoredCandidate]:
    """Degree->=3 nodes outside the preferred and redundant sets, sorted by
    descending score with ties broken by ascending label byte order."""
    pref = set(pref)
    redundant = redundant_nodes(g, pref)
    scores = qualitative_scores(g, pref)
    cands = [
        scores[v]
        for v in g.nodes
        if g.degree(v) >= 3 and v not in pref and v not in redundant
    ]
    cands.sort(key=lambda c: (tuple(-x for x in c.sort_key()), label_key(c.node)))
    return cands
