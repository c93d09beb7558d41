"""Solve pipeline: components, trivial cases, contraction, preferred nodes,
candidate ordering, and level-by-level subset search in sequential,
parallel, and naive-baseline modes.

Levels are strict barriers: size k+1 is only searched once every k-subset
has failed, which is what makes the reported pdn exact. Within a level,
workers scan contiguous chunks of combination ranks; in deterministic mode
the minimum-rank success wins regardless of worker count.
"""

from __future__ import annotations

import math
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InternalError, ParameterError
from .graph import Graph, connected_components, label_key
from .propagation import is_power_dominating_set, observes_all
from .reduction import candidate_list, contract, preferred_nodes, redundant_nodes

__all__ = [
    "SolverConfig",
    "Diagnostics",
    "SolveResult",
    "solve",
    "allminpds",
    "subset_counts",
    "combination_unrank",
    "combination_rank",
    "default_workers",
]


def default_workers() -> int:
    """Available processors less one, floor 1."""
    return max((os.cpu_count() or 2) - 1, 1)


@dataclass(frozen=True)
class SolverConfig:
    workers: int = 1
    mode: str = "optimized"  # "optimized" | "naive"
    deterministic: bool = True
    chunk_size: int = 4096
    count_subsets: bool = True

    def __post_init__(self):
        if self.workers < 1:
            raise ParameterError("workers must be >= 1")
        if self.chunk_size < 1:
            raise ParameterError("chunk_size must be >= 1")
        if self.mode not in ("optimized", "naive"):
            raise ParameterError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Diagnostics:
    n_formula: int
    n_prime_formula: int
    p: int
    d: int
    r: int
    candidates: int
    removed_by_contraction: int
    subsets_checked: int
    levels_completed: int


@dataclass(frozen=True)
class SolveResult:
    pdn: int
    pds: Tuple[str, ...]
    per_component: Tuple[Tuple[FrozenSet[str], int, Tuple[str, ...]], ...]
    diagnostics: Diagnostics


# -- combinatorics ---------------------------------------------------------


def combination_unrank(n: int, k: int, rank: int) -> List[int]:
    """rank-th k-combination of {0..n-1} in lexicographic order."""
    if n < 0 or k < 0 or k > n:
        raise ParameterError("need 0 <= k <= n")
    if not 0 <= rank < math.comb(n, k):
        raise ParameterError(f"rank {rank} out of range for C({n},{k})")
    combo = []
    next_val = 0
    remaining = rank
    for picked in range(k):
        for v in range(next_val, n):
            block = math.comb(n - 1 - v, k - 1 - picked)
            if remaining < block:
                combo.append(v)
                next_val = v + 1
                break
            remaining -= block
    return combo


def combination_rank(n: int, combo: Sequence[int]) -> int:
    """Lexicographic rank of a sorted k-combination of {0..n-1}."""
    k = len(combo)
    rank = 0
    prev = -1
    for picked, v in enumerate(combo):
        if not prev < v < n:
            raise ParameterError("combination must be strictly increasing in range")
        for w in range(prev + 1, v):
            rank += math.comb(n - 1 - w, k - 1 - picked)
        prev = v
    return rank


def _next_combination(combo: List[int], n: int) -> bool:
    """Advance to the lexicographic successor in place; False at the end."""
    k = len(combo)
    i = k - 1
    while i >= 0 and combo[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, k):
        combo[j] = combo[j - 1] + 1
    return True


def subset_counts(
    nodes_total: int,
    pdn: int,
    contracted_total: int,
    p: int,
    d: int,
    r: int,
) -> Tuple[int, int]:
    """Counts of subsets examined below the success size by the naive
    baseline (N) and the reduced pipeline (N')."""
    for name, value in (
        ("nodes_total", nodes_total),
        ("pdn", pdn),
        ("contracted_total", contracted_total),
        ("p", p),
        ("d", d),
        ("r", r),
    ):
        if value < 0:
            raise ParameterError(f"{name} must be non-negative")
    if p + d + r > contracted_total:
        raise ParameterError("p + d + r exceeds contracted node count")
    n_naive = sum(math.comb(nodes_total, i) for i in range(pdn))
    reduced = contracted_total - p - d - r
    n_reduced = sum(math.comb(reduced, i) for i in range(max(pdn - p, 0)))
    return n_naive, n_reduced


# -- chunk scanning (worker side) ------------------------------------------

_POLL_MASK = 1023

_W_ADJ = None
_W_SEEDS = None
_W_CAND = None
_W_STOP = None
_W_SET_ON_FIND = False


def _worker_init(adj, seeds, cand, stop, set_on_find):
    global _W_ADJ, _W_SEEDS, _W_CAND, _W_STOP, _W_SET_ON_FIND
    _W_ADJ = adj
    _W_SEEDS = seeds
    _W_CAND = cand
    _W_STOP = stop
    _W_SET_ON_FIND = set_on_find


def _scan_range(adj, seeds, cand, k, start, end, stop=None, set_on_find=False):
    """Test ranks [start, end) of k-combinations of candidate positions;
    return the first successful rank or None."""
    m = len(cand)
    combo = combination_unrank(m, k, start)
    rank = start
    polls = 0
    while rank < end:
        if stop is not None and polls & _POLL_MASK == 0 and stop.value:
            return None
        polls += 1
        if observes_all(adj, tuple(seeds) + tuple(cand[p] for p in combo)):
            if set_on_find and stop is not None:
                stop.value = 1
            return rank
        if not _next_combination(combo, m):
            break
        rank += 1
    return None


def _collect_range(adj, seeds, cand, k, start, end):
    """Return every successful rank in [start, end)."""
    m = len(cand)
    combo = combination_unrank(m, k, start)
    hits = []
    rank = start
    while rank < end:
        if observes_all(adj, tuple(seeds) + tuple(cand[p] for p in combo)):
            hits.append(rank)
        if not _next_combination(combo, m):
            break
        rank += 1
    return hits


def _scan_task(spec):
    k, start, end = spec
    if _W_STOP is not None and _W_STOP.value:
        return None
    return _scan_range(
        _W_ADJ, _W_SEEDS, _W_CAND, k, start, end,
        stop=_W_STOP, set_on_find=_W_SET_ON_FIND,
    )


def _collect_task(spec):
    k, start, end = spec
    return _collect_range(_W_ADJ, _W_SEEDS, _W_CAND, k, start, end)


class _WorkerTeam:
    """Lazily created process pool sharing an immutable search payload and
    an early-stop flag polled at chunk boundaries."""

    def __init__(self, workers: int, adj, seeds, cand, deterministic: bool):
        self.workers = workers
        self.adj = adj
        self.seeds = seeds
        self.cand = cand
        self.deterministic = deterministic
        self._pool = None
        self._stop = None

    def _ensure(self):
        if self._pool is None:
            ctx = multiprocessing.get_context("fork")
            self._stop = ctx.Value("b", 0, lock=False)
            self._pool = ctx.Pool(
                self.workers,
                initializer=_worker_init,
                initargs=(self.adj, self.seeds, self.cand, self._stop,
                          not self.deterministic),
            )

    def scan_level(self, k: int, total: int, chunk: int) -> Optional[int]:
        self._ensure()
        self._stop.value = 0
        specs = (
            (k, s, min(s + chunk, total)) for s in range(0, total, chunk)
        )
        win = None
        if self.deterministic:
            for res in self._pool.imap(_scan_task, specs):
                if res is not None and win is None:
                    win = res
                    self._stop.value = 1
        else:
            for res in self._pool.imap_unordered(_scan_task, specs):
                if res is not None:
                    if win is None:
                        win = res
                    self._stop.value = 1
        return win

    def collect_level(self, k: int, total: int, chunk: int) -> List[int]:
        self._ensure()
        self._stop.value = 0
        specs = (
            (k, s, min(s + chunk, total)) for s in range(0, total, chunk)
        )
        hits: List[int] = []
        for chunk_hits in self._pool.imap(_collect_task, specs):
            hits.extend(chunk_hits)
        return hits

    def close(self):
        if self._pool is not None:
            self._pool.terminate()
            self._pool.join()
            self._pool = None


# -- level search ----------------------------------------------------------


@dataclass
class _LevelSearchOutcome:
    k: int = 0
    combo_positions: Optional[List[int]] = None
    checked: int = 0
    levels_completed: int = 0


def _search_levels(
    adj,
    seeds: Tuple[int, ...],
    cand_idx: Tuple[int, ...],
    cfg: SolverConfig,
) -> _LevelSearchOutcome:
    """Search levels k = 1, 2, ... over the candidate positions, testing
    seeds + combination. Each level is exhausted before the next begins."""
    out = _LevelSearchOutcome()
    m = len(cand_idx)
    team = None
    try:
        for k in range(1, m + 1):
            total = math.comb(m, k)
            if cfg.workers > 1 and total > cfg.chunk_size:
                if team is None:
                    team = _WorkerTeam(cfg.workers, adj, seeds, cand_idx,
                                       cfg.deterministic)
                win = team.scan_level(k, total, cfg.chunk_size)
            else:
                win = _scan_range(adj, seeds, cand_idx, k, 0, total)
            if win is not None:
                out.k = k
                out.combo_positions = combination_unrank(m, k, win)
                out.checked += win + 1
                return out
            out.checked += total
            out.levels_completed += 1
        return out
    finally:
        if team is not None:
            team.close()


# -- per-component solvers -------------------------------------------------


@dataclass
class _ComponentOutcome:
    pdn: int
    pds: Tuple[str, ...]
    contracted_n: int
    removed: int = 0
    pref_count: int = 0
    d: int = 0
    r: int = 0
    candidates: int = 0
    subsets_checked: int = 0
    levels_completed: int = 0


def _solve_trivial_component(sub: Graph) -> _ComponentOutcome:
    # path or cycle: any single node is a PDS
    node = min(sub.nodes, key=label_key)
    return _ComponentOutcome(
        pdn=1,
        pds=(node,),
        contracted_n=sub.node_count,
        d=sub.node_count,
    )


def _solve_optimized_component(sub: Graph, cfg: SolverConfig) -> _ComponentOutcome:
    adj = sub.adjacency
    if all(len(a) <= 2 for a in adj):
        return _solve_trivial_component(sub)
    report = contract(sub)
    cg = report.contracted
    prep = preferred_nodes(cg)
    pref_sorted = sorted(prep.pref, key=label_key)
    cands = candidate_list(cg, prep.pref)
    cand_labels = [c.node for c in cands]
    cadj = cg.adjacency
    deg3 = sum(1 for a in cadj if len(a) >= 3)
    redundant = redundant_nodes(cg, prep.pref)
    r_stat = sum(
        1 for v in redundant if cg.degree(v) >= 3 and v not in prep.pref
    )
    out = _ComponentOutcome(
        pdn=0,
        pds=(),
        contracted_n=cg.node_count,
        removed=len(report.removed),
        pref_count=len(prep.pref),
        d=cg.node_count - deg3,
        r=r_stat,
        candidates=len(cand_labels),
    )
    seeds = tuple(cg.index_of(v) for v in pref_sorted)
    if pref_sorted:
        out.subsets_checked += 1
        if observes_all(cadj, seeds):
            out.pdn = len(pref_sorted)
            out.pds = tuple(pref_sorted)
            return out
    cand_idx = tuple(cg.index_of(v) for v in cand_labels)
    level = _search_levels(cadj, seeds, cand_idx, cfg)
    out.subsets_checked += level.checked
    out.levels_completed = level.levels_completed
    if level.combo_positions is not None:
        chosen = tuple(cand_labels[p] for p in level.combo_positions)
        out.pdn = len(pref_sorted) + level.k
        out.pds = tuple(pref_sorted) + chosen
        return out
    # Candidate levels exhausted without success. This is outside the
    # pipeline's structural guarantees; fall back to an unrestricted
    # enumeration so the answer stays exact.
    fallback = _solve_naive_component(sub, cfg)
    fallback.contracted_n = out.contracted_n
    fallback.removed = out.removed
    fallback.pref_count = out.pref_count
    fallback.d = out.d
    fallback.r = out.r
    fallback.candidates = out.candidates
    fallback.subsets_checked += out.subsets_checked
    return fallback


def _solve_naive_component(sub: Graph, cfg: SolverConfig) -> _ComponentOutcome:
    labels = sorted(sub.nodes, key=label_key)
    idx = tuple(sub.index_of(v) for v in labels)
    level = _search_levels(sub.adjacency, (), idx, cfg)
    if level.combo_positions is None:
        raise InternalError("exhausted all subsets without finding a PDS")
    return _ComponentOutcome(
        pdn=level.k,
        pds=tuple(labels[p] for p in level.combo_positions),
        contracted_n=sub.node_count,
        subsets_checked=level.checked,
        levels_completed=level.levels_completed,
    )


# -- public API ------------------------------------------------------------


def solve(g: Graph, config: Optional[SolverConfig] = None) -> SolveResult:
    """Compute the power domination number and a minimum PDS.

    Disconnected inputs are solved per component (pdn sums, placements
    union); the empty graph has pdn 0.
    """
    cfg = config or SolverConfig()
    outcomes: List[_ComponentOutcome] = []
    comps = connected_components(g)
    for comp in comps:
        sub = g.induced(comp)
        if cfg.mode == "naive":
            outcomes.append(_solve_naive_component(sub, cfg))
        else:
            outcomes.append(_solve_optimized_component(sub, cfg))
    pdn = sum(o.pdn for o in outcomes)
    pds: Tuple[str, ...] = tuple(v for o in outcomes for v in o.pds)
    if g.node_count and not is_power_dominating_set(g, pds):
        raise InternalError("solver returned a set that fails verification")
    if cfg.mode == "naive":
        n_formula, n_prime = subset_counts(g.node_count, pdn, g.node_count, 0, 0, 0)
        diag = Diagnostics(
            n_formula=n_formula,
            n_prime_formula=n_prime,
            p=0,
            d=0,
            r=0,
            candidates=g.node_count,
            removed_by_contraction=0,
            subsets_checked=sum(o.subsets_checked for o in outcomes)
            if cfg.count_subsets
            else 0,
            levels_completed=sum(o.levels_completed for o in outcomes),
        )
    else:
        p_total = sum(o.pref_count for o in outcomes)
        d_total = sum(o.d for o in outcomes)
        r_total = sum(o.r for o in outcomes)
        contracted_total = sum(o.contracted_n for o in outcomes)
        n_formula, n_prime = subset_counts(
            g.node_count, pdn, contracted_total, p_total, d_total, r_total
        )
        diag = Diagnostics(
            n_formula=n_formula,
            n_prime_formula=n_prime,
            p=p_total,
            d=d_total,
            r=r_total,
            candidates=sum(o.candidates for o in outcomes),
            removed_by_contraction=sum(o.removed for o in outcomes),
            subsets_checked=sum(o.subsets_checked for o in outcomes)
            if cfg.count_subsets
            else 0,
            levels_completed=sum(o.levels_completed for o in outcomes),
        )
    per_component = tuple(
        (comp, o.pdn, o.pds) for comp, o in zip(comps, outcomes)
    )
    return SolveResult(pdn=pdn, pds=pds, per_component=per_component, diagnostics=diag)


def allminpds(g: Graph, config: Optional[SolverConfig] = None) -> List[FrozenSet[str]]:
    """All minimum power dominating sets of the (original, uncontracted)
    graph, in deterministic enumeration order."""
    if g.node_count == 0:
        raise ParameterError("allminpds requires a nonempty graph")
    cfg = config or SolverConfig()
    k = solve(g, cfg).pdn
    labels = sorted(g.nodes, key=label_key)
    idx = tuple(g.index_of(v) for v in labels)
    adj = g.adjacency
    total = math.comb(len(labels), k)
    if cfg.workers > 1 and total > cfg.chunk_size:
        team = _WorkerTeam(cfg.workers, adj, (), idx, True)
        try:
            hits = team.collect_level(k, total, cfg.chunk_size)
        finally:
            team.close()
    else:
        hits = _collect_range(adj, (), idx, k, 0, total)
    result = []
    for rank in hits:
        combo = combination_unrank(len(labels), k, rank)
        result.append(frozenset(labels[p] for p in combo))
    return result
