"""Subhypergraph containment, Fano-freeness, and 2-colorability.

Containment means plain subgraph containment: an injective vertex map
sending every pattern edge onto some host edge.  Induced containment and
embedding counts are out of scope.
"""

from dataclasses import dataclass

from .errors import UniformityMismatchError
from .hypergraph import Hypergraph, TwoColoring, build_fano


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex i -> host vertex mapping[i]."""

    mapping: tuple[int, ...]

    def is_valid_for(self, host: Hypergraph, pattern: Hypergraph) -> bool:
        if len(self.mapping) != pattern.n:
            return False
        if len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= h < host.n for h in self.mapping):
            return False
        host_edges = set(host.edges)
        return all(
            tuple(sorted(self.mapping[v] for v in f)) in host_edges for f in pattern.edges
        )


def contains_subgraph(host: Hypergraph, pattern: Hypergraph) -> Embedding | None:
    """Exhaustive embedding search; returns a witness or None.

    Backtracks over pattern vertices in a static order (descending pattern
    degree, ties by id).  Candidates at each level must extend every
    pattern edge completed there to a host edge; they are read off a
    completion index mapping each (r-1)-subset of a host edge to the
    vertices completing it, which enforces the edge-closure check while
    generating candidates.  Host-degree pruning is applied on top.  The
    witness is deterministic: the lexicographically first assignment in
    search order.
    """
    if host.r != pattern.r:
        raise UniformityMismatchError(f"host is {host.r}-uniform, pattern {pattern.r}-uniform")
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern.n == 0:
        return Embedding(())

    completions: dict[tuple[int, ...], list[int]] = {}
    for e in host.edges:
        for i, v in enumerate(e):
            completions.setdefault(e[:i] + e[i + 1 :], []).append(v)

    pat_deg = pattern.degrees()
    host_deg = host.degrees()
    order = sorted(range(pattern.n), key=lambda v: (-pat_deg[v], v))
    level = {v: k for k, v in enumerate(order)}
    # pattern edges grouped by the level at which their last vertex is placed
    finishing: list[list[tuple[int, ...]]] = [[] for _ in range(pattern.n)]
    for f in pattern.edges:
        k = max(level[v] for v in f)
        finishing[k].append(tuple(v for v in f if v != order[k]))

    assign = [-1] * pattern.n
    used = [False] * host.n

    def extend(k: int) -> bool:
        if k == pattern.n:
            return True
        p = order[k]
        if finishing[k]:
            cand: set[int] | None = None
            for others in finishing[k]:
                key = tuple(sorted(assign[v] for v in others))
                completers = completions.get(key)
                if not completers:
                    return False
                cand = set(completers) if cand is None else cand & set(completers)
                if not cand:
                    return False
            candidates = sorted(cand)
        else:
            candidates = range(host.n)
        need = pat_deg[p]
        for h in candidates:
            if used[h] or host_deg[h] < need:
                continue
            assign[p] = h
            used[h] = True
            if extend(k + 1):
                return True
            used[h] = False
            assign[p] = -1
        return False

    if extend(0):
        return Embedding(tuple(assign))
    return None


def is_fano_free(hg: Hypergraph) -> bool:
    """True iff hg contains no copy of the Fano plane."""
    if hg.r != 3:
        raise UniformityMismatchError(f"Fano-freeness needs a 3-uniform hypergraph, got r={hg.r}")
    return contains_subgraph(hg, build_fano()) is None


def two_coloring(hg: Hypergraph) -> TwoColoring | None:
    """A proper 2-coloring of hg, or None when every assignment fails.

    Backtracking over vertices (descending degree) with unit propagation:
    once all but one vertex of an edge carry the same label, the last
    vertex is forced to the other label.  Vertices with no incident edges
    get label 0.  The first decision vertex is fixed to label 0; the
    complement of a proper coloring is proper, so this loses nothing.
    """
    n = hg.n
    labels = [-1] * n
    for v in range(n):
        if not hg.incidence[v]:
            labels[v] = 0
    order = [v for v in sorted(range(n), key=lambda v: (-hg.degree(v), v)) if labels[v] < 0]

    def propagate(v: int, c: int, trail: list[int]) -> bool:
        stack = [(v, c)]
        while stack:
            v, c = stack.pop()
            if labels[v] >= 0:
                if labels[v] != c:
                    return False
                continue
            labels[v] = c
            trail.append(v)
            for idx in hg.incidence[v]:
                edge = hg.edges[idx]
                unassigned = -1
                seen = set()
                for u in edge:
                    if labels[u] < 0:
                        if unassigned >= 0:
                            unassigned = -2  # two or more open, nothing to do
                            break
                        unassigned = u
                    else:
                        seen.add(labels[u])
                if unassigned == -1 and len(seen) == 1:
                    return False  # monochromatic edge
                if unassigned >= 0 and len(seen) == 1:
                    stack.append((unassigned, 1 - seen.pop()))
        return True

    def solve(i: int, first: bool) -> bool:
        while i < len(order) and labels[order[i]] >= 0:
            i += 1
        if i == len(order):
            return True
        v = order[i]
        for c in (0,) if first else (0, 1):
            trail: list[int] = []
            if propagate(v, c, trail) and solve(i + 1, False):
                return True
            for u in trail:
                labels[u] = -1
        return False

    if solve(0, True):
        return TwoColoring.from_assignment(labels)
    return None
