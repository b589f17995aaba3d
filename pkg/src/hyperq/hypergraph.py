"""r-uniform hypergraphs: validated edge-list structure, builders, text I/O.

Vertices are the contiguous integers 0..n-1.  Edges are stored as sorted
tuples, with the edge list itself kept in lexicographic order, so two
hypergraphs compare equal iff they have the same uniformity, vertex count
and edge set.  Instances are immutable after construction and safe to
share between threads.
"""

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    ArgumentRangeError,
    DuplicateEdgeError,
    EdgeArityError,
    EmptyVertexSetError,
    FormatError,
    VertexOutOfRangeError,
)

Edge = tuple[int, ...]


class Hypergraph:
    """Immutable r-uniform hypergraph with an incidence index.

    Attributes
    ----------
    r : uniformity, at least 2
    n : number of vertices (isolated vertices are allowed)
    edges : lexicographically sorted tuple of edges, each a strictly
        increasing r-tuple of vertex ids
    incidence : tuple mapping each vertex to the indices of its edges

    Raises
    ------
    ArgumentRangeError
        If r < 2 or n < 0.
    EdgeArityError
        If an edge does not have exactly r distinct vertices.
    VertexOutOfRangeError
        If an edge mentions a vertex outside [0, n).
    DuplicateEdgeError
        If two input edges are equal as vertex sets.  Duplicates are
        never merged silently.
    """

    __slots__ = ("r", "n", "edges", "_incidence")

    def __init__(self, r: int, n: int, edges: Iterable[Iterable[int]]):
        if r < 2:
            raise ArgumentRangeError(f"uniformity must be >= 2, got {r}")
        if n < 0:
            raise ArgumentRangeError(f"vertex count must be >= 0, got {n}")
        canonical: list[Edge] = []
        seen: set[Edge] = set()
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != r or len(set(e)) != r:
                raise EdgeArityError(f"edge {tuple(raw)} must have exactly {r} distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise VertexOutOfRangeError(f"edge {e} mentions a vertex outside [0, {n})")
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            canonical.append(e)
        canonical.sort()
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canonical))
        object.__setattr__(self, "_incidence", None)

    @classmethod
    def _from_canonical(cls, r: int, n: int, edges: Iterable[Edge]) -> "Hypergraph":
        # trusted path for builders whose output is sorted, distinct and
        # in range by construction; skips the per-edge checks
        hg = object.__new__(cls)
        object.__setattr__(hg, "r", r)
        object.__setattr__(hg, "n", n)
        object.__setattr__(hg, "edges", tuple(edges))
        object.__setattr__(hg, "_incidence", None)
        return hg

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices (built on first use)."""
        inc = self._incidence
        if inc is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for idx, e in enumerate(self.edges):
                for v in e:
                    lists[v].append(idx)
            inc = tuple(tuple(ix) for ix in lists)
            object.__setattr__(self, "_incidence", inc)
        return inc

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(ix) for ix in self.incidence]

    def min_degree(self) -> int:
        """Minimum vertex degree; raises EmptyVertexSetError when n = 0."""
        if self.n == 0:
            raise EmptyVertexSetError("min_degree of a hypergraph with no vertices")
        return min(len(ix) for ix in self.incidence)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex.

        Isolated vertices form singleton components.
        """
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges:
            root = find(e[0])
            for v in e[1:]:
                parent[find(v)] = root
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values(), key=lambda g: g[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.r == other.r and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.r, self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TwoColoring:
    """A vertex bipartition witnessing 2-colorability.

    ``assignment[v]`` is the part label (0 or 1) of vertex v;
    ``part_sizes`` counts the label-0 and label-1 vertices.
    """

    assignment: tuple[int, ...]
    part_sizes: tuple[int, int]

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.assignment):
            raise ArgumentRangeError("coloring labels must be 0 or 1")
        a = self.assignment.count(0)
        if self.part_sizes != (a, len(self.assignment) - a):
            raise ArgumentRangeError("part_sizes inconsistent with assignment")

    @classmethod
    def from_assignment(cls, labels: Sequence[int]) -> "TwoColoring":
        labels = tuple(labels)
        a = labels.count(0)
        return cls(labels, (a, len(labels) - a))

    def is_proper_for(self, hg: Hypergraph) -> bool:
        """True iff no edge of hg is monochromatic under this coloring."""
        if len(self.assignment) != hg.n:
            return False
        for e in hg.edges:
            labels = {self.assignment[v] for v in e}
            if len(labels) < 2:
                return False
        return True


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

#: Fano plane edges over vertices 0..6 (the 7-point projective plane).
FANO_EDGES: tuple[Edge, ...] = (
    (0, 1, 2),
    (2, 3, 4),
    (4, 5, 0),
    (0, 6, 3),
    (1, 6, 4),
    (2, 6, 5),
    (1, 3, 5),
)


def build_fano() -> Hypergraph:
    """The Fano plane as a 3-graph on 7 vertices with 7 edges."""
    return Hypergraph(3, 7, FANO_EDGES)


def build_complete(n: int, r: int) -> Hypergraph:
    """Complete r-graph on n vertices: every r-subset is an edge."""
    if r < 2:
        raise ArgumentRangeError(f"uniformity must be >= 2, got {r}")
    if n < r:
        raise ArgumentRangeError(f"complete r-graph needs n >= r, got n={n}, r={r}")
    return Hypergraph._from_canonical(r, n, combinations(range(n), r))


def build_two_part_complete(a: int, b: int) -> tuple[Hypergraph, TwoColoring]:
    """Complete two-part 3-graph: all triples meeting both parts.

    Part one is {0..a-1}, part two is {a..a+b-1}.  Returns the hypergraph
    together with the coloring given by the parts.
    """
    if a < 1 or b < 1 or a + b < 3:
        raise ArgumentRangeError(f"parts must satisfy a, b >= 1 and a + b >= 3, got ({a}, {b})")
    n = a + b
    # emitted in lexicographic order: for each smallest vertex i (always in
    # part one), first the edges with one more part-one vertex, then two
    # part-two vertices
    edges: list[Edge] = []
    part_two = range(a, n)
    for i in range(a):
        for j in range(i + 1, a):
            for k in part_two:
                edges.append((i, j, k))
        for j, k in combinations(part_two, 2):
            edges.append((i, j, k))
    coloring = TwoColoring(tuple(0 if v < a else 1 for v in range(n)), (a, b))
    return Hypergraph._from_canonical(3, n, edges), coloring


def build_bn(n: int) -> tuple[Hypergraph, TwoColoring]:
    """Balanced complete two-part 3-graph on n vertices (larger part first)."""
    if n < 3:
        raise ArgumentRangeError(f"balanced two-part 3-graph needs n >= 3, got {n}")
    return build_two_part_complete((n + 1) // 2, n // 2)


def build_expansion(base_edges: Iterable[Iterable[int]], n_base: int, r: int) -> Hypergraph:
    """Expand a 2-graph into an r-graph by padding each edge with r-2 fresh vertices.

    Fresh vertices are distinct across edges and numbered consecutively
    from n_base in the order the base edges are given.
    """
    if r < 2:
        raise ArgumentRangeError(f"uniformity must be >= 2, got {r}")
    pairs: list[Edge] = []
    seen: set[Edge] = set()
    for raw in base_edges:
        e = tuple(sorted(raw))
        if len(e) != 2 or len(set(e)) != 2:
            raise EdgeArityError(f"base edge {tuple(raw)} must be a pair of distinct vertices")
        if e[0] < 0 or e[-1] >= n_base:
            raise VertexOutOfRangeError(f"base edge {e} mentions a vertex outside [0, {n_base})")
        if e in seen:
            raise DuplicateEdgeError(f"duplicate base edge {e}")
        seen.add(e)
        pairs.append(e)
    n = n_base + (r - 2) * len(pairs)
    edges = []
    fresh = n_base
    for e in pairs:
        edges.append(e + tuple(range(fresh, fresh + r - 2)))
        fresh += r - 2
    return Hypergraph(r, n, edges)


def delete_vertex(hg: Hypergraph, w: int) -> Hypergraph:
    """Remove vertex w and its incident edges, re-indexing ids above w down by one."""
    if not 0 <= w < hg.n:
        raise VertexOutOfRangeError(f"vertex {w} outside [0, {hg.n})")
    edges = [
        tuple(v - 1 if v > w else v for v in e)
        for e in hg.edges
        if w not in e
    ]
    return Hypergraph(hg.r, hg.n - 1, edges)


def random_connected(n: int, r: int, m: int, rng: int | random.Random = 0) -> Hypergraph:
    """Seeded random connected r-graph on n vertices with m distinct edges.

    Draws edge sets uniformly until a connected one appears, so small m
    relative to n may reject many times; m must make connectivity possible
    (m >= (n - 1) / (r - 1)).
    """
    if n < r:
        raise ArgumentRangeError(f"need n >= r, got n={n}, r={r}")
    total = math.comb(n, r)
    if not 1 <= m <= total:
        raise ArgumentRangeError(f"edge count {m} outside [1, {total}]")
    if m * (r - 1) < n - 1:
        raise ArgumentRangeError(f"{m} edges can never connect {n} vertices")
    if isinstance(rng, int):
        rng = random.Random(rng)
    pool = list(combinations(range(n), r))
    while True:
        hg = Hypergraph(r, n, rng.sample(pool, m))
        if len(hg.components()) == 1:
            return hg


# ---------------------------------------------------------------------------
# Text format: header "r n m", then m lines of r vertex ids
# ---------------------------------------------------------------------------


def parse(text: str) -> Hypergraph:
    """Parse the hypergraph text format.

    Lines starting with '#' and blank lines are ignored.  The first
    remaining line must read "r n m"; exactly m edge lines with r vertex
    ids each must follow.
    """
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            rows.append(stripped)
    if not rows:
        raise FormatError("empty input: missing header line")
    header = rows[0].split()
    if len(header) != 3:
        raise FormatError(f"header must have 3 fields 'r n m', got {rows[0]!r}")
    try:
        r, n, m = (int(tok) for tok in header)
    except ValueError:
        raise FormatError(f"non-integer field in header {rows[0]!r}") from None
    if m < 0:
        raise FormatError(f"negative edge count {m}")
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for row in body:
        toks = row.split()
        if len(toks) != r:
            raise FormatError(f"edge line {row!r} must have {r} vertex ids")
        try:
            edges.append(tuple(int(tok) for tok in toks))
        except ValueError:
            raise FormatError(f"non-integer vertex id in line {row!r}") from None
    return Hypergraph(r, n, edges)


def serialize(hg: Hypergraph) -> str:
    """Render the text format; edges appear in lexicographic order."""
    lines = [f"{hg.r} {hg.n} {hg.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in hg.edges)
    return "\n".join(lines) + "\n"
