"""
Graph representation for independence-polynomial computations.

Graphs are labeled, finite and simple, stored as one neighbor bitmask per
vertex. Vertex subsets are plain integers used as bitmasks, so subset
operations (neighborhood removal, stability checks, component splitting)
are word-parallel.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union
import logging

from .errors import CapacityError, GraphError

logger = logging.getLogger(__name__)

MAX_VERTICES = 64
WELL_COVERED_MAX_VERTICES = 32

# A vertex subset of a graph, bit i set <=> vertex i in the set.
VertexSet = int


def bit(v: int) -> int:
    return 1 << v


def members(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex indices of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph on vertices 0..n-1.

    ``adj[i]`` is the neighbor mask of vertex i. ``origin`` maps each vertex
    back to its index in the graph it was cut from (identity for graphs
    built from scratch), so results on subgraphs can be reported in the
    original labeling.
    """
    n: int
    adj: Tuple[int, ...]
    origin: Tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if self.n > MAX_VERTICES:
            raise CapacityError(f"{self.n} vertices exceed the {MAX_VERTICES}-vertex capacity",
                                vertices=self.n, capacity=MAX_VERTICES)
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise GraphError(f"vertex {i} has a neighbor outside 0..{self.n - 1}")
            if nbrs >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in members(nbrs):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"adjacency is not symmetric between {i} and {j}")
        if not self.origin:
            object.__setattr__(self, 'origin', tuple(range(self.n)))
        elif len(self.origin) != self.n:
            raise GraphError("origin map must have one entry per vertex")

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        return list(members(self.adj[v]))

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return self.adj[v] | bit(v)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def degrees(self) -> List[int]:
        return [popcount(m) for m in self.adj]

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _as_mask(g: Graph, s: Union[VertexSet, Iterable[int]]) -> VertexSet:
    mask = s if isinstance(s, int) else mask_of(s)
    if mask < 0 or mask & ~g.full_mask:
        raise GraphError(f"vertex set {bin(mask)} is not within 0..{g.n - 1}")
    return mask


# ==================== Construction ====================

def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph on n vertices with the given edges; duplicates collapse."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceed the {MAX_VERTICES}-vertex capacity",
                            vertices=n, capacity=MAX_VERTICES)
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_edge_list_text(text: str) -> Graph:
    """
    Parse the edge-list text format: first line ``n``, then one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split('#', 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("edge-list text is empty; the first line must be the vertex count")
    try:
        n = int(lines[0])
        edges = []
        for number, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"edge line {number} must hold exactly two indices: {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as e:
        if isinstance(e, GraphError):
            raise
        raise GraphError(f"edge-list text is not numeric: {e}") from e
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _check_capacity(total: int, what: str):
    if total > MAX_VERTICES:
        raise CapacityError(f"{what} needs {total} vertices, capacity is {MAX_VERTICES}",
                            vertices=total, capacity=MAX_VERTICES)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 ⊔ G2: vertices of g2 shifted by g1.n, no cross edges."""
    _check_capacity(g1.n + g2.n, "disjoint union")
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(m << shift for m in g2.adj))


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """G1 ⊎ G2: disjoint union plus every edge between the two blocks."""
    _check_capacity(g1.n + g2.n, "Zykov sum")
    shift = g1.n
    left_block = g1.full_mask
    right_block = g2.full_mask << shift
    adj = tuple(m | right_block for m in g1.adj) + tuple((m << shift) | left_block for m in g2.adj)
    return Graph(g1.n + g2.n, adj)


def star(g: Graph) -> Graph:
    """G*: a pendant vertex i+n attached to every vertex i of g."""
    _check_capacity(2 * g.n, "star graph")
    n = g.n
    adj = tuple(m | bit(i + n) for i, m in enumerate(g.adj)) + tuple(bit(i) for i in range(n))
    return Graph(2 * n, adj)


def edge_join(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """G1 ⊘ G2: disjoint union plus the single edge (u, v + g1.n)."""
    g1._check_vertex(u)
    g2._check_vertex(v)
    joined = disjoint_union(g1, g2)
    w = v + g1.n
    adj = list(joined.adj)
    adj[u] |= bit(w)
    adj[w] |= bit(u)
    return Graph(joined.n, tuple(adj))


# ==================== Subgraphs ====================

def induced(g: Graph, s: Union[VertexSet, Iterable[int]]) -> Graph:
    """
    Subgraph induced by s, compacted in increasing index order.

    The result's ``origin`` maps each new index to the index it had in the
    graph g was itself derived from.
    """
    mask = _as_mask(g, s)
    keep = list(members(mask))
    position = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        nbrs = 0
        for w in members(g.adj[old] & mask):
            nbrs |= bit(position[w])
        adj.append(nbrs)
    return Graph(len(keep), tuple(adj), tuple(g.origin[old] for old in keep))


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v."""
    g._check_vertex(v)
    return induced(g, g.full_mask & ~bit(v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """G - N[v]."""
    return induced(g, g.full_mask & ~g.closed_neighborhood(v))


def component_masks(adj: Sequence[int], mask: VertexSet) -> List[VertexSet]:
    """Connected components of the subgraph induced by mask, lowest vertex first."""
    comps = []
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        comp = frontier
        while frontier:
            grown = 0
            for v in members(frontier):
                grown |= adj[v]
            frontier = grown & mask & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> List[VertexSet]:
    return component_masks(g.adj, g.full_mask)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# ==================== Predicates ====================

def is_stable(g: Graph, s: Union[VertexSet, Iterable[int]]) -> bool:
    """True iff no edge joins two members of s."""
    mask = _as_mask(g, s)
    return all(not (g.adj[v] & mask) for v in members(mask))


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbors."""
    for v in range(g.n):
        nbrs = g.adj[v]
        for a in members(nbrs):
            # b, c > a, both non-adjacent to a
            rest = nbrs & ~g.adj[a] & ~((bit(a) << 1) - 1)
            for b in members(rest):
                if rest & ~g.adj[b] & ~((bit(b) << 1) - 1):
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def alpha(g: Graph) -> int:
    """Stability number by branch-and-bound over vertex masks."""
    best = 0

    def search(mask: int, size: int):
        nonlocal best
        if size + popcount(mask) <= best:
            return
        if not mask:
            best = size
            return
        # a vertex of degree <= 1 inside mask always belongs to some maximum stable set
        pivot, pivot_degree = -1, -1
        for v in members(mask):
            d = popcount(g.adj[v] & mask)
            if d <= 1:
                search(mask & ~(g.adj[v] | bit(v)), size + 1)
                return
            if d > pivot_degree:
                pivot, pivot_degree = v, d
        search(mask & ~(g.adj[pivot] | bit(pivot)), size + 1)
        search(mask & ~bit(pivot), size)

    search(g.full_mask, 0)
    return best


def maximal_stable_sets(g: Graph) -> Iterator[VertexSet]:
    """
    Enumerate maximal stable sets as masks.

    Bron-Kerbosch with pivoting, run on the complement graph: a maximal
    clique of the complement is a maximal stable set of g.
    """
    full = g.full_mask
    non_adj = [full & ~g.adj[v] & ~bit(v) for v in range(g.n)]

    def expand(chosen: int, candidates: int, excluded: int) -> Iterator[int]:
        if not candidates and not excluded:
            yield chosen
            return
        pivot = max(members(candidates | excluded), key=lambda u: popcount(candidates & non_adj[u]))
        for v in members(candidates & ~non_adj[pivot]):
            yield from expand(chosen | bit(v), candidates & non_adj[v], excluded & non_adj[v])
            candidates &= ~bit(v)
            excluded |= bit(v)

    yield from expand(0, full, 0)


def _check_well_covered_capacity(g: Graph, max_vertices: int):
    if g.n > max_vertices:
        raise CapacityError(
            f"well-coveredness is checked by enumeration only up to {max_vertices} vertices, got {g.n}",
            vertices=g.n, capacity=max_vertices)


def is_well_covered(g: Graph, max_vertices: int = WELL_COVERED_MAX_VERTICES) -> bool:
    """True iff every maximal stable set has the same size."""
    _check_well_covered_capacity(g, max_vertices)
    size: Optional[int] = None
    for s in maximal_stable_sets(g):
        k = popcount(s)
        if size is None:
            size = k
        elif k != size:
            logger.debug(f"maximal stable sets of sizes {size} and {k} found")
            return False
    return True


def is_very_well_covered(g: Graph, max_vertices: int = WELL_COVERED_MAX_VERTICES) -> bool:
    """Well-covered, no isolated vertex and order 2 * alpha."""
    if g.n == 0 or g.isolated_vertices():
        return False
    if not is_well_covered(g, max_vertices):
        return False
    return g.n == 2 * alpha(g)
