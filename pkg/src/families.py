"""
Graph families: labeled constructors, closed-form independence polynomials
and free-tree enumeration.

Fixed labelings:
  - spider S_n: hub b_0 = 0, legs b_i = i, pendants a_0 = n+1 and a_i = n+1+i
    (identical to star(K_{1,n})).
  - centipede W_n: spine b_i = i-1 as a path, pendant a_i = n+i-1
    (identical to star(P_n)).
  - triangle chain: triangle i (1-based) occupies 3i-3, 3i-2, 3i-1; vertex
    3i-2 of triangle i is joined to vertex 3i of triangle i+1. The K_2
    variant hangs the extra edge on vertex 3n-2.
"""

from dataclasses import dataclass, field
from itertools import product
from math import ceil, comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple
import heapq
import logging
import random

from .engine import IndependenceEngine, repeated_zykov, union_poly, zykov_poly
from .errors import ClosedFormOnlyError, GraphError, RangeError
from .graph import (MAX_VERTICES, Graph, disjoint_union, edge_join, from_edge_list, is_tree,
                    star, zykov_sum)
from .polynomial import Polynomial, mul, shift_mul_x

logger = logging.getLogger(__name__)

PARAM_MAX = 5000
EXHAUSTIVE_TREE_MAX = 9

# kind -> (number of parameters or None for one-or-more, minimum parameter value)
FAMILY_KINDS: Dict[str, Tuple[Optional[int], int]] = {
    'complete': (1, 1),
    'empty': (1, 1),
    'path': (1, 1),
    'cycle': (1, 3),
    'complete_multipartite': (None, 1),
    'star_graph': (1, 1),
    'spider': (1, 2),
    'centipede': (1, 1),
    'triangle_chain': (1, 1),
    'triangle_chain_k2': (1, 1),
    'kn_join_3k7': (1, 1),
    'graph_H': (0, 0),
    'tree_T1': (0, 0),
    'tree_T2': (0, 0),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its integer parameters, validated on construction."""
    kind: str
    params: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'params', tuple(self.params))
        if self.kind not in FAMILY_KINDS:
            raise RangeError(f"unknown family {self.kind!r}", kind=self.kind)
        arity, minimum = FAMILY_KINDS[self.kind]
        if arity is None:
            if not self.params:
                raise RangeError(f"{self.kind} needs at least one part", kind=self.kind)
            if len(self.params) > PARAM_MAX:
                raise RangeError(f"{self.kind} has {len(self.params)} parts, more than {PARAM_MAX}",
                                 kind=self.kind, value=len(self.params))
        elif len(self.params) != arity:
            raise RangeError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}",
                             kind=self.kind)
        for p in self.params:
            if not minimum <= p <= PARAM_MAX:
                raise RangeError(f"{self.kind} parameter {p} outside {minimum}..{PARAM_MAX}",
                                 kind=self.kind, value=p)

    @property
    def order(self) -> int:
        return family_order(self)


def family_order(spec: FamilySpec) -> int:
    """Vertex count of the family member, without building it."""
    p = spec.params
    orders = {
        'complete': lambda: p[0],
        'empty': lambda: p[0],
        'path': lambda: p[0],
        'cycle': lambda: p[0],
        'complete_multipartite': lambda: sum(p),
        'star_graph': lambda: p[0] + 1,
        'spider': lambda: 2 * p[0] + 2,
        'centipede': lambda: 2 * p[0],
        'triangle_chain': lambda: 3 * p[0],
        'triangle_chain_k2': lambda: 3 * p[0] + 2,
        'kn_join_3k7': lambda: p[0] + 21,
        'graph_H': lambda: 390,
        'tree_T1': lambda: 10,
        'tree_T2': lambda: 8,
    }
    return orders[spec.kind]()


# ==================== Constructors ====================

def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n} with the hub at 0."""
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    g = empty(parts[0])
    for size in parts[1:]:
        g = zykov_sum(g, empty(size))
    return g


def spider(n: int) -> Graph:
    return star(star_graph(n))


def centipede(n: int) -> Graph:
    return star(path(n))


def triangle_chain(n: int) -> Graph:
    edges = []
    for i in range(n):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (b, c), (a, c)]
        if i + 1 < n:
            edges.append((b, 3 * i + 3))
    return from_edge_list(3 * n, edges)


def triangle_chain_k2(n: int) -> Graph:
    return edge_join(triangle_chain(n), 3 * n - 2, complete(2), 0)


def kn_join_3k7(n: int) -> Graph:
    k7 = complete(7)
    return zykov_sum(complete(n), disjoint_union(disjoint_union(k7, k7), k7))


def tree_t1() -> Graph:
    # the skeleton is a spider with legs of length 1, 1 and 2 centred at 0
    return star(from_edge_list(5, [(0, 1), (0, 2), (0, 3), (3, 4)]))


def tree_t2() -> Graph:
    return star(star_graph(3))


_BUILDERS: Dict[str, Callable[..., Graph]] = {
    'complete': complete,
    'empty': empty,
    'path': path,
    'cycle': cycle,
    'complete_multipartite': lambda *parts: complete_multipartite(parts),
    'star_graph': star_graph,
    'spider': spider,
    'centipede': centipede,
    'triangle_chain': triangle_chain,
    'triangle_chain_k2': triangle_chain_k2,
    'kn_join_3k7': kn_join_3k7,
    'tree_T1': tree_t1,
    'tree_T2': tree_t2,
}


def build(spec: FamilySpec) -> Graph:
    """Materialize a family member; oversized members are closed-form only."""
    order = family_order(spec)
    if spec.kind == 'graph_H' or order > MAX_VERTICES:
        raise ClosedFormOnlyError(
            f"{spec.kind}{list(spec.params)} has {order} vertices and is available only as a closed form",
            kind=spec.kind, vertices=order, capacity=MAX_VERTICES)
    return _BUILDERS[spec.kind](*spec.params)


# ==================== Closed forms ====================

X = Polynomial.of(0, 1)
ONE = Polynomial.of(1)
K2_POLY = Polynomial.of(1, 2)


def path_poly(n: int) -> Polynomial:
    """I(P_n) by pivoting on an end vertex: I(P_n) = I(P_{n-1}) + x I(P_{n-2})."""
    prev, cur = ONE, ONE + X  # P_0, P_1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur + shift_mul_x(prev)
    return cur


def cycle_poly(n: int) -> Polynomial:
    """I(C_n) = I(P_{n-1}) + x I(P_{n-3}), n >= 3."""
    if n < 3:
        raise RangeError(f"cycles need at least 3 vertices, got {n}")
    return path_poly(n - 1) + shift_mul_x(path_poly(n - 3))


def star_graph_poly(n: int) -> Polynomial:
    return Polynomial.one_plus_x(n) + X


def multipartite_poly(parts: Sequence[int]) -> Polynomial:
    return zykov_poly([Polynomial.one_plus_x(size) for size in parts])


def spider_inner_poly(n: int) -> Polynomial:
    """P(x) with I(S_n) = (1+x) P(x): c_k = C(n,k) 2^k + C(n-1,k-1)."""
    if n < 2:
        raise RangeError(f"spiders S_n need n >= 2, got {n}")
    return Polynomial(tuple(comb(n, k) * 2 ** k + (comb(n - 1, k - 1) if k >= 1 else 0)
                            for k in range(n + 1)))


def spider_poly(n: int) -> Polynomial:
    return mul(ONE + X, spider_inner_poly(n))


def spider_mode(n: int) -> int:
    """1 + (n-1) mod 3 + 2 (ceil(n/3) - 1)."""
    if n < 2:
        raise RangeError(f"spiders S_n need n >= 2, got {n}")
    return 1 + (n - 1) % 3 + 2 * (ceil(n / 3) - 1)


def _triangle_chain_recurrence(n: int) -> Tuple[Polynomial, Polynomial]:
    """
    (I(T_n), I(T_n joined to K_2)) for the triangle chain T_n.

    Pivots on the degree-3 vertex of the last triangle; T_0 is the null graph
    and T_0 joined to K_2 is K_2.
    """
    prev = (ONE, K2_POLY)
    cur = (ONE + 3 * X, Polynomial.of(1, 5, 5))
    if n == 0:
        return prev
    for _ in range(n - 1):
        tri = mul(K2_POLY, cur[0]) + shift_mul_x(prev[1])
        tri_k2 = mul(K2_POLY, cur[1]) + shift_mul_x(mul(ONE + X, cur[0]))
        prev, cur = cur, (tri, tri_k2)
    return cur


def triangle_chain_poly(n: int, engine: IndependenceEngine = None) -> Polynomial:
    """I(△_n): by the engine when the chain fits, else by the pivot recurrence."""
    if n < 1:
        raise RangeError(f"triangle chains need n >= 1, got {n}")
    if 3 * n <= MAX_VERTICES:
        return (engine or IndependenceEngine()).independence_poly(triangle_chain(n))
    return _triangle_chain_recurrence(n)[0]


def triangle_chain_k2_poly(n: int, engine: IndependenceEngine = None) -> Polynomial:
    if n < 1:
        raise RangeError(f"triangle chains need n >= 1, got {n}")
    if 3 * n + 2 <= MAX_VERTICES:
        return (engine or IndependenceEngine()).independence_poly(triangle_chain_k2(n))
    return _triangle_chain_recurrence(n)[1]


def centipede_poly(n: int, engine: IndependenceEngine = None) -> Polynomial:
    """I(W_{2m}) = (1+x)^m I(△_m) and I(W_{2m+1}) = (1+x)^m I(△_m joined to K_2)."""
    if n < 1:
        raise RangeError(f"centipedes need n >= 1, got {n}")
    if n == 1:
        return K2_POLY
    m = n // 2
    chain = triangle_chain_poly(m, engine) if n % 2 == 0 else triangle_chain_k2_poly(m, engine)
    return mul(Polynomial.one_plus_x(m), chain)


def counterexample_poly_kn_3k7(n: int) -> Polynomial:
    """I(K_n zykov (3 K_7)) = 1 + (n+21)x + 147x^2 + 343x^3."""
    if n < 1:
        raise RangeError(f"K_n needs n >= 1, got {n}")
    k7 = Polynomial.of(1, 7)
    return zykov_poly([Polynomial.of(1, n), union_poly([k7, k7, k7])])


def graph_H_poly() -> Polynomial:
    """I(H) for H = (3 K_10) zykov K_{3,...,3} with 120 parts."""
    k10 = Polynomial.of(1, 10)
    return zykov_poly([union_poly([k10, k10, k10]), repeated_zykov(Polynomial.one_plus_x(3), 120)])


def zykov_power_poly(kind: str, n: int, m: int) -> Polynomial:
    """Zykov sum of m copies of S_n or W_n."""
    if kind not in ('spider', 'centipede'):
        raise RangeError(f"zykov powers are defined here for spiders and centipedes, not {kind!r}")
    return repeated_zykov(closed_form_poly(FamilySpec(kind, (n,))), m)


def closed_form_poly(spec: FamilySpec, engine: IndependenceEngine = None) -> Polynomial:
    """I(G;x) of a family member without materializing it."""
    p = spec.params
    if spec.kind == 'complete':
        return Polynomial.of(1, p[0])
    if spec.kind == 'empty':
        return Polynomial.one_plus_x(p[0])
    if spec.kind == 'path':
        return path_poly(p[0])
    if spec.kind == 'cycle':
        return cycle_poly(p[0])
    if spec.kind == 'complete_multipartite':
        return multipartite_poly(p)
    if spec.kind == 'star_graph':
        return star_graph_poly(p[0])
    if spec.kind == 'spider':
        return spider_poly(p[0])
    if spec.kind == 'centipede':
        return centipede_poly(p[0], engine)
    if spec.kind == 'triangle_chain':
        return _triangle_chain_recurrence(p[0])[0]
    if spec.kind == 'triangle_chain_k2':
        return _triangle_chain_recurrence(p[0])[1]
    if spec.kind == 'kn_join_3k7':
        return counterexample_poly_kn_3k7(p[0])
    if spec.kind == 'graph_H':
        return graph_H_poly()
    return (engine or IndependenceEngine()).independence_poly(build(spec))


# ==================== Trees ====================

def prufer_to_tree(seq: Sequence[int], n: Optional[int] = None) -> Graph:
    """Decode a Prüfer sequence over 0..n-1 (n = len(seq) + 2) into a labeled tree."""
    n = len(seq) + 2 if n is None else n
    if n != len(seq) + 2:
        raise RangeError(f"a Prüfer sequence for {n} vertices has length {n - 2}")
    if n == 1:
        return from_edge_list(1, [])
    if any(not 0 <= a < n for a in seq):
        raise RangeError(f"Prüfer entries must lie in 0..{n - 1}")
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree on n vertices via a random Prüfer sequence."""
    if n < 1:
        raise RangeError(f"trees need at least one vertex, got {n}")
    if n == 1:
        return from_edge_list(1, [])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def tree_centers(g: Graph) -> List[int]:
    degree = g.degrees()
    layer = [v for v in range(g.n) if degree[v] <= 1]
    removed = set(layer)
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in g.neighbors(leaf):
                if w in removed:
                    continue
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        removed.update(nxt)
        layer = nxt
    return sorted(layer)


def canonical_tree_code(g: Graph) -> str:
    """Rooted-at-center parenthesis encoding, minimized over the centers."""
    if not is_tree(g):
        raise GraphError("canonical codes are defined for trees only")
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in nbrs[v] if w != parent)) + ")"

    return min(encode(c, -1) for c in tree_centers(g))


def _grow_trees(n: int) -> List[Graph]:
    layer = {canonical_tree_code(empty(1)): empty(1)}
    for size in range(2, n + 1):
        grown: Dict[str, Graph] = {}
        for code in sorted(layer):
            tree = layer[code]
            for v in range(tree.n):
                candidate = from_edge_list(size, tree.edges() + [(v, size - 1)])
                grown.setdefault(canonical_tree_code(candidate), candidate)
        layer = grown
    return [layer[code] for code in sorted(layer)]


def _prufer_trees(n: int) -> List[Graph]:
    if n <= 2:
        return [path(n)]
    seen: Dict[str, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        tree = prufer_to_tree(seq, n)
        seen.setdefault(canonical_tree_code(tree), tree)
    return [seen[code] for code in sorted(seen)]


def all_trees(n: int, method: str = 'grow', max_n: int = EXHAUSTIVE_TREE_MAX) -> Iterator[Graph]:
    """
    One representative per isomorphism class of free trees on n vertices.

    ``grow`` attaches a leaf to every vertex of every class on n-1 vertices;
    ``prufer`` decodes all n^(n-2) labeled trees. Both deduplicate by the
    canonical code and yield in code order.
    """
    if not 1 <= n <= max_n:
        raise RangeError(f"exhaustive tree enumeration supports 1 <= n <= {max_n}, got {n}",
                         value=n)
    if method == 'grow':
        trees = _grow_trees(n)
    elif method == 'prufer':
        trees = _prufer_trees(n)
    else:
        raise RangeError(f"unknown tree enumeration method {method!r}")
    logger.debug(f"{len(trees)} free trees on {n} vertices ({method})")
    yield from trees


# ==================== Random graphs ====================

def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) with every pair an edge independently with probability p."""
    if not 0 <= n <= MAX_VERTICES:
        raise RangeError(f"random graphs need 0 <= n <= {MAX_VERTICES}, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_claw_free_graph(n: int, rng: random.Random) -> Graph:
    """
    Line graph of n random distinct edges; line graphs never contain an induced claw.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise RangeError(f"claw-free samples need 1 <= n <= {MAX_VERTICES}, got {n}")
    k = 2
    while k * (k - 1) // 2 < n:
        k += 1
    k = rng.randint(k, k + 3)
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    chosen = rng.sample(pairs, n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if set(chosen[i]) & set(chosen[j])]
    return from_edge_list(n, edges)
