"""
Independence polynomial engine.

Computes I(G;x) = I(G-v;x) + x * I(G-N[v];x) over vertex masks of the
original graph, splitting into connected components (whose polynomials
multiply) and short-circuiting edgeless pieces to (1+x)^k. Also provides
the brute-force stable-set oracle, the star transform and the
union / Zykov-sum identities.
"""

from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Optional, Sequence, Tuple
import logging
import random

from .errors import CapacityError, PolynomialError, ProfileError, ResourceError
from .graph import MAX_VERTICES, Graph, bit, component_masks, members, popcount
from .polynomial import Polynomial, add, mul, power, scale, shift_mul_x

logger = logging.getLogger(__name__)

DEFAULT_MEMO_CAP = 1 << 20
ORACLE_MAX_VERTICES = 26


@dataclass(frozen=True)
class StableSetProfile:
    """Stable-set counts (s_0, ..., s_alpha) of a graph on n vertices."""
    n: int
    alpha: int
    s: Tuple[int, ...]

    def __post_init__(self):
        s = tuple(self.s)
        object.__setattr__(self, 's', s)
        if len(s) != self.alpha + 1:
            raise ProfileError(f"profile length {len(s)} does not match alpha={self.alpha}")
        if s[0] != 1:
            raise ProfileError(f"s_0 must be 1, got {s[0]}")
        if self.alpha >= 1 and s[1] != self.n:
            raise ProfileError(f"s_1 must equal n={self.n}, got {s[1]}")
        if self.alpha == 0 and self.n != 0:
            raise ProfileError(f"a graph with {self.n} vertices has alpha >= 1")
        if any(c < 1 for c in s):
            raise ProfileError(f"stable-set counts must be positive up to alpha: {s}")
        if not self.lemma1_holds():
            raise ProfileError(
                f"alpha * s_alpha = {self.alpha * s[-1]} exceeds n * s_(alpha-1) = {self.n * s[-2]}",
                profile=list(s))

    @classmethod
    def from_polynomial(cls, n: int, p: Polynomial) -> 'StableSetProfile':
        return cls(n, p.degree, p.coeffs)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.s)

    def lemma1_holds(self, strong: bool = False) -> bool:
        """alpha * s_alpha <= n * s_(alpha-1); with strong, the factor is n - alpha + 1."""
        if self.alpha == 0:
            return True
        factor = self.n - self.alpha + 1 if strong else self.n
        return self.alpha * self.s[-1] <= factor * self.s[-2]

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'alpha': self.alpha, 's': [str(c) for c in self.s]}


class IndependenceEngine:
    """
    Exact I(G;x) by the vertex-deletion recurrence.

    Each call owns a private memo table keyed by vertex masks of the input
    graph; the table is bounded by ``memo_cap`` entries and the computation
    aborts with ResourceError instead of evicting.
    """

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.max_vertices = self.config.get('max_vertices', MAX_VERTICES)
        self.memo_cap = self.config.get('memo_cap', DEFAULT_MEMO_CAP)
        self.pivot = self.config.get('pivot', 'max_degree')
        self.strict_lemma1 = self.config.get('strict_lemma1', False)
        self.oracle_max_vertices = self.config.get('oracle_max_vertices', ORACLE_MAX_VERTICES)
        self._rng = random.Random(self.config.get('pivot_seed'))
        if self.pivot not in ('max_degree', 'random'):
            raise ValueError(f"unknown pivot strategy {self.pivot!r}")
        self.stats = {'calls': 0, 'memo_hits': 0, 'memo_entries': 0}

    def independence_poly(self, g: Graph) -> Polynomial:
        if g.n > self.max_vertices:
            raise CapacityError(f"engine accepts at most {self.max_vertices} vertices, got {g.n}",
                                vertices=g.n, capacity=self.max_vertices)
        adj = g.adj
        memo: Dict[int, Polynomial] = {}
        self.stats['calls'] += 1

        def solve(mask: int) -> Polynomial:
            cached = memo.get(mask)
            if cached is not None:
                self.stats['memo_hits'] += 1
                return cached
            comps = component_masks(adj, mask)
            if len(comps) > 1:
                result = Polynomial((1,))
                for comp in comps:
                    result = mul(result, solve_component(comp))
            else:
                result = solve_component(mask)
            self._remember(memo, mask, result)
            return result

        def solve_component(mask: int) -> Polynomial:
            cached = memo.get(mask)
            if cached is not None:
                self.stats['memo_hits'] += 1
                return cached
            v = self._choose_pivot(adj, mask)
            if v is None:
                result = Polynomial.one_plus_x(popcount(mask))
            else:
                without_v = solve(mask & ~bit(v))
                without_nbhd = solve(mask & ~(adj[v] | bit(v)))
                result = add(without_v, shift_mul_x(without_nbhd))
            self._remember(memo, mask, result)
            return result

        result = solve(g.full_mask)
        self.stats['memo_entries'] += len(memo)
        logger.debug(f"I(G;x) for n={g.n}: {len(memo)} memo entries, {self.stats['memo_hits']} hits so far")
        return result

    def _remember(self, memo: Dict[int, Polynomial], mask: int, value: Polynomial):
        if mask not in memo and len(memo) >= self.memo_cap:
            raise ResourceError(f"memo table exceeded {self.memo_cap} entries", memo_cap=self.memo_cap)
        memo[mask] = value

    def _choose_pivot(self, adj: Sequence[int], mask: int) -> Optional[int]:
        """Maximum degree inside mask, lowest index on ties; None when mask is edgeless."""
        if self.pivot == 'random':
            candidates = [v for v in members(mask) if adj[v] & mask]
            return self._rng.choice(candidates) if candidates else None
        best, best_degree = None, 0
        for v in members(mask):
            d = popcount(adj[v] & mask)
            if d > best_degree:
                best, best_degree = v, d
        return best

    def profile(self, g: Graph) -> StableSetProfile:
        p = self.independence_poly(g)
        profile = StableSetProfile.from_polynomial(g.n, p)
        self._check_strong_lemma1(profile)
        return profile

    def oracle_profile(self, g: Graph, max_vertices: Optional[int] = None) -> StableSetProfile:
        """
        Count stable sets by size with explicit subset enumeration.

        Subsets are extended one vertex at a time in increasing index order and
        any extension that breaks stability is rejected with all its supersets.
        """
        cap = self.oracle_max_vertices if max_vertices is None else max_vertices
        if g.n > cap:
            raise CapacityError(f"oracle enumerates at most {cap} vertices, got {g.n}",
                                vertices=g.n, capacity=cap)
        counts = [0] * (g.n + 1)
        adj = g.adj
        stack = [(0, g.full_mask)]
        while stack:
            size, candidates = stack.pop()
            counts[size] += 1
            while candidates:
                low = candidates & -candidates
                candidates ^= low
                v = low.bit_length() - 1
                stack.append((size + 1, candidates & ~adj[v]))
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        profile = StableSetProfile(g.n, len(counts) - 1, tuple(counts))
        self._check_strong_lemma1(profile)
        return profile

    def _check_strong_lemma1(self, profile: StableSetProfile):
        if self.strict_lemma1 and not profile.lemma1_holds(strong=True):
            raise ProfileError(
                f"alpha * s_alpha exceeds (n - alpha + 1) * s_(alpha-1) for profile {profile.s}",
                profile=list(profile.s))


_default_engine = IndependenceEngine()


def independence_poly(g: Graph) -> Polynomial:
    return _default_engine.independence_poly(g)


def oracle_profile(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> StableSetProfile:
    return _default_engine.oracle_profile(g, max_vertices)


# ==================== Identities ====================

def star_transform(profile: StableSetProfile) -> Polynomial:
    """I(G*;x) from the profile of G: t_k = sum_j s_j * C(n-j, n-k), k = 0..n."""
    n, s = profile.n, profile.s
    t = [sum(s[j] * comb(n - j, n - k) for j in range(min(k, profile.alpha) + 1)) for k in range(n + 1)]
    return Polynomial(tuple(t))


def _require_unit_constant(polys: Sequence[Polynomial]):
    for i, p in enumerate(polys):
        if p[0] != 1:
            raise PolynomialError(f"operand {i} has constant term {p[0]}, expected 1", operand=i)


def union_poly(polys: Sequence[Polynomial]) -> Polynomial:
    """Disjoint union: the product."""
    _require_unit_constant(polys)
    result = Polynomial((1,))
    for p in polys:
        result = mul(result, p)
    return result


def zykov_poly(polys: Sequence[Polynomial]) -> Polynomial:
    """Zykov sum: the sum minus (count - 1)."""
    _require_unit_constant(polys)
    if not polys:
        return Polynomial((1,))
    total = Polynomial(())
    for p in polys:
        total = add(total, p)
    return total - (len(polys) - 1)


def repeated_zykov(p: Polynomial, m: int) -> Polynomial:
    """m * p - (m - 1), the Zykov sum of m copies."""
    _require_unit_constant([p])
    if m < 1:
        raise PolynomialError(f"need at least one copy, got {m}")
    return scale(p, m) - (m - 1)


def repeated_union(p: Polynomial, m: int) -> Polynomial:
    """p^m, the disjoint union of m copies."""
    _require_unit_constant([p])
    if m < 1:
        raise PolynomialError(f"need at least one copy, got {m}")
    return power(p, m)
