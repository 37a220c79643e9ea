"""
Named identity checks behind ``indpoly verify``.

Each identity is checked for every n in its range and reported per n; a
failing row is a finding, never an exception.
"""

from typing import Any, Callable, Dict, Tuple
import logging
import random

from .engine import IndependenceEngine, StableSetProfile, repeated_zykov, star_transform
from .errors import ProfileError, RangeError
from .families import (PARAM_MAX, centipede, centipede_poly, random_claw_free_graph,
                       random_graph, spider, spider_inner_poly, spider_mode, spider_poly,
                       triangle_chain, triangle_chain_k2, zykov_power_poly)
from .graph import alpha, is_claw_free, star, zykov_sum
from .polynomial import Polynomial, is_log_concave, modes
from .reports import VerificationReport

logger = logging.getLogger(__name__)

# name -> (smallest n, largest n accepted for --n-max)
IDENTITY_RANGES: Dict[str, Tuple[int, int]] = {
    'star': (1, 32),
    'centipede-even': (1, 16),
    'centipede-odd': (1, 15),
    'spider-closed-form': (2, 31),
    'spider-mode': (2, PARAM_MAX),
    'lemma1': (1, 64),
    'zykov-m': (1, 16),
    'spider-log-concave': (2, PARAM_MAX),
    'centipede-log-concave': (1, PARAM_MAX),
    'star-alpha3': (1, 32),
    'hamidoune': (1, 40),
    'zykov-power-log-concave': (1, PARAM_MAX),
}


class IdentityVerifier:
    """Runs identity checks with a shared engine and seeded random inputs."""

    def __init__(self, config: Dict[str, Any] = None, engine: IndependenceEngine = None):
        self.config = config or {}
        self.engine = engine or IndependenceEngine()
        self.graphs_per_n = self.config.get('graphs_per_n', 5)
        self.seed = self.config.get('seed', 0)
        self.edge_probability = self.config.get('edge_probability', 0.4)
        self.max_zykov_copies = self.config.get('max_zykov_copies', 6)
        self._checks: Dict[str, Callable[[int, random.Random], Tuple[bool, str]]] = {
            'star': self._check_star,
            'centipede-even': self._check_centipede_even,
            'centipede-odd': self._check_centipede_odd,
            'spider-closed-form': self._check_spider_closed_form,
            'spider-mode': self._check_spider_mode,
            'lemma1': self._check_lemma1,
            'zykov-m': self._check_zykov_m,
            'spider-log-concave': self._check_spider_log_concave,
            'centipede-log-concave': self._check_centipede_log_concave,
            'star-alpha3': self._check_star_alpha3,
            'hamidoune': self._check_hamidoune,
            'zykov-power-log-concave': self._check_zykov_power_log_concave,
        }

    def verify(self, identity: str, n_max: int) -> VerificationReport:
        if identity not in self._checks:
            raise RangeError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITY_RANGES)}",
                             identity=identity)
        low, high = IDENTITY_RANGES[identity]
        if not low <= n_max <= high:
            raise RangeError(f"{identity} supports --n-max in {low}..{high}, got {n_max}",
                             identity=identity, n_max=n_max)
        report = VerificationReport(identity, n_max)
        check = self._checks[identity]
        for n in range(low, n_max + 1):
            rng = random.Random(f"{self.seed}-{identity}-{n}")
            passed, detail = check(n, rng)
            if not passed:
                logger.warning(f"{identity} fails at n={n}: {detail}")
            report.add(n, passed, detail)
        logger.info(f"verify {identity}: {report.passed}/{len(report.rows)} pass")
        return report

    def _random_graphs(self, n: int, rng: random.Random):
        return [random_graph(n, self.edge_probability, rng) for _ in range(self.graphs_per_n)]

    @staticmethod
    def _compare(lhs: Polynomial, rhs: Polynomial) -> Tuple[bool, str]:
        if lhs == rhs:
            return True, ""
        return False, f"{lhs.to_text()} != {rhs.to_text()}"

    def _check_star(self, n, rng):
        for g in self._random_graphs(n, rng):
            ok, detail = self._compare(star_transform(self.engine.profile(g)),
                                       self.engine.independence_poly(star(g)))
            if not ok:
                return False, f"{g.edges()}: {detail}"
        return True, f"{self.graphs_per_n} graphs"

    def _check_centipede_even(self, n, rng):
        lhs = self.engine.independence_poly(centipede(2 * n))
        rhs = Polynomial.one_plus_x(n) * self.engine.independence_poly(triangle_chain(n))
        return self._compare(lhs, rhs)

    def _check_centipede_odd(self, n, rng):
        lhs = self.engine.independence_poly(centipede(2 * n + 1))
        rhs = Polynomial.one_plus_x(n) * self.engine.independence_poly(triangle_chain_k2(n))
        return self._compare(lhs, rhs)

    def _check_spider_closed_form(self, n, rng):
        return self._compare(spider_poly(n), self.engine.independence_poly(spider(n)))

    def _check_spider_mode(self, n, rng):
        found = modes(spider_poly(n))
        expected = spider_mode(n)
        return found == (expected,), f"modes {list(found)}, formula {expected}"

    def _check_lemma1(self, n, rng):
        for g in self._random_graphs(n, rng):
            try:
                profile = StableSetProfile.from_polynomial(n, self.engine.independence_poly(g))
            except ProfileError as e:
                return False, f"{g.edges()}: {e.message}"
            if not profile.lemma1_holds():
                return False, f"{g.edges()}: profile {list(profile.s)}"
        return True, f"{self.graphs_per_n} graphs"

    def _check_zykov_m(self, m, rng):
        """Zykov sum of m copies of a random 4-vertex graph: m I(G) - (m - 1)."""
        g = random_graph(4, self.edge_probability, rng)
        total = g
        for _ in range(m - 1):
            total = zykov_sum(total, g)
        return self._compare(self.engine.independence_poly(total),
                             repeated_zykov(self.engine.independence_poly(g), m))

    def _check_spider_log_concave(self, n, rng):
        whole, inner = is_log_concave(spider_poly(n)), is_log_concave(spider_inner_poly(n))
        return whole and inner, f"I(S_n) {whole}, inner factor {inner}"

    def _check_centipede_log_concave(self, n, rng):
        p = centipede_poly(n, self.engine)
        return is_log_concave(p), f"degree {p.degree}"

    def _check_star_alpha3(self, n, rng):
        """Stars of graphs with alpha <= 3 have log-concave polynomials."""
        tested = 0
        for _ in range(self.graphs_per_n):
            g = self._graph_with_small_alpha(n, rng)
            if g is None:
                continue
            tested += 1
            t = star_transform(self.engine.profile(g))
            if not is_log_concave(t):
                return False, f"{g.edges()}: {t.to_text()}"
        return True, f"{tested} graphs"

    def _graph_with_small_alpha(self, n, rng, attempts: int = 200):
        # denser graphs have smaller alpha; raise the density as attempts fail
        for attempt in range(attempts):
            p = min(1.0, 0.5 + attempt / attempts)
            g = random_graph(n, p, rng)
            if alpha(g) <= 3:
                return g
        return None

    def _check_hamidoune(self, n, rng):
        for _ in range(self.graphs_per_n):
            g = random_claw_free_graph(n, rng)
            if not is_claw_free(g):
                return False, f"{g.edges()} is not claw-free"
            p = self.engine.independence_poly(g)
            if not is_log_concave(p):
                return False, f"{g.edges()}: {p.to_text()}"
        return True, f"{self.graphs_per_n} graphs"

    def _check_zykov_power_log_concave(self, n, rng):
        """m-fold Zykov sums of W_n, and of S_n for n >= 2, for m = 2..max_zykov_copies."""
        kinds = ['spider', 'centipede'] if n >= 2 else ['centipede']
        for kind in kinds:
            for m in range(2, self.max_zykov_copies + 1):
                p = zykov_power_poly(kind, n, m)
                if not is_log_concave(p):
                    return False, f"{kind} m={m}: {p.to_text()}"
        return True, f"{'/'.join(kinds)}, m=2..{self.max_zykov_copies}"
