"""
Conjecture search over trees.

Checks unimodality or log-concavity of I(T;x) (kind ``trees``) or of
I(T*;x) (kind ``star-trees``) for every free tree up to a size, or for
random labeled trees. Work is cut into index ranges; with more than one
worker each range runs in its own process with its own engine and the
findings are merged in a fixed order.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import random

from .engine import IndependenceEngine
from .errors import RangeError
from .families import EXHAUSTIVE_TREE_MAX, all_trees, random_tree
from .graph import MAX_VERTICES, from_edge_list, star, to_edge_list_text
from .polynomial import is_log_concave, is_unimodal
from .reports import SearchReport

logger = logging.getLogger(__name__)

KINDS = ('trees', 'star-trees')
PROPERTIES = ('unimodal', 'log-concave')
MODES = ('exhaustive', 'sample')

# (n, edges) pairs cross the process boundary instead of Graph objects
EdgeListTask = Tuple[int, Tuple[Tuple[int, int], ...]]


def _check_chunk(kind: str, prop: str, engine_config: Dict[str, Any],
                 trees: Sequence[EdgeListTask]) -> List[Dict[str, Any]]:
    engine = IndependenceEngine(engine_config)
    check = is_unimodal if prop == 'unimodal' else is_log_concave
    findings = []
    for n, edges in trees:
        g = from_edge_list(n, edges)
        if kind == 'star-trees':
            g = star(g)
        p = engine.independence_poly(g)
        if not check(p):
            findings.append({'n': n, 'edge_list': to_edge_list_text(g), 'coefficients': p.to_text()})
    return findings


def _chunks(items: List[Any], size: int) -> List[List[Any]]:
    return [items[i:i + size] for i in range(0, len(items), size)]


class ConjectureSearch:
    def __init__(self, config: Dict[str, Any] = None, engine_config: Dict[str, Any] = None):
        self.config = config or {}
        self.engine_config = engine_config or {}
        self.seed = self.config.get('seed', 0)
        self.workers = self.config.get('workers', 1)
        self.sample_size = self.config.get('sample_size', 100)
        self.max_exhaustive_n = self.config.get('max_exhaustive_n', EXHAUSTIVE_TREE_MAX)
        self.chunk_size = self.config.get('chunk_size', 64)

    def run(self, kind: str, n_max: int, mode: str = 'exhaustive',
            prop: str = 'unimodal', seed: Optional[int] = None) -> SearchReport:
        seed = self.seed if seed is None else seed
        self._validate(kind, n_max, mode, prop)
        report = SearchReport(kind, prop, mode, n_max, seed if mode == 'sample' else None)
        logger.info(f"search {kind} {prop} {mode} up to n={n_max} with {self.workers} worker(s)")

        executor = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            for n in range(1, n_max + 1):
                trees = self._trees(n, mode, seed)
                findings = self._check(kind, prop, trees, executor)
                findings.sort(key=lambda f: f['edge_list'])
                for f in findings:
                    logger.warning(f"violation of {prop} at n={n}: {f['coefficients']}")
                report.rows.append({'n': n, 'tested': len(trees), 'violations': len(findings)})
                report.violations.extend(findings)
        finally:
            if executor is not None:
                executor.shutdown()

        logger.info(f"search finished: {report.tested} tested, {len(report.violations)} violations")
        return report

    def _validate(self, kind: str, n_max: int, mode: str, prop: str):
        if kind not in KINDS:
            raise RangeError(f"unknown search kind {kind!r}; choose from {', '.join(KINDS)}")
        if prop not in PROPERTIES:
            raise RangeError(f"unknown property {prop!r}; choose from {', '.join(PROPERTIES)}")
        if mode not in MODES:
            raise RangeError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
        if mode == 'exhaustive':
            limit = min(self.max_exhaustive_n, EXHAUSTIVE_TREE_MAX)
        else:
            limit = MAX_VERTICES // 2 if kind == 'star-trees' else MAX_VERTICES
        if not 1 <= n_max <= limit:
            raise RangeError(f"{mode} search of {kind} supports 1 <= n_max <= {limit}, got {n_max}",
                             n_max=n_max)

    def _trees(self, n: int, mode: str, seed: int) -> List[EdgeListTask]:
        if mode == 'exhaustive':
            graphs = list(all_trees(n, max_n=self.max_exhaustive_n))
        else:
            # one generator per sample index, so results do not depend on the chunking
            graphs = [random_tree(n, random.Random(f"{seed}-{n}-{i}")) for i in range(self.sample_size)]
        return [(g.n, tuple(g.edges())) for g in graphs]

    def _check(self, kind: str, prop: str, trees: List[EdgeListTask],
               executor: Optional[ProcessPoolExecutor]) -> List[Dict[str, Any]]:
        if executor is None:
            return _check_chunk(kind, prop, self.engine_config, trees)
        futures = [executor.submit(_check_chunk, kind, prop, self.engine_config, chunk)
                   for chunk in _chunks(trees, self.chunk_size)]
        findings = []
        for future in futures:
            findings.extend(future.result())
        return findings
