"""
Toolkit orchestrator: configuration, logging and the five commands.
"""

from pathlib import Path
from typing import Any, Dict, Optional
import logging
import os
import re
from logging.handlers import RotatingFileHandler

import yaml

from .dsl import ClosedForm, Evaluator, parse, to_text
from .engine import IndependenceEngine
from .errors import CapacityError
from .graph import is_claw_free, is_tree, is_very_well_covered, is_well_covered
from .polynomial import analyze_shape
from .reports import (CLOSED_FORM_ONLY, SKIPPED_CAPACITY, AnalysisReport, OracleReport,
                      PolyReport, SearchReport, VerificationReport)
from .search import ConjectureSearch
from .verify import IdentityVerifier

logger = logging.getLogger(__name__)

_ENV_PATTERN = re.compile(r'^\$\{([A-Za-z_][A-Za-z0-9_]*)(?::-(.*))?\}$')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class IndPolyToolkit:
    def __init__(self, config_path: str = None, config: Dict = None,
                 overrides: Dict[str, Dict[str, Any]] = None):
        self.config = config or self._load_config(config_path)
        for section, values in (overrides or {}).items():
            self.config.setdefault(section, {}).update(
                {k: v for k, v in values.items() if v is not None})
        self._setup_logging()
        self._init_components()

    def _load_config(self, config_path: str = None) -> Dict[str, Any]:
        if config_path is None:
            for path in ['config/config.yaml', '../config/config.yaml']:
                if os.path.exists(path):
                    config_path = path
                    break
        if config_path and os.path.exists(config_path):
            with open(config_path, 'r') as f:
                config = yaml.safe_load(f) or {}
                return self._expand_env_vars(config)
        return self._default_config()

    def _expand_env_vars(self, obj):
        if isinstance(obj, dict):
            return {k: self._expand_env_vars(v) for k, v in obj.items()}
        elif isinstance(obj, list):
            return [self._expand_env_vars(item) for item in obj]
        elif isinstance(obj, str):
            match = _ENV_PATTERN.match(obj)
            if not match:
                return obj
            name, default = match.groups()
            value = os.environ.get(name, default)
            if value is None:
                return obj
            if re.fullmatch(r'-?\d+', value.strip()):
                return int(value)
            if value.strip().lower() in ('', 'null', 'none'):
                return None
            return value
        return obj

    def _default_config(self) -> Dict[str, Any]:
        return {
            'engine': {'max_vertices': 64, 'memo_cap': 1 << 20, 'pivot': 'max_degree',
                       'pivot_seed': None, 'strict_lemma1': False},
            'oracle': {'max_vertices': 26},
            'well_covered': {'max_vertices': 32},
            'search': {'seed': 0, 'workers': 1, 'sample_size': 100, 'max_exhaustive_n': 9},
            'verify': {'graphs_per_n': 5, 'seed': 0, 'edge_probability': 0.4},
            'report': {'format': 'text'},
            'logging': {'level': 'WARNING', 'file': None},
        }

    def _setup_logging(self):
        log_config = self.config.get('logging', {})
        log_level = getattr(logging, str(log_config.get('level', 'INFO')).upper())
        log_file = log_config.get('file')
        root_logger = logging.getLogger()
        root_logger.setLevel(log_level)
        root_logger.handlers = []
        ch = logging.StreamHandler()
        ch.setLevel(log_level)
        ch.setFormatter(logging.Formatter(LOG_FORMAT))
        root_logger.addHandler(ch)
        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            max_bytes = int(log_config.get('max_size_mb', 10)) * 1024 * 1024
            fh = RotatingFileHandler(log_file, maxBytes=max_bytes,
                                     backupCount=int(log_config.get('backup_count', 5)))
            fh.setLevel(log_level)
            fh.setFormatter(logging.Formatter(LOG_FORMAT))
            root_logger.addHandler(fh)

    def _init_components(self):
        engine_config = dict(self.config.get('engine', {}))
        engine_config['oracle_max_vertices'] = self.config.get('oracle', {}).get('max_vertices', 26)
        self.engine_config = engine_config
        self.engine = IndependenceEngine(engine_config)
        self.evaluator = Evaluator(self.engine)
        self.well_covered_max = self.config.get('well_covered', {}).get('max_vertices', 32)
        self.verifier = IdentityVerifier(self.config.get('verify', {}), self.engine)
        self.search = ConjectureSearch(self.config.get('search', {}), engine_config)
        logger.debug("All components initialized")

    @property
    def report_format(self) -> str:
        return self.config.get('report', {}).get('format', 'text')

    def cmd_analyze(self, text: str) -> AnalysisReport:
        expr = parse(text)
        value = self.evaluator.evaluate(expr)
        logger.info(f"analyze {to_text(expr)}")
        if isinstance(value, ClosedForm):
            poly = value.polynomial
            flags = {name: SKIPPED_CAPACITY
                     for name in ('tree', 'claw_free', 'well_covered', 'very_well_covered')}
            return AnalysisReport(to_text(expr), CLOSED_FORM_ONLY, value.order, CLOSED_FORM_ONLY,
                                  poly, analyze_shape(poly), flags)

        g = value
        poly = self.engine.independence_poly(g)
        flags = {'tree': is_tree(g), 'claw_free': is_claw_free(g)}
        if g.n <= self.well_covered_max:
            flags['well_covered'] = is_well_covered(g, self.well_covered_max)
            flags['very_well_covered'] = is_very_well_covered(g, self.well_covered_max)
        else:
            logger.warning(f"well-coveredness skipped: {g.n} vertices exceed {self.well_covered_max}")
            flags['well_covered'] = flags['very_well_covered'] = SKIPPED_CAPACITY
        return AnalysisReport(to_text(expr), 'graph', g.n, g.edge_count, poly, analyze_shape(poly), flags)

    def cmd_poly(self, text: str) -> PolyReport:
        expr = parse(text)
        value = self.evaluator.evaluate(expr)
        poly = value.polynomial if isinstance(value, ClosedForm) else self.engine.independence_poly(value)
        return PolyReport(to_text(expr), poly)

    def cmd_oracle(self, text: str, max_vertices: Optional[int] = None) -> OracleReport:
        expr = parse(text)
        value = self.evaluator.evaluate(expr)
        if isinstance(value, ClosedForm):
            raise CapacityError(f"the oracle needs a materialized graph; {value.order} vertices is closed-form only",
                                vertices=value.order)
        return OracleReport(to_text(expr), self.engine.oracle_profile(value, max_vertices))

    def cmd_verify(self, identity: str, n_max: int) -> VerificationReport:
        return self.verifier.verify(identity, n_max)

    def cmd_search(self, kind: str, n_max: int, mode: str = 'exhaustive',
                   prop: str = 'unimodal', seed: Optional[int] = None) -> SearchReport:
        return self.search.run(kind, n_max, mode, prop, seed)


def create_toolkit(config_path: str = None, **overrides) -> IndPolyToolkit:
    return IndPolyToolkit(config_path=config_path, overrides=overrides)
