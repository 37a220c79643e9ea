"""Shared fixtures for the indpoly test suite."""

import json
import random
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.engine import IndependenceEngine  # noqa: E402
from src.families import random_graph  # noqa: E402
from src.toolkit import IndPolyToolkit  # noqa: E402

GOLDEN_DIR = Path(__file__).parent / 'golden'


@pytest.fixture
def engine():
    return IndependenceEngine()


@pytest.fixture
def strict_engine():
    return IndependenceEngine({'strict_lemma1': True})


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def random_graphs(rng):
    """Factory: count seeded G(n, p) graphs with n drawn from [n_min, n_max]."""
    def make(count, n_min=1, n_max=10, p=0.4):
        return [random_graph(rng.randint(n_min, n_max), p, rng) for _ in range(count)]
    return make


@pytest.fixture
def test_config():
    return {
        'engine': {'max_vertices': 64, 'memo_cap': 1 << 20, 'pivot': 'max_degree'},
        'oracle': {'max_vertices': 26},
        'well_covered': {'max_vertices': 32},
        'search': {'seed': 7, 'workers': 1, 'sample_size': 20, 'max_exhaustive_n': 9},
        'verify': {'graphs_per_n': 3, 'seed': 7, 'edge_probability': 0.4},
        'report': {'format': 'json'},
        'logging': {'level': 'WARNING', 'file': None},
    }


@pytest.fixture
def toolkit(test_config):
    return IndPolyToolkit(config=test_config)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'config.yaml'
    path.write_text(
        "engine:\n  max_vertices: 64\n"
        "oracle:\n  max_vertices: 26\n"
        "search:\n  workers: 1\n  seed: 7\n"
        "verify:\n  graphs_per_n: 2\n  seed: 7\n"
        "logging:\n  level: WARNING\n  file: null\n"
    )
    return str(path)


@pytest.fixture
def golden():
    def load(name):
        with open(GOLDEN_DIR / f"{name}.json", 'r') as f:
            return json.load(f)
    return load
