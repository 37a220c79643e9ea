"""
Report records for the command-line front end.

Each report knows how to render itself as JSON (fields always in the same
order) and as text. Verification and search tables go through pandas.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union
import json

import pandas as pd

from .engine import StableSetProfile
from .polynomial import Polynomial, ShapeReport

SKIPPED_CAPACITY = "skipped(capacity)"
CLOSED_FORM_ONLY = "closed-form-only"

Flag = Union[bool, str]


def render(report: Any, fmt: str = 'text') -> str:
    if fmt == 'json':
        return json.dumps(report.to_dict(), indent=2)
    if fmt == 'text':
        return report.to_text()
    raise ValueError(f"unknown report format {fmt!r}")


@dataclass
class AnalysisReport:
    expression: str
    representation: str
    vertices: int
    edges: Union[int, str]
    polynomial: Polynomial
    shape: ShapeReport
    flags: Dict[str, Flag] = field(default_factory=dict)

    @property
    def alpha(self) -> int:
        return self.polynomial.degree

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': 'analyze',
            'expression': self.expression,
            'representation': self.representation,
            'vertices': self.vertices,
            'edges': self.edges,
            'alpha': self.alpha,
            'coefficients': [str(c) for c in self.polynomial],
            'shape': self.shape.to_dict(),
            'flags': dict(self.flags),
        }

    def to_text(self) -> str:
        shape = self.shape
        lines = [
            f"expression:      {self.expression}",
            f"representation:  {self.representation}",
            f"vertices:        {self.vertices}",
            f"edges:           {self.edges}",
            f"alpha:           {self.alpha}",
            f"I(G;x):          {self.polynomial}",
            f"coefficients:    {self.polynomial.to_text()}",
            f"unimodal:        {shape.is_unimodal}  modes={list(shape.modes)}",
            f"log-concave:     {shape.is_log_concave}",
            f"real roots:      {shape.real_root_count} of {shape.degree}"
            f"  (all real: {shape.all_roots_real})",
        ]
        for name, value in self.flags.items():
            lines.append(f"{name.replace('_', '-') + ':':<17}{value}")
        return "\n".join(lines)


@dataclass
class PolyReport:
    expression: str
    polynomial: Polynomial

    def to_dict(self) -> Dict[str, Any]:
        return {'command': 'poly', 'expression': self.expression,
                'coefficients': [str(c) for c in self.polynomial]}

    def to_text(self) -> str:
        return self.polynomial.to_text()


@dataclass
class OracleReport:
    expression: str
    profile: StableSetProfile

    def to_dict(self) -> Dict[str, Any]:
        payload = {'command': 'oracle', 'expression': self.expression}
        payload.update(self.profile.to_dict())
        return payload

    def to_text(self) -> str:
        return "(" + ",".join(str(c) for c in self.profile.s) + ")"


@dataclass
class VerificationReport:
    identity: str
    n_max: int
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r['passed'])

    @property
    def failed(self) -> int:
        return len(self.rows) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def add(self, n: int, passed: bool, detail: str = ""):
        self.rows.append({'n': n, 'passed': bool(passed), 'detail': detail})

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': 'verify',
            'identity': self.identity,
            'n_max': self.n_max,
            'passed': self.passed,
            'failed': self.failed,
            'ok': self.ok,
            'rows': [dict(r) for r in self.rows],
        }

    def to_text(self) -> str:
        df = pd.DataFrame(self.rows, columns=['n', 'passed', 'detail'])
        df['passed'] = df['passed'].map({True: 'pass', False: 'FAIL'})
        status = "OK" if self.ok else "FAILED"
        return (f"{df.to_string(index=False)}\n"
                f"{self.identity}: {self.passed}/{len(self.rows)} pass  [{status}]")


@dataclass
class SearchReport:
    kind: str
    prop: str
    mode: str
    n_max: int
    seed: Optional[int]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def tested(self) -> int:
        return sum(r['tested'] for r in self.rows)

    @property
    def strongest_n(self) -> Optional[int]:
        """Largest n such that no violation occurred at any order up to n."""
        best = None
        for row in sorted(self.rows, key=lambda r: r['n']):
            if row['violations']:
                break
            best = row['n']
        return best

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': 'search',
            'kind': self.kind,
            'property': self.prop,
            'mode': self.mode,
            'n_max': self.n_max,
            'seed': self.seed,
            'tested': self.tested,
            'violation_count': len(self.violations),
            'strongest_n': self.strongest_n,
            'rows': [dict(r) for r in self.rows],
            'violations': [dict(v) for v in self.violations],
        }

    def to_text(self) -> str:
        df = pd.DataFrame(self.rows, columns=['n', 'tested', 'violations'])
        lines = [f"search {self.kind} property={self.prop} mode={self.mode} n_max={self.n_max}",
                 df.to_string(index=False),
                 f"tested {self.tested} graphs, {len(self.violations)} violation(s)"]
        if self.violations:
            for v in self.violations:
                lines.append(f"VIOLATION n={v['n']}: {v['coefficients']}")
                lines.append(v['edge_list'].rstrip())
        else:
            lines.append(f"no violations; strongest n reached: {self.strongest_n}")
        return "\n".join(lines)


def error_payload(error: Exception) -> str:
    to_dict = getattr(error, 'to_dict', None)
    payload = to_dict() if to_dict else {'error': 'error', 'message': str(error)}
    return json.dumps(payload, indent=2)
