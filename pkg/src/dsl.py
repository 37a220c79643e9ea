"""
Graph-expression language.

Expressions are built from family atoms (``K(5)``, ``S(3)``, ``Kmulti(3*120)``,
``T1``), literal graphs (``graph{3; 0-1, 1-2}``), edge-list files
(``file("g.txt")``) and the combinators ``union``, ``zykov``, ``star``,
``ej``, ``rep`` and ``zrep``.

In ``ej(e1, u, e2, v)`` the index ``u`` is a vertex of ``e1`` and ``v`` a
vertex of ``e2`` in its own labeling; the result places the left operand's
vertices first, so the new edge is ``(u, order(e1) + v)``.

Evaluation materializes a Graph when the expression fits the engine and
otherwise falls back to polynomial identities (union is a product, the Zykov
sum of m graphs is their sum minus m-1, star uses the stable-set profile).
"""

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple, Union
import json
import logging

import lark

from .engine import (IndependenceEngine, StableSetProfile, repeated_union, repeated_zykov,
                     star_transform, union_poly, zykov_poly)
from .errors import CapacityError, GraphError, ParseError, RangeError
from .families import FAMILY_KINDS, PARAM_MAX, FamilySpec, build, closed_form_poly, family_order
from .graph import (MAX_VERTICES, Graph, disjoint_union, edge_join, from_edge_list,
                    parse_edge_list_text, star, zykov_sum)
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

GRAMMAR = r"""
start: expr

?expr: graph_literal
     | call
     | bare

graph_literal: "graph" "{" INT ";" [edge ("," edge)*] "}"
edge: INT "-" INT

call: NAME "(" [arg ("," arg)*] ")"
bare: NAME

?arg: expr
    | INT               -> int_arg
    | INT "*" INT       -> run_arg
    | ESCAPED_STRING    -> string_arg

NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.INT
%import common.ESCAPED_STRING
%import common.WS
%ignore WS
"""

# DSL atom name -> family kind
ATOMS = {
    'K': 'complete',
    'Kbar': 'empty',
    'P': 'path',
    'C': 'cycle',
    'Kmulti': 'complete_multipartite',
    'K1n': 'star_graph',
    'S': 'spider',
    'W': 'centipede',
    'Tri': 'triangle_chain',
    'TriK2': 'triangle_chain_k2',
    'KnJ3K7': 'kn_join_3k7',
    'H': 'graph_H',
    'T1': 'tree_T1',
    'T2': 'tree_T2',
}
KIND_TO_ATOM = {kind: name for name, kind in ATOMS.items()}

COMBINATORS = ('union', 'zykov', 'star', 'ej', 'rep', 'zrep', 'file')


# ==================== AST ====================

@dataclass(frozen=True)
class Atom:
    kind: str
    params: Tuple[int, ...] = ()
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)

    @property
    def spec(self) -> FamilySpec:
        return FamilySpec(self.kind, self.params)


@dataclass(frozen=True)
class GraphLiteral:
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class FileRef:
    path: str
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Combine:
    """union(...) or zykov(...)."""
    op: str
    operands: Tuple['GraphExpr', ...]
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Star:
    operand: 'GraphExpr'
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class EdgeJoin:
    left: 'GraphExpr'
    u: int
    right: 'GraphExpr'
    v: int
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Repeat:
    """rep(k, e) is k disjoint copies, zrep(k, e) the Zykov sum of k copies."""
    op: str
    count: int
    operand: 'GraphExpr'
    line: Optional[int] = field(default=None, compare=False, repr=False)
    column: Optional[int] = field(default=None, compare=False, repr=False)


GraphExpr = Union[Atom, GraphLiteral, FileRef, Combine, Star, EdgeJoin, Repeat]


@dataclass(frozen=True)
class Run:
    size: int
    count: int


# ==================== Parsing ====================

_parser = lark.Lark(GRAMMAR, parser='lalr', propagate_positions=True)


def parse(text: str) -> GraphExpr:
    """Parse an expression, raising ParseError or RangeError with its position."""
    try:
        tree = _parser.parse(text)
    except lark.exceptions.UnexpectedEOF as e:
        lines = text.splitlines() or [""]
        raise ParseError(f"unexpected end of expression, expected one of {sorted(e.expected)}",
                         len(lines), len(lines[-1]) + 1) from None
    except lark.exceptions.UnexpectedInput as e:
        raise ParseError(_describe(e), e.line, e.column) from None
    return _to_ast(tree.children[0])


def _describe(e: lark.exceptions.UnexpectedInput) -> str:
    if isinstance(e, lark.exceptions.UnexpectedToken):
        if e.token.type == '$END':
            return "unexpected end of expression"
        return f"unexpected {e.token.value!r}"
    if isinstance(e, lark.exceptions.UnexpectedCharacters):
        return f"unexpected character {e.char!r}"
    return "syntax error"


def _position(node: Any) -> Tuple[Optional[int], Optional[int]]:
    if isinstance(node, lark.Token):
        return node.line, node.column
    meta = getattr(node, 'meta', None)
    if meta is None or getattr(meta, 'empty', True):
        return None, None
    return meta.line, meta.column


def _to_ast(node: lark.Tree) -> GraphExpr:
    line, column = _position(node)
    if node.data == 'graph_literal':
        n = int(node.children[0])
        edges = tuple((int(e.children[0]), int(e.children[1]))
                      for e in node.children[1:] if e is not None)
        _check_literal(n, edges, line, column)
        return GraphLiteral(n, edges, line, column)
    if node.data == 'bare':
        return _build_call(str(node.children[0]), [], line, column, bare=True)
    if node.data == 'call':
        name = str(node.children[0])
        args = [_to_arg(child) for child in node.children[1:] if child is not None]
        return _build_call(name, args, line, column)
    raise ParseError(f"unexpected {node.data}", line, column)


def _to_arg(node: lark.Tree) -> Any:
    if node.data == 'int_arg':
        return int(node.children[0])
    if node.data == 'run_arg':
        return Run(int(node.children[0]), int(node.children[1]))
    if node.data == 'string_arg':
        return json.loads(str(node.children[0]))
    return _to_ast(node)


def _check_literal(n: int, edges, line, column):
    if n > MAX_VERTICES:
        raise RangeError(f"line {line}, column {column}: literal graph has {n} vertices, "
                         f"at most {MAX_VERTICES} allowed", line=line, column=column)
    for u, v in edges:
        if not (u < n and v < n) or u == v:
            raise RangeError(f"line {line}, column {column}: edge {u}-{v} is not valid for "
                             f"{n} vertices", line=line, column=column)


def _range_error(message: str, line, column) -> RangeError:
    return RangeError(f"line {line}, column {column}: {message}", line=line, column=column)


def _expect(name: str, args: List[Any], shape: str, line, column):
    """Check args against a shape string: e = expression, i = integer, s = string."""
    kinds = []
    for a in args:
        if isinstance(a, Run):
            kinds.append('r')
        elif isinstance(a, int):
            kinds.append('i')
        elif isinstance(a, str):
            kinds.append('s')
        else:
            kinds.append('e')
    if shape.endswith('+'):
        ok = len(kinds) >= 1 and all(k == shape[0] for k in kinds)
    else:
        ok = "".join(kinds) == shape
    if not ok:
        raise ParseError(f"bad arguments for {name}: expected {_SHAPE_HELP[name]}", line, column)


_SHAPE_HELP = {
    'union': "union(e, ...)",
    'zykov': "zykov(e, ...)",
    'star': "star(e)",
    'ej': "ej(e1, u, e2, v)",
    'rep': "rep(k, e)",
    'zrep': "zrep(k, e)",
    'file': 'file("path")',
}


def _build_call(name: str, args: List[Any], line, column, bare: bool = False) -> GraphExpr:
    if name in COMBINATORS:
        if bare:
            raise ParseError(f"{name} needs arguments", line, column)
        _expect(name, args, {'union': 'e+', 'zykov': 'e+', 'star': 'e', 'ej': 'eiei',
                             'rep': 'ie', 'zrep': 'ie', 'file': 's'}[name], line, column)
        if name in ('union', 'zykov'):
            return Combine(name, tuple(args), line, column)
        if name == 'star':
            return Star(args[0], line, column)
        if name == 'ej':
            return EdgeJoin(args[0], args[1], args[2], args[3], line, column)
        if name == 'file':
            return FileRef(args[0], line, column)
        if not 1 <= args[0] <= PARAM_MAX:
            raise _range_error(f"{name} count {args[0]} outside 1..{PARAM_MAX}", line, column)
        return Repeat(name, args[0], args[1], line, column)

    if name not in ATOMS:
        raise ParseError(f"unknown atom {name!r}", line, column)
    kind = ATOMS[name]
    arity = FAMILY_KINDS[kind][0]
    params: List[int] = []
    for a in args:
        if isinstance(a, Run) and kind == 'complete_multipartite':
            if a.count < 1:
                raise _range_error(f"run {a.size}*{a.count} needs a positive count", line, column)
            if len(params) + a.count > PARAM_MAX:
                raise _range_error(f"run {a.size}*{a.count} takes {name} past {PARAM_MAX} parts",
                                   line, column)
            params.extend([a.size] * a.count)
        elif isinstance(a, int):
            params.append(a)
        else:
            raise ParseError(f"{name} takes integer parameters", line, column)
    if arity is None:
        if not params:
            raise ParseError(f"{name} needs at least one part", line, column)
    elif len(args) != arity:
        raise ParseError(f"{name} takes {arity} parameter(s), got {len(args)}", line, column)
    try:
        FamilySpec(kind, tuple(params))
    except RangeError as e:
        raise _range_error(e.message, line, column) from None
    return Atom(kind, tuple(params), line, column)


# ==================== Printing ====================

def _runs(parts: Tuple[int, ...]) -> List[str]:
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        count = j - i
        out.append(f"{parts[i]}*{count}" if count > 1 else str(parts[i]))
        i = j
    return out


def to_text(expr: GraphExpr) -> str:
    """Canonical text form; parse(to_text(e)) == e."""
    if isinstance(expr, Atom):
        name = KIND_TO_ATOM[expr.kind]
        if not expr.params:
            return name
        params = _runs(expr.params) if expr.kind == 'complete_multipartite' else map(str, expr.params)
        return f"{name}({', '.join(params)})"
    if isinstance(expr, GraphLiteral):
        return f"graph{{{expr.n}; {', '.join(f'{u}-{v}' for u, v in expr.edges)}}}"
    if isinstance(expr, FileRef):
        return f"file({json.dumps(expr.path)})"
    if isinstance(expr, Combine):
        return f"{expr.op}({', '.join(to_text(e) for e in expr.operands)})"
    if isinstance(expr, Star):
        return f"star({to_text(expr.operand)})"
    if isinstance(expr, EdgeJoin):
        return f"ej({to_text(expr.left)}, {expr.u}, {to_text(expr.right)}, {expr.v})"
    if isinstance(expr, Repeat):
        return f"{expr.op}({expr.count}, {to_text(expr.operand)})"
    raise TypeError(f"not a graph expression: {expr!r}")


# ==================== Evaluation ====================

@dataclass(frozen=True)
class ClosedForm:
    """An expression too large to materialize, known by its polynomial."""
    polynomial: Polynomial
    order: int


def _read_file(ref: FileRef) -> Graph:
    try:
        with open(ref.path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise GraphError(f"cannot read graph file {ref.path!r}: {e.strerror}", path=ref.path) from None
    return parse_edge_list_text(text)


def order(expr: GraphExpr) -> int:
    """Vertex count of the expression's graph, without building it."""
    if isinstance(expr, Atom):
        return family_order(expr.spec)
    if isinstance(expr, GraphLiteral):
        return expr.n
    if isinstance(expr, FileRef):
        return _read_file(expr).n
    if isinstance(expr, Combine):
        return sum(order(e) for e in expr.operands)
    if isinstance(expr, Star):
        return 2 * order(expr.operand)
    if isinstance(expr, EdgeJoin):
        return order(expr.left) + order(expr.right)
    if isinstance(expr, Repeat):
        return expr.count * order(expr.operand)
    raise TypeError(f"not a graph expression: {expr!r}")


class Evaluator:
    """Turns expressions into graphs or closed-form polynomials."""

    def __init__(self, engine: IndependenceEngine = None):
        self.engine = engine or IndependenceEngine()

    def evaluate(self, expr: GraphExpr, force_closed_form: bool = False) -> Union[Graph, ClosedForm]:
        n = order(expr)
        if not force_closed_form and n <= self.engine.max_vertices:
            return self.materialize(expr)
        logger.debug(f"{n} vertices, evaluating {to_text(expr)} by polynomial identities")
        return ClosedForm(self.polynomial(expr), n)

    def materialize(self, expr: GraphExpr) -> Graph:
        if isinstance(expr, Atom):
            return build(expr.spec)
        if isinstance(expr, GraphLiteral):
            return from_edge_list(expr.n, expr.edges)
        if isinstance(expr, FileRef):
            return _read_file(expr)
        if isinstance(expr, Combine):
            join = disjoint_union if expr.op == 'union' else zykov_sum
            graphs = [self.materialize(e) for e in expr.operands]
            result = graphs[0]
            for g in graphs[1:]:
                result = join(result, g)
            return result
        if isinstance(expr, Star):
            return star(self.materialize(expr.operand))
        if isinstance(expr, EdgeJoin):
            left, right = self.materialize(expr.left), self.materialize(expr.right)
            if not 0 <= expr.u < left.n or not 0 <= expr.v < right.n:
                raise GraphError(
                    f"ej indices ({expr.u}, {expr.v}) outside operands of {left.n} and {right.n} vertices",
                    line=expr.line, column=expr.column)
            return edge_join(left, expr.u, right, expr.v)
        if isinstance(expr, Repeat):
            join = disjoint_union if expr.op == 'rep' else zykov_sum
            g = self.materialize(expr.operand)
            result = g
            for _ in range(expr.count - 1):
                result = join(result, g)
            return result
        raise TypeError(f"not a graph expression: {expr!r}")

    def polynomial(self, expr: GraphExpr) -> Polynomial:
        """I(G;x) by identities, using the engine only at leaves without one."""
        if isinstance(expr, Atom):
            return closed_form_poly(expr.spec, self.engine)
        if isinstance(expr, Combine):
            polys = [self.polynomial(e) for e in expr.operands]
            return union_poly(polys) if expr.op == 'union' else zykov_poly(polys)
        if isinstance(expr, Repeat):
            p = self.polynomial(expr.operand)
            return repeated_union(p, expr.count) if expr.op == 'rep' else repeated_zykov(p, expr.count)
        if isinstance(expr, Star):
            inner = self.polynomial(expr.operand)
            return star_transform(StableSetProfile.from_polynomial(order(expr.operand), inner))
        n = order(expr)
        if n > self.engine.max_vertices:
            raise CapacityError(
                f"{to_text(expr)} has {n} vertices and no closed form",
                vertices=n, capacity=self.engine.max_vertices)
        return self.engine.independence_poly(self.materialize(expr))


def evaluate(expr: GraphExpr, engine: IndependenceEngine = None,
             force_closed_form: bool = False) -> Union[Graph, ClosedForm]:
    return Evaluator(engine).evaluate(expr, force_closed_form)
