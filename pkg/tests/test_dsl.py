"""Tests for the graph-expression language."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.dsl import (Atom, ClosedForm, Combine, EdgeJoin, Evaluator, FileRef, GraphLiteral,
                     Repeat, Star, evaluate, order, parse, to_text)
from src.errors import CapacityError, GraphError, ParseError, RangeError
from src.families import PARAM_MAX, FamilySpec, centipede, complete, path, spider, triangle_chain_k2
from src.graph import Graph, to_edge_list_text
from src.polynomial import Polynomial


# ==================== Parsing ====================

def test_parse_counterexample_expression():
    expr = parse("zykov(K(42), rep(3, K(7)))")
    assert expr == Combine('zykov', (Atom('complete', (42,)), Repeat('rep', 3, Atom('complete', (7,)))))


def test_parse_star_and_literal():
    assert parse("star(P(7))") == Star(Atom('path', (7,)))
    assert parse("graph{3; 0-1, 1-2, 0-2}") == GraphLiteral(3, ((0, 1), (1, 2), (0, 2)))
    assert parse("graph{1;}") == GraphLiteral(1, ())


def test_parse_is_whitespace_insensitive():
    assert parse(" union ( S(3) ,\n\tW( 4 ) ) ") == parse("union(S(3),W(4))")


def test_bare_atoms_and_runs():
    assert parse("T1") == Atom('tree_T1')
    assert parse("H") == Atom('graph_H')
    assert parse("Kmulti(3*120)") == Atom('complete_multipartite', (3,) * 120)
    assert parse("Kmulti(2, 1*2, 4)") == Atom('complete_multipartite', (2, 1, 1, 4))


def test_parse_ej_and_file():
    assert parse("ej(Tri(1), 1, K(2), 0)") == EdgeJoin(Atom('triangle_chain', (1,)), 1, Atom('complete', (2,)), 0)
    assert parse('file("graphs/g.txt")') == FileRef("graphs/g.txt")


def test_unknown_atom_has_position():
    with pytest.raises(ParseError) as info:
        parse("union(K(3),\n  Q(2))")
    assert info.value.line == 2
    assert info.value.column == 3
    assert "unknown atom" in info.value.message


def test_syntax_errors():
    with pytest.raises(ParseError) as info:
        parse("K(3) + K(2)")
    assert (info.value.line, info.value.column) == (1, 6)
    with pytest.raises(ParseError):
        parse("K(3")
    with pytest.raises(ParseError):
        parse("")


def test_bad_arity():
    with pytest.raises(ParseError):
        parse("K(1, 2)")
    with pytest.raises(ParseError):
        parse("K")
    with pytest.raises(ParseError):
        parse("star(K(2), K(3))")
    with pytest.raises(ParseError):
        parse("ej(K(2), K(2), 0, 0)")
    with pytest.raises(ParseError):
        parse("P(2*3)")


def test_range_errors_at_parse_time():
    with pytest.raises(RangeError) as info:
        parse("S(1)")
    assert info.value.details['line'] == 1
    with pytest.raises(RangeError):
        parse("C(2)")
    with pytest.raises(RangeError):
        parse("rep(0, K(2))")
    with pytest.raises(RangeError):
        parse("graph{2; 0-2}")
    with pytest.raises(RangeError):
        parse("graph{2; 1-1}")


def test_multipartite_run_counts_are_bounded():
    with pytest.raises(RangeError) as info:
        parse("Kmulti(1*100000000)")
    assert info.value.details['column'] is not None
    with pytest.raises(RangeError):
        parse("Kmulti(2*4000, 3*1001)")
    with pytest.raises(RangeError):
        FamilySpec('complete_multipartite', (1,) * (PARAM_MAX + 1))
    assert len(parse("Kmulti(1*5000)").params) == PARAM_MAX


def test_print_examples():
    assert to_text(parse("zykov(rep(3,K(10)),Kmulti(3*120))")) == "zykov(rep(3, K(10)), Kmulti(3*120))"
    assert to_text(parse("Kmulti(1, 2, 2)")) == "Kmulti(1, 2*2)"
    assert to_text(parse("graph{1;}")) == "graph{1; }"
    assert to_text(parse("T2")) == "T2"


def test_order_without_materializing():
    assert order(parse("zykov(rep(3, K(10)), Kmulti(3*120))")) == 390
    assert order(parse("star(union(P(3), S(2)))")) == 18
    assert order(parse("ej(Tri(2), 0, TriK2(1), 4)")) == 11


# ==================== Evaluation ====================

def test_evaluate_materializes_small_expressions():
    g = evaluate(parse("ej(Tri(1), 1, K(2), 0)"))
    assert isinstance(g, Graph)
    assert g == triangle_chain_k2(1)
    assert evaluate(parse("star(graph{1;})")) == complete(2)
    assert evaluate(parse("S(3)")) == spider(3)


def test_graph_h_falls_back_to_closed_form():
    value = evaluate(parse("zykov(rep(3, K(10)), Kmulti(3*120))"))
    assert isinstance(value, ClosedForm)
    assert value.order == 390
    assert value.polynomial == Polynomial.of(1, 390, 660, 1120)
    assert evaluate(parse("H")).polynomial == Polynomial.of(1, 390, 660, 1120)


def test_large_star_uses_the_profile():
    # 35 vertices under the star, 70 after it
    value = evaluate(parse("star(P(35))"))
    assert isinstance(value, ClosedForm)
    assert value.polynomial[1] == 70


def test_ej_without_closed_form_exceeds_capacity():
    with pytest.raises(CapacityError):
        evaluate(parse("ej(K(40), 0, K(40), 0)"))


def test_ej_index_validation():
    with pytest.raises(GraphError):
        evaluate(parse("ej(K(2), 2, K(2), 0)"))
    with pytest.raises(GraphError):
        evaluate(parse("ej(K(2), 0, K(2), 5)"))


def test_file_atom(tmp_path):
    path_file = tmp_path / "p4.txt"
    path_file.write_text(to_edge_list_text(path(4)))
    expr = parse(f"star(file({json.dumps(str(path_file))}))")
    assert order(expr) == 8
    assert evaluate(expr) == centipede(4)
    with pytest.raises(GraphError):
        evaluate(parse('file("does/not/exist.txt")'))


CONSISTENCY_CASES = [
    "union(P(3), K(2))",
    "zykov(C(5), Kbar(2))",
    "rep(2, S(2))",
    "zrep(3, P(3))",
    "star(union(P(3), K(2)))",
    "zykov(union(T1, K(1)), K1n(3))",
    "star(zykov(K(2), Kbar(3)))",
    "union(ej(Tri(1), 1, K(2), 0), graph{3; 0-1})",
    "zykov(K(3), rep(3, K(7)))",
]


@pytest.mark.parametrize("text", CONSISTENCY_CASES)
def test_closed_form_path_matches_materialized_path(engine, text):
    expr = parse(text)
    evaluator = Evaluator(engine)
    materialized = engine.independence_poly(evaluator.materialize(expr))
    forced = evaluator.evaluate(expr, force_closed_form=True)
    assert isinstance(forced, ClosedForm)
    assert forced.polynomial == materialized


# ==================== Round trip ====================

def _atoms():
    return st.one_of(
        st.integers(1, 6).map(lambda n: Atom('complete', (n,))),
        st.integers(1, 6).map(lambda n: Atom('empty', (n,))),
        st.integers(1, 6).map(lambda n: Atom('path', (n,))),
        st.integers(3, 6).map(lambda n: Atom('cycle', (n,))),
        st.integers(2, 5).map(lambda n: Atom('spider', (n,))),
        st.integers(1, 5).map(lambda n: Atom('centipede', (n,))),
        st.lists(st.integers(1, 3), min_size=1, max_size=6).map(
            lambda parts: Atom('complete_multipartite', tuple(parts))),
        st.sampled_from([Atom('tree_T1'), Atom('tree_T2'), Atom('graph_H')]),
        st.integers(1, 4).flatmap(lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=4).map(lambda edges: GraphLiteral(n, tuple(edges)))),
        st.text(alphabet="abcxyz_./", min_size=1, max_size=8).map(FileRef),
    )


def _extend(children):
    return st.one_of(
        st.tuples(st.sampled_from(['union', 'zykov']), st.lists(children, min_size=1, max_size=3)).map(
            lambda t: Combine(t[0], tuple(t[1]))),
        children.map(Star),
        st.tuples(children, st.integers(0, 9), children, st.integers(0, 9)).map(lambda t: EdgeJoin(*t)),
        st.tuples(st.sampled_from(['rep', 'zrep']), st.integers(1, 5), children).map(
            lambda t: Repeat(t[0], t[1], t[2])),
    )


expressions = st.recursive(_atoms(), _extend, max_leaves=8)


@settings(max_examples=150, deadline=None)
@given(expressions)
def test_print_parse_round_trip(expr):
    assert parse(to_text(expr)) == expr
