import itertools
from collections import Counter
from math import comb

import pytest

from iconic.base import terminal, walking_arrow
from iconic.freecat import PathCell
from iconic.pasting import (
    Cell2,
    Edge,
    Row,
    check_beck_axioms,
    check_t_monad,
    column,
    distributive_law,
    enumerate_pds,
    enumerate_rectangular,
    lambda_inverse,
    one_path,
    pd_from_json,
    pd_morphisms,
    pd_to_json,
    r_unit,
    row,
    t_mult,
    t_unit,
    validate_pd,
)
from iconic.report import SearchTooLarge, StructuralError
from iconic.wgraph import two_graph

PAR = two_graph(("x", "y"), {"f": ("x", "y"), "g": ("x", "y")},
                {("f", "g"): 1, ("f", "f"): walking_arrow(), ("g", "f"): 1})
LOOP = two_graph(("x",), {"e": ("x", "x")}, {("e", "e"): terminal()})
LOOP2 = two_graph(("x",), {"e": ("x", "x")}, {("e", "e"): 2})
EMPTY = two_graph(("x", "y"), {})

e = Edge("e", "x", "x")


def leaves(p):
    if isinstance(p, Cell2):
        return [p]
    return [c for x in p.cells for c in leaves(x)]


def grid(n, k):
    """Rectangular array on LOOP2 with distinct labels: row j, column i."""
    cells = [[Cell2(e, e, f"c{j}{i}") for i in range(n)] for j in range(k)]
    P = one_path([e] * n, at="x")
    return PathCell(tuple([P] * (k + 1)), tuple(row(r, at="x") for r in cells)), cells


def test_lambda_single_cell():
    c = Cell2(e, e, "ee0")
    r = r_unit(row([c]))
    assert distributive_law(r) == row([column([c])])


def test_lambda_grid_is_transpose():
    r, cells = grid(2, 3)
    out = distributive_law(r)
    assert len(out) == 2
    for i, col in enumerate(out.cells):
        # oracle: coordinate permutation (j, i) -> (i, j)
        assert list(col.cells) == [cells[j][i] for j in range(3)]


def test_lambda_empty():
    r = PathCell((one_path([], at="x"),), ())
    out = distributive_law(r)
    assert out == Row(("x",), ())


def test_lambda_zero_height_gives_identity_columns():
    P = one_path([e, e], at="x")
    out = distributive_law(PathCell((P,), ()))
    assert [len(c) for c in out.cells] == [0, 0]
    assert out.src == out.tgt == P


@pytest.mark.parametrize("A", [PAR, LOOP2])
def test_lambda_is_bijection_onto_uniform_heights(A):
    rect = enumerate_rectangular(A, 4)
    images = [distributive_law(r) for r in rect]
    assert len(set(images)) == len(rect)
    uniform = {p for p in enumerate_pds(A, 4) if len({len(c) for c in p.cells}) <= 1}
    assert set(images) == uniform
    for r, p in zip(rect, images):
        assert lambda_inverse(p) == r
        assert Counter(leaves(r)) == Counter(leaves(p))
        assert p.src == r.vertices[0] and p.tgt == r.vertices[-1]


def test_lambda_inverse_rejects_ragged():
    c = Cell2(e, e, "ee0")
    p = row([column([c]), column([], at=e)])
    with pytest.raises(ValueError):
        lambda_inverse(p)


def test_t_unit_shape():
    c = Cell2(Edge("f", "x", "y"), Edge("g", "x", "y"), "fg0")
    p = t_unit(c)
    assert len(p) == 1 and len(p.cells[0]) == 1
    assert t_mult(t_unit(p)) == p


def _oracle_flatten(P):
    """Column-major assembly by index, written without the transpose."""
    cols = []
    for C in P.cells:
        width = len(C.vertices[0].cells)
        for i in range(width):
            top = C.vertices[0].cells[i]
            stacked = [x for rw in C.cells for x in rw.cells[i].cells]
            cols.append(column(stacked, at=top))
    return row(cols, at=P.objects[0])


@pytest.mark.parametrize("A", [PAR, LOOP2])
def test_t_mult_matches_index_oracle(A):
    from iconic.pasting import nested_t_view
    V = nested_t_view(A, [(2, 2), (2, 2)])
    nestings = [P for P, _ in V.all_two_cells(4)]
    assert nestings
    for P in nestings:
        flat = t_mult(P)
        assert flat == _oracle_flatten(P)
        assert Counter(leaves(flat)) == Counter(leaves(P))
        assert validate_pd(A, flat).ok


def test_t_mult_singletons():
    c = Cell2(e, e, "ee1")
    p = t_unit(c)
    nested = row([column([p])])
    assert t_mult(nested) == p


def test_t_mult_boundary_mismatch():
    c = Cell2(e, e, "ee0")
    bad_row = Row(("x", "y"), (column([c]),))
    P = row([column([bad_row])])
    with pytest.raises(ValueError):
        t_mult(P)


@pytest.mark.parametrize("A", [PAR, LOOP, LOOP2])
def test_t_monad_laws(A):
    rep = check_t_monad(A, 3)
    assert rep.ok, str(rep)
    assert rep.count("associativity") == 0 and rep.checked > 100


def test_t_monad_wide_outer_level():
    rep = check_t_monad(LOOP2, 1, outer_len=(1, 2))
    assert rep.ok, str(rep)


def test_t_monad_mutation_detected():
    def reverse_columns(P):
        p = t_mult(P)
        return Row(p.objects[::-1], p.cells[::-1]) if len(p) > 1 else p
    assert not check_t_monad(LOOP2, 3, mult=reverse_columns).ok


@pytest.mark.parametrize("A", [PAR, LOOP, LOOP2, EMPTY])
def test_beck_axioms(A):
    rep = check_beck_axioms(A, 4)
    assert rep.ok, str(rep)


def _swap(c):
    p = distributive_law(c)
    if len(p) < 2:
        return p
    cs = list(p.cells)
    cs[0], cs[1] = cs[1], cs[0]
    return Row(p.objects, tuple(cs))


@pytest.mark.parametrize("A", [PAR, LOOP2])
def test_beck_mutation_detected(A):
    rep = check_beck_axioms(A, 4, law=_swap)
    assert any(law.startswith("multiplication") for law in rep.laws())


def _loop_oracle(c, n_max):
    # columns n ≤ n_max, heights k_i ≥ 0 with total ≤ c: C(c+n, n) each
    return sum(comb(c + n, n) for n in range(n_max + 1))


@pytest.mark.parametrize("c", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("n_max", [0, 1, 2, 3])
def test_loop_pd_count(c, n_max):
    assert len(enumerate_pds(LOOP, c, n_max)) == _loop_oracle(c, n_max)


def _brute_loop_count(c, n_max):
    total = 0
    for n in range(n_max + 1):
        total += sum(1 for ks in itertools.product(range(c + 1), repeat=n) if sum(ks) <= c)
    return total


def test_loop_oracle_agrees_with_brute_force():
    for c in range(5):
        for n in range(4):
            assert _loop_oracle(c, n) == _brute_loop_count(c, n)


def test_zero_cells_gives_identity_pds():
    pds = enumerate_pds(PAR, 0)
    assert all(all(len(col) == 0 for col in p.cells) for p in pds)
    # one per composable path: empty at x, empty at y, f, g
    assert len(pds) == 4
    assert len(enumerate_pds(LOOP, 0, 3)) == 4


def test_empty_two_graph():
    pds = enumerate_pds(EMPTY, 4)
    assert [p.objects for p in pds] == [("x",), ("y",)]


def test_enumeration_is_sorted_and_unique():
    pds = enumerate_pds(PAR, 3)
    assert len(pds) == len(set(pds))
    assert pds == enumerate_pds(PAR, 3)
    assert all(validate_pd(PAR, p).ok for p in pds)


def test_enumeration_cap():
    with pytest.raises(SearchTooLarge):
        enumerate_pds(LOOP2, 4, 3, cap=50)


def test_pd_morphisms_walking_arrow():
    f = Edge("f", "x", "y")
    p = row([column([Cell2(f, f, "0")])])
    q = row([column([Cell2(f, f, "1")])])
    assert pd_morphisms(PAR, p, q) == [("a",)]
    assert pd_morphisms(PAR, q, p) == []
    assert len(pd_morphisms(PAR, p, p)) == 1
    g = Edge("g", "x", "y")
    other = row([column([Cell2(f, g, "fg0")])])
    assert pd_morphisms(PAR, p, other) == []


def test_json_round_trip():
    for p in enumerate_pds(PAR, 3):
        doc = pd_to_json(p)
        assert pd_from_json(PAR, doc) == p
    p = enumerate_pds(LOOP2, 3)[-1]
    assert set(pd_to_json(p)) >= {"boundary_src", "boundary_tgt", "columns"}


def test_json_rejects_bad_cell():
    doc = {"boundary_src": ["f"], "boundary_tgt": ["g"],
           "columns": [{"heights": 1, "inter": [], "cells": ["nope"]}]}
    with pytest.raises(StructuralError):
        pd_from_json(PAR, doc)


def _swap_equal_boundaries(c):
    # exchanges the first two columns only when they have identical boundaries,
    # which no labelling with one cell per parallel pair can reveal
    p = distributive_law(c)
    if len(p) < 2 or p.cells[0].vertices != p.cells[1].vertices:
        return p
    cs = list(p.cells)
    cs[0], cs[1] = cs[1], cs[0]
    return Row(p.objects, tuple(cs))


def test_fresh_labels_are_distinct():
    from iconic.pasting import fresh_labels
    c = Cell2(e, e, "ee0")
    p = row([column([c, c]), column([c])], at="x")
    q = fresh_labels(p)
    assert sorted(x.elem for x in leaves(q)) == ["#1", "#2", "#3"]
    assert fresh_labels(q) == q


def test_generic_check_sees_label_permutations():
    ONE = two_graph(("x",), {"e": ("x", "x")}, {("e", "e"): 1})
    assert check_beck_axioms(ONE, 4, law=_swap_equal_boundaries).ok
    rep = check_beck_axioms(ONE, 4, law=_swap_equal_boundaries, generic=True)
    assert not rep.ok
    assert check_beck_axioms(ONE, 4, generic=True).ok


def test_generic_check_covers_small_graphs():
    # the one-cell-per-pair generic run agrees with every labelling of the same edges
    edges = {"f": ("x", "y"), "g": ("x", "y")}
    generic = check_beck_axioms(two_graph(("x", "y"), edges, {(a, b): 1 for a in edges for b in edges}),
                                3, generic=True)
    assert generic.ok
    for counts in itertools.product(range(3), repeat=4):
        cells = dict(zip([(a, b) for a in edges for b in edges], counts))
        assert check_beck_axioms(two_graph(("x", "y"), edges, cells), 3).ok
