import itertools
import math

import pytest

from iconic.base import (
    FinSet,
    FiniteNatTrans,
    cyclic_group,
    discrete,
    enumerate_functors,
    product,
    terminal,
    validate_category,
    walking_arrow,
)
from iconic.report import StructuralError
from iconic.wgraph import (
    TwoGraph,
    WGraph,
    WGraphTwoCell,
    apply_G,
    compose_morphisms,
    constant_terminal_functor,
    enumerate_morphisms,
    graph_from_edges,
    graph_hom_count,
    graph_hom_object,
    identity_base_functor,
    identity_morphism,
    identity_two_cell,
    objects_functor,
    opposite_functor,
    tensor,
    two_graph,
    validate_morphism,
    validate_two_cell,
)


def single(h):
    return WGraph(("v",), {("v", "v"): h})


def test_hom_object_terminal():
    H = graph_hom_object(single(terminal()), single(terminal()))
    assert len(H.objects) == 1


def test_hom_object_walking_arrow_is_functor_category():
    W = walking_arrow()
    H = graph_hom_object(single(W), single(W))
    assert len(H.objects) == len(enumerate_functors(W, W)) == 3
    assert validate_category(H).ok


def test_hom_object_single_summand():
    A = WGraph(("x", "y"), {(a, b): FinSet(("e",)) if a != b else FinSet(()) for a in "xy" for b in "xy"})
    B = single(FinSet(("p", "q")))
    # unique vertex map; each of the 4 homs contributes |B|^|A(x,y)|
    assert graph_hom_count(A, B) == 2 * 2 * 1 * 1


def _hom_size(X, Y):
    if isinstance(X, FinSet):
        return len(Y) ** len(X)
    return len(enumerate_functors(X, Y))


def _closed_form(A, B):
    total = 0
    for img in itertools.product(B.vertices, repeat=len(A.vertices)):
        f0 = dict(zip(A.vertices, img))
        total += math.prod(_hom_size(A(x, y), B(f0[x], f0[y])) for x in A.vertices for y in A.vertices)
    return total


SET_GRAPHS = [
    single(FinSet(("a",))),
    single(FinSet(("a", "b"))),
    graph_from_edges(("x", "y"), {("x", "y"): 1}),
    graph_from_edges(("x", "y"), {("x", "y"): 2, ("y", "y"): 1, ("x", "x"): 1}),
    graph_from_edges(("x",), {}),
]
CAT_GRAPHS = [
    single(walking_arrow()),
    single(cyclic_group(2)),
    WGraph(("x", "y"), {("x", "x"): terminal(), ("x", "y"): walking_arrow(),
                        ("y", "x"): discrete([]), ("y", "y"): terminal()}),
]


@pytest.mark.parametrize("A", SET_GRAPHS)
@pytest.mark.parametrize("B", SET_GRAPHS)
def test_hom_object_closed_form_sets(A, B):
    assert graph_hom_count(A, B) == _closed_form(A, B) == len(enumerate_morphisms(A, B))


@pytest.mark.parametrize("A", CAT_GRAPHS)
@pytest.mark.parametrize("B", CAT_GRAPHS)
def test_hom_object_closed_form_cats(A, B):
    assert graph_hom_count(A, B) == _closed_form(A, B)


def test_enumerated_morphisms_validate():
    A, B = CAT_GRAPHS[2], CAT_GRAPHS[0]
    ms = enumerate_morphisms(A, B)
    assert ms and all(validate_morphism(f).ok for f in ms)


def test_G_identity():
    A = CAT_GRAPHS[2]
    G = apply_G(identity_base_functor())
    assert G.graph(A) == A
    f = identity_morphism(A)
    assert G.morphism(f) == f


def test_G_constant_terminal():
    A = CAT_GRAPHS[2]
    GA = apply_G(constant_terminal_functor()).graph(A)
    assert GA.vertices == A.vertices
    assert all(h == terminal() for h in GA.hom.values())


@pytest.mark.parametrize("F1,F2", [
    (opposite_functor(), objects_functor()),
    (objects_functor(), opposite_functor()),
    (opposite_functor(), opposite_functor()),
])
def test_G_preserves_composition(F1, F2):
    A = CAT_GRAPHS[2]
    B = CAT_GRAPHS[0]
    composite = apply_G(F1.then(F2))
    stepwise = lambda X: apply_G(F2).graph(apply_G(F1).graph(X))
    assert composite.graph(A) == stepwise(A)
    for f in enumerate_morphisms(A, B):
        lhs = composite.morphism(f)
        rhs = apply_G(F2).morphism(apply_G(F1).morphism(f))
        assert lhs == rhs
        assert validate_morphism(lhs).ok


def test_G_preserves_identities_and_composites():
    A = CAT_GRAPHS[0]
    G = apply_G(opposite_functor())
    assert G.morphism(identity_morphism(A)) == identity_morphism(G.graph(A))
    ms = enumerate_morphisms(A, A)
    for f in ms:
        for g in ms:
            assert G.morphism(compose_morphisms(g, f)) == compose_morphisms(G.morphism(g), G.morphism(f))


def test_identity_two_cell_passes():
    for A in CAT_GRAPHS:
        assert validate_two_cell(identity_two_cell(identity_morphism(A))).ok


def test_two_cell_with_different_vertex_maps_fails():
    A = graph_from_edges(("x", "y"), {}, kind="cat")
    B = graph_from_edges(("x", "y"), {}, kind="cat")
    ms = enumerate_morphisms(A, B)
    f = next(m for m in ms if m.f0 == {"x": "x", "y": "y"})
    g = next(m for m in ms if m.f0 == {"x": "y", "y": "x"})
    rep = validate_two_cell(WGraphTwoCell(f, g, {}))
    assert rep.laws() == {"(1) equal vertex maps"}


def test_two_cell_naturality_brute_force():
    W = walking_arrow()
    A = single(W)
    ms = enumerate_morphisms(A, A)
    checked = 0
    for f in ms:
        for g in ms:
            F, G = f.component("v", "v"), g.component("v", "v")
            for combo in itertools.product(W.morphisms, repeat=len(W.objects)):
                alpha = FiniteNatTrans(F, G, dict(zip(W.objects, combo)))
                natural = all(
                    W.morphisms[alpha[x]] == (F.obj(x), G.obj(x)) for x in W.objects
                ) and all(
                    W.comp(alpha[b], F(m)) == W.comp(G(m), alpha[a]) for m, (a, b) in W.morphisms.items()
                )
                rep = validate_two_cell(WGraphTwoCell(f, g, {("v", "v"): alpha}))
                assert rep.ok == natural
                checked += 1
    assert checked == 3 * 3 * 3**2


def test_tensor_of_graphs():
    A = graph_from_edges(("x", "y"), {("x", "y"): 2})
    B = graph_from_edges(("u",), {("u", "u"): 3})
    T = tensor(A, B)
    assert len(T.vertices) == 2
    assert len(T("(x,u)", "(y,u)")) == 6
    assert len(T("(y,u)", "(x,u)")) == 0
    C = tensor(single(walking_arrow()), single(cyclic_group(2)))
    assert C("(v,v)", "(v,v)") == product(walking_arrow(), cyclic_group(2))


def test_two_graph_rejects_non_parallel_hom():
    with pytest.raises(StructuralError):
        TwoGraph(("x", "y"), {"f": ("x", "y"), "g": ("y", "x")},
                 {("f", "f"): discrete([]), ("g", "g"): discrete([]), ("f", "g"): discrete([])})


def test_two_graph_requires_every_parallel_pair():
    with pytest.raises(StructuralError):
        TwoGraph(("x",), {"f": ("x", "x")}, {})


def test_json_round_trips():
    A = CAT_GRAPHS[2]
    assert WGraph.from_json(A.to_json()) == A
    T = two_graph(("x", "y"), {"f": ("x", "y"), "g": ("x", "y")}, {("f", "g"): 2})
    again = TwoGraph.from_json(T.to_json())
    assert again.to_json() == T.to_json()
