import itertools

import pytest

from iconic.base import (
    FinSet,
    FiniteCategory,
    FiniteFunctor,
    FiniteNatTrans,
    codiscrete,
    compose_functors,
    constant_functor,
    count_lifts,
    coproduct,
    cyclic_group,
    discrete,
    dumps,
    empty_category,
    enumerate_functors,
    factorize_bo_ff,
    functor_category,
    identity_functor,
    is_bijective_on_objects,
    is_fully_faithful,
    is_isomorphic_by_counts,
    lift_bo_ff,
    one_object,
    product,
    terminal,
    validate_category,
    validate_functor,
    validate_nat_trans,
    walking_arrow,
    whisker_left,
)
from iconic.report import SearchTooLarge, StructuralError


def idempotent_monoid():
    return one_object(["1", "e"], lambda g, f: "1" if g == f == "1" else "e", "1", name="{1,e}")


SMALL = [
    empty_category(),
    terminal(),
    walking_arrow(),
    discrete(["a", "b"]),
    discrete(["a", "b", "c"]),
    cyclic_group(2),
    cyclic_group(3),
    idempotent_monoid(),
    codiscrete(["p", "q"]),
]


def test_terminal_is_category():
    assert validate_category(terminal()).ok


def test_z3_addition_all_triples():
    C = cyclic_group(3)
    rep = validate_category(C)
    assert rep.ok
    # independent oracle: associativity of + mod 3 over all 27 triples
    triples = list(itertools.product(range(3), repeat=3))
    assert len(triples) == 27
    for a, b, c in triples:
        lhs = C.comp(f"g{a}", C.comp(f"g{b}", f"g{c}"))
        assert lhs == f"g{(a + b + c) % 3}"


def test_broken_identity_law_reported_once():
    C = FiniteCategory(
        ("*",), {"id": ("*", "*"), "e": ("*", "*")}, {"*": "id"},
        {("e", "e"): "e", ("id", "e"): "id", ("e", "id"): "e", ("id", "id"): "id"},
    )
    rep = validate_category(C)
    assert not rep.ok
    assert rep.count("identity") == 1


def test_dangling_ids_are_structural():
    C = FiniteCategory(("*",), {"id": ("*", "?")}, {"*": "id"}, {})
    with pytest.raises(StructuralError):
        validate_category(C)


def test_product_with_terminal_is_copy():
    D = walking_arrow()
    P = product(terminal(), D)
    assert validate_category(P).ok
    assert is_isomorphic_by_counts(P, D)


def test_product_walking_arrows():
    P = product(walking_arrow(), walking_arrow())
    assert len(P.objects) == 4
    assert len(P.morphisms) == 3 * 3
    assert validate_category(P).ok


def test_product_with_empty():
    P = product(walking_arrow(), empty_category())
    assert P.objects == () and not P.morphisms


def test_coproduct_cases():
    C = walking_arrow()
    assert is_isomorphic_by_counts(coproduct(C, empty_category()), C)
    T = coproduct(terminal(), terminal())
    assert validate_category(T).ok
    assert len(T.objects) == 2 and T.is_discrete()


@pytest.mark.parametrize("C,D,E", [
    (walking_arrow(), terminal(), cyclic_group(2)),
    (cyclic_group(3), walking_arrow(), discrete(["a", "b"])),
    (codiscrete(["p", "q"]), idempotent_monoid(), walking_arrow()),
])
def test_product_distributes_over_coproduct(C, D, E):
    lhs = product(C, coproduct(D, E))
    rhs = coproduct(product(C, D), product(C, E))
    assert len(lhs.objects) == len(rhs.objects) == len(C.objects) * (len(D.objects) + len(E.objects))
    assert len(lhs.morphisms) == len(rhs.morphisms) == len(C.morphisms) * (len(D.morphisms) + len(E.morphisms))


@pytest.mark.parametrize("C", SMALL)
@pytest.mark.parametrize("D", SMALL)
def test_products_and_coproducts_validate(C, D):
    if len(C.morphisms) * len(D.morphisms) > 40:
        pytest.skip("outside enumeration bound")
    assert validate_category(product(C, D)).ok
    assert validate_category(coproduct(C, D)).ok


def _brute_force_functors(C, D):
    """Independent oracle: try every object and morphism map."""
    count = 0
    objs, mors = list(C.objects), sorted(C.morphisms)
    for om in itertools.product(D.objects, repeat=len(objs)):
        omap = dict(zip(objs, om))
        for mm in itertools.product(sorted(D.morphisms), repeat=len(mors)):
            F = FiniteFunctor(C, D, omap, dict(zip(mors, mm)))
            if validate_functor(F).ok:
                count += 1
    return count


def test_functors_walking_arrow_endo():
    W = walking_arrow()
    assert len(enumerate_functors(W, W)) == 3 == _brute_force_functors(W, W)


@pytest.mark.parametrize("C", SMALL)
def test_functors_to_terminal(C):
    assert len(enumerate_functors(C, terminal())) == 1


@pytest.mark.parametrize("D", SMALL)
def test_functors_from_empty(D):
    assert len(enumerate_functors(empty_category(), D)) == 1


@pytest.mark.parametrize("C,D", [
    (cyclic_group(2), cyclic_group(2)),
    (idempotent_monoid(), cyclic_group(2)),
    (walking_arrow(), codiscrete(["p", "q"])),
    (cyclic_group(3), idempotent_monoid()),
])
def test_functor_enumeration_matches_brute_force(C, D):
    fs = enumerate_functors(C, D)
    assert len(fs) == len(set(fs)) == _brute_force_functors(C, D)
    assert all(validate_functor(F).ok for F in fs)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("D", [walking_arrow(), cyclic_group(3), codiscrete(["p", "q"])])
def test_functors_from_discrete_count(n, D):
    # a functor out of a discrete category is just an object map
    C = discrete([f"x{i}" for i in range(n)])
    assert len(enumerate_functors(C, D)) == len(D.objects) ** n


def test_enumeration_cap_is_an_error():
    with pytest.raises(SearchTooLarge):
        enumerate_functors(discrete(["a", "b", "c", "d"]), discrete(["a", "b", "c"]), cap=20)


def test_enumeration_order_is_deterministic():
    W = walking_arrow()
    first = [F.key() for F in enumerate_functors(W, codiscrete(["p", "q", "r"]))]
    second = [F.key() for F in enumerate_functors(W, codiscrete(["p", "q", "r"]))]
    assert first == second


def test_functor_category_walking_arrow():
    FC = functor_category(walking_arrow(), walking_arrow())
    assert validate_category(FC).ok
    assert len(FC.objects) == 3
    # functors are the arrows of the poset 0<=1 seen as monotone maps; ordered pointwise
    assert len(FC.morphisms) == 6


def test_factorize_iso_case():
    W = walking_arrow()
    E, M = factorize_bo_ff(identity_functor(W))
    assert is_bijective_on_objects(E) and is_fully_faithful(E)
    assert is_bijective_on_objects(M) and is_fully_faithful(M)
    assert compose_functors(M, E).on_morphisms == {m: m for m in W.morphisms}


def test_factorize_constant_from_discrete():
    C = discrete(["a", "b"])
    F = constant_functor(C, terminal(), "*")
    E, M = factorize_bo_ff(F)
    I = E.target
    assert validate_category(I).ok
    assert len(I.objects) == 2
    # homs pulled back from the terminal category: one morphism between any pair
    assert all(len(I.hom(x, y)) == 1 for x in I.objects for y in I.objects)
    assert is_bijective_on_objects(E) and is_fully_faithful(M)
    assert validate_functor(E).ok and validate_functor(M).ok
    assert compose_functors(M, E) == F


@pytest.mark.parametrize("C,D", [(walking_arrow(), codiscrete(["p", "q"])),
                                 (cyclic_group(2), idempotent_monoid())])
def test_factorization_classes(C, D):
    for F in enumerate_functors(C, D):
        E, M = factorize_bo_ff(F)
        assert validate_category(E.target).ok
        assert is_bijective_on_objects(E)
        assert is_fully_faithful(M)
        assert compose_functors(M, E) == F


def test_enhanced_lifting_unique():
    # E: discrete{a,b} -> codiscrete{a,b}; M: codiscrete{u,v} -> codiscrete{p,q,r}
    A = discrete(["a", "b"])
    B = codiscrete(["a", "b"])
    C = codiscrete(["u", "v"])
    D = codiscrete(["p", "q", "r"])
    E = FiniteFunctor(A, B, {"a": "a", "b": "b"}, {"1_a": "a~a", "1_b": "b~b"})
    M = FiniteFunctor(C, D, {"u": "p", "v": "q"},
                      {f"{x}~{y}": f"{ {'u': 'p', 'v': 'q'}[x]}~{ {'u': 'p', 'v': 'q'}[y]}"
                       for x in "uv" for y in "uv"})
    s = FiniteFunctor(A, C, {"a": "u", "b": "v"}, {"1_a": "u~u", "1_b": "v~v"})
    t = FiniteFunctor(B, D, {"a": "r", "b": "q"},
                      {f"{x}~{y}": f"{ {'a': 'r', 'b': 'q'}[x]}~{ {'a': 'r', 'b': 'q'}[y]}"
                       for x in "ab" for y in "ab"})
    tE = compose_functors(t, E)
    Ms = compose_functors(M, s)
    alpha = FiniteNatTrans(tE, Ms, {"a": "r~p", "b": "q~q"})
    assert validate_nat_trans(alpha).ok
    r, beta = lift_bo_ff(E, M, s, t, alpha)
    assert validate_functor(r).ok and validate_nat_trans(beta).ok
    assert compose_functors(r, E) == s
    assert whisker_left(beta, E).components == alpha.components
    assert count_lifts(E, M, s, t, alpha) == 1


def test_json_round_trip_is_canonical():
    C = codiscrete(["q", "p"])
    doc = C.to_json()
    again = FiniteCategory.from_json(doc)
    assert again == C
    assert dumps(again.to_json()) == dumps(doc)


def test_finset_functions_as_hom():
    from iconic.base import base_hom
    assert len(base_hom(FinSet(("a", "b")), FinSet(("0", "1", "2")))) == 9
