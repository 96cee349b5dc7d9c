import itertools
import json

import pytest

from iconic.algebras import validate_strict3
from iconic.base import discrete
from iconic.counterexample import (
    BicharacterBraidedCategory,
    BraidedEquivalence,
    BraidingError,
    SymmetricInputError,
    WitnessBounds,
    all_braidings,
    braiding_of,
    build_bicharacter_category,
    catalogue_categories,
    check_braided_monoidal_functor,
    check_braiding,
    eckmann_hilton_check,
    embed_doubly_degenerate,
    enumerate_braided_equivalences,
    enumerate_monoidal_structures,
    enumerate_small_categories,
    enumerate_strict_doubly_degenerate,
    is_symmetric,
    omega_example,
    parse_bicharacter,
    parse_group,
    search_equivalences,
    strict_doubly_degenerate,
    witness_counterexample,
)
from iconic.pseudo import check_iconic_tricategory, to_strict_three_category
from iconic.report import StructuralError


def z2_sign():
    return build_bicharacter_category(2, 2, lambda a, b: a[0] * b[0])


def trivial(n=3, m=3):
    return build_bicharacter_category(n, m, lambda a, b: 0)


def _tables(G, m):
    els = G.elements
    for vals in itertools.product(range(m), repeat=len(els) ** 2):
        yield BicharacterBraidedCategory(G, m, dict(zip(itertools.product(els, repeat=2), vals)))


# braided categories


def test_z2_sign_is_valid_and_symmetric():
    B = z2_sign()
    rep = check_braiding(B, "hexagon")
    assert rep.ok
    assert B.braid[((1,), (1,))] == 1
    v = is_symmetric(B)
    assert v.symmetric and v.witness is None and v.checked == 4


def test_omega_example_is_not_symmetric():
    B = omega_example()
    assert check_braiding(B).ok
    v = is_symmetric(B)
    assert not v.symmetric and v.witness == ("1", "1")
    # oracle: c(1,1)·c(1,1) = ω² in exponent arithmetic
    assert (B.braid[((1,), (1,))] * 2) % 3 == 2


def test_trivial_braiding_symmetric():
    assert is_symmetric(trivial()).symmetric


def test_symmetry_matches_exponent_arithmetic():
    for B in all_braidings((3,), 3) + all_braidings((2, 2), 2) + all_braidings((4,), 4):
        G = B.group
        oracle = all((B.braid[(a, b)] + B.braid[(b, a)]) % B.m == 0 for a in G.elements for b in G.elements)
        assert is_symmetric(B).symmetric == oracle


def test_non_bicharacter_rejected_with_location():
    table = {(a, b): 0 for a in range(3) for b in range(3)}
    table[(1, 1)] = 1
    with pytest.raises(BraidingError) as exc:
        build_bicharacter_category(3, 3, table)
    rep = exc.value.report
    assert "hexagon (left)" in rep.laws()
    assert all(len(v.location) == 3 for v in rep.violations if v.law.startswith("hexagon"))


def test_partial_table_rejected():
    with pytest.raises(BraidingError):
        build_bicharacter_category(2, 2, {(0, 0): 0})


@pytest.mark.parametrize("orders,m", [((2,), 2), ((3,), 3), ((3,), 2), ((2,), 4), ((2, 2), 2), ((4,), 2)])
def test_hexagons_hold_iff_bicharacter(orders, m):
    G = parse_group(orders)
    valid = 0
    for B in _tables(G, m):
        h = check_braiding(B, "hexagon", stop=True).ok
        assert h == check_braiding(B, "bicharacter", stop=True).ok
        valid += h
    # bilinear maps on a cyclic group are fixed by c(1,1) with n·c(1,1) = 0
    assert valid == len(all_braidings(orders, m))


def test_all_braidings_counts():
    assert len(all_braidings((3,), 3)) == 3
    assert len(all_braidings((2, 2), 2)) == 16
    assert len(all_braidings((3,), 2)) == 1


def test_parse_helpers():
    G = parse_group("Z3")
    assert parse_bicharacter("omega^{ab}", G, 3) == omega_example().braid
    assert parse_bicharacter("omega^{2ab}", G, 3) == omega_example(3, 2).braid
    assert set(parse_bicharacter("1", G, 3).values()) == {0}
    assert parse_group("Z2xZ2").orders == (2, 2)
    with pytest.raises(ValueError):
        parse_group("S3")
    with pytest.raises(ValueError):
        parse_bicharacter("omega^{__import__}", G, 3)


def test_json_round_trip():
    B = omega_example()
    doc = json.loads(json.dumps(B.to_json()))
    assert BicharacterBraidedCategory.from_json(doc).braid == B.braid
    with pytest.raises(StructuralError):
        BicharacterBraidedCategory.from_json({"group": [3]})


# embedding


def test_trivial_embedding_is_strict():
    T = embed_doubly_degenerate(trivial())
    assert check_iconic_tricategory(T).ok
    B = trivial()
    assert all(B.split(c)[1] == 0 for comps in T.assoc.values() for c in comps.values())
    assert validate_strict3(to_strict_three_category(T)).ok


def test_omega_embedding_passes_full_sweep():
    T = embed_doubly_degenerate(omega_example())
    rep = check_iconic_tricategory(T)
    assert rep.ok and rep.checked > 10_000


def test_z2_embedding_has_order_two_interchange():
    B = z2_sign()
    T = embed_doubly_degenerate(B)
    assert check_iconic_tricategory(T).ok
    F = T.tensor("*", "*", "*")
    cell = F.comp(("0", "1"), ("1", "0"))
    C = B.category
    assert cell != C.identity["0"] and C.comp(cell, cell) == C.identity[C.cod(cell)]


@pytest.mark.parametrize("orders,m", [((3,), 3), ((2, 2), 2), ((2,), 4)])
def test_extraction_inverts_embedding(orders, m):
    for B in all_braidings(orders, m):
        assert braiding_of(embed_doubly_degenerate(B), B) == dict(B.braid)


# strict side


def test_eckmann_hilton_on_trivial_embedding():
    S = to_strict_three_category(embed_doubly_degenerate(trivial()))
    assert eckmann_hilton_check(S).ok


def test_eckmann_hilton_needs_doubly_degenerate():
    from iconic.algebras import small_fixtures
    with pytest.raises(StructuralError):
        eckmann_hilton_check(small_fixtures()[1])


def test_monoid_counts_match_known_sequence():
    cats = enumerate_small_categories(1, 5)
    counts = [sum(1 for C in cats if len(C.morphisms) == n) for n in range(1, 6)]
    assert counts == [1, 2, 7, 35, 228]


def test_small_categories_valid_and_bounded():
    from iconic.base import validate_category
    cats = enumerate_small_categories(3, 4)
    assert all(validate_category(C).ok for C in cats)
    assert all(len(C.objects) <= 3 and len(C.morphisms) <= 4 for C in cats)
    # two objects, one extra arrow: the walking arrow, or a monoid of order 2 on one object
    assert sum(1 for C in cats if len(C.objects) == 2 and len(C.morphisms) == 3) == 1 + 2


def _monoid_tables(k):
    els = range(k)
    n = 0
    for vals in itertools.product(els, repeat=k * k):
        t = lambda a, b: vals[a * k + b]
        if not all(t(t(a, b), c) == t(a, t(b, c)) for a in els for b in els for c in els):
            continue
        n += sum(1 for e in els if all(t(e, a) == a == t(a, e) for a in els))
    return n


@pytest.mark.parametrize("k", [1, 2, 3])
def test_structures_on_discrete_categories_are_monoids(k):
    H = discrete([f"o{i}" for i in range(k)])
    assert len(enumerate_monoidal_structures(H)) == _monoid_tables(k)


def test_structures_on_groups_need_commutativity():
    by_name = {C.name: C for C in catalogue_categories(1, 9, 6)}
    for name in ("Z/6", "Z2xZ4", "Z3xZ3"):
        assert len(enumerate_monoidal_structures(by_name[name])) == 1
    for name in ("S3", "D4", "Q8"):
        assert enumerate_monoidal_structures(by_name[name]) == []


def test_noncommutative_candidate_rejected_by_interchange():
    H = discrete(["e", "x", "y"])
    structs = enumerate_monoidal_structures(H)
    noncomm = next(M for M in structs if M.table[("x", "y")] != M.table[("y", "x")])
    S = strict_doubly_degenerate(H, noncomm, noncomm)
    assert "interchange" in validate_strict3(S).laws()
    assert not eckmann_hilton_check(S).ok


def test_bounded_enumeration_small():
    s = enumerate_strict_doubly_degenerate(2, 4, 4)
    assert s.complete and s.accepted > 0
    assert s.symmetric == s.accepted and s.non_symmetric == 0
    assert s.validator_disagreements == 0
    assert s.noncommutative_rejected_by_interchange > 0
    assert any(e.get("noncommutative") for e in s.log)
    assert s.to_json()["rejected"]["interchange"] > 0


# equivalences and the witness


def test_identity_is_braided_equivalence():
    B = omega_example()
    eqs = enumerate_braided_equivalences(B, B)
    assert any(all(E.functor(m) == m for m in B.category.morphisms) for E in eqs)


def test_broken_comparison_detected():
    B = omega_example()
    E = enumerate_braided_equivalences(B, B)[0]
    phi = dict(E.comparison)
    key = ("1", "2")
    a, s = phi[key].rsplit(".", 1)
    phi[key] = f"{a}.{(int(s) + 1) % 3}"
    rep = check_braided_monoidal_functor(B, B, BraidedEquivalence(E.functor, E.unit, phi))
    assert not rep.ok


@pytest.mark.parametrize("orders,m", [((3,), 3), ((2,), 4)])
def test_symmetry_is_transported(orders, m):
    Bs = all_braidings(orders, m)
    for B in Bs:
        for B2 in Bs:
            for _ in enumerate_braided_equivalences(B, B2):
                assert is_symmetric(B).symmetric == is_symmetric(B2).symmetric


def test_no_equivalence_to_symmetric_target():
    q = search_equivalences(omega_example())
    assert q.targets == 3 and q.symmetric_targets == 1
    assert q.to_symmetric == 0 and q.braided_equivalences > 0 and q.transport_violations == 0


def test_symmetric_inputs_refused():
    with pytest.raises(SymmetricInputError, match="input symmetric"):
        witness_counterexample(trivial())
    with pytest.raises(SymmetricInputError):
        witness_counterexample(z2_sign())


def test_witness_small_bounds_deterministic():
    bounds = WitnessBounds(2, 4, 4)
    r1 = witness_counterexample(omega_example(), bounds)
    r2 = witness_counterexample(omega_example(), bounds)
    assert r1.conclusive and r1.witness == ("1", "1")
    assert json.dumps(r1.to_json(), sort_keys=True) == json.dumps(r2.to_json(), sort_keys=True)
    assert {c["status"] for c in r1.claims} == {"exhaustive", "exhaustive within bounds", "theorem"}
    assert "conclusive" in r1.to_text()


def test_witness_inconclusive_when_capped():
    r = witness_counterexample(omega_example(), WitnessBounds(2, 4, 4, cap=20))
    assert r.status == "inconclusive" and not r.conclusive


def test_bounds_must_be_positive():
    with pytest.raises(ValueError):
        WitnessBounds(0, 4, 4)
