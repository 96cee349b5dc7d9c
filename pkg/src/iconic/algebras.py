"""Strict algebras: enriched categories, strict 3-categories, evaluation of
pasting diagrams, strict morphisms, icons and ico-icons."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .base import (
    DEFAULT_CAP,
    FinSet,
    FiniteCategory,
    FiniteFunctor,
    FiniteNatTrans,
    elements,
    enumerate_functors,
    enumerate_nat_trans,
    terminal,
    validate_category,
    validate_functor,
)
from .freecat import PathCell, all_nested, free_mult
from .pasting import (
    Cell2,
    Edge,
    Row,
    map_column,
    nested_t_view,
    row_flatten,
    t_mult,
    t_unit,
    validate_pd,
)
from .report import SearchTooLarge, StructuralError, ValidationReport
from .wgraph import TwoGraph, WGraph, WGraphMorphism, WGraphTwoCell, enumerate_morphisms, validate_two_cell


def _pipe(a: str, b: str) -> str:
    return f"{a}|{b}"


def _unpipe(k: str) -> tuple[str, str]:
    a, b = k.split("|")
    return a, b


# ---------------------------------------------------------------------------
# enriched categories (algebras for the free-category monad)


@dataclass(frozen=True, eq=False)
class EnrichedCategory:
    """A graph with composition and units.

    ``comp[(x, y, z, g, f)]`` is ``g∘f`` for ``f ∈ A(x, y)``, ``g ∈ A(y, z)``.
    For category-valued homs the table also covers hom morphisms, which makes
    composition a functor and the whole thing a strict 2-category.
    """

    graph: WGraph
    comp: Mapping[tuple, str]
    unit: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __call__(self, x, y):
        return self.graph(x, y)

    def compose(self, x, y, z, g, f) -> str:
        try:
            return self.comp[(x, y, z, g, f)]
        except KeyError:
            raise StructuralError(f"no composite {g}∘{f} over {x}->{y}->{z}") from None

    def evaluate(self, p: PathCell) -> str:
        """The algebra structure: compose a path of hom elements."""
        if not p.cells:
            return self.unit[p.src]
        v = p.cells[0]
        for i, c in enumerate(p.cells[1:], start=1):
            v = self.compose(p.vertices[0], p.vertices[i], p.vertices[i + 1], c, v)
        return v


def category_as_enriched(C: FiniteCategory) -> EnrichedCategory:
    """An ordinary category viewed as a set-enriched one."""
    hom = {(x, y): FinSet(tuple(sorted(C.hom(x, y)))) for x in C.objects for y in C.objects}
    comp = {}
    for (g, f), h in C.compose.items():
        x, y = C.morphisms[f]
        comp[(x, y, C.cod(g), g, f)] = h
    return EnrichedCategory(WGraph(C.objects, hom), comp, dict(C.identity), name=C.name)


def monoidal_as_enriched(D: FiniteCategory, tensor: Callable[[str, str], str], unit: str,
                         obj: str = "*") -> EnrichedCategory:
    """A strict monoidal category as a one-object 2-category.

    ``tensor(g, f)`` must act on objects and morphisms of ``D``.
    """
    comp = {}
    for g in D.objects:
        for f in D.objects:
            comp[(obj, obj, obj, g, f)] = tensor(g, f)
    for g in D.morphisms:
        for f in D.morphisms:
            comp[(obj, obj, obj, g, f)] = tensor(g, f)
    return EnrichedCategory(WGraph((obj,), {(obj, obj): D}), comp, {obj: unit}, name=D.name)


def validate_enriched(E: EnrichedCategory) -> ValidationReport:
    rep = ValidationReport(subject=f"enriched category {E.name}".strip())
    A = E.graph
    V = A.vertices
    for x in V:
        rep.expect(E.unit.get(x) in elements(A(x, x)), "unit", (x,), "unit is not a hom element")
    for x, y, z in itertools.product(V, repeat=3):
        H1, H2, H3 = A(x, y), A(y, z), A(x, z)
        for g in elements(H2):
            for f in elements(H1):
                rep.expect(E.comp.get((x, y, z, g, f)) in elements(H3), "composition", (x, y, z, g, f))
        if isinstance(H1, FiniteCategory):
            for g, (g0, g1) in H2.morphisms.items():
                for f, (f0, f1) in H1.morphisms.items():
                    h = E.comp.get((x, y, z, g, f))
                    ok = h in H3.morphisms and H3.morphisms[h] == (E.comp.get((x, y, z, g0, f0)),
                                                                    E.comp.get((x, y, z, g1, f1)))
                    rep.expect(ok, "composition", (x, y, z, g, f), "morphism composite mistyped")
    if not rep.ok:
        return rep
    for x, y, z in itertools.product(V, repeat=3):
        H1, H2, H3 = A(x, y), A(y, z), A(x, z)
        if isinstance(H1, FiniteCategory):
            for a in H2.objects:
                for b in H1.objects:
                    rep.expect(E.comp[(x, y, z, H2.identity[a], H1.identity[b])] ==
                               H3.identity[E.comp[(x, y, z, a, b)]], "functoriality", (x, y, z, a, b))
            for (g2, g1), g in H2.compose.items():
                for (f2, f1), f in H1.compose.items():
                    lhs = E.comp[(x, y, z, g, f)]
                    rhs = H3.comp(E.comp[(x, y, z, g2, f2)], E.comp[(x, y, z, g1, f1)])
                    rep.expect(lhs == rhs, "functoriality", (x, y, z, g, f))
    every = lambda H: tuple(H.morphisms) if isinstance(H, FiniteCategory) else elements(H)
    for x, y in itertools.product(V, repeat=2):
        H = A(x, y)
        ux, uy = E.unit[x], E.unit[y]
        if isinstance(H, FiniteCategory):
            ux_m, uy_m = A(x, x).identity[ux], A(y, y).identity[uy]
        for f in elements(H):
            rep.expect(E.comp[(x, x, y, f, ux)] == f and E.comp[(x, y, y, uy, f)] == f, "unit law", (x, y, f))
        if isinstance(H, FiniteCategory):
            for m in H.morphisms:
                rep.expect(E.comp[(x, x, y, m, ux_m)] == m and E.comp[(x, y, y, uy_m, m)] == m,
                           "unit law", (x, y, m))
    for w, x, y, z in itertools.product(V, repeat=4):
        for h in every(A(y, z)):
            for g in every(A(x, y)):
                hg = E.comp[(x, y, z, h, g)]
                for f in every(A(w, x)):
                    lhs = E.comp[(w, x, z, hg, f)]
                    rhs = E.comp[(w, y, z, h, E.comp[(w, x, y, g, f)])]
                    rep.expect(lhs == rhs, "associativity", (w, x, y, z, h, g, f))
    return rep


def check_gamma_algebra(E: EnrichedCategory, bound: int = 4, max_len: int = 2,
                        evaluate: Callable[[PathCell], str] | None = None) -> ValidationReport:
    """``a∘η = 1`` and ``a∘Γa = a∘μ`` on hom elements within the bounds."""
    ev = evaluate or E.evaluate
    rep = ValidationReport(subject="free-category algebra")
    A = E.graph
    step = lambda u, v: elements(A(u, v))
    for x in A.vertices:
        for y in A.vertices:
            for f in elements(A(x, y)):
                rep.expect(ev(PathCell((x, y), (f,))) == f, "unit", (x, y, f))
    for P in all_nested(A.vertices, step, 2, bound, max_len):
        lhs = ev(free_mult(P))
        rhs = ev(PathCell(P.vertices, tuple(ev(q) for q in P.cells)))
        rep.expect(lhs == rhs, "multiplication", (P,), f"{lhs} ≠ {rhs}")
    return rep


def validate_enriched_functor(E1: EnrichedCategory, E2: EnrichedCategory, F: WGraphMorphism) -> ValidationReport:
    rep = ValidationReport(subject="enriched functor")
    A = E1.graph
    ap = lambda x, y, e: _apply_component(F.components[(x, y)], e)
    for x in A.vertices:
        rep.expect(ap(x, x, E1.unit[x]) == E2.unit[F.f0[x]], "units", (x,))
    for x, y, z in itertools.product(A.vertices, repeat=3):
        H1, H2 = A(x, y), A(y, z)
        every = (lambda H: tuple(H.morphisms)) if isinstance(H1, FiniteCategory) else elements
        for g in every(H2):
            for f in every(H1):
                lhs = ap(x, z, E1.comp[(x, y, z, g, f)])
                rhs = E2.comp.get((F.f0[x], F.f0[y], F.f0[z], ap(y, z, g), ap(x, y, f)))
                rep.expect(lhs == rhs, "composition", (x, y, z, g, f))
    return rep


def _apply_component(c, e):
    if isinstance(c, FiniteFunctor):
        return c(e) if e in c.source.morphisms else c.obj(e)
    return c[e]


def enumerate_enriched_functors(E1: EnrichedCategory, E2: EnrichedCategory, cap: int = DEFAULT_CAP
                                ) -> list[WGraphMorphism]:
    return [F for F in enumerate_morphisms(E1.graph, E2.graph, cap) if validate_enriched_functor(E1, E2, F).ok]


@dataclass(frozen=True, eq=False)
class Icon:
    """Identity-on-objects transformation between enriched functors: a natural
    transformation per hom."""

    source: EnrichedCategory
    target: EnrichedCategory
    F: WGraphMorphism
    G: WGraphMorphism
    components: Mapping[tuple, FiniteNatTrans]


def check_icon(alpha: Icon) -> ValidationReport:
    """Graph 2-cell conditions plus compatibility with composition and units."""
    rep = ValidationReport(subject="icon")
    rep.extend(validate_two_cell(WGraphTwoCell(alpha.F, alpha.G, alpha.components)))
    if not rep.ok:
        return rep
    E1, E2, F = alpha.source, alpha.target, alpha.F
    A = E1.graph
    f0 = F.f0
    for x, y, z in itertools.product(A.vertices, repeat=3):
        for g in elements(A(y, z)):
            for f in elements(A(x, y)):
                whisk = E2.comp.get((f0[x], f0[y], f0[z], alpha.components[(y, z)][g], alpha.components[(x, y)][f]))
                direct = alpha.components[(x, z)][E1.comp[(x, y, z, g, f)]]
                rep.expect(whisk == direct, "(3) composition", (x, y, z, g, f), f"{whisk} ≠ {direct}")
    for x in A.vertices:
        u = E1.unit[x]
        target_hom = E2(f0[x], f0[x])
        rep.expect(alpha.components[(x, x)][u] == target_hom.identity[F.components[(x, x)].obj(u)],
                   "(4) units", (x,))
    return rep


def enumerate_icons(E1: EnrichedCategory, E2: EnrichedCategory, F: WGraphMorphism, G: WGraphMorphism,
                    cap: int = DEFAULT_CAP) -> list[Icon]:
    """All icons ``F => G`` by search over per-hom natural transformations."""
    if dict(F.f0) != dict(G.f0):
        return []
    keys = sorted(F.components)
    pools = [enumerate_nat_trans(F.components[k], G.components[k], cap) for k in keys]
    out = []
    for combo in itertools.product(*pools):
        a = Icon(E1, E2, F, G, dict(zip(keys, combo)))
        if check_icon(a).ok:
            out.append(a)
    return out


# ---------------------------------------------------------------------------
# strict 3-categories


@dataclass(frozen=True, eq=False)
class StrictThreeCategory:
    """A strict 3-category given by its generating tables.

    * ``one_cells``: the category of 0- and 1-cells;
    * ``homs[(f, g)]``: category of 2-cells ``f => g`` and 3-cells between them,
      one for every parallel pair of 1-cells;
    * ``vcomp[(β, α)]``: composite along a 1-cell (``α`` first), for 2-cells
      and for 3-cells;
    * ``hcomp[(β2, β1)]``: composite along a 0-cell (``β1`` first);
    * ``id2[f]``: identity 2-cell of a 1-cell.

    2-cell ids and 3-cell ids must each be unique across all homs.
    """

    one_cells: FiniteCategory
    homs: Mapping[tuple, FiniteCategory]
    vcomp: Mapping[tuple, str]
    hcomp: Mapping[tuple, str]
    id2: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "homs", {tuple(k): v for k, v in self.homs.items()})
        object.__setattr__(self, "vcomp", {tuple(k): v for k, v in self.vcomp.items()})
        object.__setattr__(self, "hcomp", {tuple(k): v for k, v in self.hcomp.items()})
        object.__setattr__(self, "id2", dict(self.id2))

    @property
    def objects(self) -> tuple:
        return self.one_cells.objects

    def id1(self, x: str) -> str:
        return self.one_cells.identity[x]

    def comp1(self, g: str, f: str) -> str:
        return self.one_cells.comp(g, f)

    def parallel_pairs(self) -> list[tuple[str, str]]:
        K = self.one_cells
        return sorted((f, g) for f in K.morphisms for g in K.morphisms if K.morphisms[f] == K.morphisms[g])

    @cached_property
    def _index(self) -> tuple[dict, dict]:
        two, three = {}, {}
        for (f, g), H in self.homs.items():
            for a in H.objects:
                if a in two:
                    raise StructuralError(f"2-cell id {a} appears in two homs")
                two[a] = (f, g)
            for m, (d, c) in H.morphisms.items():
                if m in three:
                    raise StructuralError(f"3-cell id {m} appears in two homs")
                three[m] = (f, g, d, c)
        return two, three

    def hom_of(self, cell: str) -> tuple[str, str]:
        two, three = self._index
        if cell in two:
            return two[cell]
        if cell in three:
            return three[cell][:2]
        raise StructuralError(f"unknown cell {cell}")

    def is_two_cell(self, cell: str) -> bool:
        return cell in self._index[0]

    def id3(self, a: str) -> str:
        return self.homs[self.hom_of(a)].identity[a]

    def comp3(self, t2: str, t1: str) -> str:
        return self.homs[self.hom_of(t1)].comp(t2, t1)

    @cached_property
    def graph(self) -> TwoGraph:
        K = self.one_cells
        return TwoGraph(K.objects, dict(K.morphisms), self.homs)

    def edge(self, f: str) -> Edge:
        d, c = self.one_cells.morphisms[f]
        return Edge(f, d, c)

    def cell(self, a: str) -> Cell2:
        f, g = self.hom_of(a)
        return Cell2(self.edge(f), self.edge(g), a)

    def with_tables(self, **changes) -> "StrictThreeCategory":
        """Copy with some tables replaced (no validation; used for mutation tests)."""
        return replace(self, **changes)

    def to_json(self) -> dict:
        doc = self.graph.to_json()
        doc["hcomp1"] = {_pipe(g, f): h for (g, f), h in sorted(self.one_cells.compose.items())}
        doc["vcomp"] = {_pipe(b, a): c for (b, a), c in sorted(self.vcomp.items())}
        doc["hcomp0"] = {_pipe(b, a): c for (b, a), c in sorted(self.hcomp.items())}
        doc["units"] = {"1": dict(sorted(self.one_cells.identity.items())), "2": dict(sorted(self.id2.items()))}
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> "StrictThreeCategory":
        try:
            G = TwoGraph.from_json(doc)
            K = FiniteCategory(G.vertices, G.edges, dict(doc["units"]["1"]),
                               {_unpipe(k): v for k, v in doc["hcomp1"].items()})
            return cls(K, G.hom, {_unpipe(k): v for k, v in doc["vcomp"].items()},
                       {_unpipe(k): v for k, v in doc["hcomp0"].items()}, dict(doc["units"]["2"]))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise StructuralError(f"bad strict 3-category document: {exc}") from exc


def _cells_and_morphisms(H: FiniteCategory) -> list[tuple[str, str, str]]:
    """(cell, dom, cod) for objects (as their own boundary) and morphisms."""
    return [(a, a, a) for a in H.objects] + [(m, d, c) for m, (d, c) in H.morphisms.items()]


def validate_strict3(S: StrictThreeCategory) -> ValidationReport:
    rep = ValidationReport(subject=f"strict 3-category {S.name}".strip())
    K = S.one_cells
    rep.extend(validate_category(K), prefix="1-cells: ")
    if not rep.ok:
        return rep
    pairs = S.parallel_pairs()
    rep.expect(set(S.homs) == set(pairs), "hom", (), "homs must be given for exactly the parallel pairs")
    if not rep.ok:
        return rep
    try:
        S._index
    except StructuralError as exc:
        rep.add("hom", (), str(exc))
        return rep
    for fg in pairs:
        rep.extend(validate_category(S.homs[fg]), prefix=f"hom {fg[0]}=>{fg[1]}: ")
    for f in K.morphisms:
        rep.expect(S.id2.get(f) in S.homs[(f, f)].objects, "identity 2-cells", (f,))
    if not rep.ok:
        return rep

    by_dom: dict = {}
    for f, g in pairs:
        by_dom.setdefault(K.dom(f), []).append((f, g))

    # vertical composition along 1-cells: typing and functoriality
    vtriples = [(f, g, h) for (f, g) in pairs for (g2, h) in pairs if g2 == g]
    for f, g, h in vtriples:
        H1, H2, H3 = S.homs[(f, g)], S.homs[(g, h)], S.homs[(f, h)]
        for b, b0, b1 in _cells_and_morphisms(H2):
            for a, a0, a1 in _cells_and_morphisms(H1):
                if (b in H2.objects) != (a in H1.objects):
                    continue
                v = S.vcomp.get((b, a))
                if b in H2.objects:
                    rep.expect(v in H3.objects, "typing (vertical)", (b, a))
                else:
                    ok = v in H3.morphisms and H3.morphisms[v] == (S.vcomp.get((b0, a0)), S.vcomp.get((b1, a1)))
                    rep.expect(ok, "typing (vertical)", (b, a))
    # horizontal composition along 0-cells: typing
    htuples = []
    for (f, g) in pairs:
        for (f2, g2) in by_dom.get(K.cod(f), []):
            htuples.append((f, g, f2, g2))
    for f, g, f2, g2 in htuples:
        H1, H2 = S.homs[(f, g)], S.homs[(f2, g2)]
        H3 = S.homs[(K.comp(f2, f), K.comp(g2, g))]
        for b, b0, b1 in _cells_and_morphisms(H2):
            for a, a0, a1 in _cells_and_morphisms(H1):
                if (b in H2.objects) != (a in H1.objects):
                    continue
                v = S.hcomp.get((b, a))
                if b in H2.objects:
                    rep.expect(v in H3.objects, "typing (horizontal)", (b, a))
                else:
                    ok = v in H3.morphisms and H3.morphisms[v] == (S.hcomp.get((b0, a0)), S.hcomp.get((b1, a1)))
                    rep.expect(ok, "typing (horizontal)", (b, a))
    if not rep.ok:
        return rep

    # functoriality of both composites with respect to 3-cell composition
    for law, table, combos in (("functoriality (vertical)", S.vcomp, [((g, h), (f, g)) for f, g, h in vtriples]),
                               ("functoriality (horizontal)", S.hcomp,
                                [((f2, g2), (f, g)) for f, g, f2, g2 in htuples])):
        for k2, k1 in combos:
            H2, H1 = S.homs[k2], S.homs[k1]
            for b in H2.objects:
                for a in H1.objects:
                    rep.expect(table[(H2.identity[b], H1.identity[a])] == S.id3(table[(b, a)]), law, (b, a))
            for (t2, t1), t in H2.compose.items():
                for (s2, s1), s in H1.compose.items():
                    rep.expect(table[(t, s)] == S.comp3(table[(t2, s2)], table[(t1, s1)]), law, (t, s))

    # units
    for f, g in pairs:
        H = S.homs[(f, g)]
        x, y = K.morphisms[f]
        for a, _, _ in _cells_and_morphisms(H):
            is2 = a in H.objects
            lid = S.id2[g] if is2 else S.id3(S.id2[g])
            rid = S.id2[f] if is2 else S.id3(S.id2[f])
            rep.expect(S.vcomp[(lid, a)] == a and S.vcomp[(a, rid)] == a, "unit (vertical)", (a,))
            ly, lx = S.id2[K.identity[y]], S.id2[K.identity[x]]
            if not is2:
                ly, lx = S.id3(ly), S.id3(lx)
            rep.expect(S.hcomp[(ly, a)] == a and S.hcomp[(a, lx)] == a, "unit (horizontal)", (a,))
    for f, g, f2, g2 in htuples:
        if f == g and f2 == g2:
            rep.expect(S.hcomp[(S.id2[f2], S.id2[f])] == S.id2[K.comp(f2, f)], "identity 2-cells", (f2, f))

    # associativity
    for f, g, h in vtriples:
        for h2 in [k for (j, k) in pairs if j == h]:
            for c, _, _ in _cells_and_morphisms(S.homs[(h, h2)]):
                for b, _, _ in _cells_and_morphisms(S.homs[(g, h)]):
                    if (c in S._index[0]) != (b in S._index[0]):
                        continue
                    cb = S.vcomp[(c, b)]
                    for a, _, _ in _cells_and_morphisms(S.homs[(f, g)]):
                        if (a in S._index[0]) != (b in S._index[0]):
                            continue
                        rep.expect(S.vcomp[(cb, a)] == S.vcomp[(c, S.vcomp[(b, a)])],
                                   "associativity (vertical)", (c, b, a))
    for f, g, f2, g2 in htuples:
        for f3, g3 in by_dom.get(K.cod(f2), []):
            for c, _, _ in _cells_and_morphisms(S.homs[(f3, g3)]):
                for b, _, _ in _cells_and_morphisms(S.homs[(f2, g2)]):
                    if S.is_two_cell(c) != S.is_two_cell(b):
                        continue
                    cb = S.hcomp[(c, b)]
                    for a, _, _ in _cells_and_morphisms(S.homs[(f, g)]):
                        if S.is_two_cell(a) != S.is_two_cell(b):
                            continue
                        rep.expect(S.hcomp[(cb, a)] == S.hcomp[(c, S.hcomp[(b, a)])],
                                   "associativity (horizontal)", (c, b, a))

    # interchange: (β2∘α2)*(β1∘α1) = (β2*β1)∘(α2*α1)
    for f, g, h in vtriples:
        for f2, g2, h2 in [t for t in vtriples if S.one_cells.dom(t[0]) == K.cod(f)]:
            for b1, _, _ in _cells_and_morphisms(S.homs[(g, h)]):
                for a1, _, _ in _cells_and_morphisms(S.homs[(f, g)]):
                    if S.is_two_cell(b1) != S.is_two_cell(a1):
                        continue
                    for b2, _, _ in _cells_and_morphisms(S.homs[(g2, h2)]):
                        if S.is_two_cell(b2) != S.is_two_cell(a1):
                            continue
                        for a2, _, _ in _cells_and_morphisms(S.homs[(f2, g2)]):
                            if S.is_two_cell(a2) != S.is_two_cell(a1):
                                continue
                            lhs = S.hcomp[(S.vcomp[(b2, a2)], S.vcomp[(b1, a1)])]
                            rhs = S.vcomp[(S.hcomp[(b2, b1)], S.hcomp[(a2, a1)])]
                            rep.expect(lhs == rhs, "interchange", (b2, a2, b1, a1), f"{lhs} ≠ {rhs}")
    return rep


# ---------------------------------------------------------------------------
# evaluation of pasting diagrams


def _hfold(S: StrictThreeCategory, vals: Sequence[str], unit: str) -> str:
    if not vals:
        return unit
    v = vals[0]
    for w in vals[1:]:
        v = S.hcomp[(w, v)]
    return v


def _vfold(S: StrictThreeCategory, vals: Sequence[str]) -> str:
    v = vals[0]
    for w in vals[1:]:
        v = S.vcomp[(w, v)]
    return v


def _evaluate(S: StrictThreeCategory, p: Row, leaf: Callable[[Cell2], str], ident: Callable[[str], str],
              order: str) -> str:
    """Shared evaluator; ``ident(f)`` gives the identity cell over the 1-cell ``f``."""
    x = p.objects[0]
    unit = ident(S.id1(x))
    if order == "columns":
        cols = [_vfold(S, [leaf(c) for c in col.cells]) if col.cells else ident(col.src.name) for col in p.cells]
        return _hfold(S, cols, unit)
    if order == "rows":
        h = max((len(col) for col in p.cells), default=0)
        if h == 0:
            return _hfold(S, [ident(col.src.name) for col in p.cells], unit)
        padded = [[leaf(c) for c in col.cells] + [ident(col.tgt.name)] * (h - len(col)) for col in p.cells]
        layers = [_hfold(S, [padded[i][j] for i in range(len(p.cells))], unit) for j in range(h)]
        return _vfold(S, layers)
    raise ValueError(f"unknown evaluation order {order!r}")


def _require_pd(S: StrictThreeCategory, p: Row) -> None:
    rep = validate_pd(S.graph, p)
    if not rep.ok:
        raise StructuralError(f"diagram is not over this 3-category: {rep}")


def evaluate_pd(S: StrictThreeCategory, p: Row, order: str = "columns", check: bool = True) -> str:
    """The composite 2-cell of a pasting diagram.

    ``columns`` composes each column vertically and then the results
    horizontally; ``rows`` pads columns with identities, composes each layer
    horizontally and then stacks the layers.
    """
    if check:
        _require_pd(S, p)
    return _evaluate(S, p, lambda c: c.elem, lambda f: S.id2[f], order)


def evaluate_pd_morphism(S: StrictThreeCategory, p: Row, ms: Sequence[str], order: str = "columns") -> str:
    """Composite 3-cell of a diagram morphism: ``ms`` lists one 3-cell per cell
    of ``p`` in column-major order."""
    _require_pd(S, p)
    if len(ms) != sum(len(col) for col in p.cells):
        raise StructuralError("one 3-cell per cell of the diagram is required")
    it = iter(ms)
    table = {(i, j): next(it) for i, col in enumerate(p.cells) for j in range(len(col))}
    # cells may repeat by value, so evaluate by position
    shaped = Row(p.objects, tuple(PathCell(col.vertices, tuple((i, j) for j in range(len(col))))
                                  for i, col in enumerate(p.cells)))
    return _evaluate_positions(S, shaped, table, order)


def _evaluate_positions(S, shaped: Row, table: Mapping, order: str) -> str:
    ident = lambda f: S.id3(S.id2[f])
    x = shaped.objects[0]
    unit = ident(S.id1(x))
    cols = shaped.cells
    if order == "columns":
        vals = [_vfold(S, [table[pos] for pos in col.cells]) if col.cells else ident(col.src.name) for col in cols]
        return _hfold(S, vals, unit)
    h = max((len(col) for col in cols), default=0)
    if h == 0:
        return _hfold(S, [ident(col.src.name) for col in cols], unit)
    padded = [[table[pos] for pos in col.cells] + [ident(col.tgt.name)] * (h - len(col)) for col in cols]
    return _vfold(S, [_hfold(S, [padded[i][j] for i in range(len(cols))], unit) for j in range(h)])


def composite_one_cell(S: StrictThreeCategory, P: PathCell) -> Edge:
    names = [e.name for e in P.cells]
    f = S.one_cells.comp_path(names, at=P.src) if names else S.id1(P.src)
    return S.edge(f)


def check_strict_algebra(S: StrictThreeCategory, bound: int = 3, max_len: int = 2,
                         outer_len: tuple[int, int] | None = None, cap: int = 200_000) -> ValidationReport:
    """Algebra laws for pd evaluation: unit, multiplication and order independence.

    Multiplication is checked on diagrams of diagrams; ``outer_len`` bounds
    the outer level (defaults to ``max_len`` both ways).
    """
    rep = ValidationReport(subject="strict algebra")
    memo: dict = {}

    def ev(p: Row, order: str = "columns") -> str:
        # distinct pds are few compared with the nestings that produce them
        key = (p, order)
        if key not in memo:
            memo[key] = evaluate_pd(S, p, order, check=False)
        return memo[key]

    for f, g in S.parallel_pairs():
        for a in S.homs[(f, g)].objects:
            c = S.cell(a)
            rep.expect(ev(t_unit(c)) == a, "unit", (a,))
        if f == g:
            empty = Row((S.one_cells.dom(f), S.one_cells.cod(f)), (PathCell((S.edge(f),), ()),))
            rep.expect(ev(empty) == S.id2[f], "unit", (f,), "identity column must evaluate to the identity")
    on1 = functools.lru_cache(maxsize=None)(lambda P: composite_one_cell(S, P))

    @functools.lru_cache(maxsize=None)
    def on2(q: Row) -> Cell2:
        return Cell2(on1(q.src), on1(q.tgt), ev(q))

    # both t_mult and t_map act column by column, so per-column results are
    # cached and reassembled; this is exact, not an approximation
    @functools.lru_cache(maxsize=None)
    def flat_column(col: PathCell, x, y) -> Row:
        return t_mult(Row((x, y), (col,)), check=False)

    @functools.lru_cache(maxsize=None)
    def mapped_column(col: PathCell) -> PathCell:
        return map_column(col, on1, on2)

    view = nested_t_view(S.graph, [(max_len, max_len), outer_len or (max_len, max_len)], cap)
    flats: dict = {}
    images: dict = {}
    for P, _ in view.all_two_cells(bound):
        try:
            obs = P.objects
            key = (obs, tuple(map(flat_column, P.cells, obs, obs[1:])))
            flat = flats.get(key)
            if flat is None:
                flat = flats[key] = row_flatten(Row(*key))
            lhs = ev(flat)
            key = (obs, tuple(map(mapped_column, P.cells)))
            rhs = images.get(key)
            if rhs is None:
                rhs = images[key] = ev(Row(*key))
        except (KeyError, StructuralError) as exc:
            rep.add("multiplication", (P,), f"composite undefined: {exc}")
            continue
        rep.expect(lhs == rhs, "multiplication", (P,), f"{lhs} ≠ {rhs}")
        try:
            rows = ev(flat, "rows")
        except KeyError as exc:
            rep.add("evaluation order", (flat,), f"composite undefined: {exc}")
            continue
        rep.expect(rows == lhs, "evaluation order", (flat,), f"{rows} ≠ {lhs}")
    return rep


# ---------------------------------------------------------------------------
# strict morphisms and ico-icons


@dataclass(frozen=True, eq=False)
class StrictMorphism:
    source: StrictThreeCategory
    target: StrictThreeCategory
    on1: FiniteFunctor
    on_homs: Mapping[tuple, FiniteFunctor]

    def obj(self, x: str) -> str:
        return self.on1.obj(x)

    def one(self, f: str) -> str:
        return self.on1(f)

    def cell(self, a: str) -> str:
        H = self.on_homs[self.source.hom_of(a)]
        return H.obj(a) if self.source.is_two_cell(a) else H(a)

    def key(self) -> tuple:
        return (self.on1.key(), tuple(sorted((k, F.key()) for k, F in self.on_homs.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, StrictMorphism) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def map_pd(self, p: Row) -> Row:
        T = self.target
        return Row(tuple(self.obj(x) for x in p.objects),
                   tuple(PathCell(tuple(T.edge(self.one(v.name)) for v in col.vertices),
                                  tuple(T.cell(self.cell(c.elem)) for c in col.cells)) for col in p.cells))


def identity_strict_morphism(S: StrictThreeCategory) -> StrictMorphism:
    from .base import identity_functor
    return StrictMorphism(S, S, identity_functor(S.one_cells), {k: identity_functor(H) for k, H in S.homs.items()})


def validate_strict_morphism(F: StrictMorphism) -> ValidationReport:
    S, T = F.source, F.target
    rep = ValidationReport(subject="strict morphism")
    rep.extend(validate_functor(F.on1), prefix="1-cells: ")
    for (f, g), Fh in F.on_homs.items():
        ok = Fh.source == S.homs[(f, g)] and Fh.target == T.homs.get((F.one(f), F.one(g)))
        rep.expect(ok, "hom component", (f, g))
        if ok:
            rep.extend(validate_functor(Fh), prefix=f"hom {f}=>{g}: ")
    rep.expect(set(F.on_homs) == set(S.homs), "hom component", (), "one component per hom")
    if not rep.ok:
        return rep
    for f in S.one_cells.morphisms:
        rep.expect(F.cell(S.id2[f]) == T.id2[F.one(f)], "identity 2-cells", (f,))
    for (b, a), c in S.vcomp.items():
        rep.expect(F.cell(c) == T.vcomp.get((F.cell(b), F.cell(a))), "vertical composition", (b, a))
    for (b, a), c in S.hcomp.items():
        rep.expect(F.cell(c) == T.hcomp.get((F.cell(b), F.cell(a))), "horizontal composition", (b, a))
    return rep


def enumerate_strict_morphisms(S: StrictThreeCategory, T: StrictThreeCategory, cap: int = DEFAULT_CAP
                               ) -> list[StrictMorphism]:
    out = []
    seen = 0
    keys = sorted(S.homs)
    for F1 in enumerate_functors(S.one_cells, T.one_cells, cap):
        pools = []
        for f, g in keys:
            tgt = T.homs.get((F1(f), F1(g)))
            pools.append(enumerate_functors(S.homs[(f, g)], tgt, cap) if tgt is not None else [])
        for combo in itertools.product(*pools):
            seen += 1
            if seen > cap:
                raise SearchTooLarge(f"more than {cap} candidate strict morphisms")
            F = StrictMorphism(S, T, F1, dict(zip(keys, combo)))
            if validate_strict_morphism(F).ok:
                out.append(F)
    return out


@dataclass(frozen=True, eq=False)
class IcoIcon:
    """Transformation between strict morphisms that agree on 0- and 1-cells:
    one 3-cell ``F(α) ⇛ G(α)`` per 2-cell ``α``."""

    F: StrictMorphism
    G: StrictMorphism
    components: Mapping[str, str]


def check_ico_icon(t: IcoIcon) -> ValidationReport:
    """Strict transcription: naturality in 3-cells and compatibility with both
    compositions of 2-cells and with identity 2-cells."""
    F, G = t.F, t.G
    S, T = F.source, F.target
    rep = ValidationReport(subject="ico-icon")
    rep.expect(F.on1 == G.on1, "equal on 1-cells", (), "ico-icons need equal 0- and 1-cell actions")
    if not rep.ok:
        return rep
    for (f, g), H in S.homs.items():
        TH = T.homs[(F.one(f), F.one(g))]
        for a in H.objects:
            m = t.components.get(a)
            rep.expect(m in TH.morphisms and TH.morphisms[m] == (F.cell(a), G.cell(a)), "component", (a,))
    if not rep.ok:
        return rep
    c = t.components
    for (f, g), H in S.homs.items():
        TH = T.homs[(F.one(f), F.one(g))]
        for m, (a, b) in H.morphisms.items():
            rep.expect(TH.comp(G.cell(m), c[a]) == TH.comp(c[b], F.cell(m)), "naturality", (m,))
    for (b, a), v in S.vcomp.items():
        if S.is_two_cell(a):
            rep.expect(T.vcomp.get((c[b], c[a])) == c[v], "vertical composition", (b, a))
    for (b, a), v in S.hcomp.items():
        if S.is_two_cell(a):
            rep.expect(T.hcomp.get((c[b], c[a])) == c[v], "horizontal composition", (b, a))
    for f in S.one_cells.morphisms:
        rep.expect(c[S.id2[f]] == T.id3(T.id2[F.one(f)]), "identity 2-cells", (f,))
    return rep


def identity_ico_icon(F: StrictMorphism) -> IcoIcon:
    S, T = F.source, F.target
    return IcoIcon(F, F, {a: T.id3(F.cell(a)) for H in S.homs.values() for a in H.objects})


def enumerate_ico_icons(F: StrictMorphism, G: StrictMorphism) -> list[IcoIcon]:
    if F.on1 != G.on1:
        return []
    S, T = F.source, F.target
    cells = sorted(a for H in S.homs.values() for a in H.objects)
    pools = []
    for a in cells:
        f, g = S.hom_of(a)
        TH = T.homs[(F.one(f), F.one(g))]
        pools.append(sorted(TH.hom(F.cell(a), G.cell(a))))
    out = []
    for combo in itertools.product(*pools):
        t = IcoIcon(F, G, dict(zip(cells, combo)))
        if check_ico_icon(t).ok:
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# hom-wise structure


def homwise_structure_check(X: TwoGraph, vertex_map: Mapping[str, str],
                            act: Callable[[tuple, PathCell], tuple], bound: int = 3,
                            max_len: int = 2) -> ValidationReport:
    """Check that a structure map on a graph of graphs is hom-wise.

    ``act((x, y), p)`` receives a path ``p`` of 2-cells in the hom-graph
    ``X(x, y)`` (vertices are 1-cells) and returns ``((x', y'), value)``.
    The map must be a bijection on objects that fixes each hom, and each
    hom's restriction must be an algebra for the free-category monad.
    """
    rep = ValidationReport(subject="hom-wise structure")
    V = list(X.vertices)
    images = [vertex_map.get(x) for x in V]
    rep.expect(sorted(map(str, images)) == sorted(map(str, V)) and len(set(images)) == len(V),
               "bijectivity", (), "structure map is not bijective on objects")
    for x in V:
        for y in V:
            ones = sorted(e for e, st in X.edges.items() if st == (x, y))
            step = lambda u, v: X.cells(u, v)
            for p in all_nested(ones, step, 1, bound, max_len):
                (xy, value) = act((x, y), p)
                ok = xy == (x, y) and value in X.cells(p.src, p.tgt)
                rep.expect(ok, "locality", (x, y, p), f"value {value!r} lands in hom {xy}")
            for f in ones:
                for g in ones:
                    for a in X.cells(f, g):
                        xy, v = act((x, y), PathCell((f, g), (a,)))
                        rep.expect(v == a, "algebra unit", (x, y, a))
            for P in all_nested(ones, step, 2, bound, max_len):
                try:
                    _, lhs = act((x, y), free_mult(P))
                    _, rhs = act((x, y), PathCell(P.vertices, tuple(act((x, y), q)[1] for q in P.cells)))
                except (KeyError, ValueError) as exc:
                    rep.add("algebra multiplication", (x, y, P), str(exc))
                    continue
                rep.expect(lhs == rhs, "algebra multiplication", (x, y, P))
    return rep


def strict3_homwise_action(S: StrictThreeCategory) -> Callable[[tuple, PathCell], tuple]:
    """Vertical composition read as a hom-wise structure map on ``S.graph``."""
    def act(xy: tuple, p: PathCell) -> tuple:
        if not p.cells:
            return xy, S.id2[p.src]
        return xy, _vfold(S, list(p.cells))
    return act


# ---------------------------------------------------------------------------
# fixtures


def _relabel(D: FiniteCategory, prefix: str) -> FiniteCategory:
    r = lambda s: f"{prefix}{s}"
    return FiniteCategory(
        tuple(r(x) for x in D.objects),
        {r(m): (r(d), r(c)) for m, (d, c) in D.morphisms.items()},
        {r(x): r(m) for x, m in D.identity.items()},
        {(r(g), r(f)): r(h) for (g, f), h in D.compose.items()},
        name=f"{prefix}{D.name}",
    )


def from_monoidal(K: FiniteCategory, D: FiniteCategory, tensor: Callable[[str, str], str], unit: str,
                  diagonal: bool = True, name: str = "") -> StrictThreeCategory:
    """Every hom ``(f, g)`` is a copy of ``D`` (only ``f == g`` if ``diagonal``),
    and both compositions of 2- and 3-cells are ``tensor``.

    The result is a strict 3-category exactly when ``tensor`` is a strictly
    associative, unital and commutative functor ``D×D → D``; otherwise the
    validator reports which law fails.
    """
    homs = {}
    pairs = [(f, g) for f in K.morphisms for g in K.morphisms if K.morphisms[f] == K.morphisms[g]]
    for f, g in pairs:
        if diagonal and f != g:
            homs[(f, g)] = FiniteCategory((), {}, {}, {})
        else:
            homs[(f, g)] = _relabel(D, f"{f}>{g}:")
    cells = list(D.objects) + list(D.morphisms)
    vcomp, hcomp = {}, {}
    for (f, g), (g2, h) in itertools.product(pairs, repeat=2):
        if g2 != g or not homs[(f, g)].objects or not homs[(g, h)].objects or (f, h) not in homs \
                or not homs[(f, h)].objects:
            continue
        for b in cells:
            for a in cells:
                if (b in D.objects) != (a in D.objects):
                    continue
                vcomp[(f"{g}>{h}:{b}", f"{f}>{g}:{a}")] = f"{f}>{h}:{tensor(b, a)}"
    for (f, g), (f2, g2) in itertools.product(pairs, repeat=2):
        if K.dom(f2) != K.cod(f) or not homs[(f, g)].objects or not homs[(f2, g2)].objects:
            continue
        fc, gc = K.comp(f2, f), K.comp(g2, g)
        if not homs[(fc, gc)].objects:
            continue
        for b in cells:
            for a in cells:
                if (b in D.objects) != (a in D.objects):
                    continue
                hcomp[(f"{f2}>{g2}:{b}", f"{f}>{g}:{a}")] = f"{fc}>{gc}:{tensor(b, a)}"
    id2 = {f: f"{f}>{f}:{unit}" for f in K.morphisms}
    return StrictThreeCategory(K, homs, vcomp, hcomp, id2, name=name)


def abelian_groupoid(n: int, m: int) -> tuple[FiniteCategory, Callable[[str, str], str], str]:
    """Skeletal groupoid with objects ``Z/n`` and automorphism groups ``Z/m``,
    tensored by addition. Morphisms are ``"a.s"``."""
    objs = tuple(str(a) for a in range(n))
    mors = {f"{a}.{s}": (str(a), str(a)) for a in range(n) for s in range(m)}
    ident = {str(a): f"{a}.0" for a in range(n)}
    comp = {(f"{a}.{s}", f"{a}.{t}"): f"{a}.{(s + t) % m}" for a in range(n) for s in range(m) for t in range(m)}
    D = FiniteCategory(objs, mors, ident, comp, name=f"Z{n}xZ{m}")

    def tensor(b: str, a: str) -> str:
        if "." in b:
            x, s = map(int, b.split("."))
            y, t = map(int, a.split("."))
            return f"{(x + y) % n}.{(s + t) % m}"
        return str((int(b) + int(a)) % n)

    return D, tensor, "0"


def terminal_strict3() -> StrictThreeCategory:
    D, t, u = abelian_groupoid(1, 1)
    return from_monoidal(terminal(), D, t, u, name="terminal")


def locally_discrete(K: FiniteCategory) -> StrictThreeCategory:
    D, t, u = abelian_groupoid(1, 1)
    return from_monoidal(K, D, t, u, name=f"locally discrete {K.name}".strip())


def doubly_degenerate(n: int, m: int) -> StrictThreeCategory:
    D, t, u = abelian_groupoid(n, m)
    return from_monoidal(terminal(), D, t, u, name=f"doubly degenerate Z{n}xZ{m}")


def small_fixtures() -> list[StrictThreeCategory]:
    """A family of small strict 3-categories used by tests and the CLI."""
    from .base import cyclic_group, walking_arrow
    out = [terminal_strict3(), locally_discrete(walking_arrow()), doubly_degenerate(2, 1),
           doubly_degenerate(3, 1), doubly_degenerate(2, 2)]
    D, t, u = abelian_groupoid(1, 2)
    out.append(from_monoidal(walking_arrow(), D, t, u, name="two objects, Z2 3-cells"))
    D, t, u = abelian_groupoid(2, 1)
    out.append(from_monoidal(cyclic_group(2), D, t, u, diagonal=False, name="Z2 1-cells, all homs Z2"))
    return out


__all__ = [
    "EnrichedCategory", "category_as_enriched", "monoidal_as_enriched", "validate_enriched",
    "check_gamma_algebra", "validate_enriched_functor", "enumerate_enriched_functors", "Icon", "check_icon",
    "enumerate_icons", "StrictThreeCategory", "validate_strict3", "evaluate_pd", "evaluate_pd_morphism",
    "composite_one_cell", "check_strict_algebra", "StrictMorphism", "identity_strict_morphism",
    "validate_strict_morphism", "enumerate_strict_morphisms", "IcoIcon", "check_ico_icon", "identity_ico_icon",
    "enumerate_ico_icons", "homwise_structure_check", "strict3_homwise_action", "from_monoidal",
    "abelian_groupoid", "terminal_strict3", "locally_discrete", "doubly_degenerate", "small_fixtures",
]
