"""Graphs enriched in the base, their morphisms and 2-cells, and 2-graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .base import (
    DEFAULT_CAP,
    BaseObject,
    FinSet,
    FiniteCategory,
    FiniteFunctor,
    FiniteNatTrans,
    base_coproduct,
    base_empty,
    base_from_json,
    base_hom,
    base_kind,
    base_product,
    base_terminal,
    compose_functors,
    discrete,
    elements,
    identity_functor,
    identity_nat,
    size,
    terminal,
    validate_functor,
    validate_nat_trans,
)
from .report import SearchTooLarge, StructuralError, ValidationReport


def _key(x: str, y: str) -> str:
    return f"{x}|{y}"


def _split(key: str) -> tuple[str, str]:
    a, b = key.split("|")
    return a, b


@dataclass(frozen=True, eq=False)
class WGraph:
    """A vertex set with a base object ``hom[(x, y)]`` for every ordered pair."""

    vertices: tuple
    hom: Mapping[tuple, BaseObject]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "hom", {tuple(k): v for k, v in self.hom.items()})
        missing = [(x, y) for x in self.vertices for y in self.vertices if (x, y) not in self.hom]
        if missing:
            raise StructuralError(f"hom undefined on {missing[:3]}")
        extra = set(self.hom) - {(x, y) for x in self.vertices for y in self.vertices}
        if extra:
            raise StructuralError(f"hom defined on unknown vertices {sorted(extra)[:3]}")
        kinds = {base_kind(h) for h in self.hom.values()}
        if len(kinds) > 1:
            raise StructuralError("mixed set- and category-valued homs")

    @property
    def kind(self) -> str:
        return next((base_kind(h) for h in self.hom.values()), "set")

    def __call__(self, x: str, y: str) -> BaseObject:
        return self.hom[(x, y)]

    def key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted((k, _obj_key(v)) for k, v in self.hom.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WGraph) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices),
                "hom": {_key(x, y): h.to_json() for (x, y), h in sorted(self.hom.items())}}

    @classmethod
    def from_json(cls, doc: Mapping) -> "WGraph":
        try:
            return cls(tuple(doc["vertices"]),
                       {_split(k): base_from_json(v) for k, v in doc["hom"].items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"bad graph document: {exc}") from exc


def _obj_key(X: BaseObject):
    return ("set", X.elements) if isinstance(X, FinSet) else ("cat", X.key())


def graph_from_edges(vertices, edges: Mapping[tuple, int | list], kind: str = "set") -> WGraph:
    """Convenience constructor: ``edges[(x, y)]`` lists (or counts) the arrows x -> y.

    For ``kind == "cat"`` the hom-objects are discrete categories.
    """
    hom = {}
    for x in vertices:
        for y in vertices:
            els = edges.get((x, y), [])
            if isinstance(els, int):
                els = [f"{x}{y}{i}" for i in range(els)]
            hom[(x, y)] = FinSet(tuple(els)) if kind == "set" else discrete(els)
    return WGraph(tuple(vertices), hom)


# ---------------------------------------------------------------------------
# morphisms and 2-cells


@dataclass(frozen=True, eq=False)
class WGraphMorphism:
    """A vertex map ``f0`` plus one base morphism per ordered pair.

    Set-valued homs take plain dicts as components, category-valued homs
    take :class:`FiniteFunctor` instances.
    """

    source: WGraph
    target: WGraph
    f0: Mapping[str, str]
    components: Mapping[tuple, object]

    def component(self, x: str, y: str):
        return self.components[(x, y)]

    def key(self) -> tuple:
        def ck(c):
            return c.key() if isinstance(c, FiniteFunctor) else tuple(sorted(c.items()))
        return (tuple(sorted(self.f0.items())), tuple(sorted((k, ck(c)) for k, c in self.components.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WGraphMorphism) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def identity_morphism(A: WGraph) -> WGraphMorphism:
    comps = {}
    for (x, y), h in A.hom.items():
        comps[(x, y)] = identity_functor(h) if isinstance(h, FiniteCategory) else {e: e for e in h.elements}
    return WGraphMorphism(A, A, {x: x for x in A.vertices}, comps)


def compose_morphisms(g: WGraphMorphism, f: WGraphMorphism) -> WGraphMorphism:
    comps = {}
    for (x, y), c in f.components.items():
        d = g.components[(f.f0[x], f.f0[y])]
        comps[(x, y)] = compose_functors(d, c) if isinstance(c, FiniteFunctor) else {e: d[c[e]] for e in c}
    return WGraphMorphism(f.source, g.target, {x: g.f0[f.f0[x]] for x in f.source.vertices}, comps)


def validate_morphism(f: WGraphMorphism) -> ValidationReport:
    A, B = f.source, f.target
    rep = ValidationReport(subject="graph morphism")
    for x in A.vertices:
        rep.expect(f.f0.get(x) in B.vertices, "vertex map", (x,))
    if not rep.ok:
        return rep
    for x in A.vertices:
        for y in A.vertices:
            c = f.components.get((x, y))
            src, tgt = A(x, y), B(f.f0[x], f.f0[y])
            if isinstance(src, FiniteCategory):
                ok = isinstance(c, FiniteFunctor) and c.source == src and c.target == tgt
                rep.expect(ok, "component type", (x, y))
                if ok:
                    rep.extend(validate_functor(c), prefix=f"component {x},{y}: ")
            else:
                ok = isinstance(c, Mapping) and set(c) == set(src.elements) and \
                    all(v in tgt.elements for v in c.values())
                rep.expect(ok, "component", (x, y))
    return rep


@dataclass(frozen=True, eq=False)
class WGraphTwoCell:
    """A 2-cell ``f => g``: equal vertex maps plus a base 2-cell per pair."""

    source: WGraphMorphism
    target: WGraphMorphism
    components: Mapping[tuple, FiniteNatTrans | None]


def identity_two_cell(f: WGraphMorphism) -> WGraphTwoCell:
    comps = {k: identity_nat(c) if isinstance(c, FiniteFunctor) else None for k, c in f.components.items()}
    return WGraphTwoCell(f, f, comps)


def validate_two_cell(alpha: WGraphTwoCell) -> ValidationReport:
    f, g = alpha.source, alpha.target
    rep = ValidationReport(subject="graph 2-cell")
    rep.expect(dict(f.f0) == dict(g.f0), "(1) equal vertex maps", (),
               "source and target differ on vertices")
    if not rep.ok:
        return rep
    for (x, y), c in f.components.items():
        comp = alpha.components.get((x, y))
        if isinstance(c, FiniteFunctor):
            ok = isinstance(comp, FiniteNatTrans) and comp.source == c and comp.target == g.components[(x, y)]
            rep.expect(ok, "(2) component", (x, y), "missing or mis-typed component")
            if ok:
                sub = validate_nat_trans(comp)
                for v in sub.violations:
                    rep.add(f"(2) {v.law}", (x, y) + v.location, v.detail)
                rep.checked += sub.checked
        else:
            # set-valued homs are locally discrete: only identities
            rep.expect(c == g.components[(x, y)], "(2) component", (x, y), "non-identity 2-cell of sets")
    return rep


# ---------------------------------------------------------------------------
# hom-objects of the category of graphs


def graph_hom_object(A: WGraph, B: WGraph, cap: int = DEFAULT_CAP) -> BaseObject:
    """Sum over vertex maps ``f0`` of the product of internal homs.

    Summands are tagged by ``f0``; for category-valued graphs the result is
    a category whose objects are graph morphisms and morphisms are 2-cells.
    """
    kind = A.kind if A.hom else B.kind
    n_maps = len(B.vertices) ** len(A.vertices)
    if n_maps > cap:
        raise SearchTooLarge(f"{n_maps} vertex maps exceed cap {cap}")
    total = base_empty(kind)
    for img in itertools.product(B.vertices, repeat=len(A.vertices)):
        f0 = dict(zip(A.vertices, img))
        summand = base_terminal(kind)
        for x in A.vertices:
            for y in A.vertices:
                summand = base_product(summand, base_hom(A(x, y), B(f0[x], f0[y]), cap))
        total = base_coproduct(total, summand)
    return total


def graph_hom_count(A: WGraph, B: WGraph, cap: int = DEFAULT_CAP) -> int:
    return size(graph_hom_object(A, B, cap))


def enumerate_morphisms(A: WGraph, B: WGraph, cap: int = DEFAULT_CAP) -> list[WGraphMorphism]:
    """Explicit graph morphisms ``A -> B`` (objects of the hom-object)."""
    from .base import enumerate_functors, set_functions

    out = []
    pairs = [(x, y) for x in A.vertices for y in A.vertices]
    for img in itertools.product(B.vertices, repeat=len(A.vertices)):
        f0 = dict(zip(A.vertices, img))
        choices = []
        for x, y in pairs:
            src, tgt = A(x, y), B(f0[x], f0[y])
            if isinstance(src, FiniteCategory):
                choices.append(enumerate_functors(src, tgt, cap))
            else:
                choices.append(set_functions(src, tgt))
        for combo in itertools.product(*choices):
            out.append(WGraphMorphism(A, B, f0, dict(zip(pairs, combo))))
            if len(out) > cap:
                raise SearchTooLarge(f"more than {cap} graph morphisms")
    return out


# ---------------------------------------------------------------------------
# base endofunctors and their action on graphs


@dataclass(frozen=True)
class BaseFunctor:
    """A functor between bases, acting on base objects and base morphisms.

    ``on_morphism(h, X, Y)`` maps ``h: X -> Y`` to ``F(h): F(X) -> F(Y)``.
    """

    name: str
    on_object: Callable[[BaseObject], BaseObject] = field(compare=False)
    on_morphism: Callable[[object, BaseObject, BaseObject], object] = field(compare=False)

    def then(self, other: "BaseFunctor") -> "BaseFunctor":
        """``other ∘ self``."""
        return BaseFunctor(
            f"{other.name}∘{self.name}",
            lambda X: other.on_object(self.on_object(X)),
            lambda h, X, Y: other.on_morphism(self.on_morphism(h, X, Y), self.on_object(X), self.on_object(Y)),
        )


def identity_base_functor() -> BaseFunctor:
    return BaseFunctor("id", lambda X: X, lambda h, X, Y: h)


def constant_terminal_functor() -> BaseFunctor:
    def obj(X):
        return base_terminal(base_kind(X))

    def mor(h, X, Y):
        return identity_functor(terminal()) if isinstance(X, FiniteCategory) else {"*": "*"}
    return BaseFunctor("const1", obj, mor)


def opposite_functor() -> BaseFunctor:
    """Category-valued only: ``X ↦ X^op``; sets are fixed."""
    from .base import opposite

    def obj(X):
        return opposite(X) if isinstance(X, FiniteCategory) else X

    def mor(h, X, Y):
        if not isinstance(h, FiniteFunctor):
            return h
        return FiniteFunctor(opposite(X), opposite(Y), dict(h.on_objects), dict(h.on_morphisms))
    return BaseFunctor("op", obj, mor)


def objects_functor() -> BaseFunctor:
    """``X ↦`` the discrete category on the objects of ``X``."""
    def obj(X):
        return discrete(elements(X)) if isinstance(X, FiniteCategory) else X

    def mor(h, X, Y):
        if not isinstance(h, FiniteFunctor):
            return h
        return FiniteFunctor(discrete(X.objects), discrete(Y.objects), dict(h.on_objects),
                             {f"1_{x}": f"1_{h.obj(x)}" for x in X.objects})
    return BaseFunctor("ob", obj, mor)


class GraphFunctor:
    """``G(F)``: identity on vertices, ``F`` on hom-objects."""

    def __init__(self, F: BaseFunctor) -> None:
        self.F = F

    def graph(self, A: WGraph) -> WGraph:
        return WGraph(A.vertices, {k: self.F.on_object(h) for k, h in A.hom.items()})

    def morphism(self, f: WGraphMorphism) -> WGraphMorphism:
        comps = {(x, y): self.F.on_morphism(c, f.source(x, y), f.target(f.f0[x], f.f0[y]))
                 for (x, y), c in f.components.items()}
        return WGraphMorphism(self.graph(f.source), self.graph(f.target), dict(f.f0), comps)

    def two_cell(self, alpha: WGraphTwoCell) -> WGraphTwoCell:
        """Only identity 2-cells are transported (enough for functoriality checks)."""
        f = self.morphism(alpha.source)
        return identity_two_cell(f)


def apply_G(F: BaseFunctor) -> GraphFunctor:
    return GraphFunctor(F)


def coproduct_graph(A: WGraph, B: WGraph) -> WGraph:
    """Disjoint union; homs between the two parts are empty."""
    kind = A.kind if A.hom else B.kind
    verts = tuple(f"l.{x}" for x in A.vertices) + tuple(f"r.{y}" for y in B.vertices)
    hom = {}
    for u in verts:
        for v in verts:
            if u[0] != v[0]:
                hom[(u, v)] = base_empty(kind)
            else:
                G = A if u[0] == "l" else B
                hom[(u, v)] = G(u[2:], v[2:])
    return WGraph(verts, hom)


def tensor(A: WGraph, B: WGraph) -> WGraph:
    """``(A⊗B)_0 = A_0×B_0`` with homs ``A(x,x')×B(y,y')``."""
    verts = tuple(f"({x},{y})" for x in A.vertices for y in B.vertices)
    hom = {}
    for x in A.vertices:
        for y in B.vertices:
            for x2 in A.vertices:
                for y2 in B.vertices:
                    hom[(f"({x},{y})", f"({x2},{y2})")] = base_product(A(x, x2), B(y, y2))
    return WGraph(verts, hom)


# ---------------------------------------------------------------------------
# 2-graphs


@dataclass(frozen=True, eq=False)
class TwoGraph:
    """A directed graph ``edges ⇉ vertices`` with a base object per parallel pair."""

    vertices: tuple
    edges: Mapping[str, tuple]
    hom: Mapping[tuple, BaseObject]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", {e: tuple(st) for e, st in self.edges.items()})
        object.__setattr__(self, "hom", {tuple(k): v for k, v in self.hom.items()})
        vs = set(self.vertices)
        for e, (s, t) in self.edges.items():
            if s not in vs or t not in vs:
                raise StructuralError(f"edge {e} has dangling endpoint")
        parallel = {(f, g) for f in self.edges for g in self.edges if self.edges[f] == self.edges[g]}
        if set(self.hom) != parallel:
            bad = sorted(set(self.hom) ^ parallel)[:3]
            raise StructuralError(f"hom must be defined exactly on parallel pairs; offending {bad}")

    def src(self, e: str) -> str:
        return self.edges[e][0]

    def tgt(self, e: str) -> str:
        return self.edges[e][1]

    def edges_from(self, x: str) -> list[str]:
        return sorted(e for e, (s, _) in self.edges.items() if s == x)

    def parallel(self, f: str) -> list[str]:
        return sorted(g for g in self.edges if self.edges[g] == self.edges[f])

    def cells(self, f: str, g: str) -> tuple:
        """Elements of ``A(f, g)`` (objects when category-valued)."""
        h = self.hom.get((f, g))
        return elements(h) if h is not None else ()

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [{"id": e, "src": s, "tgt": t} for e, (s, t) in sorted(self.edges.items())],
            "hom": {_key(f, g): h.to_json() for (f, g), h in sorted(self.hom.items())},
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "TwoGraph":
        try:
            edges = {e["id"]: (e["src"], e["tgt"]) for e in doc["edges"]}
            hom = {_split(k): base_from_json(v) for k, v in doc["hom"].items()}
            return cls(tuple(doc["vertices"]), edges, hom)
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"bad 2-graph document: {exc}") from exc


def two_graph(vertices, edges: Mapping[str, tuple], cells: Mapping[tuple, object] | None = None,
              kind: str = "cat") -> TwoGraph:
    """Build a 2-graph; unlisted parallel pairs get an empty hom.

    ``cells[(f, g)]`` may be a base object, a list of element names or a count.
    """
    cells = cells or {}
    hom = {}
    for f, (s, t) in edges.items():
        for g, (s2, t2) in edges.items():
            if (s, t) != (s2, t2):
                continue
            c = cells.get((f, g), [])
            if isinstance(c, (FinSet, FiniteCategory)):
                hom[(f, g)] = c
                continue
            if isinstance(c, int):
                c = [f"{f}{g}{i}" for i in range(c)]
            hom[(f, g)] = FinSet(tuple(c)) if kind == "set" else discrete(c)
    return TwoGraph(tuple(vertices), dict(edges), hom)
