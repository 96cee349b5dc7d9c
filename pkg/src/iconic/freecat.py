"""The free enriched category monad on graphs: paths, unit, flattening.

Hom-objects of the free category are infinite on cyclic graphs, so every
enumeration and law check here is bounded by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterator, Mapping, Sequence

from .base import FiniteCategory, elements
from .report import ValidationReport
from .wgraph import WGraph, WGraphMorphism


@dataclass(frozen=True)
class PathCell:
    """A path ``z0 -> z1 -> ... -> zn`` with one hom element per step.

    ``vertices`` has ``len(cells) + 1`` entries; the empty path at ``x``
    is ``PathCell((x,), ())``. Cells may themselves be paths, which is how
    nested (free-on-free) elements are represented.
    """

    vertices: tuple
    cells: tuple = ()

    def __post_init__(self) -> None:
        if type(self.vertices) is not tuple:
            object.__setattr__(self, "vertices", tuple(self.vertices))
        if type(self.cells) is not tuple:
            object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.vertices) != len(self.cells) + 1:
            raise ValueError("a path needs exactly one more vertex than cells")

    def __hash__(self) -> int:
        # paths are used heavily as dictionary keys; cache the hash
        h = self.__dict__.get("_hash")
        if h is None:
            h = self.__dict__["_hash"] = hash((self.vertices, self.cells))
        return h

    @property
    def src(self) -> Hashable:
        return self.vertices[0]

    @property
    def tgt(self) -> Hashable:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.cells)

    def steps(self) -> Iterator[tuple]:
        for i, c in enumerate(self.cells):
            yield self.vertices[i], self.vertices[i + 1], c

    def sort_key(self) -> tuple:
        return (len(self.cells), tuple((str(v), _sort_key(c)) for v, c in zip(self.vertices[1:], self.cells)),
                str(self.vertices[0]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "cells": [c.to_json() if isinstance(c, PathCell) else c for c in self.cells]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "PathCell":
        cells = tuple(cls.from_json(c) if isinstance(c, dict) else c for c in doc["cells"])
        return cls(tuple(doc["vertices"]), cells)

    def __repr__(self) -> str:
        if not self.cells:
            return f"[]@{self.src}"
        return "[" + ", ".join(map(repr, self.cells)) + "]"


def _sort_key(c) -> tuple:
    return c.sort_key() if isinstance(c, PathCell) else (0, str(c))


def empty_path(x: Hashable) -> PathCell:
    return PathCell((x,), ())


def free_unit(A: WGraph | None, x: Hashable, y: Hashable, e) -> PathCell:
    """The length-one path ``[e]`` for ``e`` in ``A(x, y)``."""
    if A is not None and e not in elements(A(x, y)):
        raise ValueError(f"{e!r} is not an element of A({x}, {y})")
    return PathCell((x, y), (e,))


def free_mult(p: PathCell) -> PathCell:
    """Flatten a path of paths by concatenation."""
    vs = p.vertices
    verts = [vs[0]]
    cells: list = []
    for i, inner in enumerate(p.cells):
        if not isinstance(inner, PathCell) or inner.vertices[0] != vs[i] or inner.vertices[-1] != vs[i + 1]:
            raise ValueError(f"inner path {inner!r} does not run {vs[i]} -> {vs[i + 1]}")
        verts.extend(inner.vertices[1:])
        cells.extend(inner.cells)
    return PathCell(tuple(verts), tuple(cells))


def nest(inner: Sequence[PathCell], at: Hashable | None = None) -> PathCell:
    """Outer path whose cells are the given composable paths."""
    if not inner:
        if at is None:
            raise ValueError("empty nesting needs a vertex")
        return empty_path(at)
    verts = [inner[0].src]
    for q in inner:
        if q.src != verts[-1]:
            raise ValueError("non-composable paths")
        verts.append(q.tgt)
    return PathCell(tuple(verts), tuple(inner))


def map_cells(p: PathCell, f: Callable, fv: Callable | None = None) -> PathCell:
    """Apply ``f`` to every cell (and ``fv`` to vertices): the functor action."""
    fv = fv or (lambda v: v)
    return PathCell(tuple(fv(v) for v in p.vertices), tuple(f(c) for c in p.cells))


# ---------------------------------------------------------------------------
# enumeration


StepFn = Callable[[Hashable, Hashable], Sequence]


def walks(vertices: Sequence, step: StepFn, x, y, max_len: int) -> list[PathCell]:
    """All paths ``x -> y`` of length at most ``max_len``, canonically ordered."""
    out: list[PathCell] = []
    frontier = [((x,), ())]
    for n in range(max_len + 1):
        out.extend(PathCell(vs, cs) for vs, cs in frontier if vs[-1] == y)
        if n == max_len:
            break
        nxt = []
        for vs, cs in frontier:
            for v in vertices:
                for e in step(vs[-1], v):
                    nxt.append((vs + (v,), cs + (e,)))
        frontier = nxt
    return sorted(out, key=PathCell.sort_key)


def graph_step(A: WGraph) -> StepFn:
    return lambda u, v: elements(A(u, v))


def enumerate_paths(A: WGraph, x, y, max_len: int) -> list[PathCell]:
    return walks(A.vertices, graph_step(A), x, y, max_len)


class FreeCategoryView:
    """Lazy bounded view of the free category on a graph."""

    def __init__(self, A: WGraph) -> None:
        self.graph = A

    def hom(self, x, y, max_len: int) -> list[PathCell]:
        return enumerate_paths(self.graph, x, y, max_len)

    def identity(self, x) -> PathCell:
        return empty_path(x)

    def compose(self, q: PathCell, p: PathCell) -> PathCell:
        """``q∘p``: ``p`` first."""
        return free_mult(nest([p, q]))

    def two_cells(self, p: PathCell, q: PathCell) -> list[tuple]:
        """Morphisms ``p => q`` for category-valued graphs: tuples of hom morphisms.

        Empty unless ``p`` and ``q`` have the same length and vertices.
        """
        if p.vertices != q.vertices:
            return []
        choices: list[list] = [[]]
        for (u, v, a), (_, _, b) in zip(p.steps(), q.steps()):
            h = self.graph(u, v)
            ms = h.hom(a, b) if isinstance(h, FiniteCategory) else ([a] if a == b else [])
            choices = [c + [m] for c in choices for m in sorted(ms)]
        return [tuple(c) for c in choices]


def nested_elements(vertices: Sequence, step: StepFn, depth: int, bound: int,
                    max_len: int | None = None) -> Callable:
    """Enumerator for elements of the ``depth``-fold free construction.

    ``bound`` limits the number of leaf cells (the length after full
    flattening); ``max_len`` limits the length of every path at every level,
    which keeps nestings of empty paths finite. Returns
    ``f(x, y) -> list[(element, leaves)]``.
    """
    max_len = bound if max_len is None else max_len

    @lru_cache(maxsize=None)
    def level(d: int, x, y, budget: int) -> tuple:
        if d == 0:
            return tuple((e, 1) for e in step(x, y)) if budget >= 1 else ()
        out = []

        def extend(vs, cs, used):
            if vs[-1] == y:
                out.append((PathCell(vs, cs), used))
            if len(cs) == max_len:
                return
            for v in vertices:
                for e, s in level(d - 1, vs[-1], v, budget - used):
                    extend(vs + (v,), cs + (e,), used + s)

        extend((x,), (), 0)
        return tuple(out)

    def get(x, y) -> list:
        return list(level(depth, x, y, bound))

    return get


def all_nested(vertices: Sequence, step: StepFn, depth: int, bound: int,
               max_len: int | None = None) -> list[PathCell]:
    f = nested_elements(vertices, step, depth, bound, max_len)
    out = [p for x in vertices for y in vertices for p, _ in f(x, y)]
    return sorted(out, key=PathCell.sort_key)


# ---------------------------------------------------------------------------
# monad laws


def check_monad_laws_free(A: WGraph, bound: int, flatten: Callable[[PathCell], PathCell] = free_mult,
                          max_len: int = 2) -> ValidationReport:
    """Unit and associativity of flattening on nestings with at most ``bound``
    cells in total and at most ``max_len`` steps per level.

    ``flatten`` is a test hook for injecting a faulty multiplication.
    """
    rep = ValidationReport(subject="free category monad")
    step = graph_step(A)
    for p in all_nested(A.vertices, step, 1, bound):
        wrapped = PathCell(p.vertices, tuple(PathCell((u, v), (c,)) for u, v, c in p.steps()))
        rep.expect(flatten(wrapped) == p, "right unit", (p,), "μ∘Γη ≠ 1")
        rep.expect(flatten(PathCell((p.src, p.tgt), (p,))) == p, "left unit", (p,), "μ∘ηΓ ≠ 1")
    # middle paths are shared between nestings, so their flattenings are cached
    inner = lru_cache(maxsize=None)(flatten)
    f = nested_elements(A.vertices, step, 3, bound, max_len)
    for x in A.vertices:
        for y in A.vertices:
            for P, _ in f(x, y):
                lhs = flatten(flatten(P))
                rhs = flatten(PathCell(P.vertices, tuple(map(inner, P.cells))))
                if lhs != rhs:
                    rep.add("associativity", (P,), f"{lhs!r} ≠ {rhs!r}")
                rep.checked += 1
    return rep


# ---------------------------------------------------------------------------
# colax monoidal structure


def tensor_step(A: WGraph, B: WGraph) -> StepFn:
    """Steps of ``A⊗B`` with vertices and cells as pairs."""
    return lambda u, v: [(a, b) for a in elements(A(u[0], v[0])) for b in elements(B(u[1], v[1]))]


def tensor_vertices(A: WGraph, B: WGraph) -> list[tuple]:
    return [(x, y) for x in A.vertices for y in B.vertices]


def colax_rearrange(p: PathCell) -> tuple[PathCell, PathCell]:
    """Split a path of pairs into the pair of its projections (equal lengths)."""
    pa = PathCell(tuple(v[0] for v in p.vertices), tuple(c[0] for c in p.cells))
    pb = PathCell(tuple(v[1] for v in p.vertices), tuple(c[1] for c in p.cells))
    return pa, pb


def rearrange_preimage(pa: PathCell, pb: PathCell) -> PathCell | None:
    """The unique path of pairs projecting to ``(pa, pb)``, or ``None``.

    Only pairs of equal length are hit, so the rearrangement is not onto.
    """
    if len(pa) != len(pb):
        return None
    return PathCell(tuple(zip(pa.vertices, pb.vertices)), tuple(zip(pa.cells, pb.cells)))


def _map_graph_morphism(f: WGraphMorphism) -> Callable[[PathCell], PathCell]:
    def go(p: PathCell) -> PathCell:
        cells = []
        for u, v, c in p.steps():
            comp = f.components[(u, v)]
            cells.append(comp.obj(c) if hasattr(comp, "obj") else comp[c])
        return PathCell(tuple(f.f0[v] for v in p.vertices), tuple(cells))
    return go


def map_path(f: WGraphMorphism, p: PathCell) -> PathCell:
    """``Γ(f)`` on a path."""
    return _map_graph_morphism(f)(p)


def check_colax(A: WGraph, B: WGraph, bound: int, max_len: int = 2,
                morphisms: Sequence[tuple[WGraphMorphism, WGraphMorphism]] = (),
                rearrange: Callable = colax_rearrange) -> ValidationReport:
    """Colax monoidal-functor axioms for the rearrangement map within ``bound``.

    Checks compatibility with units and multiplications and naturality along
    each pair ``(f, g)`` of graph morphisms out of ``A`` and ``B``.
    """
    rep = ValidationReport(subject="colax rearrangement")
    verts = tensor_vertices(A, B)
    step = tensor_step(A, B)
    for u in verts:
        rep.expect(rearrange(empty_path(u)) == (empty_path(u[0]), empty_path(u[1])), "unit (empty)", (u,))
        for v in verts:
            for c in step(u, v):
                got = rearrange(PathCell((u, v), (c,)))
                want = (PathCell((u[0], v[0]), (c[0],)), PathCell((u[1], v[1]), (c[1],)))
                rep.expect(got == want, "unit", (u, v, c))
    for P in all_nested(verts, step, 2, bound, max_len):
        lhs = rearrange(free_mult(P))
        outer = PathCell(P.vertices, tuple(rearrange(c) for c in P.cells))
        PA, PB = rearrange(outer)
        rhs = (free_mult(PA), free_mult(PB))
        rep.expect(lhs == rhs, "multiplication", (P,), f"{lhs!r} ≠ {rhs!r}")
    for f, g in morphisms:
        fa, gb = _map_graph_morphism(f), _map_graph_morphism(g)
        for p in all_nested(verts, step, 1, bound):
            image = PathCell(tuple((f.f0[x], g.f0[y]) for x, y in p.vertices),
                             tuple((fa(PathCell((u[0], v[0]), (c[0],))).cells[0],
                                    gb(PathCell((u[1], v[1]), (c[1],))).cells[0])
                                   for u, v, c in p.steps()))
            pa, pb = rearrange(p)
            rep.expect(rearrange(image) == (fa(pa), gb(pb)), "naturality", (p,))
    return rep


def non_surjectivity_witness(A: WGraph, B: WGraph, max_len: int = 2) -> tuple[PathCell, PathCell] | None:
    """A pair of paths of different lengths (hence with no preimage)."""
    for x in A.vertices:
        for y in B.vertices:
            for pa in enumerate_paths(A, x, x, max_len):
                for pb in enumerate_paths(B, y, y, max_len):
                    if rearrange_preimage(pa, pb) is None:
                        return pa, pb
    return None


def path_count(A: WGraph, x, y, max_len: int) -> int:
    return len(enumerate_paths(A, x, y, max_len))


__all__ = [
    "PathCell", "empty_path", "free_unit", "free_mult", "nest", "map_cells", "walks",
    "enumerate_paths", "FreeCategoryView", "nested_elements", "all_nested",
    "check_monad_laws_free", "colax_rearrange", "rearrange_preimage", "check_colax",
    "non_surjectivity_witness", "map_path", "tensor_step", "tensor_vertices", "path_count",
]
