"""Globular 2-dimensional pasting diagrams and the composite monad on 2-graphs.

Cells are stored generically so the same code handles nested diagrams:

* a 1-cell is anything with ``src``/``tgt`` 0-cells (an :class:`Edge`, or a
  :class:`~iconic.freecat.PathCell` of 1-cells for horizontal composites);
* a 2-cell is anything with ``src``/``tgt`` 1-cells (a :class:`Cell2` leaf,
  a vertical :class:`~iconic.freecat.PathCell` of 2-cells, or a :class:`Row`).

``R`` is the vertical free monad (columns), ``S`` the horizontal one (rows).
A pasting diagram is a row of columns; a rectangular one is a column of rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from .base import FiniteCategory
from .freecat import PathCell, free_mult, walks
from .report import SearchTooLarge, StructuralError, ValidationReport
from .wgraph import TwoGraph

DEFAULT_CAP = 200_000


@dataclass(frozen=True)
class Edge:
    name: str
    src: Hashable
    tgt: Hashable

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Cell2:
    """A generating 2-cell ``elem ∈ A(src, tgt)``."""

    src: Edge
    tgt: Edge
    elem: str

    def __repr__(self) -> str:
        return self.elem


@dataclass(frozen=True)
class Row:
    """Horizontal composite of 2-cells ``cells[i]`` sitting over ``objects[i] -> objects[i+1]``."""

    objects: tuple
    cells: tuple = ()

    def __post_init__(self) -> None:
        if type(self.objects) is not tuple:
            object.__setattr__(self, "objects", tuple(self.objects))
        if type(self.cells) is not tuple:
            object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.objects) != len(self.cells) + 1:
            raise ValueError("a row needs one more object than cells")

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = self.__dict__["_hash"] = hash((self.objects, self.cells))
        return h

    @property
    def src(self) -> PathCell:
        return PathCell(self.objects, tuple(c.src for c in self.cells))

    @property
    def tgt(self) -> PathCell:
        return PathCell(self.objects, tuple(c.tgt for c in self.cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        return "<" + " | ".join(map(repr, self.cells)) + ">" if self.cells else f"<>@{self.objects[0]}"


Column = PathCell
TwoPd = Row  # a row of columns of Cell2
RectangularPd = PathCell  # a column of rows of Cell2


def column(cells: Sequence, at=None) -> PathCell:
    """Vertical composite of composable 2-cells (identity at ``at`` if empty)."""
    if not cells:
        return PathCell((at,), ())
    return PathCell((cells[0].src,) + tuple(c.tgt for c in cells), tuple(cells))


def row(cells: Sequence, at=None) -> Row:
    if not cells:
        return Row((at,), ())
    return Row((cells[0].src.src,) + tuple(c.src.tgt for c in cells), tuple(cells))


def one_path(edges: Sequence, at=None) -> PathCell:
    if not edges:
        return PathCell((at,), ())
    return PathCell((edges[0].src,) + tuple(e.tgt for e in edges), tuple(edges))


# ---------------------------------------------------------------------------
# functor actions, units, multiplications


def map_row(r: Row, on2: Callable) -> Row:
    return Row(r.objects, tuple(on2(c) for c in r.cells))


def map_column(c: PathCell, on1: Callable, on2: Callable) -> PathCell:
    return PathCell(tuple(on1(v) for v in c.vertices), tuple(on2(x) for x in c.cells))


def unit_1(f) -> PathCell:
    """Horizontal unit on 1-cells: the path ``[f]``."""
    return PathCell((f.src, f.tgt), (f,))


def r_unit(c) -> PathCell:
    return PathCell((c.src, c.tgt), (c,))


def s_unit(c) -> Row:
    return Row((c.src.src, c.src.tgt), (c,))


def column_flatten(c: PathCell) -> PathCell:
    return free_mult(c)


def row_flatten(r: Row) -> Row:
    objects = [r.objects[0]]
    cells: list = []
    for i, inner in enumerate(r.cells):
        if not isinstance(inner, Row) or inner.objects[0] != r.objects[i] or inner.objects[-1] != r.objects[i + 1]:
            raise ValueError(f"inner row {inner!r} does not fit between {r.objects[i]} and {r.objects[i + 1]}")
        objects.extend(inner.objects[1:])
        cells.extend(inner.cells)
    return Row(tuple(objects), tuple(cells))


def distributive_law(r: PathCell) -> Row:
    """Transpose a column of rows into a row of columns.

    All rows share the object sequence of the boundary paths; the ``i``-th
    output column stacks the ``i``-th cell of every row. A column of height
    zero becomes a row of identity columns.
    """
    top = r.vertices[0]
    n = len(top.cells)
    for j, P in enumerate(r.vertices):
        if P.vertices != top.vertices:
            raise ValueError(f"row boundary {j} does not share the objects of the top boundary")
    cols = []
    for i in range(n):
        cols.append(PathCell(tuple(P.cells[i] for P in r.vertices), tuple(rw.cells[i] for rw in r.cells)))
    return Row(top.vertices, tuple(cols))


lam = distributive_law


def lambda_inverse(p: Row) -> PathCell:
    """Inverse of the transpose on diagrams whose columns all have one height."""
    heights = {len(c) for c in p.cells}
    if len(heights) > 1:
        raise ValueError("columns of unequal height are not in the image of the transpose")
    k = heights.pop() if heights else 0
    verts = tuple(PathCell(p.objects, tuple(c.vertices[j] for c in p.cells)) for j in range(k + 1))
    rows = tuple(Row(p.objects, tuple(c.cells[j] for c in p.cells)) for j in range(k))
    return PathCell(verts, rows)


def t_unit(cell) -> Row:
    """``[[cell]]``: a single column of height one."""
    return s_unit(r_unit(cell))


def t_unit_1(f) -> PathCell:
    return unit_1(f)


def t_map(p: Row, on1: Callable, on2: Callable) -> Row:
    """The functor ``S R`` on a 2-cell, given actions on 1- and 2-cells."""
    return map_row(p, lambda c: map_column(c, on1, on2))


def check_well_formed(x) -> None:
    """Raise ``ValueError`` unless every nested boundary matches."""
    if isinstance(x, Row):
        for i, c in enumerate(x.cells):
            for b in (c.src, c.tgt):
                if (b.src, b.tgt) != (x.objects[i], x.objects[i + 1]):
                    raise ValueError(f"cell {c!r} does not sit over {x.objects[i]} -> {x.objects[i + 1]}")
            check_well_formed(c)
    elif isinstance(x, PathCell):
        for j, c in enumerate(x.cells):
            if (c.src, c.tgt) != (x.vertices[j], x.vertices[j + 1]):
                raise ValueError(f"{c!r} does not run {x.vertices[j]!r} -> {x.vertices[j + 1]!r}")
            check_well_formed(c)
        for v in x.vertices:
            check_well_formed(v)


def t_mult(P: Row, law: Callable[[PathCell], Row] = distributive_law, check: bool = True) -> Row:
    """Flatten a diagram of diagrams: transpose each inner seam, then flatten
    vertically, then horizontally."""
    if check:
        check_well_formed(P)
    swapped = map_row(P, law)  # row of rows of columns of columns
    inner = map_row(swapped, lambda rw: map_row(rw, column_flatten))
    return row_flatten(inner)


def t_mult_1(P: PathCell) -> PathCell:
    return free_mult(P)


# ---------------------------------------------------------------------------
# bounded views of 2-graph-like structures


class Globular:
    """Bounded 2-cell enumeration interface.

    ``two_cells(f, g, budget)`` returns ``(cell, weight)`` pairs with weight
    at most ``budget``; weight counts generating cells.
    """

    objects: tuple

    def one_cells(self, x, y) -> list:  # pragma: no cover - interface
        raise NotImplementedError

    def two_cells(self, f, g, budget: int) -> list:  # pragma: no cover - interface
        raise NotImplementedError

    def all_one_cells(self) -> list:
        return [f for x in self.objects for y in self.objects for f in self.one_cells(x, y)]

    def all_two_cells(self, budget: int) -> list:
        out = []
        for x in self.objects:
            for y in self.objects:
                fs = self.one_cells(x, y)
                for f in fs:
                    for g in fs:
                        out.extend(self.two_cells(f, g, budget))
        return out


class _Counter:
    def __init__(self, cap: int) -> None:
        self.cap, self.n = cap, 0

    def tick(self, k: int = 1) -> None:
        self.n += k
        if self.n > self.cap:
            raise SearchTooLarge(f"pasting enumeration exceeded {self.cap} cells")


class Generators(Globular):
    """The 2-graph itself: edges and the elements of its hom-objects."""

    def __init__(self, A: TwoGraph) -> None:
        self.graph = A
        self.objects = tuple(A.vertices)
        self._edges = {(x, y): [Edge(e, x, y) for e in sorted(A.edges) if A.edges[e] == (x, y)]
                       for x in self.objects for y in self.objects}

    def edge(self, name: str) -> Edge:
        s, t = self.graph.edges[name]
        return Edge(name, s, t)

    def one_cells(self, x, y) -> list:
        return self._edges[(x, y)]

    def two_cells(self, f, g, budget: int) -> list:
        if budget < 1:
            return []
        return [(Cell2(f, g, el), 1) for el in self.graph.cells(f.name, g.name)]


class VerticalFree(Globular):
    """``R X``: same 1-cells, 2-cells are columns of height ≤ ``max_len``."""

    def __init__(self, X: Globular, max_len: int, counter: _Counter | None = None) -> None:
        self.inner, self.max_len = X, max_len
        self.objects = X.objects
        self.counter = counter or _Counter(DEFAULT_CAP)
        self._cache: dict = {}

    def one_cells(self, x, y) -> list:
        return self.inner.one_cells(x, y)

    def _steps(self, f, budget: int) -> list:
        """``(h, cell, weight)`` for every inner 2-cell out of ``f``."""
        key = ("steps", f, budget)
        if key not in self._cache:
            self._cache[key] = [(h, c, w) for h in self.inner.one_cells(f.src, f.tgt)
                                for c, w in self.inner.two_cells(f, h, budget)]
        return self._cache[key]

    def _columns_from(self, f, budget: int) -> dict:
        key = (f, budget)
        if key in self._cache:
            return self._cache[key]
        out: dict = {}

        def extend(vs, cs, used):
            out.setdefault(vs[-1], []).append((PathCell(vs, cs), used))
            self.counter.tick()
            if len(cs) == self.max_len:
                return
            for h, c, w in self._steps(vs[-1], budget - used):
                extend(vs + (h,), cs + (c,), used + w)

        if budget >= 0:
            extend((f,), (), 0)
        self._cache[key] = out
        return out

    def two_cells(self, f, g, budget: int) -> list:
        return self._columns_from(f, budget).get(g, [])


class HorizontalFree(Globular):
    """``S X``: 1-cells are paths of length ≤ ``max_len``; 2-cells are rows."""

    def __init__(self, X: Globular, max_len: int, counter: _Counter | None = None) -> None:
        self.inner, self.max_len = X, max_len
        self.objects = X.objects
        self.counter = counter or _Counter(DEFAULT_CAP)
        self._cache: dict = {}
        self._paths: dict = {}

    def one_cells(self, x, y) -> list:
        if (x, y) not in self._paths:
            self._paths[(x, y)] = walks(self.objects, self.inner.one_cells, x, y, self.max_len)
        return self._paths[(x, y)]

    def two_cells(self, P, Q, budget: int) -> list:
        if P.vertices != Q.vertices:
            return []
        key = (P, Q, budget)
        if key in self._cache:
            return self._cache[key]
        out = []

        def extend(i, cs, used):
            if i == len(P.cells):
                out.append((Row(P.vertices, cs), used))
                self.counter.tick()
                return
            for c, w in self.inner.two_cells(P.cells[i], Q.cells[i], budget - used):
                extend(i + 1, cs + (c,), used + w)

        if budget >= 0:
            extend(0, (), 0)
        self._cache[key] = out
        return out


def pd_weight(x) -> int:
    """Number of generating cells in a (possibly nested) diagram."""
    if isinstance(x, Cell2):
        return 1
    if isinstance(x, (Row, PathCell)):
        return sum(pd_weight(c) for c in x.cells)
    return 1


def pd_sort_key(p) -> tuple:
    return (pd_weight(p), len(p.cells), repr(p), repr(p.src), repr(p.tgt))


def t_view(A: TwoGraph, max_cells: int, max_len: int, cap: int = DEFAULT_CAP) -> HorizontalFree:
    """Bounded view of ``T A``: rows of length ≤ ``max_len`` of columns of height ≤ ``max_cells``."""
    counter = _Counter(cap)
    return HorizontalFree(VerticalFree(Generators(A), max(max_cells, 0), counter), max_len, counter)


def enumerate_pds(A: TwoGraph, max_cells: int, max_len: int = 2, cap: int = DEFAULT_CAP) -> list[Row]:
    """All pasting diagrams with at most ``max_cells`` cells whose boundary
    paths have length ≤ ``max_len``, canonically ordered."""
    V = t_view(A, max_cells, max_len, cap)
    return sorted((p for p, _ in V.all_two_cells(max_cells)), key=pd_sort_key)


def enumerate_rectangular(A: TwoGraph, max_cells: int, max_len: int = 2, cap: int = DEFAULT_CAP) -> list[PathCell]:
    """Columns of rows (rectangular arrays) within the same bounds."""
    counter = _Counter(cap)
    V = VerticalFree(HorizontalFree(Generators(A), max_len, counter), max(max_cells, 0), counter)
    out = []
    for p, _ in V.all_two_cells(max_cells):
        if len(p.cells) > 0 and len(p.vertices[0].cells) == 0:
            continue  # stacked empty rows do not correspond to distinct diagrams
        out.append(p)
    return sorted(out, key=lambda r: (pd_weight(r), repr(r), repr(r.vertices)))


def pd_morphisms(A: TwoGraph, p: Row, q: Row) -> list[tuple]:
    """Morphisms ``p => q`` between diagrams of one shape: a hom-category
    morphism per cell position. Empty if the shapes differ."""
    if p.objects != q.objects or len(p) != len(q):
        return []
    pools: list[list] = []
    for cp, cq in zip(p.cells, q.cells):
        if cp.vertices != cq.vertices:
            return []
        for a, b in zip(cp.cells, cq.cells):
            h = A.hom[(a.src.name, a.tgt.name)]
            if isinstance(h, FiniteCategory):
                pools.append(sorted(h.hom(a.elem, b.elem)))
            else:
                pools.append([a.elem] if a.elem == b.elem else [])
    return [tuple(ms) for ms in itertools.product(*pools)]


# ---------------------------------------------------------------------------
# validation and law checks


def validate_pd(A: TwoGraph, p: Row) -> ValidationReport:
    rep = ValidationReport(subject="pasting diagram")
    for i, col in enumerate(p.cells):
        rep.expect(isinstance(col, PathCell), "shape", (i,), "columns must be vertical paths")
        if not isinstance(col, PathCell):
            continue
        rep.expect(col.src.src == p.objects[i] and col.src.tgt == p.objects[i + 1],
                   "boundary", (i,), "column does not sit over its objects")
        for j, v in enumerate(col.vertices):
            rep.expect(isinstance(v, Edge) and A.edges.get(v.name) == (v.src, v.tgt)
                       and (v.src, v.tgt) == (p.objects[i], p.objects[i + 1]),
                       "1-cell", (i, j), f"{v!r} is not a parallel edge")
        for j, c in enumerate(col.cells):
            ok = (isinstance(c, Cell2) and c.src == col.vertices[j] and c.tgt == col.vertices[j + 1]
                  and c.elem in A.cells(c.src.name, c.tgt.name))
            rep.expect(ok, "2-cell", (i, j), f"{c!r} is not an element of the matching hom")
    return rep


def _safe(rep: ValidationReport, law: str, where: tuple, fn: Callable[[], tuple]) -> None:
    try:
        lhs, rhs = fn()
    except (ValueError, AttributeError, IndexError, TypeError) as exc:
        rep.add(law, where, f"ill-formed composite: {exc}")
        rep.checked += 1
        return
    rep.expect(lhs == rhs, law, where, f"{lhs!r} ≠ {rhs!r}")


def fresh_labels(x):
    """Give every 2-cell occurrence in a (nested) diagram its own label.

    The monad and distributive-law maps never inspect labels, so an
    equation that holds on the relabelled diagram holds on every diagram
    of the same shape (it is the image under a map of 2-graphs)."""
    n = 0

    def go(y):
        nonlocal n
        if isinstance(y, Cell2):
            n += 1
            return Cell2(y.src, y.tgt, f"#{n}")
        if isinstance(y, Row):
            return Row(y.objects, tuple(go(c) for c in y.cells))
        if isinstance(y, PathCell):
            return PathCell(y.vertices, tuple(go(c) for c in y.cells))
        return y

    return go(x)


def check_beck_axioms(A: TwoGraph, bound: int = 4, max_len: int = 2,
                      law: Callable[[PathCell], Row] = distributive_law, cap: int = DEFAULT_CAP,
                      generic: bool = False) -> ValidationReport:
    """The four compatibilities of the transpose with units and multiplications,
    checked element-wise on all nested diagrams with ≤ ``bound`` cells and
    paths of length ≤ ``max_len`` at every level.

    With ``generic`` each element is checked after :func:`fresh_labels`.
    Run on the 2-graph with one cell per parallel pair of edges, this covers
    every 2-graph with those edges, whatever its hom objects."""
    rep = ValidationReport(subject="distributive law")
    counter = _Counter(cap)
    X = Generators(A)
    R = lambda Y: VerticalFree(Y, max_len, counter)
    S = lambda Y: HorizontalFree(Y, max_len, counter)
    elements = (lambda V: [fresh_labels(e) for e, _ in V.all_two_cells(bound)]) if generic else \
        (lambda V: [e for e, _ in V.all_two_cells(bound)])

    for s in elements(S(X)):
        _safe(rep, "unit (vertical)", (s,), lambda: (law(r_unit(s)), map_row(s, r_unit)))
    for r in elements(R(X)):
        _safe(rep, "unit (horizontal)", (r,),
              lambda: (law(map_column(r, unit_1, s_unit)), s_unit(r)))
    for P in elements(R(R(S(X)))):
        _safe(rep, "multiplication (vertical)", (P,), lambda: (
            law(column_flatten(P)),
            map_row(law(map_column(P, lambda v: v, law)), column_flatten)))
    for P in elements(R(S(S(X)))):
        _safe(rep, "multiplication (horizontal)", (P,), lambda: (
            law(map_column(P, free_mult, row_flatten)),
            row_flatten(map_row(law(P), law))))
    return rep


def nested_t_view(A: TwoGraph, lengths: Sequence[tuple[int, int]], cap: int = DEFAULT_CAP) -> Globular:
    """``T^d A`` with ``(horizontal, vertical)`` length bounds per level, innermost first."""
    counter = _Counter(cap)
    X: Globular = Generators(A)
    for h, v in lengths:
        X = HorizontalFree(VerticalFree(X, v, counter), h, counter)
    return X


def check_t_monad(A: TwoGraph, bound: int = 4, max_len: int = 2,
                  outer_len: tuple[int, int] = (1, 1), mult: Callable[[Row], Row] = t_mult,
                  cap: int = DEFAULT_CAP) -> ValidationReport:
    """Unit laws and associativity of ``t_mult`` within the bounds.

    Associativity ranges over triple nestings; the two inner levels use
    ``max_len`` and the outermost uses ``outer_len`` (horizontal, vertical),
    since nestings of identities grow very quickly.
    """
    rep = ValidationReport(subject="composite monad")
    for p, _ in nested_t_view(A, [(max_len, max_len)], cap).all_two_cells(bound):
        _safe(rep, "left unit", (p,), lambda: (mult(t_unit(p)), p))
        _safe(rep, "right unit", (p,), lambda: (mult(t_map(p, unit_1, t_unit)), p))
    levels = [(max_len, max_len), (max_len, max_len), outer_len]
    for P, _ in nested_t_view(A, levels, cap).all_two_cells(bound):
        _safe(rep, "associativity", (P,), lambda: (mult(mult(P)), mult(t_map(P, free_mult, mult))))
    return rep


# ---------------------------------------------------------------------------
# JSON


def pd_to_json(p: Row) -> dict:
    return {
        "boundary_src": [e.name for e in p.src.cells],
        "boundary_tgt": [e.name for e in p.tgt.cells],
        "at": p.objects[0],
        "columns": [{"heights": len(c), "inter": [h.name for h in c.vertices[1:-1]],
                     "cells": [x.elem for x in c.cells]} for c in p.cells],
    }


def pd_from_json(A: TwoGraph, doc: Mapping) -> Row:
    try:
        G = Generators(A)
        src = [G.edge(e) for e in doc["boundary_src"]]
        tgt = [G.edge(e) for e in doc["boundary_tgt"]]
        cols = doc["columns"]
        if not (len(src) == len(tgt) == len(cols)):
            raise StructuralError("boundary lengths and column count differ")
        built = []
        for f, g, c in zip(src, tgt, cols):
            verts = [f] + [G.edge(h) for h in c["inter"]] + ([g] if c["heights"] else [])
            if not c["heights"] and f != g:
                raise StructuralError("a column of height 0 needs equal boundary edges")
            if len(c["cells"]) != c["heights"] or len(verts) != c["heights"] + 1:
                raise StructuralError("column height does not match its cells")
            cells = tuple(Cell2(verts[j], verts[j + 1], el) for j, el in enumerate(c["cells"]))
            built.append(PathCell(tuple(verts), cells))
        p = row(built, at=doc.get("at"))
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"bad pasting-diagram document: {exc}") from exc
    rep = validate_pd(A, p)
    if not rep.ok:
        raise StructuralError(str(rep))
    return p


__all__ = [
    "Edge", "Cell2", "Row", "Column", "TwoPd", "RectangularPd", "column", "row", "one_path",
    "map_row", "map_column", "unit_1", "r_unit", "s_unit", "column_flatten", "row_flatten",
    "distributive_law", "lam", "check_well_formed", "lambda_inverse", "t_unit", "t_unit_1", "t_map", "t_mult", "t_mult_1",
    "Globular", "Generators", "VerticalFree", "HorizontalFree", "t_view", "pd_weight", "pd_sort_key",
    "enumerate_pds", "enumerate_rectangular", "pd_morphisms", "validate_pd", "check_beck_axioms",
    "check_t_monad", "nested_t_view", "fresh_labels", "pd_to_json", "pd_from_json",
]
