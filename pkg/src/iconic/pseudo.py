"""Bicategories, pseudofunctors and icons, unbiased composition,
strictification and iconic tricategories over finite tables.

Conventions: ``comp1(g, f)`` is ``g∘f`` (``f`` first); ``hcomp(β, α)`` is the
horizontal composite with ``α`` first; ``vcomp(β, α)`` is ``β·α``.
``assoc(h, g, f): (hg)f ⇒ h(gf)``, ``lunit(f): 1∘f ⇒ f`` and
``runit(f): f∘1 ⇒ f``. Strings of 1-cells are :class:`PathCell` values in
diagrammatic order and evaluate by left-normalized bracketing
``f_n(...(f_2 f_1))``.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .base import DEFAULT_CAP, FiniteCategory, enumerate_functors, terminal, validate_category
from .freecat import PathCell, free_mult, nested_elements, walks
from .report import SearchTooLarge, StructuralError, ValidationReport

# ---------------------------------------------------------------------------
# helpers


def _law(rep: ValidationReport, law: str, where: Iterable, fn: Callable[[], bool], detail: str = "") -> None:
    """Record one instance; an undefined composite counts as a violation."""
    rep.checked += 1
    try:
        ok = fn()
    except (ValueError, KeyError) as exc:
        rep.add(law, where, f"undefined: {exc}")
        return
    if not ok:
        rep.add(law, where, detail)


def _look(table: Mapping, key, what: str):
    try:
        return table[key]
    except KeyError:
        raise StructuralError(f"no {what} for {key!r}") from None


def _tuplify(x):
    return tuple(_tuplify(y) for y in x) if isinstance(x, list) else x


def _listify(x):
    return [_listify(y) for y in x] if isinstance(x, tuple) else x


def concat(s: PathCell, t: PathCell) -> PathCell:
    """``s`` followed by ``t``."""
    if s.tgt != t.src:
        raise ValueError(f"strings {s!r} and {t!r} do not compose")
    return PathCell(s.vertices + t.vertices[1:], s.cells + t.cells)


# ---------------------------------------------------------------------------
# bicategories


class Bicategory:
    """Interface shared by tabled, product and lazily strictified bicategories.

    Subclasses provide ``objects`` and ``name``.
    """

    def one_cells(self, x, y) -> list: raise NotImplementedError
    def two_cells(self, f, g) -> list: raise NotImplementedError
    def ends(self, f) -> tuple: raise NotImplementedError
    def cell_ends(self, a) -> tuple: raise NotImplementedError
    def id1(self, x): raise NotImplementedError
    def comp1(self, g, f): raise NotImplementedError
    def id2(self, f): raise NotImplementedError
    def vcomp(self, b, a): raise NotImplementedError
    def hcomp(self, b, a): raise NotImplementedError
    def assoc(self, h, g, f): raise NotImplementedError
    def lunit(self, f): raise NotImplementedError
    def runit(self, f): raise NotImplementedError
    def inverse(self, a): raise NotImplementedError

    def vchain(self, *cells):
        """``vchain(c, b, a) = c·b·a`` (``a`` applied first)."""
        out = cells[-1]
        for c in reversed(cells[:-1]):
            out = self.vcomp(c, out)
        return out

    def is_invertible(self, a) -> bool:
        try:
            self.inverse(a)
            return True
        except ValueError:
            return False

    def all_one_cells(self) -> list:
        return [f for x in self.objects for y in self.objects for f in self.one_cells(x, y)]

    def two_cells_from(self, f) -> list:
        x, y = self.ends(f)
        return [a for g in self.one_cells(x, y) for a in self.two_cells(f, g)]

    def all_two_cells(self) -> list:
        return [a for f in self.all_one_cells() for a in self.two_cells_from(f)]


@dataclass(frozen=True, eq=False)
class FiniteBicategory(Bicategory):
    """A bicategory presented by tables.

    ``homs[(x, y)]`` is the category whose objects are the 1-cells ``x -> y``
    and whose morphisms are the 2-cells between them. 1-cell ids and 2-cell
    ids must each be unique across homs.
    """

    objects: tuple
    homs: Mapping[tuple, FiniteCategory]
    comp_table: Mapping[tuple, str]
    hcomp_table: Mapping[tuple, str]
    unit_table: Mapping[str, str]
    assoc_table: Mapping[tuple, str]
    lunit_table: Mapping[str, str]
    runit_table: Mapping[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        for attr in ("homs", "comp_table", "hcomp_table", "assoc_table"):
            object.__setattr__(self, attr, {tuple(k): v for k, v in getattr(self, attr).items()})
        for attr in ("unit_table", "lunit_table", "runit_table"):
            object.__setattr__(self, attr, dict(getattr(self, attr)))

    @cached_property
    def _index(self) -> tuple[dict, dict]:
        ones, twos = {}, {}
        for xy, H in self.homs.items():
            for f in H.objects:
                if f in ones:
                    raise StructuralError(f"1-cell {f} appears in two homs")
                ones[f] = xy
            for a in H.morphisms:
                if a in twos:
                    raise StructuralError(f"2-cell {a} appears in two homs")
                twos[a] = xy
        return ones, twos

    def hom(self, x, y) -> FiniteCategory:
        return self.homs.get((x, y)) or FiniteCategory((), {}, {}, {})

    def one_cells(self, x, y) -> list:
        return list(self.hom(x, y).objects)

    def two_cells(self, f, g) -> list:
        return self.hom(*self.ends(f)).hom(f, g)

    def ends(self, f) -> tuple:
        return _look(self._index[0], f, "1-cell")

    def _hom_of_cell(self, a) -> FiniteCategory:
        return self.hom(*_look(self._index[1], a, "2-cell"))

    def cell_ends(self, a) -> tuple:
        return self._hom_of_cell(a).morphisms[a]

    def id1(self, x):
        return _look(self.unit_table, x, "identity 1-cell")

    def comp1(self, g, f):
        return _look(self.comp_table, (g, f), "1-cell composite")

    def id2(self, f):
        return self.hom(*self.ends(f)).identity[f]

    def vcomp(self, b, a):
        return self._hom_of_cell(a).comp(b, a)

    def hcomp(self, b, a):
        return _look(self.hcomp_table, (b, a), "horizontal composite")

    def assoc(self, h, g, f):
        return _look(self.assoc_table, (h, g, f), "associator")

    def lunit(self, f):
        return _look(self.lunit_table, f, "left unitor")

    def runit(self, f):
        return _look(self.runit_table, f, "right unitor")

    def inverse(self, a):
        return self._hom_of_cell(a).inverse(a)

    def with_tables(self, **changes) -> "FiniteBicategory":
        return dataclasses.replace(self, **changes)

    def key(self) -> tuple:
        return (
            tuple(sorted(self.objects)),
            tuple(sorted((k, v.key()) for k, v in self.homs.items())),
            *(tuple(sorted(getattr(self, t).items())) for t in (
                "comp_table", "hcomp_table", "unit_table", "assoc_table", "lunit_table", "runit_table")),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteBicategory) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return (f"<FiniteBicategory{label}: {len(self.objects)} objects, "
                f"{len(self._index[0])} 1-cells, {len(self._index[1])} 2-cells>")

    def to_json(self) -> dict:
        pipe = lambda k: "|".join(k)
        return {
            "objects": sorted(self.objects),
            "homs": [{"src": x, "tgt": y, "category": H.to_json()} for (x, y), H in sorted(self.homs.items())],
            "comp": {pipe(k): v for k, v in sorted(self.comp_table.items())},
            "hcomp": {pipe(k): v for k, v in sorted(self.hcomp_table.items())},
            "id1": dict(sorted(self.unit_table.items())),
            "assoc": {pipe(k): v for k, v in sorted(self.assoc_table.items())},
            "lunit": dict(sorted(self.lunit_table.items())),
            "runit": dict(sorted(self.runit_table.items())),
        }

    @classmethod
    def from_json(cls, doc: Mapping, name: str = "") -> "FiniteBicategory":
        unpipe = lambda d: {tuple(k.split("|")): v for k, v in d.items()}
        try:
            homs = {(h["src"], h["tgt"]): FiniteCategory.from_json(h["category"]) for h in doc["homs"]}
            return cls(tuple(doc["objects"]), homs, unpipe(doc["comp"]), unpipe(doc["hcomp"]),
                       dict(doc["id1"]), unpipe(doc["assoc"]), dict(doc["lunit"]), dict(doc["runit"]),
                       name=name or doc.get("name", ""))
        except (KeyError, TypeError, AttributeError) as exc:
            raise StructuralError(f"malformed bicategory document: {exc}") from None


@dataclass(frozen=True, eq=False)
class ProductBicategory(Bicategory):
    """Cartesian product; every cell is a tuple with one entry per factor."""

    factors: tuple

    @property
    def objects(self) -> tuple:
        return tuple(itertools.product(*(B.objects for B in self.factors)))

    @property
    def name(self) -> str:
        return "×".join(B.name or "?" for B in self.factors)

    def _each(self, method: str, *args) -> tuple:
        return tuple(getattr(B, method)(*(a[i] for a in args)) for i, B in enumerate(self.factors))

    def one_cells(self, x, y) -> list:
        return list(itertools.product(*self._each("one_cells", x, y)))

    def two_cells(self, f, g) -> list:
        return list(itertools.product(*self._each("two_cells", f, g)))

    def ends(self, f) -> tuple:
        pairs = self._each("ends", f)
        return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)

    def cell_ends(self, a) -> tuple:
        pairs = self._each("cell_ends", a)
        return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)

    def id1(self, x):
        return self._each("id1", x)

    def comp1(self, g, f):
        return self._each("comp1", g, f)

    def id2(self, f):
        return self._each("id2", f)

    def vcomp(self, b, a):
        return self._each("vcomp", b, a)

    def hcomp(self, b, a):
        return self._each("hcomp", b, a)

    def assoc(self, h, g, f):
        return self._each("assoc", h, g, f)

    def lunit(self, f):
        return self._each("lunit", f)

    def runit(self, f):
        return self._each("runit", f)

    def inverse(self, a):
        return self._each("inverse", a)


def check_bicategory(B: Bicategory, strict: bool = False) -> ValidationReport:
    """Exhaustive sweep of the bicategory axioms over the (finite) cells of ``B``.

    With ``strict`` the constraints must also be identities and 1-cell
    composition strictly associative and unital.
    """
    rep = ValidationReport(subject=f"bicategory {B.name}".strip())
    objs = B.objects
    try:
        homs = {(x, y): B.one_cells(x, y) for x in objs for y in objs}
    except StructuralError as exc:
        rep.add("structure", (), str(exc))
        return rep
    cells = {}
    for (x, y), fs in homs.items():
        for f in fs:
            _law(rep, "hom", (f,), lambda: B.ends(f) == (x, y), "1-cell listed in the wrong hom")
            for g in fs:
                cells[(f, g)] = B.two_cells(f, g)
    if isinstance(B, FiniteBicategory):
        for xy, H in B.homs.items():
            rep.extend(validate_category(H), prefix=f"hom {xy}: ")
    else:
        for (x, y), fs in homs.items():
            for f, g in itertools.product(fs, repeat=2):
                for a in cells[(f, g)]:
                    _law(rep, "hom", (a,), lambda: B.cell_ends(a) == (f, g)
                         and B.vcomp(B.id2(g), a) == a == B.vcomp(a, B.id2(f)))
                    for h in fs:
                        for b in cells[(g, h)]:
                            for k in fs:
                                for c in cells[(h, k)]:
                                    _law(rep, "hom", (c, b, a), lambda: B.vcomp(c, B.vcomp(b, a))
                                         == B.vcomp(B.vcomp(c, b), a))
    for x in objs:
        _law(rep, "identity 1-cell", (x,), lambda: B.ends(B.id1(x)) == (x, x))

    def after(y):
        return [(f, z) for z in objs for f in homs[(y, z)]]

    pairs = [(g, f, x, y, z) for x in objs for y in objs for f in homs[(x, y)] for g, z in after(y)]
    for g, f, x, y, z in pairs:
        _law(rep, "composition", (g, f), lambda: B.ends(B.comp1(g, f)) == (x, z))
        _law(rep, "functoriality", (g, f), lambda: B.hcomp(B.id2(g), B.id2(f)) == B.id2(B.comp1(g, f)))
        for f2 in homs[(x, y)]:
            for g2 in homs[(y, z)]:
                for a in cells[(f, f2)]:
                    for b in cells[(g, g2)]:
                        _law(rep, "composition", (b, a), lambda: B.cell_ends(B.hcomp(b, a))
                             == (B.comp1(g, f), B.comp1(g2, f2)))
                        for f3 in homs[(x, y)]:
                            for g3 in homs[(y, z)]:
                                for a2 in cells[(f2, f3)]:
                                    for b2 in cells[(g2, g3)]:
                                        _law(rep, "functoriality", (b2, b, a2, a), lambda: B.hcomp(
                                            B.vcomp(b2, b), B.vcomp(a2, a)) == B.vcomp(B.hcomp(b2, a2), B.hcomp(b, a)))
    for f in (f for fs in homs.values() for f in fs):
        x, y = B.ends(f)
        one_y, one_x = B.id1(y), B.id1(x)
        _law(rep, "left unitor", (f,), lambda: B.cell_ends(B.lunit(f)) == (B.comp1(one_y, f), f)
             and B.is_invertible(B.lunit(f)), "mistyped or not invertible")
        _law(rep, "right unitor", (f,), lambda: B.cell_ends(B.runit(f)) == (B.comp1(f, one_x), f)
             and B.is_invertible(B.runit(f)), "mistyped or not invertible")
        for f2 in homs[(x, y)]:
            for a in cells[(f, f2)]:
                _law(rep, "left unitor naturality", (a,), lambda: B.vcomp(B.lunit(f2), B.hcomp(B.id2(one_y), a))
                     == B.vcomp(a, B.lunit(f)))
                _law(rep, "right unitor naturality", (a,), lambda: B.vcomp(B.runit(f2), B.hcomp(a, B.id2(one_x)))
                     == B.vcomp(a, B.runit(f)))
        if strict:
            _law(rep, "strictness", (f,), lambda: B.comp1(one_y, f) == f == B.comp1(f, one_x)
                 and B.lunit(f) == B.id2(f) == B.runit(f))
    triples = [(h, g, f, x, y, z, w) for g, f, x, y, z in pairs for h, w in after(z)]
    for h, g, f, x, y, z, w in triples:
        a = lambda: B.assoc(h, g, f)
        _law(rep, "associator", (h, g, f), lambda: B.cell_ends(a())
             == (B.comp1(B.comp1(h, g), f), B.comp1(h, B.comp1(g, f))) and B.is_invertible(a()),
             "mistyped or not invertible")
        if strict:
            _law(rep, "strictness", (h, g, f), lambda: a() == B.id2(B.comp1(h, B.comp1(g, f))))
        for f2 in homs[(x, y)]:
            for g2 in homs[(y, z)]:
                for h2 in homs[(z, w)]:
                    for al, be, ga in itertools.product(cells[(f, f2)], cells[(g, g2)], cells[(h, h2)]):
                        _law(rep, "associator naturality", (ga, be, al), lambda: B.vcomp(
                            B.assoc(h2, g2, f2), B.hcomp(B.hcomp(ga, be), al))
                            == B.vcomp(B.hcomp(ga, B.hcomp(be, al)), a()))
    for g, f, x, y, z in pairs:
        _law(rep, "triangle", (g, f), lambda: B.vcomp(B.hcomp(B.id2(g), B.lunit(f)), B.assoc(g, B.id1(y), f))
             == B.hcomp(B.runit(g), B.id2(f)))
    for h, g, f, x, y, z, w in triples:
        for k, _ in after(w):
            _law(rep, "pentagon", (k, h, g, f), lambda: B.vchain(
                B.hcomp(B.id2(k), B.assoc(h, g, f)),
                B.assoc(k, B.comp1(h, g), f),
                B.hcomp(B.assoc(k, h, g), B.id2(f)))
                == B.vcomp(B.assoc(k, h, B.comp1(g, f)), B.assoc(B.comp1(k, h), g, f)))
    return rep


# ---------------------------------------------------------------------------
# monoidal categories and one-object bicategories


@dataclass(frozen=True)
class MonoidalCategory:
    """Monoidal structure on a finite category, given by tables.

    ``tensor`` covers morphisms (objects are tensored through their
    identities); ``assoc[(x, y, z)]: (x⊗y)⊗z -> x⊗(y⊗z)``,
    ``lunit[x]: I⊗x -> x``, ``runit[x]: x⊗I -> x``.
    """

    category: FiniteCategory
    tensor: Mapping[tuple, str]
    unit: str
    assoc: Mapping[tuple, str]
    lunit: Mapping[str, str]
    runit: Mapping[str, str]
    name: str = ""

    def tensor_obj(self, x: str, y: str) -> str:
        C = self.category
        return C.cod(self.tensor[(C.identity[x], C.identity[y])])


def monoidal_from_functions(C: FiniteCategory, tensor: Callable[[str, str], str], unit: str,
                            assoc: Callable | None = None, lunit: Callable | None = None,
                            runit: Callable | None = None, name: str = "") -> MonoidalCategory:
    """Tabulate a tensor given on morphisms; omitted constraints are identities."""
    table = {(g, f): tensor(g, f) for g in C.morphisms for f in C.morphisms}
    obj = lambda x, y: C.cod(table[(C.identity[x], C.identity[y])])
    ident = lambda *xs: C.identity[xs[0] if len(xs) == 1 else obj(obj(xs[0], xs[1]), xs[2])]
    triples = itertools.product(C.objects, repeat=3)
    return MonoidalCategory(
        C, table, unit,
        {t: (assoc or ident)(*t) for t in triples},
        {x: (lunit or (lambda x: C.identity[obj(unit, x)]))(x) for x in C.objects},
        {x: (runit or (lambda x: C.identity[obj(x, unit)]))(x) for x in C.objects},
        name=name or C.name,
    )


def one_object_embed(M: MonoidalCategory, obj: str = "*") -> FiniteBicategory:
    """The one-object bicategory with hom ``M``: 1-cells are objects of ``M``,
    ``g∘f = g⊗f`` and the constraints are those of ``M``."""
    C = M.category
    comp = {(g, f): M.tensor_obj(g, f) for g in C.objects for f in C.objects}
    return FiniteBicategory(
        (obj,), {(obj, obj): C}, comp, dict(M.tensor), {obj: M.unit},
        dict(M.assoc), dict(M.lunit), dict(M.runit), name=M.name,
    )


def terminal_bicategory() -> FiniteBicategory:
    """One object ``*``, one 1-cell ``*``, one 2-cell ``1_*``."""
    return one_object_embed(monoidal_from_functions(terminal(), lambda g, f: "1_*", "*", name="1"))


def locally_discrete(C: FiniteCategory) -> FiniteBicategory:
    """Strict 2-category with only identity 2-cells ``=f``."""
    homs = {}
    for x in C.objects:
        for y in C.objects:
            fs = C.hom(x, y)
            homs[(x, y)] = FiniteCategory(tuple(fs), {f"={f}": (f, f) for f in fs}, {f: f"={f}" for f in fs},
                                          {(f"={f}", f"={f}"): f"={f}" for f in fs})
    comp = dict(C.compose)
    return FiniteBicategory(
        C.objects, homs, comp, {(f"={g}", f"={f}"): f"={h}" for (g, f), h in comp.items()},
        dict(C.identity),
        {(h, g, f): f"={C.comp(h, C.comp(g, f))}" for (h, g) in comp for f in C.morphisms
         if C.cod(f) == C.dom(g)},
        {f: f"={f}" for f in C.morphisms}, {f: f"={f}" for f in C.morphisms}, name=f"ld({C.name})",
    )


def scalar_group(n: int, m: int, name: str = "") -> FiniteCategory:
    """Skeletal groupoid with objects ``Z/n`` and automorphisms ``Z/m`` written
    ``"a.s"``."""
    objs = tuple(str(a) for a in range(n))
    return FiniteCategory(
        objs, {f"{a}.{s}": (str(a), str(a)) for a in range(n) for s in range(m)},
        {str(a): f"{a}.0" for a in range(n)},
        {(f"{a}.{s}", f"{a}.{t}"): f"{a}.{(s + t) % m}" for a in range(n) for s in range(m) for t in range(m)},
        name=name or f"Z{n}[Z{m}]",
    )


def _split(m: str) -> tuple[int, int]:
    a, s = m.split(".")
    return int(a), int(s)


def graded_monoidal(n: int, m: int, omega: Callable[[int, int, int], int] | None = None,
                    name: str = "") -> MonoidalCategory:
    """``Z/n``-graded vector-space-like category: objects ``Z/n``, scalars
    ``Z/m`` (additive exponents), tensor by addition, associator
    ``ω(a, b, c)`` at ``a+b+c``."""
    C = scalar_group(n, m)

    def tensor(g: str, f: str) -> str:
        (a, s), (b, t) = _split(g), _split(f)
        return f"{(a + b) % n}.{(s + t) % m}"

    def assoc(a, b, c):
        return f"{(int(a) + int(b) + int(c)) % n}.{omega(int(a), int(b), int(c)) % m}"

    return monoidal_from_functions(C, tensor, "0", assoc=assoc if omega else None, name=name or C.name)


def cocycle_bicategory(perturb: Mapping[tuple, int] | None = None) -> FiniteBicategory:
    """One object; 1-cells ``Z/2``; 2-cells ``Z/2`` scalars; associator
    ``(-1)^{abc}``. ``perturb`` adds extra signs to chosen components."""
    extra = dict(perturb or {})

    def omega(a, b, c):
        return a * b * c + extra.get((a, b, c), 0)

    B = one_object_embed(graded_monoidal(2, 2, omega))
    return B.with_tables(name="Z/2 cocycle" + (" (perturbed)" if extra else ""))


def bicategory_fixtures() -> list[FiniteBicategory]:
    from .base import walking_arrow, codiscrete
    return [
        terminal_bicategory(),
        locally_discrete(walking_arrow()),
        locally_discrete(codiscrete(["p", "q"])),
        cocycle_bicategory(),
        one_object_embed(graded_monoidal(3, 1)).with_tables(name="Z/3 discrete"),
        one_object_embed(graded_monoidal(2, 3)).with_tables(name="Z/2 graded, Z/3 scalars"),
    ]


# ---------------------------------------------------------------------------
# pseudofunctors and icons


@dataclass(frozen=True, eq=False)
class Pseudofunctor:
    """``comp(g, f): F(g)∘F(f) ⇒ F(g∘f)`` and ``unit(x): 1_{Fx} ⇒ F(1_x)``."""

    source: Bicategory
    target: Bicategory
    obj: Callable
    one: Callable
    two: Callable
    comp: Callable
    unit: Callable
    name: str = ""
    tables: dict | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        if self.tables is None:
            raise StructuralError("only tabled pseudofunctors serialize")
        return {k: [[_listify(a), _listify(b)] for a, b in v.items()] for k, v in self.tables.items()}


def tabled_pseudofunctor(source: Bicategory, target: Bicategory, obj: Mapping, one: Mapping, two: Mapping,
                         comp: Mapping, unit: Mapping, name: str = "") -> Pseudofunctor:
    tables = {"obj": dict(obj), "one": dict(one), "two": dict(two), "comp": dict(comp), "unit": dict(unit)}
    return Pseudofunctor(
        source, target,
        lambda x: _look(tables["obj"], x, "object image"),
        lambda f: _look(tables["one"], f, "1-cell image"),
        lambda a: _look(tables["two"], a, "2-cell image"),
        lambda g, f: _look(tables["comp"], (g, f), "composition comparison"),
        lambda x: _look(tables["unit"], x, "unit comparison"),
        name=name, tables=tables,
    )


def pseudofunctor_from_json(source: Bicategory, target: Bicategory, doc: Mapping, name: str = "") -> Pseudofunctor:
    try:
        t = {k: {_tuplify(a): _tuplify(b) for a, b in doc[k]} for k in ("obj", "one", "two", "comp", "unit")}
    except (KeyError, TypeError, ValueError) as exc:
        raise StructuralError(f"malformed pseudofunctor document: {exc}") from None
    return tabled_pseudofunctor(source, target, t["obj"], t["one"], t["two"], t["comp"], t["unit"], name)


def tabulate(F: Pseudofunctor) -> Pseudofunctor:
    """Freeze a pseudofunctor into tables over its (finite) source."""
    B = F.source
    ones = B.all_one_cells()
    comp = {}
    for f in ones:
        x, y = B.ends(f)
        for z in B.objects:
            for g in B.one_cells(y, z):
                comp[(g, f)] = F.comp(g, f)
    return tabled_pseudofunctor(
        B, F.target, {x: F.obj(x) for x in B.objects}, {f: F.one(f) for f in ones},
        {a: F.two(a) for a in B.all_two_cells()}, comp, {x: F.unit(x) for x in B.objects}, F.name)


def identity_pseudofunctor(B: Bicategory) -> Pseudofunctor:
    ident = lambda v: v
    return Pseudofunctor(B, B, ident, ident, ident, lambda g, f: B.id2(B.comp1(g, f)),
                         lambda x: B.id2(B.id1(x)), name="id")


def compose_pseudofunctors(G: Pseudofunctor, F: Pseudofunctor) -> Pseudofunctor:
    C = G.target
    return Pseudofunctor(
        F.source, C,
        lambda x: G.obj(F.obj(x)), lambda f: G.one(F.one(f)), lambda a: G.two(F.two(a)),
        lambda g, f: C.vcomp(G.two(F.comp(g, f)), G.comp(F.one(g), F.one(f))),
        lambda x: C.vcomp(G.two(F.unit(x)), G.unit(F.obj(x))),
        name=f"{G.name}∘{F.name}",
    )


def tuple_pseudofunctor(source: Bicategory, parts: Sequence[Pseudofunctor]) -> Pseudofunctor:
    """Pairing ``<F_1, ..., F_n>`` into the product of the targets."""
    target = ProductBicategory(tuple(P.target for P in parts))
    each = lambda attr: (lambda *args: tuple(getattr(P, attr)(*args) for P in parts))
    return Pseudofunctor(source, target, each("obj"), each("one"), each("two"), each("comp"), each("unit"),
                         name="<" + ",".join(P.name for P in parts) + ">")


def projection(P: ProductBicategory, i: int) -> Pseudofunctor:
    B = P.factors[i]
    pick = lambda v: v[i]
    return Pseudofunctor(P, B, pick, pick, pick, lambda g, f: B.id2(B.comp1(g[i], f[i])),
                         lambda x: B.id2(B.id1(x[i])), name=f"π{i}")


def collapse(B: Bicategory) -> Pseudofunctor:
    """The unique pseudofunctor to :func:`terminal_bicategory`."""
    T = terminal_bicategory()
    return Pseudofunctor(B, T, lambda x: "*", lambda f: "*", lambda a: "1_*", lambda g, f: "1_*",
                         lambda x: "1_*", name="!")


def check_pseudofunctor(F: Pseudofunctor) -> ValidationReport:
    B, C = F.source, F.target
    rep = ValidationReport(subject=f"pseudofunctor {F.name}".strip())
    objs = B.objects
    homs = {(x, y): B.one_cells(x, y) for x in objs for y in objs}
    for (x, y), fs in homs.items():
        for f in fs:
            _law(rep, "typing", (f,), lambda: C.ends(F.one(f)) == (F.obj(x), F.obj(y)))
            _law(rep, "local functoriality", (f,), lambda: F.two(B.id2(f)) == C.id2(F.one(f)))
            for g in fs:
                for a in B.two_cells(f, g):
                    _law(rep, "typing", (a,), lambda: C.cell_ends(F.two(a)) == (F.one(f), F.one(g)))
                    for h in fs:
                        for b in B.two_cells(g, h):
                            _law(rep, "local functoriality", (b, a),
                                 lambda: F.two(B.vcomp(b, a)) == C.vcomp(F.two(b), F.two(a)))
    for x in objs:
        _law(rep, "unit comparison", (x,), lambda: C.cell_ends(F.unit(x)) == (C.id1(F.obj(x)), F.one(B.id1(x)))
             and C.is_invertible(F.unit(x)), "mistyped or not invertible")

    def after(y):
        return [(g, z) for z in objs for g in homs[(y, z)]]

    pairs = [(g, f, x, y, z) for (x, y), fs in homs.items() for f in fs for g, z in after(y)]
    for g, f, x, y, z in pairs:
        phi = lambda: F.comp(g, f)
        _law(rep, "composition comparison", (g, f), lambda: C.cell_ends(phi())
             == (C.comp1(F.one(g), F.one(f)), F.one(B.comp1(g, f))) and C.is_invertible(phi()),
             "mistyped or not invertible")
        for f2 in homs[(x, y)]:
            for g2 in homs[(y, z)]:
                for a in B.two_cells(f, f2):
                    for b in B.two_cells(g, g2):
                        _law(rep, "comparison naturality", (b, a), lambda: C.vcomp(
                            F.comp(g2, f2), C.hcomp(F.two(b), F.two(a))) == C.vcomp(F.two(B.hcomp(b, a)), phi()))
        Ff, Fg = F.one(f), F.one(g)
        if g == B.id1(y):
            _law(rep, "left unit", (f,), lambda: C.vchain(
                F.two(B.lunit(f)), phi(), C.hcomp(F.unit(y), C.id2(Ff))) == C.lunit(Ff))
        if f == B.id1(y) and x == y:
            _law(rep, "right unit", (g,), lambda: C.vchain(
                F.two(B.runit(g)), phi(), C.hcomp(C.id2(Fg), F.unit(y))) == C.runit(Fg))
        for h, w in after(z):
            Fh = F.one(h)
            _law(rep, "associativity", (h, g, f), lambda: C.vchain(
                F.two(B.assoc(h, g, f)), F.comp(B.comp1(h, g), f), C.hcomp(F.comp(h, g), C.id2(Ff)))
                == C.vchain(F.comp(h, B.comp1(g, f)), C.hcomp(C.id2(Fh), phi()), C.assoc(Fh, Fg, Ff)))
    return rep


@dataclass(frozen=True, eq=False)
class PseudoIcon:
    """Components ``θ(f): F(f) ⇒ G(f)`` between pseudofunctors agreeing on objects."""

    F: Pseudofunctor
    G: Pseudofunctor
    components: Mapping

    def __call__(self, f):
        return _look(self.components, f, "icon component")


def check_pseudo_icon(t: PseudoIcon, invertible: bool = True) -> ValidationReport:
    F, G = t.F, t.G
    B, C = F.source, F.target
    rep = ValidationReport(subject="pseudo icon")
    objs = B.objects
    for x in objs:
        _law(rep, "objects", (x,), lambda: F.obj(x) == G.obj(x), "object maps differ")
    homs = {(x, y): B.one_cells(x, y) for x in objs for y in objs}
    for (x, y), fs in homs.items():
        for f in fs:
            _law(rep, "typing", (f,), lambda: C.cell_ends(t(f)) == (F.one(f), G.one(f)))
            if invertible:
                _law(rep, "invertibility", (f,), lambda: C.is_invertible(t(f)), "component not invertible")
            for g in fs:
                for a in B.two_cells(f, g):
                    _law(rep, "naturality", (a,), lambda: C.vcomp(G.two(a), t(f)) == C.vcomp(t(g), F.two(a)))
        for f in fs:
            for z in objs:
                for g in homs[(y, z)]:
                    _law(rep, "composition", (g, f), lambda: C.vcomp(t(B.comp1(g, f)), F.comp(g, f))
                         == C.vcomp(G.comp(g, f), C.hcomp(t(g), t(f))))
    for x in objs:
        _law(rep, "units", (x,), lambda: C.vcomp(t(B.id1(x)), F.unit(x)) == G.unit(x))
    return rep


def identity_icon(F: Pseudofunctor) -> PseudoIcon:
    B, C = F.source, F.target
    return PseudoIcon(F, F, {f: C.id2(F.one(f)) for f in B.all_one_cells()})


def enumerate_pseudofunctors(B: FiniteBicategory, C: FiniteBicategory, cap: int = DEFAULT_CAP
                             ) -> list[Pseudofunctor]:
    """All pseudofunctors ``B -> C`` (brute force over tables, then filtered)."""
    out = []
    budget = [0]

    def tick(n: int = 1) -> None:
        budget[0] += n
        if budget[0] > cap:
            raise SearchTooLarge(f"pseudofunctor search exceeded {cap} candidates")

    pairs_B = list(B.homs)
    comp_keys = sorted(B.comp_table)
    for omap in itertools.product(C.objects, repeat=len(B.objects)):
        om = dict(zip(B.objects, omap))
        choices = []
        for xy in pairs_B:
            fs = enumerate_functors(B.hom(*xy), C.hom(om[xy[0]], om[xy[1]]), cap)
            choices.append(fs)
        for funcs in itertools.product(*choices):
            tick()
            one, two = {}, {}
            for Fh in funcs:
                one.update({f: Fh.obj(f) for f in Fh.source.objects})
                two.update({a: Fh(a) for a in Fh.source.morphisms})
            slots = [C.hom(*C.ends(C.comp1(one[g], one[f]))).hom(C.comp1(one[g], one[f]), one[h])
                     for (g, f), h in ((k, B.comp_table[k]) for k in comp_keys)]
            uslots = [C.hom(om[x], om[x]).hom(C.id1(om[x]), one[B.id1(x)]) for x in B.objects]
            sizes = 1
            for s in slots + uslots:
                sizes *= len(s)
            tick(sizes)
            for cs in itertools.product(*slots):
                for us in itertools.product(*uslots):
                    F = tabled_pseudofunctor(B, C, om, one, two, dict(zip(comp_keys, cs)),
                                             dict(zip(B.objects, us)))
                    if check_pseudofunctor(F).ok:
                        out.append(F)
    return out


def enumerate_pseudo_icons(F: Pseudofunctor, G: Pseudofunctor) -> list[PseudoIcon]:
    B, C = F.source, F.target
    if any(F.obj(x) != G.obj(x) for x in B.objects):
        return []
    ones = B.all_one_cells()
    slots = [C.two_cells(F.one(f), G.one(f)) for f in ones]
    out = []
    for cs in itertools.product(*slots):
        t = PseudoIcon(F, G, dict(zip(ones, cs)))
        if check_pseudo_icon(t, invertible=False).ok:
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# coherence: bracketings and canonical comparison cells
#
# A bracketing is a tree: ("leaf", f), ("unit", x) or ("comp", G, F) for G∘F.


def left_tree(items: Sequence, at) -> tuple:
    """Left-normalized bracketing ``x_n∘(...∘(x_2∘x_1))`` of subtrees."""
    if not items:
        return ("unit", at)
    out = items[0]
    for t in items[1:]:
        out = ("comp", t, out)
    return out


def right_tree(items: Sequence, at) -> tuple:
    """Right-normalized bracketing ``((x_n∘x_{n-1})∘...)∘x_1``."""
    if not items:
        return ("unit", at)
    out = items[-1]
    for t in reversed(items[:-1]):
        out = ("comp", out, t)
    return out


BRACKETINGS = {"left": left_tree, "right": right_tree}


class Coherence:
    """Canonical 2-cells of a bicategory between bracketings of one string."""

    def __init__(self, B: Bicategory) -> None:
        self.B = B
        self._chi: dict = {}
        self._ev: dict = {}

    def ev(self, s: PathCell):
        """Left-normalized composite of a string of 1-cells."""
        if s not in self._ev:
            B = self.B
            if not s.cells:
                self._ev[s] = B.id1(s.src)
            elif len(s.cells) == 1:
                self._ev[s] = s.cells[0]
            else:
                self._ev[s] = B.comp1(s.cells[-1], self.ev(PathCell(s.vertices[:-1], s.cells[:-1])))
        return self._ev[s]

    def ev2(self, cells: Sequence, at):
        """Left-normalized horizontal composite of 2-cells."""
        B = self.B
        if not cells:
            return B.id2(B.id1(at))
        out = cells[0]
        for a in cells[1:]:
            out = B.hcomp(a, out)
        return out

    def chi(self, t: PathCell, s: PathCell):
        """``ev(t)∘ev(s) ⇒ ev(s·t)``."""
        key = (t, s)
        if key not in self._chi:
            B = self.B
            if not t.cells:
                out = B.lunit(self.ev(s))
            elif not s.cells:
                out = B.runit(self.ev(t))
            elif len(t.cells) == 1:
                out = B.id2(self.ev(concat(s, t)))
            else:
                head = PathCell(t.vertices[:-1], t.cells[:-1])
                g = t.cells[-1]
                out = B.vcomp(B.hcomp(B.id2(g), self.chi(head, s)), B.assoc(g, self.ev(head), self.ev(s)))
            self._chi[key] = out
        return self._chi[key]

    def value(self, tree: tuple):
        B = self.B
        if tree[0] == "leaf":
            return tree[1]
        if tree[0] == "unit":
            return B.id1(tree[1])
        return B.comp1(self.value(tree[1]), self.value(tree[2]))

    def value2(self, tree: tuple):
        """Horizontal composite of a tree whose leaves are 2-cells."""
        B = self.B
        if tree[0] == "leaf":
            return tree[1]
        if tree[0] == "unit":
            return B.id2(B.id1(tree[1]))
        return B.hcomp(self.value2(tree[1]), self.value2(tree[2]))

    def leaves(self, tree: tuple) -> PathCell:
        if tree[0] == "leaf":
            return PathCell(self.B.ends(tree[1]), (tree[1],))
        if tree[0] == "unit":
            return PathCell((tree[1],), ())
        return concat(self.leaves(tree[2]), self.leaves(tree[1]))

    def to_left(self, tree: tuple):
        """Canonical ``value(tree) ⇒ ev(leaves(tree))``."""
        B = self.B
        if tree[0] == "leaf":
            return B.id2(tree[1])
        if tree[0] == "unit":
            return B.id2(B.id1(tree[1]))
        G, F = tree[1], tree[2]
        return B.vcomp(self.chi(self.leaves(G), self.leaves(F)), B.hcomp(self.to_left(G), self.to_left(F)))

    def between(self, src: tuple, tgt: tuple):
        """Canonical ``value(src) ⇒ value(tgt)`` for trees with equal leaves."""
        return self.B.vcomp(self.B.inverse(self.to_left(tgt)), self.to_left(src))


def leaf_trees(s: PathCell) -> list:
    return [("leaf", f) for f in s.cells]


# ---------------------------------------------------------------------------
# unbiased bicategories


def _one_step(B: Bicategory) -> Callable:
    return lambda x, y: B.one_cells(x, y)


def _two_step(B: Bicategory) -> Callable:
    cache = {}
    for a in B.all_two_cells():
        cache.setdefault(B.ends(B.cell_ends(a)[0]), []).append(a)
    return lambda x, y: cache.get((x, y), [])


@dataclass(frozen=True, eq=False)
class UnbiasedBicategory:
    """n-ary compositions for every ``n ≤ arity``.

    * ``ops1[s]`` / ``ops2[σ]``: composite of a string of 1-cells / 2-cells;
    * ``gamma[Φ]: comp(comp(Φ_1), ..., comp(Φ_k)) ⇒ comp(Φ_1 ... Φ_k)`` for
      nestings ``Φ`` (strings of strings);
    * ``iota[f]: f ⇒ comp(f)``.

    The underlying 1-cells and 2-cells live in ``cells``, whose own
    composition tables are not consulted except for vertical composition.
    """

    cells: FiniteBicategory
    ops1: Mapping[PathCell, str]
    ops2: Mapping[PathCell, str]
    gamma: Mapping[PathCell, str]
    iota: Mapping[str, str]
    arity: int
    name: str = ""

    @property
    def objects(self) -> tuple:
        return self.cells.objects

    def comp(self, s: PathCell):
        return _look(self.ops1, s, f"composite of arity {len(s)}")

    def comp2(self, s: PathCell):
        return _look(self.ops2, s, f"2-cell composite of arity {len(s)}")

    def g(self, nesting: PathCell):
        return _look(self.gamma, nesting, "associativity cell")

    def i(self, f):
        return _look(self.iota, f, "unit cell")

    def string_of(self, s: PathCell) -> PathCell:
        """Composites of the inner strings of a nesting."""
        return PathCell(s.vertices, tuple(self.comp(x) for x in s.cells))


def _cellular(B: Bicategory) -> FiniteBicategory:
    """The hom categories of ``B`` with all composition tables emptied."""
    if not isinstance(B, FiniteBicategory):
        raise TypeError("unbiased conversion needs a tabled bicategory")
    return FiniteBicategory(B.objects, B.homs, {}, {}, {}, {}, {}, {}, name=B.name)


def biased_to_unbiased(B: FiniteBicategory, N: int = 4, bracketing: str = "left") -> UnbiasedBicategory:
    """n-ary operations by bracketing (left-normalized unless told otherwise);
    associativity cells are the canonical coherence cells of ``B``."""
    if N < 2:
        raise ValueError(f"arity bound must be at least 2, got {N}")
    tree = BRACKETINGS[bracketing]
    K = Coherence(B)
    objs = B.objects
    ops1, ops2, gamma = {}, {}, {}
    for x in objs:
        for y in objs:
            for s in walks(objs, _one_step(B), x, y, N):
                ops1[s] = K.value(tree(leaf_trees(s), x))
            for s in walks(objs, _two_step(B), x, y, N):
                ops2[s] = K.value2(tree(leaf_trees(s), x))
    nested = nested_elements(objs, _one_step(B), 2, N, N)
    for x in objs:
        for y in objs:
            for phi, _ in nested(x, y):
                inner = [tree(leaf_trees(s), s.src) for s in phi.cells]
                flat = free_mult(phi)
                gamma[phi] = K.between(tree(inner, x), tree(leaf_trees(flat), x))
    iota = {f: B.id2(f) for f in B.all_one_cells()}
    return UnbiasedBicategory(_cellular(B), ops1, ops2, gamma, iota, N, name=f"{B.name} ({bracketing})")


def unbiased_to_biased(U: UnbiasedBicategory) -> FiniteBicategory:
    """Binary composition, identities and constraints read off ``U``."""
    if U.arity < 3:
        raise ValueError("recovering the associator needs ternary composites (arity ≥ 3)")
    C = U.cells
    ones = C.all_one_cells()
    ends = {f: C.ends(f) for f in ones}
    s1 = lambda *fs: PathCell((ends[fs[0]][0],) + tuple(ends[f][1] for f in fs), tuple(fs))
    empty = lambda x: PathCell((x,), ())
    nest_ = lambda *ss: PathCell((ss[0].src,) + tuple(s.tgt for s in ss), tuple(ss))
    two = lambda *cs: PathCell((ends[C.cell_ends(cs[0])[0]][0],)
                               + tuple(ends[C.cell_ends(c)[0]][1] for c in cs), tuple(cs))
    unit = {x: U.comp(empty(x)) for x in C.objects}
    comp, hcomp, assoc, lunit, runit = {}, {}, {}, {}, {}
    for f in ones:
        x, y = ends[f]
        for g in ones:
            if ends[g][0] == y:
                comp[(g, f)] = U.comp(s1(f, g))
    for a in C.all_two_cells():
        for b in C.all_two_cells():
            if ends[C.cell_ends(b)[0]][0] == ends[C.cell_ends(a)[0]][1]:
                hcomp[(b, a)] = U.comp2(two(a, b))
    idc = lambda f: C.id2(f)
    for f in ones:
        x, y = ends[f]
        for g in ones:
            if ends[g][0] != y:
                continue
            for h in ones:
                if ends[h][0] != ends[g][1]:
                    continue
                # (hg)f = comp(f, comp(g,h)) -> comp(comp f, comp(g,h)) -> comp(f,g,h)
                to_flat_1 = C.vcomp(U.g(nest_(s1(f), s1(g, h))), U.comp2(two(U.i(f), idc(comp[(h, g)]))))
                to_flat_2 = C.vcomp(U.g(nest_(s1(f, g), s1(h))), U.comp2(two(idc(comp[(g, f)]), U.i(h))))
                assoc[(h, g, f)] = C.vcomp(C.inverse(to_flat_2), to_flat_1)
        lunit[f] = C.vchain(C.inverse(U.i(f)), U.g(nest_(s1(f), empty(y))),
                            U.comp2(two(U.i(f), idc(unit[y]))))
        runit[f] = C.vchain(C.inverse(U.i(f)), U.g(nest_(empty(x), s1(f))),
                            U.comp2(two(idc(unit[x]), U.i(f))))
    return FiniteBicategory(C.objects, C.homs, comp, hcomp, unit, assoc, lunit, runit, name=C.name)


def _two_string_ends(U: UnbiasedBicategory, sigma: PathCell) -> tuple[PathCell, PathCell]:
    C = U.cells
    src = PathCell(sigma.vertices, tuple(C.cell_ends(a)[0] for a in sigma.cells))
    tgt = PathCell(sigma.vertices, tuple(C.cell_ends(a)[1] for a in sigma.cells))
    return src, tgt


def check_unbiased(U: UnbiasedBicategory, max_len: int = 2) -> ValidationReport:
    """Functoriality, naturality and invertibility of the structure cells and
    the associativity/unit coherence laws, on all instances whose arities stay
    within the bound. ``max_len`` limits each level of the triple nestings
    used for the associativity law."""
    C = U.cells
    rep = ValidationReport(subject=f"unbiased bicategory {U.name}".strip())
    N = U.arity
    objs = C.objects
    in_bounds = lambda *keys: all(k in U.ops1 or k in U.ops2 or k in U.gamma for k in keys)
    for s, f in U.ops1.items():
        _law(rep, "typing", (s,), lambda: C.ends(f) == (s.src, s.tgt))
    by_src: dict = {}
    ends2 = {sigma: _two_string_ends(U, sigma) for sigma in U.ops2}
    for sigma, a in U.ops2.items():
        src, tgt = ends2[sigma]
        by_src.setdefault(src, []).append((sigma, tgt))
        _law(rep, "typing", (sigma,), lambda: C.cell_ends(a) == (U.comp(src), U.comp(tgt)))
    for s in U.ops1:
        ident = PathCell(s.vertices, tuple(C.id2(f) for f in s.cells))
        _law(rep, "functoriality", (s,), lambda: U.comp2(ident) == C.id2(U.comp(s)))
    for src, items in by_src.items():
        for sigma, mid in items:
            for tau, _ in by_src.get(mid, []):
                both = PathCell(sigma.vertices, tuple(C.vcomp(b, a) for b, a in zip(tau.cells, sigma.cells)))
                _law(rep, "functoriality", (tau, sigma),
                     lambda: U.comp2(both) == C.vcomp(U.comp2(tau), U.comp2(sigma)))
    for f, c in U.iota.items():
        _law(rep, "unit cell", (f,), lambda: C.cell_ends(c) == (f, U.comp(PathCell(C.ends(f), (f,))))
             and C.is_invertible(c), "mistyped or not invertible")
    for phi, c in U.gamma.items():
        flat = free_mult(phi)
        _law(rep, "associativity cell", (phi,), lambda: C.cell_ends(c) == (U.comp(U.string_of(phi)), U.comp(flat))
             and C.is_invertible(c), "mistyped or not invertible")
    # naturality of gamma in nestings of 2-cells
    nested2 = nested_elements(objs, _two_step(C), 2, N, N)
    for x in objs:
        for y in objs:
            for Sig, _ in nested2(x, y):
                if not all(s in ends2 for s in Sig.cells):
                    continue
                src = PathCell(Sig.vertices, tuple(ends2[s][0] for s in Sig.cells))
                tgt = PathCell(Sig.vertices, tuple(ends2[s][1] for s in Sig.cells))
                outer = PathCell(Sig.vertices, tuple(U.comp2(s) for s in Sig.cells))
                _law(rep, "associativity naturality", (Sig,), lambda: C.vcomp(U.comp2(free_mult(Sig)), U.g(src))
                     == C.vcomp(U.g(tgt), U.comp2(outer)))
    for sigma in U.ops2:
        if len(sigma) == 1:
            a = sigma.cells[0]
            f, g = C.cell_ends(a)
            _law(rep, "unit naturality", (a,), lambda: C.vcomp(U.comp2(sigma), U.i(f)) == C.vcomp(U.i(g), a))
    # unit laws
    for s in U.ops1:
        single = PathCell((s.src, s.tgt), (s,))
        _law(rep, "unit law (outer)", (s,), lambda: C.vcomp(U.g(single), U.i(U.comp(s))) == C.id2(U.comp(s)))
        singles = PathCell(s.vertices, tuple(PathCell((u, v), (f,)) for u, v, f in s.steps()))
        iotas = PathCell(s.vertices, tuple(U.i(f) for f in s.cells))
        _law(rep, "unit law (inner)", (s,), lambda: C.vcomp(U.g(singles), U.comp2(iotas)) == C.id2(U.comp(s)))
    # associativity on triple nestings
    nested3 = nested_elements(objs, _one_step(C), 3, N, max_len)
    for x in objs:
        for y in objs:
            for Psi, _ in nested3(x, y):
                middle = [PathCell(Phi.vertices, tuple(U.comp(s) for s in Phi.cells)) for Phi in Psi.cells]
                grouped = PathCell(Psi.vertices, tuple(middle))
                flat_inner = PathCell(Psi.vertices, tuple(free_mult(Phi) for Phi in Psi.cells))
                outer_flat = free_mult(Psi)
                keys = [Psi.cells[i] for i in range(len(Psi))] + [flat_inner, grouped, outer_flat]
                try:
                    if not in_bounds(*keys) or not in_bounds(free_mult(grouped)):
                        continue
                except ValueError:
                    continue
                gam_inner = PathCell(Psi.vertices, tuple(U.g(Phi) for Phi in Psi.cells))
                _law(rep, "associativity law", (Psi,), lambda: C.vcomp(U.g(flat_inner), U.comp2(gam_inner))
                     == C.vcomp(U.g(outer_flat), U.g(grouped)))
    return rep


@dataclass(frozen=True, eq=False)
class UnbiasedIcon:
    """Identity-on-cells comparison ``θ_s: comp'(s) ⇒ comp(s)`` between two
    unbiased structures on the same cells."""

    source: UnbiasedBicategory
    target: UnbiasedBicategory
    components: Mapping[PathCell, str]

    def __call__(self, s: PathCell):
        return _look(self.components, s, "icon component")


def round_trip_icon(U: UnbiasedBicategory) -> UnbiasedIcon:
    """Compare ``U`` with ``biased_to_unbiased(unbiased_to_biased(U))``.

    Components are built from ``U``'s own structure cells:
    ``θ_() = 1``, ``θ_(f) = ι_f`` and
    ``θ_{s·f} = γ_{(s),(f)} · comp(θ_s, ι_f)``.
    """
    B = unbiased_to_biased(U)
    V = biased_to_unbiased(B, U.arity)
    C = U.cells
    theta: dict = {}
    for s in sorted(U.ops1, key=len):
        if not s.cells:
            theta[s] = C.id2(U.comp(s))
        elif len(s) == 1:
            theta[s] = U.i(s.cells[0])
        else:
            head = PathCell(s.vertices[:-1], s.cells[:-1])
            last = PathCell(s.vertices[-2:], s.cells[-1:])
            pair = PathCell((s.src, head.tgt, s.tgt), (theta[head], U.i(s.cells[-1])))
            theta[s] = C.vcomp(U.g(PathCell((s.src, head.tgt, s.tgt), (head, last))), U.comp2(pair))
    return UnbiasedIcon(V, U, theta)


def check_unbiased_icon(t: UnbiasedIcon, invertible: bool = True) -> ValidationReport:
    U, V = t.target, t.source
    C = U.cells
    rep = ValidationReport(subject="unbiased icon")
    for s in U.ops1:
        _law(rep, "typing", (s,), lambda: C.cell_ends(t(s)) == (V.comp(s), U.comp(s)))
        if invertible:
            _law(rep, "invertibility", (s,), lambda: C.is_invertible(t(s)))
    for sigma in U.ops2:
        src, tgt = _two_string_ends(U, sigma)
        _law(rep, "naturality", (sigma,), lambda: C.vcomp(U.comp2(sigma), t(src)) == C.vcomp(t(tgt), V.comp2(sigma)))
    for phi in U.gamma:
        outer_v = V.string_of(phi)
        thetas = PathCell(phi.vertices, tuple(t(s) for s in phi.cells))
        _law(rep, "associativity", (phi,), lambda: C.vcomp(t(free_mult(phi)), V.g(phi))
             == C.vchain(U.g(phi), U.comp2(thetas), t(outer_v)))
    for f in U.iota:
        _law(rep, "units", (f,), lambda: C.vcomp(t(PathCell(C.ends(f), (f,))), V.i(f)) == U.i(f))
    return rep


def biased_round_trip(B: FiniteBicategory, N: int = 4, bracketing: str = "left"
                      ) -> tuple[FiniteBicategory, PseudoIcon]:
    """``B' = unbiased_to_biased(biased_to_unbiased(B))`` with the comparison
    pseudofunctor ``B -> B'`` (identity on cells) and its identity icon."""
    B2 = unbiased_to_biased(biased_to_unbiased(B, N, bracketing))
    comp = {(g, f): B2.id2(B2.comp1(g, f)) for (g, f) in B.comp_table}
    unit = {x: B2.id2(B2.id1(x)) for x in B.objects}
    ones, twos = B.all_one_cells(), B.all_two_cells()
    R = tabled_pseudofunctor(B, B2, {x: x for x in B.objects}, {f: f for f in ones}, {a: a for a in twos},
                             comp, unit, name="round trip")
    return B2, identity_icon(R)


# ---------------------------------------------------------------------------
# strictification


class Strictification(Bicategory):
    """Strict 2-category of composable strings in ``B``.

    1-cells ``x -> y`` are strings (listed up to ``max_len``; composites of any
    length are computed lazily), 2-cells are triples ``(s, t, α)`` with
    ``α: ev(s) ⇒ ev(t)`` in ``B``. Horizontal composition conjugates by the
    canonical cells, so composition of strings is concatenation and every
    constraint is an identity.
    """

    def __init__(self, B: Bicategory, max_len: int = 2) -> None:
        self.base = B
        self.max_len = max_len
        self.coherence = Coherence(B)
        self.objects = tuple(B.objects)
        self.name = f"st({B.name})"
        self._hcomp: dict = {}

    def ev(self, s: PathCell):
        return self.coherence.ev(s)

    def one_cells(self, x, y) -> list:
        return walks(self.objects, _one_step(self.base), x, y, self.max_len)

    def two_cells(self, f, g) -> list:
        return [(f, g, a) for a in self.base.two_cells(self.ev(f), self.ev(g))]

    def ends(self, f) -> tuple:
        return f.src, f.tgt

    def cell_ends(self, a) -> tuple:
        return a[0], a[1]

    def id1(self, x):
        return PathCell((x,), ())

    def comp1(self, g, f):
        return concat(f, g)

    def id2(self, f):
        return (f, f, self.base.id2(self.ev(f)))

    def vcomp(self, b, a):
        if b[0] != a[1]:
            raise ValueError(f"2-cells {b!r} and {a!r} are not composable")
        return (a[0], b[1], self.base.vcomp(b[2], a[2]))

    def hcomp(self, b, a):
        key = (b, a)
        if key not in self._hcomp:
            B, K = self.base, self.coherence
            (s, s2, al), (t, t2, be) = a, b
            cell = B.vchain(K.chi(t2, s2), B.hcomp(be, al), B.inverse(K.chi(t, s)))
            self._hcomp[key] = (concat(s, t), concat(s2, t2), cell)
        return self._hcomp[key]

    def assoc(self, h, g, f):
        return self.id2(concat(concat(f, g), h))

    def lunit(self, f):
        return self.id2(f)

    def runit(self, f):
        return self.id2(f)

    def inverse(self, a):
        return (a[1], a[0], self.base.inverse(a[2]))

    @property
    def embed(self) -> Pseudofunctor:
        """``B -> st(B)``: ``f ↦ (f)``; comparison cells are identities."""
        B = self.base
        one = lambda f: PathCell(B.ends(f), (f,))
        return Pseudofunctor(
            B, self, lambda x: x, one,
            lambda a: (one(B.cell_ends(a)[0]), one(B.cell_ends(a)[1]), a),
            lambda g, f: (concat(one(f), one(g)), one(B.comp1(g, f)), B.id2(B.comp1(g, f))),
            lambda x: (self.id1(x), one(B.id1(x)), B.id2(B.id1(x))),
            name="embed",
        )

    @property
    def evaluation(self) -> Pseudofunctor:
        """``st(B) -> B``: left-normalized evaluation with the canonical cells."""
        B = self.base
        return Pseudofunctor(
            self, B, lambda x: x, self.ev, lambda a: a[2],
            lambda g, f: self.coherence.chi(g, f), lambda x: B.id2(B.id1(x)), name="ev",
        )


def strictify(B: Bicategory, max_len: int = 2) -> Strictification:
    return Strictification(B, max_len)


def _random_tree(rng: random.Random, leaves: list) -> tuple:
    if len(leaves) == 1:
        return leaves[0]
    k = rng.randrange(1, len(leaves))
    return ("comp", _random_tree(rng, leaves[k:]), _random_tree(rng, leaves[:k]))


def _graft(shape: tuple, leaves: Sequence) -> tuple:
    """Replace the i-th leaf of ``shape`` by ``leaves[i]``."""
    it = iter(leaves)

    def go(t):
        if t[0] == "leaf":
            return ("leaf", next(it))
        first = go(t[2])
        return ("comp", go(t[1]), first)

    return go(shape)


def compare_pastings(S: Strictification, samples: int = 50, seed: int = 0, width: int = 4) -> ValidationReport:
    """Evaluate random two-row pastings in ``B`` (random bracketings, canonical
    cells inserted) and in ``st(B)`` (strict composites); they must agree."""
    B, K = S.base, S.coherence
    rep = ValidationReport(subject=f"pasting comparison (seed {seed})")
    rng = random.Random(seed)
    E = S.embed
    starts = [x for x in B.objects if any(B.one_cells(x, y) for y in B.objects)]
    if not starts:
        return rep
    for n in range(samples):
        x = rng.choice(starts)
        fs, gs, hs, alphas, betas = [], [], [], [], []
        at = x
        for _ in range(rng.randint(1, width)):
            options = [f for y in B.objects for f in B.one_cells(at, y)]
            if not options:
                break
            f = rng.choice(options)
            a = rng.choice(B.two_cells_from(f))
            g = B.cell_ends(a)[1]
            b = rng.choice(B.two_cells_from(g))
            fs.append(f), gs.append(g), hs.append(B.cell_ends(b)[1]), alphas.append(a), betas.append(b)
            at = B.ends(f)[1]
        shape1 = _random_tree(rng, [("leaf", None)] * len(fs))
        shape2 = _random_tree(rng, [("leaf", None)] * len(fs))
        t = lambda shape, xs: _graft(shape, xs)
        v1 = K.value2(t(shape1, alphas))
        v2 = K.value2(t(shape2, betas))
        inv = B.inverse
        in_b = B.vchain(K.to_left(t(shape2, hs)), v2, inv(K.to_left(t(shape2, gs))),
                        K.to_left(t(shape1, gs)), v1, inv(K.to_left(t(shape1, fs))))
        row1 = [E.two(a) for a in alphas]
        row2 = [E.two(b) for b in betas]
        top_l = _strict_fold(S, row1)
        top_r = _strict_value(S, t(shape1, row1))
        bot = _strict_value(S, t(shape2, row2))
        _law(rep, "strict associativity", (n,), lambda: top_l == top_r)
        _law(rep, "pasting", (n, len(fs)), lambda: S.vcomp(bot, top_l)[2] == in_b)
    return rep


def _strict_fold(S: Strictification, cells: Sequence):
    out = cells[0]
    for c in cells[1:]:
        out = S.hcomp(c, out)
    return out


def _strict_value(S: Strictification, tree: tuple):
    if tree[0] == "leaf":
        return tree[1]
    return S.hcomp(_strict_value(S, tree[1]), _strict_value(S, tree[2]))


# ---------------------------------------------------------------------------
# iconic tricategories


@dataclass(frozen=True, eq=False)
class IconicTricategory:
    """A pseudo T-algebra in the iconic presentation.

    * ``homs[(x, y)]``: hom bicategory (objects are 1-cells ``x -> y``);
    * ``units[x]``: pseudofunctor from :func:`terminal_bicategory` to ``homs[(x, x)]``;
    * ``compose[(x, y, z)]``: pseudofunctor ``homs[(y,z)] × homs[(x,y)] -> homs[(x,z)]``;
    * ``assoc[(x, y, z, w)][(γ, β, α)]``: icon component
      ``(γ⊗β)⊗α ⇛ γ⊗(β⊗α)`` (a 2-cell of ``homs[(x, w)]``);
    * ``lunit[(x, y)][β]: u_y⊗β ⇛ β`` and ``runit[(x, y)][β]: β⊗u_x ⇛ β``.

    The higher modifications are not stored; item 7 checks the icon
    equations they would otherwise witness.
    """

    objects: tuple
    homs: Mapping[tuple, FiniteBicategory]
    units: Mapping[str, Pseudofunctor]
    compose: Mapping[tuple, Pseudofunctor]
    assoc: Mapping[tuple, Mapping]
    lunit: Mapping[tuple, Mapping]
    runit: Mapping[tuple, Mapping]
    name: str = ""

    def tensor(self, x, y, z) -> Pseudofunctor:
        return _look(self.compose, (x, y, z), "composition pseudofunctor")

    def unit_cell(self, x):
        """The 1-cell ``u_x`` of ``homs[(x, x)]`` picked out by the unit."""
        return self.units[x].one("*")

    def with_tables(self, **changes) -> "IconicTricategory":
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict:
        return {
            "objects": sorted(self.objects),
            "homs": [{"src": x, "tgt": y, "bicategory": B.to_json()} for (x, y), B in sorted(self.homs.items())],
            "units": {x: F.to_json() for x, F in sorted(self.units.items())},
            "compose": [{"objects": list(k), "pseudofunctor": F.to_json()} for k, F in sorted(self.compose.items())],
            "assoc": [{"objects": list(k), "components": [[_listify(a), b] for a, b in v.items()]}
                      for k, v in sorted(self.assoc.items())],
            "lunit": [{"objects": list(k), "components": [[a, b] for a, b in v.items()]}
                      for k, v in sorted(self.lunit.items())],
            "runit": [{"objects": list(k), "components": [[a, b] for a, b in v.items()]}
                      for k, v in sorted(self.runit.items())],
        }

    @classmethod
    def from_json(cls, doc: Mapping, name: str = "") -> "IconicTricategory":
        try:
            homs = {(h["src"], h["tgt"]): FiniteBicategory.from_json(h["bicategory"]) for h in doc["homs"]}
            T = terminal_bicategory()
            units = {x: pseudofunctor_from_json(T, homs[(x, x)], d, name=f"I_{x}") for x, d in doc["units"].items()}
            compose = {}
            for c in doc["compose"]:
                x, y, z = c["objects"]
                compose[(x, y, z)] = pseudofunctor_from_json(
                    ProductBicategory((homs[(y, z)], homs[(x, y)])), homs[(x, z)], c["pseudofunctor"], name="⊗")
            comps = lambda key: {tuple(c["objects"]): {_tuplify(a): b for a, b in c["components"]}
                                 for c in doc[key]}
            return cls(tuple(doc["objects"]), homs, units, compose, comps("assoc"), comps("lunit"),
                       comps("runit"), name=name or doc.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed tricategory document: {exc}") from None


def _icon_sides(T: IconicTricategory, x, y, z, w) -> tuple[Pseudofunctor, Pseudofunctor, ProductBicategory]:
    """``⊗∘(⊗×1)`` and ``⊗∘(1×⊗)`` on ``A(z,w) × A(y,z) × A(x,y)``."""
    P = ProductBicategory((T.homs[(z, w)], T.homs[(y, z)], T.homs[(x, y)]))
    pi = lambda i: projection(P, i)
    pair = lambda i, j: tuple_pseudofunctor(P, [pi(i), pi(j)])
    left = compose_pseudofunctors(T.tensor(x, y, w), tuple_pseudofunctor(
        P, [compose_pseudofunctors(T.tensor(y, z, w), pair(0, 1)), pi(2)]))
    right = compose_pseudofunctors(T.tensor(x, z, w), tuple_pseudofunctor(
        P, [pi(0), compose_pseudofunctors(T.tensor(x, y, z), pair(1, 2))]))
    return left, right, P


def _unit_sides(T: IconicTricategory, x, y, side: str) -> tuple[Pseudofunctor, Pseudofunctor]:
    P = ProductBicategory((T.homs[(x, y)],))
    me = projection(P, 0)
    if side == "left":
        unit = compose_pseudofunctors(T.units[y], collapse(P))
        F = compose_pseudofunctors(T.tensor(x, y, y), tuple_pseudofunctor(P, [unit, me]))
    else:
        unit = compose_pseudofunctors(T.units[x], collapse(P))
        F = compose_pseudofunctors(T.tensor(x, x, y), tuple_pseudofunctor(P, [me, unit]))
    return F, me


def check_iconic_tricategory(T: IconicTricategory) -> ValidationReport:
    """Items 1-7: objects and homs, hom bicategories, unit and composition
    pseudofunctors, invertible associativity and unit icons, and the pentagon
    and unit equations between icon components."""
    rep = ValidationReport(subject=f"iconic tricategory {T.name}".strip())
    objs = T.objects
    _law(rep, "item 1", (), lambda: len(set(objs)) == len(objs), "repeated object")
    for x in objs:
        for y in objs:
            _law(rep, "item 1", (x, y), lambda: (x, y) in T.homs, "missing hom bicategory")
    if not rep.ok:
        return rep
    for xy, B in sorted(T.homs.items()):
        rep.extend(check_bicategory(B), prefix=f"item 2 {xy}: ")
    for x in objs:
        F = T.units.get(x)
        if F is None:
            rep.add("item 3", (x,), "missing unit pseudofunctor")
            continue
        rep.extend(check_pseudofunctor(F), prefix=f"item 3 ({x}): ")
    for x, y, z in itertools.product(objs, repeat=3):
        if (x, y, z) not in T.compose:
            rep.add("item 4", (x, y, z), "missing composition pseudofunctor")
            continue
        rep.extend(check_pseudofunctor(T.compose[(x, y, z)]), prefix=f"item 4 ({x},{y},{z}): ")
    if not rep.ok:
        return rep
    for x, y, z, w in itertools.product(objs, repeat=4):
        F, G, P = _icon_sides(T, x, y, z, w)
        comps = T.assoc.get((x, y, z, w), {})
        rep.extend(check_pseudo_icon(PseudoIcon(F, G, comps)), prefix=f"item 5 ({x},{y},{z},{w}): ")
    for x, y in itertools.product(objs, repeat=2):
        for side, table in (("left", T.lunit), ("right", T.runit)):
            F, G = _unit_sides(T, x, y, side)
            comps = {(b,): c for b, c in table.get((x, y), {}).items()}
            rep.extend(check_pseudo_icon(PseudoIcon(F, G, comps)), prefix=f"item 6 {side} ({x},{y}): ")
    if rep.ok:
        rep.extend(_item7(T))
    return rep


def _item7(T: IconicTricategory) -> ValidationReport:
    rep = ValidationReport()
    objs = T.objects
    t = lambda x, y, z, b, a: T.tensor(x, y, z).one((b, a))
    t2 = lambda x, y, z, b, a: T.tensor(x, y, z).two((b, a))
    A = lambda x, y, z, w, c, b, a: _look(T.assoc[(x, y, z, w)], (c, b, a), "associativity component")
    lam = lambda x, y, b: _look(T.lunit[(x, y)], b, "left unit component")
    rho = lambda x, y, b: _look(T.runit[(x, y)], b, "right unit component")
    ones = {xy: B.all_one_cells() for xy, B in T.homs.items()}
    for x, y, z, v, w in itertools.product(objs, repeat=5):
        H = T.homs[(x, w)]
        for d, c, b, a in itertools.product(ones[(v, w)], ones[(z, v)], ones[(y, z)], ones[(x, y)]):
            idd = T.homs[(v, w)].id2(d)
            ida = T.homs[(x, y)].id2(a)
            _law(rep, "item 7 pentagon", (d, c, b, a), lambda: H.vcomp(
                A(x, z, v, w, d, c, t(x, y, z, b, a)), A(x, y, z, w, t(z, v, w, d, c), b, a))
                == H.vchain(t2(x, v, w, idd, A(x, y, z, v, c, b, a)),
                            A(x, y, v, w, d, t(y, z, v, c, b), a),
                            t2(x, y, w, A(y, z, v, w, d, c, b), ida)))
    for x, y, z in itertools.product(objs, repeat=3):
        H = T.homs[(x, z)]
        for c, b in itertools.product(ones[(y, z)], ones[(x, y)]):
            idc, idb = T.homs[(y, z)].id2(c), T.homs[(x, y)].id2(b)
            uy, uz, ux = T.unit_cell(y), T.unit_cell(z), T.unit_cell(x)
            _law(rep, "item 7 middle unit", (c, b), lambda: H.vcomp(
                t2(x, y, z, idc, lam(x, y, b)), A(x, y, y, z, c, uy, b)) == t2(x, y, z, rho(y, z, c), idb))
            _law(rep, "item 7 left unit", (c, b), lambda: H.vcomp(
                lam(x, z, t(x, y, z, c, b)), A(x, y, z, z, uz, c, b)) == t2(x, y, z, lam(y, z, c), idb))
            _law(rep, "item 7 right unit", (c, b), lambda: H.vcomp(
                t2(x, y, z, idc, rho(x, y, b)), A(x, x, y, z, c, b, ux)) == rho(x, z, t(x, y, z, c, b)))
    return rep


def _strict_units(B: Bicategory, u) -> dict:
    return {"obj": {"*": B.ends(u)[0]}, "one": {"*": u}, "two": {"1_*": B.id2(u)},
            "comp": {("*", "*"): B.id2(u)}, "unit": {"*": B.id2(u)}}


def iconic_from_strict(S) -> IconicTricategory:
    """View a strict 3-category as an iconic tricategory with strict homs,
    strict composition pseudofunctors and identity icons."""
    K = S.one_cells
    objs = K.objects
    homs = {}
    for x in objs:
        for y in objs:
            fs = K.hom(x, y)
            hcats = {(f, g): S.homs[(f, g)] for f in fs for g in fs}
            comp, hcomp = {}, {}
            for (f, g), H in hcats.items():
                for h in fs:
                    H2 = hcats[(g, h)]
                    for b in list(H2.objects) + list(H2.morphisms):
                        for a in list(H.objects) + list(H.morphisms):
                            if (b in H2.objects) != (a in H.objects) or (b, a) not in S.vcomp:
                                continue
                            (comp if a in H.objects else hcomp)[(b, a)] = S.vcomp[(b, a)]
            ident = {f: S.id2[f] for f in fs}
            comp_full = {k: v for k, v in comp.items()}
            ones = [a for H in hcats.values() for a in H.objects]
            ends = {a: fg for fg, H in hcats.items() for a in H.objects}
            three_id = lambda a: hcats[ends[a]].identity[a]
            assoc = {(c, b, a): three_id(comp_full[(c, comp_full[(b, a)])]) for a in ones for b in ones for c in ones
                     if ends[b][0] == ends[a][1] and ends[c][0] == ends[b][1]}
            lu = {a: three_id(a) for a in ones}
            homs[(x, y)] = FiniteBicategory(
                tuple(fs), {(f, g): H for (f, g), H in hcats.items()}, comp_full, hcomp, ident, assoc, lu, dict(lu),
                name=f"{S.name}({x},{y})")
    T1 = terminal_bicategory()
    units = {x: tabled_pseudofunctor(T1, homs[(x, x)], **_strict_units(homs[(x, x)], S.id2[K.identity[x]]),
                                     name=f"I_{x}") for x in objs}
    compose = {}
    for x, y, z in itertools.product(objs, repeat=3):
        P = ProductBicategory((homs[(y, z)], homs[(x, y)]))
        Hz = homs[(x, z)]
        one = {(b, a): S.hcomp[(b, a)] for b, a in P.all_one_cells()}
        F = tabled_pseudofunctor(
            P, Hz, {(g, f): K.comp(g, f) for g, f in P.objects}, one,
            {(b, a): S.hcomp[(b, a)] for b, a in P.all_two_cells()},
            {(g, f): Hz.id2(Hz.comp1(one[g], one[f])) for f in P.all_one_cells() for g in P.all_one_cells()
             if P.ends(g)[0] == P.ends(f)[1]},
            {(g, f): Hz.id2(Hz.id1(K.comp(g, f))) for g, f in P.objects}, name="⊗")
        compose[(x, y, z)] = F
    T = IconicTricategory(objs, homs, units, compose, {}, {}, {}, name=S.name)
    assoc = {}
    for x, y, z, w in itertools.product(objs, repeat=4):
        F, _, P = _icon_sides(T, x, y, z, w)
        assoc[(x, y, z, w)] = {c: homs[(x, w)].id2(F.one(c)) for c in P.all_one_cells()}
    lunit = {(x, y): {b: homs[(x, y)].id2(b) for b in homs[(x, y)].all_one_cells()} for x in objs for y in objs}
    return T.with_tables(assoc=assoc, lunit=lunit, runit=dict(lunit))


def to_strict_three_category(T: IconicTricategory):
    """Read the tables of ``T`` as a strict 3-category; meaningful when the
    homs, pseudofunctors and icons are strict (validate the result)."""
    from .algebras import StrictThreeCategory
    objs = T.objects
    morphisms, compose, vcomp, hcomp, id2, homs = {}, {}, {}, {}, {}, {}
    for (x, y), B in T.homs.items():
        for f in B.objects:
            morphisms[f] = (x, y)
        homs.update(B.homs)
        vcomp.update(B.comp_table)
        vcomp.update(B.hcomp_table)
        id2.update(B.unit_table)
    identity = {x: T.units[x].obj("*") for x in objs}
    for (x, y, z), F in T.compose.items():
        P = F.source
        for g, f in P.objects:
            compose[(g, f)] = F.obj((g, f))
        for c in P.all_one_cells():
            hcomp[c] = F.one(c)
        for c in P.all_two_cells():
            hcomp[c] = F.two(c)
    K = FiniteCategory(objs, morphisms, identity, compose, name=f"{T.name} 1-cells")
    pairs = [(f, g) for f in morphisms for g in morphisms if morphisms[f] == morphisms[g]]
    homs = {fg: homs.get(fg, FiniteCategory((), {}, {}, {})) for fg in pairs}
    return StrictThreeCategory(K, homs, vcomp, hcomp, id2, name=T.name)


def doubly_degenerate_tricategory(M: MonoidalCategory, interchange: Callable, name: str = "") -> IconicTricategory:
    """One object ``*``, one 1-cell, hom bicategory ``one_object_embed(M)``.

    ``⊗`` is the tensor of ``M`` on pairs; its comparison cell at
    ``((b2', b1'), (b2, b1))`` is ``interchange(b2', b1', b2, b1)``, a 2-cell
    ``(b2'⊗b1')⊗(b2⊗b1) ⇒ (b2'⊗b2)⊗(b1'⊗b1)``. The icons are identities, so
    ``M`` must be strict and skeletal for them to type-check.
    """
    H = one_object_embed(M, obj="e")
    P = ProductBicategory((H, H))
    C = M.category
    one = {(b, a): M.tensor_obj(b, a) for b, a in P.all_one_cells()}
    comp = {}
    for g in P.all_one_cells():
        for f in P.all_one_cells():
            comp[(g, f)] = interchange(g[0], g[1], f[0], f[1])
    F = tabled_pseudofunctor(
        P, H, {("e", "e"): "e"}, one, {(b, a): M.tensor[(b, a)] for b, a in P.all_two_cells()}, comp,
        {("e", "e"): C.identity[M.unit]}, name="⊗")
    T1 = terminal_bicategory()
    unit = tabled_pseudofunctor(T1, H, **_strict_units(H, M.unit), name="I")
    T = IconicTricategory(("*",), {("*", "*"): H}, {"*": unit}, {("*", "*", "*"): F}, {}, {}, {},
                          name=name or f"doubly degenerate {M.name}")
    Fl, _, P3 = _icon_sides(T, "*", "*", "*", "*")
    assoc = {("*",) * 4: {c: H.id2(Fl.one(c)) for c in P3.all_one_cells()}}
    lu = {("*", "*"): {b: H.id2(b) for b in H.all_one_cells()}}
    return T.with_tables(assoc=assoc, lunit=lu, runit=dict(lu))


def extract_braiding(T: IconicTricategory) -> dict:
    """For one object and one 1-cell: ``c(a, b)`` is the composition
    comparison at ``((0, a), (b, 0))``, a 2-cell ``a⊗b ⇒ b⊗a``."""
    if len(T.objects) != 1:
        raise StructuralError("braiding extraction needs exactly one object")
    x = T.objects[0]
    H = T.homs[(x, x)]
    if len(H.objects) != 1:
        raise StructuralError("braiding extraction needs exactly one 1-cell")
    u = T.unit_cell(x)
    F = T.tensor(x, x, x)
    ones = H.all_one_cells()
    return {(a, b): F.comp((u, a), (b, u)) for a in ones for b in ones}
