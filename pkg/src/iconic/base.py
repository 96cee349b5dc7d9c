"""Finite categories, functors and natural transformations.

This is the base of enrichment: hom-objects of graphs are either finite
sets (:class:`FinSet`) or finite categories (:class:`FiniteCategory`).
Every structure is given by explicit tables so that a failed law can be
reported verbatim.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence, Union

from .report import SearchTooLarge, StructuralError, ValidationReport

DEFAULT_CAP = 10**6


# ---------------------------------------------------------------------------
# finite categories


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """A category presented by tables.

    ``morphisms`` maps each morphism id to its ``(dom, cod)`` pair and
    ``compose`` maps ``(g, f)`` to ``g∘f`` for every composable pair.
    """

    objects: tuple
    morphisms: Mapping[str, tuple]
    identity: Mapping[str, str]
    compose: Mapping[tuple, str]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", {m: tuple(dc) for m, dc in self.morphisms.items()})
        object.__setattr__(self, "identity", dict(self.identity))
        object.__setattr__(self, "compose", {tuple(k): v for k, v in self.compose.items()})

    def dom(self, m: str) -> str:
        return self.morphisms[m][0]

    def cod(self, m: str) -> str:
        return self.morphisms[m][1]

    def comp(self, g: str, f: str) -> str:
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise StructuralError(f"{self.name or 'category'}: no composite for {g}∘{f}") from None

    def comp_path(self, ms: Sequence[str], at: str | None = None) -> str:
        """Compose ``ms`` given in diagrammatic order (first morphism first)."""
        if not ms:
            if at is None:
                raise ValueError("empty composite needs an object")
            return self.identity[at]
        out = ms[0]
        for m in ms[1:]:
            out = self.comp(m, out)
        return out

    @cached_property
    def _homs(self) -> dict:
        table: dict = {(x, y): [] for x in self.objects for y in self.objects}
        for m, (d, c) in self.morphisms.items():
            if (d, c) in table:
                table[(d, c)].append(m)
        return table

    def hom(self, x: str, y: str) -> list[str]:
        return self._homs[(x, y)]

    @cached_property
    def _inverses(self) -> dict:
        inv = {}
        for m, (d, c) in self.morphisms.items():
            for n in self._homs.get((c, d), ()):
                if self.compose.get((n, m)) == self.identity.get(d) and \
                        self.compose.get((m, n)) == self.identity.get(c):
                    inv[m] = n
                    break
        return inv

    def is_iso(self, m: str) -> bool:
        return m in self._inverses

    def inverse(self, m: str) -> str:
        try:
            return self._inverses[m]
        except KeyError:
            raise ValueError(f"{m} is not invertible") from None

    def is_discrete(self) -> bool:
        return len(self.morphisms) == len(self.objects)

    def key(self) -> tuple:
        return (
            tuple(sorted(self.objects)),
            tuple(sorted(self.morphisms.items())),
            tuple(sorted(self.identity.items())),
            tuple(sorted(self.compose.items())),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteCategory) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def to_json(self) -> dict:
        return {
            "objects": sorted(self.objects),
            "morphisms": [
                {"id": m, "dom": d, "cod": c} for m, (d, c) in sorted(self.morphisms.items())
            ],
            "identity": dict(sorted(self.identity.items())),
            "compose": {f"{g}|{f}": h for (g, f), h in sorted(self.compose.items())},
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "FiniteCategory":
        try:
            morphisms = {m["id"]: (m["dom"], m["cod"]) for m in doc["morphisms"]}
            compose = {}
            for key, h in doc["compose"].items():
                g, f = key.split("|")
                compose[(g, f)] = h
            return cls(tuple(doc["objects"]), morphisms, dict(doc["identity"]), compose)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise StructuralError(f"bad category document: {exc}") from exc


def dumps(doc: Mapping) -> str:
    """Canonical JSON text (sorted keys) used for golden comparisons."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def check_structure(C: FiniteCategory) -> None:
    """Raise :class:`StructuralError` when the tables reference unknown ids."""
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        raise StructuralError("duplicate object ids")
    for m, (d, c) in C.morphisms.items():
        if d not in objs or c not in objs:
            raise StructuralError(f"morphism {m} has dangling endpoint")
    for x in C.objects:
        i = C.identity.get(x)
        if i is None:
            raise StructuralError(f"object {x} has no identity")
        if i not in C.morphisms or C.morphisms[i] != (x, x):
            raise StructuralError(f"identity of {x} is not an endomorphism of {x}")
    if set(C.identity) - objs:
        raise StructuralError("identity assigned to unknown object")
    for (g, f), h in C.compose.items():
        for m in (g, f, h):
            if m not in C.morphisms:
                raise StructuralError(f"composition entry {g}∘{f} mentions unknown morphism {m}")


def validate_category(C: FiniteCategory) -> ValidationReport:
    """Check closure, identity laws and associativity exhaustively."""
    check_structure(C)
    rep = ValidationReport(subject=f"category {C.name}".strip())
    for (g, f), h in C.compose.items():
        rep.expect(C.cod(f) == C.dom(g), "composable", (g, f), "entry for non-composable pair")
        rep.expect(C.morphisms[h] == (C.dom(f), C.cod(g)), "closure", (g, f),
                   f"{h} has wrong endpoints")
    for f, (d, c) in C.morphisms.items():
        for y in C.objects:
            for g in C.hom(c, y):
                rep.expect((g, f) in C.compose, "total", (g, f), "missing composite")
    if not rep.ok:
        return rep
    for f, (d, c) in C.morphisms.items():
        rep.expect(C.comp(C.identity[c], f) == f, "identity", (C.identity[c], f), "id∘f ≠ f")
        rep.expect(C.comp(f, C.identity[d]) == f, "identity", (f, C.identity[d]), "f∘id ≠ f")
    for f, (a, b) in C.morphisms.items():
        for y in C.objects:
            for g in C.hom(b, y):
                gf = C.comp(g, f)
                for z in C.objects:
                    for h in C.hom(y, z):
                        lhs = C.comp(h, gf)
                        rhs = C.comp(C.comp(h, g), f)
                        rep.expect(lhs == rhs, "associativity", (h, g, f), f"{lhs} ≠ {rhs}")
    return rep


# ---------------------------------------------------------------------------
# standard small categories


def empty_category() -> FiniteCategory:
    return FiniteCategory((), {}, {}, {}, name="0")


def discrete(objects: Iterable[str], name: str = "") -> FiniteCategory:
    objs = tuple(objects)
    return FiniteCategory(
        objs,
        {f"1_{x}": (x, x) for x in objs},
        {x: f"1_{x}" for x in objs},
        {(f"1_{x}", f"1_{x}"): f"1_{x}" for x in objs},
        name=name,
    )


def terminal() -> FiniteCategory:
    return FiniteCategory(("*",), {"1_*": ("*", "*")}, {"*": "1_*"},
                          {("1_*", "1_*"): "1_*"}, name="1")


def walking_arrow() -> FiniteCategory:
    """The category ``0 -> 1``."""
    return FiniteCategory(
        ("0", "1"),
        {"1_0": ("0", "0"), "1_1": ("1", "1"), "a": ("0", "1")},
        {"0": "1_0", "1": "1_1"},
        {("1_0", "1_0"): "1_0", ("1_1", "1_1"): "1_1", ("a", "1_0"): "a", ("1_1", "a"): "a"},
        name="2",
    )


def codiscrete(objects: Iterable[str], name: str = "") -> FiniteCategory:
    """Exactly one morphism between any two objects (all invertible)."""
    objs = tuple(objects)
    morphisms = {f"{x}~{y}": (x, y) for x in objs for y in objs}
    compose = {(f"{y}~{z}", f"{x}~{y}"): f"{x}~{z}" for x in objs for y in objs for z in objs}
    return FiniteCategory(objs, morphisms, {x: f"{x}~{x}" for x in objs}, compose, name=name)


def one_object(elements: Sequence[str], op: Callable[[str, str], str], unit: str,
               obj: str = "*", name: str = "") -> FiniteCategory:
    """One-object category from a monoid; ``op(g, f)`` is ``g∘f``."""
    return FiniteCategory(
        (obj,),
        {e: (obj, obj) for e in elements},
        {obj: unit},
        {(g, f): op(g, f) for g in elements for f in elements},
        name=name,
    )


def cyclic_group(n: int, prefix: str = "g") -> FiniteCategory:
    els = [f"{prefix}{i}" for i in range(n)]
    return one_object(els, lambda g, f: f"{prefix}{(int(g[len(prefix):]) + int(f[len(prefix):])) % n}",
                      els[0], name=f"Z/{n}")


def opposite(C: FiniteCategory) -> FiniteCategory:
    """Same ids, reversed arrows: ``f∘g`` in ``C^op`` is ``g∘f`` in ``C``."""
    return FiniteCategory(C.objects, {m: (c, d) for m, (d, c) in C.morphisms.items()},
                          C.identity, {(f, g): h for (g, f), h in C.compose.items()},
                          name=f"{C.name}^op")


# ---------------------------------------------------------------------------
# products and coproducts


def _pair(a: str, b: str) -> str:
    return f"({a},{b})"


def product(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    objects = tuple(_pair(x, y) for x in C.objects for y in D.objects)
    morphisms = {
        _pair(f, g): (_pair(C.dom(f), D.dom(g)), _pair(C.cod(f), D.cod(g)))
        for f in C.morphisms for g in D.morphisms
    }
    identity = {_pair(x, y): _pair(C.identity[x], D.identity[y]) for x in C.objects for y in D.objects}
    compose = {}
    for (f2, f1), f in C.compose.items():
        for (g2, g1), g in D.compose.items():
            compose[(_pair(f2, g2), _pair(f1, g1))] = _pair(f, g)
    return FiniteCategory(objects, morphisms, identity, compose, name=f"{C.name}×{D.name}")


def coproduct(C: FiniteCategory, D: FiniteCategory) -> FiniteCategory:
    def tag(side: str, x: str) -> str:
        return f"{side}.{x}"

    objects = tuple(tag("l", x) for x in C.objects) + tuple(tag("r", y) for y in D.objects)
    morphisms = {tag("l", f): (tag("l", d), tag("l", c)) for f, (d, c) in C.morphisms.items()}
    morphisms.update({tag("r", f): (tag("r", d), tag("r", c)) for f, (d, c) in D.morphisms.items()})
    identity = {tag("l", x): tag("l", i) for x, i in C.identity.items()}
    identity.update({tag("r", x): tag("r", i) for x, i in D.identity.items()})
    compose = {(tag("l", g), tag("l", f)): tag("l", h) for (g, f), h in C.compose.items()}
    compose.update({(tag("r", g), tag("r", f)): tag("r", h) for (g, f), h in D.compose.items()})
    return FiniteCategory(objects, morphisms, identity, compose, name=f"{C.name}+{D.name}")


def is_isomorphic_by_counts(C: FiniteCategory, D: FiniteCategory) -> bool:
    """Cheap invariant comparison: object, morphism and hom-size profiles."""
    def profile(X: FiniteCategory) -> tuple:
        return (len(X.objects), len(X.morphisms),
                tuple(sorted(len(X.hom(x, y)) for x in X.objects for y in X.objects)))
    return profile(C) == profile(D)


# ---------------------------------------------------------------------------
# functors and natural transformations


@dataclass(frozen=True, eq=False)
class FiniteFunctor:
    source: FiniteCategory
    target: FiniteCategory
    on_objects: Mapping[str, str]
    on_morphisms: Mapping[str, str]

    def __call__(self, m: str) -> str:
        return self.on_morphisms[m]

    def obj(self, x: str) -> str:
        return self.on_objects[x]

    def key(self) -> tuple:
        return (tuple(sorted(self.on_objects.items())), tuple(sorted(self.on_morphisms.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteFunctor) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def label(self) -> str:
        return "F[" + ",".join(f"{m}>{n}" for m, n in sorted(self.on_morphisms.items())) + "]"

    def __repr__(self) -> str:
        return f"FiniteFunctor({dict(self.on_objects)}, {dict(self.on_morphisms)})"


def identity_functor(C: FiniteCategory) -> FiniteFunctor:
    return FiniteFunctor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})


def compose_functors(G: FiniteFunctor, F: FiniteFunctor) -> FiniteFunctor:
    """``G∘F``."""
    return FiniteFunctor(
        F.source, G.target,
        {x: G.on_objects[F.on_objects[x]] for x in F.source.objects},
        {m: G.on_morphisms[F.on_morphisms[m]] for m in F.source.morphisms},
    )


def constant_functor(C: FiniteCategory, D: FiniteCategory, x: str) -> FiniteFunctor:
    return FiniteFunctor(C, D, {y: x for y in C.objects}, {m: D.identity[x] for m in C.morphisms})


def validate_functor(F: FiniteFunctor) -> ValidationReport:
    C, D = F.source, F.target
    rep = ValidationReport(subject="functor")
    for x in C.objects:
        rep.expect(x in F.on_objects and F.on_objects[x] in D.objects, "object map", (x,))
    for m in C.morphisms:
        rep.expect(m in F.on_morphisms and F.on_morphisms[m] in D.morphisms, "morphism map", (m,))
    if not rep.ok:
        return rep
    for m, (d, c) in C.morphisms.items():
        rep.expect(D.morphisms[F(m)] == (F.obj(d), F.obj(c)), "dom/cod", (m,))
    for x in C.objects:
        rep.expect(F(C.identity[x]) == D.identity[F.obj(x)], "identity", (x,))
    if not rep.ok:
        return rep
    for (g, f), h in C.compose.items():
        rep.expect(D.comp(F(g), F(f)) == F(h), "composition", (g, f))
    return rep


@dataclass(frozen=True, eq=False)
class FiniteNatTrans:
    source: FiniteFunctor
    target: FiniteFunctor
    components: Mapping[str, str]

    def __getitem__(self, x: str) -> str:
        return self.components[x]

    def key(self) -> tuple:
        return (self.source.key(), self.target.key(), tuple(sorted(self.components.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteNatTrans) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def label(self) -> str:
        return "N[" + ",".join(f"{x}:{m}" for x, m in sorted(self.components.items())) + "]"


def identity_nat(F: FiniteFunctor) -> FiniteNatTrans:
    return FiniteNatTrans(F, F, {x: F.target.identity[F.obj(x)] for x in F.source.objects})


def vcompose_nat(beta: FiniteNatTrans, alpha: FiniteNatTrans) -> FiniteNatTrans:
    D = alpha.source.target
    return FiniteNatTrans(alpha.source, beta.target,
                          {x: D.comp(beta[x], alpha[x]) for x in alpha.source.source.objects})


def validate_nat_trans(alpha: FiniteNatTrans) -> ValidationReport:
    F, G = alpha.source, alpha.target
    C, D = F.source, F.target
    rep = ValidationReport(subject="natural transformation")
    for x in C.objects:
        ok = x in alpha.components and D.morphisms.get(alpha[x]) == (F.obj(x), G.obj(x))
        rep.expect(ok, "component", (x,), "missing or wrong endpoints")
    if not rep.ok:
        return rep
    for m, (a, b) in C.morphisms.items():
        rep.expect(D.comp(alpha[b], F(m)) == D.comp(G(m), alpha[a]), "naturality", (m,))
    return rep


def is_natural_iso(alpha: FiniteNatTrans) -> bool:
    D = alpha.source.target
    return all(D.is_iso(alpha[x]) for x in alpha.source.source.objects)


def whisker_left(alpha: FiniteNatTrans, E: FiniteFunctor) -> FiniteNatTrans:
    """``αE``: components at ``E(a)``."""
    return FiniteNatTrans(compose_functors(alpha.source, E), compose_functors(alpha.target, E),
                          {a: alpha[E.obj(a)] for a in E.source.objects})


def whisker_right(M: FiniteFunctor, alpha: FiniteNatTrans) -> FiniteNatTrans:
    """``Mα``."""
    return FiniteNatTrans(compose_functors(M, alpha.source), compose_functors(M, alpha.target),
                          {x: M(alpha[x]) for x in alpha.components})


# ---------------------------------------------------------------------------
# enumeration


class _Budget:
    def __init__(self, cap: int) -> None:
        self.cap = cap
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise SearchTooLarge(f"search exceeded cap of {self.cap} candidate maps")


def enumerate_functors(C: FiniteCategory, D: FiniteCategory, cap: int = DEFAULT_CAP) -> list[FiniteFunctor]:
    """All functors ``C -> D`` in canonical order.

    Backtracking over object images and then non-identity morphisms; a
    composition constraint is checked as soon as all three of its
    morphisms have images.
    """
    budget = _Budget(cap)
    objs = list(C.objects)
    ids = set(C.identity.values())
    arrows = [m for m in sorted(C.morphisms) if m not in ids]
    pos = {m: i for i, m in enumerate(arrows)}
    # constraints keyed by the last-assigned morphism among (g, f, g∘f)
    constraints: dict[int, list] = {}
    for (g, f), h in C.compose.items():
        idx = max((pos[m] for m in (g, f, h) if m in pos), default=-1)
        constraints.setdefault(idx, []).append((g, f, h))
    out: list[FiniteFunctor] = []

    def consistent(mm: dict, cs: list) -> bool:
        return all(D.compose.get((mm[g], mm[f])) == mm[h] for g, f, h in cs)

    def assign_arrows(i: int, om: dict, mm: dict) -> None:
        if i == len(arrows):
            out.append(FiniteFunctor(C, D, dict(om), dict(mm)))
            return
        m = arrows[i]
        d, c = C.morphisms[m]
        for n in sorted(D.hom(om[d], om[c])):
            budget.tick()
            mm[m] = n
            if consistent(mm, constraints.get(i, ())):
                assign_arrows(i + 1, om, mm)
            del mm[m]

    def assign_objects(i: int, om: dict) -> None:
        if i == len(objs):
            mm = {C.identity[x]: D.identity[om[x]] for x in objs}
            if consistent(mm, constraints.get(-1, ())):
                assign_arrows(0, om, mm)
            return
        for y in sorted(D.objects):
            budget.tick()
            om[objs[i]] = y
            assign_objects(i + 1, om)
            del om[objs[i]]

    assign_objects(0, {})
    return out


def enumerate_nat_trans(F: FiniteFunctor, G: FiniteFunctor, cap: int = DEFAULT_CAP) -> list[FiniteNatTrans]:
    C, D = F.source, F.target
    budget = _Budget(cap)
    objs = list(C.objects)
    choices = [sorted(D.hom(F.obj(x), G.obj(x))) for x in objs]
    out = []
    for combo in itertools.product(*choices):
        budget.tick()
        alpha = FiniteNatTrans(F, G, dict(zip(objs, combo)))
        if all(D.comp(alpha[b], F(m)) == D.comp(G(m), alpha[a]) for m, (a, b) in C.morphisms.items()):
            out.append(alpha)
    return out


def functor_category(C: FiniteCategory, D: FiniteCategory, cap: int = DEFAULT_CAP) -> FiniteCategory:
    """``[C, D]`` with functors as objects and natural transformations as morphisms."""
    functors = enumerate_functors(C, D, cap)
    labels = {F: F.label() for F in functors}
    morphisms, identity, trans = {}, {}, {}
    for F in functors:
        for G in functors:
            for alpha in enumerate_nat_trans(F, G, cap):
                mid = f"{labels[F]}=>{labels[G]}:{alpha.label()}"
                morphisms[mid] = (labels[F], labels[G])
                trans[mid] = alpha
        identity[labels[F]] = f"{labels[F]}=>{labels[F]}:{identity_nat(F).label()}"
    by_key = {(t.source.key(), t.target.key(), tuple(sorted(t.components.items()))): m
              for m, t in trans.items()}
    compose = {}
    for g, beta in trans.items():
        for f, alpha in trans.items():
            if alpha.target == beta.source:
                composite = vcompose_nat(beta, alpha)
                compose[(g, f)] = by_key[composite.key()]
    return FiniteCategory(tuple(labels[F] for F in functors), morphisms, identity, compose,
                          name=f"[{C.name},{D.name}]")


def is_bijective_on_objects(F: FiniteFunctor) -> bool:
    imgs = [F.obj(x) for x in F.source.objects]
    return len(set(imgs)) == len(imgs) and set(imgs) == set(F.target.objects)


def is_fully_faithful(F: FiniteFunctor) -> bool:
    C, D = F.source, F.target
    for x in C.objects:
        for y in C.objects:
            imgs = [F(m) for m in C.hom(x, y)]
            if len(set(imgs)) != len(imgs) or set(imgs) != set(D.hom(F.obj(x), F.obj(y))):
                return False
    return True


# ---------------------------------------------------------------------------
# (bijective on objects, fully faithful) factorization


def factorize_bo_ff(F: FiniteFunctor) -> tuple[FiniteFunctor, FiniteFunctor]:
    """Split ``F`` as ``M∘E`` with ``E`` bijective on objects and ``M`` fully faithful.

    The middle category has the objects of the source and homs pulled back
    from the target: a morphism ``x -> y`` is a pair ``(x>y, m)`` with
    ``m: Fx -> Fy``.
    """
    C, D = F.source, F.target

    def mid(x: str, y: str, m: str) -> str:
        return f"{x}>{y}:{m}"

    morphisms, compose = {}, {}
    for x in C.objects:
        for y in C.objects:
            for m in D.hom(F.obj(x), F.obj(y)):
                morphisms[mid(x, y, m)] = (x, y)
    for x in C.objects:
        for y in C.objects:
            for m in D.hom(F.obj(x), F.obj(y)):
                for z in C.objects:
                    for n in D.hom(F.obj(y), F.obj(z)):
                        compose[(mid(y, z, n), mid(x, y, m))] = mid(x, z, D.comp(n, m))
    identity = {x: mid(x, x, D.identity[F.obj(x)]) for x in C.objects}
    I = FiniteCategory(C.objects, morphisms, identity, compose, name=f"im({C.name})")
    E = FiniteFunctor(C, I, {x: x for x in C.objects},
                      {f: mid(C.dom(f), C.cod(f), F(f)) for f in C.morphisms})
    M = FiniteFunctor(I, D, dict(F.on_objects),
                      {k: k.split(":", 1)[1] for k in morphisms})
    return E, M


def lift_bo_ff(E: FiniteFunctor, M: FiniteFunctor, s: FiniteFunctor, t: FiniteFunctor,
               alpha: FiniteNatTrans) -> tuple[FiniteFunctor, FiniteNatTrans]:
    """Solve the enhanced lifting problem for a square ``α: tE ≅ Ms``.

    ``E: A -> B`` bijective on objects, ``M: C -> D`` fully faithful.
    Returns the unique ``r: B -> C`` and ``β: t ≅ Mr`` with ``rE = s`` and
    ``βE = α``.
    """
    A, B = E.source, E.target
    C, D = M.source, M.target
    if not is_bijective_on_objects(E):
        raise ValueError("E must be bijective on objects")
    if not is_fully_faithful(M):
        raise ValueError("M must be fully faithful")
    pre = {E.obj(a): a for a in A.objects}
    r_obj = {b: s.obj(pre[b]) for b in B.objects}
    beta = {b: alpha[pre[b]] for b in B.objects}
    m_inv = {}
    for x in C.objects:
        for y in C.objects:
            for f in C.hom(x, y):
                m_inv[(x, y, M(f))] = f
    r_mor = {}
    for u, (b, b2) in B.morphisms.items():
        target = D.comp(beta[b2], D.comp(t(u), D.inverse(beta[b])))
        r_mor[u] = m_inv[(r_obj[b], r_obj[b2], target)]
    r = FiniteFunctor(B, C, r_obj, r_mor)
    return r, FiniteNatTrans(t, compose_functors(M, r), beta)


def count_lifts(E: FiniteFunctor, M: FiniteFunctor, s: FiniteFunctor, t: FiniteFunctor,
                alpha: FiniteNatTrans, cap: int = DEFAULT_CAP) -> int:
    """Number of pairs ``(r, β)`` solving the lifting problem, by exhaustive search."""
    B, C = E.target, M.source
    found = 0
    for r in enumerate_functors(B, C, cap):
        if compose_functors(r, E) != s:
            continue
        Mr = compose_functors(M, r)
        for beta in enumerate_nat_trans(t, Mr, cap):
            if is_natural_iso(beta) and whisker_left(beta, E).components == dict(alpha.components):
                found += 1
    return found


# ---------------------------------------------------------------------------
# base objects: finite sets or finite categories


@dataclass(frozen=True)
class FinSet:
    elements: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {"set": list(self.elements)}


BaseObject = Union[FinSet, FiniteCategory]


def base_kind(X: BaseObject) -> str:
    if isinstance(X, FinSet):
        return "set"
    if isinstance(X, FiniteCategory):
        return "cat"
    raise TypeError(f"not a base object: {X!r}")


def elements(X: BaseObject) -> tuple:
    """Elements of a set, or objects of a category."""
    return X.elements if isinstance(X, FinSet) else X.objects


def size(X: BaseObject) -> int:
    return len(elements(X))


def base_terminal(kind: str) -> BaseObject:
    return FinSet(("*",)) if kind == "set" else terminal()


def base_empty(kind: str) -> BaseObject:
    return FinSet(()) if kind == "set" else empty_category()


def base_product(X: BaseObject, Y: BaseObject) -> BaseObject:
    if isinstance(X, FinSet) and isinstance(Y, FinSet):
        return FinSet(tuple(_pair(a, b) for a in X.elements for b in Y.elements))
    return product(_as_cat(X), _as_cat(Y))


def base_coproduct(X: BaseObject, Y: BaseObject) -> BaseObject:
    if isinstance(X, FinSet) and isinstance(Y, FinSet):
        return FinSet(tuple(f"l.{a}" for a in X.elements) + tuple(f"r.{b}" for b in Y.elements))
    return coproduct(_as_cat(X), _as_cat(Y))


def _as_cat(X: BaseObject) -> FiniteCategory:
    return discrete(X.elements) if isinstance(X, FinSet) else X


def set_functions(X: FinSet, Y: FinSet) -> list[dict]:
    return [dict(zip(X.elements, img)) for img in itertools.product(Y.elements, repeat=len(X))]


def base_hom(X: BaseObject, Y: BaseObject, cap: int = DEFAULT_CAP) -> BaseObject:
    """Internal hom: functions for sets, the functor category for categories."""
    if isinstance(X, FinSet) and isinstance(Y, FinSet):
        n = len(Y) ** len(X)
        if n > cap:
            raise SearchTooLarge(f"{n} functions exceed cap {cap}")
        return FinSet(tuple(
            "{" + ",".join(f"{a}:{f[a]}" for a in X.elements) + "}" for f in set_functions(X, Y)))
    return functor_category(_as_cat(X), _as_cat(Y), cap)


def base_to_json(X: BaseObject) -> dict:
    return X.to_json()


def base_from_json(doc: Mapping) -> BaseObject:
    if "set" in doc:
        return FinSet(tuple(doc["set"]))
    return FiniteCategory.from_json(doc)

