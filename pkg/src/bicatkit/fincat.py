"""Finite categories, functors, and natural transformations as explicit tables.

Objects and arrows are opaque string ids.  compose(g, f) means "g after f".
Constructors validate referential structure eagerly (dangling ids raise
StructureError); the category/functor/naturality *laws* are never assumed —
they are verified by the check_* functions, which return Reports.
"""
from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import BudgetExceeded, StructureError
from .report import Report, ReportBuilder

DEFAULT_BUDGET = 10**6


def _capped_product(factors, budget: int) -> int:
    """Product of factors, short-circuited once it exceeds budget."""
    total = 1
    for n in factors:
        total *= n
        if total > budget:
            return total
    return total


def pair_id(x: str, y: str) -> str:
    return f"({x},{y})"


class ProductCompose(Mapping):
    """Lazy composition table of a product category.

    Behaves as a total Mapping over the composable pairs without storing
    them; product categories of medium-size hom-categories would otherwise
    need O(n^4) memory.
    """

    def __init__(self, left: FinCat, right: FinCat, decode: dict[str, tuple[str, str]],
                 encode: dict[tuple[str, str], str]):
        self._left = left
        self._right = right
        self._decode = decode
        self._encode = encode
        self._len: int | None = None

    def __getitem__(self, key):
        g, f = key
        g1, g2 = self._decode[g]
        f1, f2 = self._decode[f]
        h1 = self._left.compose.get((g1, f1))
        h2 = self._right.compose.get((g2, f2))
        if h1 is None or h2 is None:
            raise KeyError(key)
        return self._encode[(h1, h2)]

    def __iter__(self):
        dec = self._decode
        for g, f in itertools.product(dec, dec):
            g1, g2 = dec[g]
            f1, f2 = dec[f]
            if (g1, f1) in self._left.compose and (g2, f2) in self._right.compose:
                yield (g, f)

    def __len__(self):
        if self._len is None:
            self._len = sum(1 for _ in self)
        return self._len


@dataclass(eq=False)
class FinCat:
    """A finite category: objects, arrows with endpoints, identities, composition.

    `arrows` maps arrow id -> (src, dst).  `compose` is a total mapping over
    composable pairs (g, f) with dst(f) == src(g); its values may still break
    the laws — that is what check_fincat reports.
    """

    objects: tuple[str, ...]
    arrows: dict[str, tuple[str, str]]
    identity: dict[str, str]
    compose: Mapping[tuple[str, str], str]

    def __post_init__(self):
        self.objects = tuple(self.objects)
        obj_set = set(self.objects)
        if len(obj_set) != len(self.objects):
            raise StructureError("duplicate object ids")
        for a, (s, d) in self.arrows.items():
            if s not in obj_set or d not in obj_set:
                raise StructureError(f"arrow {a!r} has dangling endpoint ({s!r}, {d!r})")
        if set(self.identity) != obj_set:
            raise StructureError("identity table must cover exactly the objects")
        for o, a in self.identity.items():
            if a not in self.arrows:
                raise StructureError(f"identity of {o!r} is a dangling arrow id {a!r}")
            if self.arrows[a] != (o, o):
                raise StructureError(f"identity of {o!r} is not an endo-arrow at {o!r}")
        if isinstance(self.compose, dict):
            for (g, f), h in self.compose.items():
                if g not in self.arrows or f not in self.arrows:
                    raise StructureError(f"compose key ({g!r}, {f!r}) has dangling ids")
                if self.arrows[f][1] != self.arrows[g][0]:
                    raise StructureError(f"compose key ({g!r}, {f!r}) is not composable")
                if h not in self.arrows:
                    raise StructureError(f"compose value {h!r} is dangling")
            # totality over composable pairs
            for g, f in itertools.product(self.arrows, self.arrows):
                if self.arrows[f][1] == self.arrows[g][0] and (g, f) not in self.compose:
                    raise StructureError(f"compose table missing entry for ({g!r}, {f!r})")
        self._by_src: dict[str, list[str]] = {o: [] for o in self.objects}
        self._by_dst: dict[str, list[str]] = {o: [] for o in self.objects}
        self._by_pair: dict[tuple[str, str], list[str]] = {}
        for a, (s, d) in self.arrows.items():
            self._by_src[s].append(a)
            self._by_dst[d].append(a)
            self._by_pair.setdefault((s, d), []).append(a)
        self._inv_cache: dict[str, str | None] = {}

    # -- accessors ---------------------------------------------------------

    def src(self, a: str) -> str:
        return self.arrows[a][0]

    def dst(self, a: str) -> str:
        return self.arrows[a][1]

    def id_of(self, o: str) -> str:
        return self.identity[o]

    def hom_set(self, x: str, y: str) -> list[str]:
        return sorted(self._by_pair.get((x, y), []))

    def arrows_from(self, x: str) -> list[str]:
        return sorted(self._by_src.get(x, []))

    def arrows_into(self, y: str) -> list[str]:
        return sorted(self._by_dst.get(y, []))

    def is_identity(self, a: str) -> bool:
        return self.identity.get(self.arrows[a][0]) == a and self.src(a) == self.dst(a)

    def inverse(self, a: str) -> str | None:
        """The two-sided inverse of `a`, or None. Cached table scan."""
        if a in self._inv_cache:
            return self._inv_cache[a]
        s, d = self.arrows[a]
        found = None
        for b in self._by_pair.get((d, s), ()):
            if (self.compose.get((b, a)) == self.identity[s]
                    and self.compose.get((a, b)) == self.identity[d]):
                found = b
                break
        self._inv_cache[a] = found
        return found

    def is_iso(self, a: str) -> bool:
        return self.inverse(a) is not None

    def equal_tables(self, other: FinCat) -> bool:
        return (self.objects == other.objects
                and self.arrows == other.arrows
                and self.identity == other.identity
                and dict(self.compose.items()) == dict(other.compose.items()))


@dataclass(eq=False)
class Functor:
    dom: FinCat
    cod: FinCat
    obj_map: dict[str, str]
    arr_map: dict[str, str]

    def __post_init__(self):
        if set(self.obj_map) != set(self.dom.objects):
            raise StructureError("functor object map must cover exactly the domain objects")
        if set(self.arr_map) != set(self.dom.arrows):
            raise StructureError("functor arrow map must cover exactly the domain arrows")
        cod_objs = set(self.cod.objects)
        for x, fx in self.obj_map.items():
            if fx not in cod_objs:
                raise StructureError(f"functor maps object {x!r} to dangling id {fx!r}")
        for a, fa in self.arr_map.items():
            if fa not in self.cod.arrows:
                raise StructureError(f"functor maps arrow {a!r} to dangling id {fa!r}")

    def key(self) -> tuple:
        """Canonical comparison key (table content, ignoring identity of dom/cod)."""
        return (
            tuple(self.obj_map[x] for x in self.dom.objects),
            tuple(sorted(self.arr_map.items())),
        )


@dataclass(eq=False)
class NatTrans:
    dom: Functor
    cod: Functor
    components: dict[str, str]

    def __post_init__(self):
        if self.dom.dom is not self.cod.dom or self.dom.cod is not self.cod.cod:
            if not (self.dom.dom.equal_tables(self.cod.dom)
                    and self.dom.cod.equal_tables(self.cod.cod)):
                raise StructureError("natural transformation needs parallel functors")
        if set(self.components) != set(self.dom.dom.objects):
            raise StructureError("components must cover exactly the domain objects")
        for x, a in self.components.items():
            if a not in self.dom.cod.arrows:
                raise StructureError(f"component at {x!r} is a dangling arrow id {a!r}")

    def key(self) -> tuple:
        return (
            self.dom.key(),
            self.cod.key(),
            tuple(self.components[x] for x in self.dom.dom.objects),
        )


# -- checkers ---------------------------------------------------------------

def check_fincat(cat: FinCat) -> Report:
    """Verify the category laws on explicit tables."""
    rb = ReportBuilder("fincat")
    for (g, f), h in cat.compose.items():
        if cat.arrows[h] != (cat.src(f), cat.dst(g)):
            rb.violation("fincat.compose-typing", (g, f),
                         f"composite {h!r} has endpoints {cat.arrows[h]}")
    for f in cat.arrows:
        s, d = cat.arrows[f]
        if cat.compose.get((cat.identity[d], f)) != f:
            rb.violation("fincat.identity", (f,), "left identity law fails")
        if cat.compose.get((f, cat.identity[s])) != f:
            rb.violation("fincat.identity", (f,), "right identity law fails")
    comp = cat.compose
    for f in cat.arrows:
        for g in cat._by_src[cat.dst(f)]:
            gf = comp.get((g, f))
            if gf is None:
                continue
            for h in cat._by_src[cat.dst(g)]:
                left = comp.get((h, gf))
                hg = comp.get((h, g))
                right = comp.get((hg, f)) if hg is not None else None
                if left != right:
                    rb.violation("fincat.associativity", (h, g, f),
                                 f"(h∘g)∘f = {right!r}, h∘(g∘f) = {left!r}")
    return rb.build()


def check_functor(fun: Functor) -> Report:
    rb = ReportBuilder("functor")
    for a, (s, d) in fun.dom.arrows.items():
        fa = fun.arr_map[a]
        want = (fun.obj_map[s], fun.obj_map[d])
        if fun.cod.arrows[fa] != want:
            rb.violation("functor.endpoints", (a,),
                         f"image {fa!r} has endpoints {fun.cod.arrows[fa]}, want {want}")
    for o in fun.dom.objects:
        if fun.arr_map[fun.dom.identity[o]] != fun.cod.identity[fun.obj_map[o]]:
            rb.violation("functor.identity", (o,))
    for (g, f), h in fun.dom.compose.items():
        img = fun.cod.compose.get((fun.arr_map[g], fun.arr_map[f]))
        if img != fun.arr_map[h]:
            rb.violation("functor.composition", (g, f),
                         f"F(g)∘F(f) = {img!r}, F(g∘f) = {fun.arr_map[h]!r}")
    return rb.build()


def check_nattrans(nt: NatTrans) -> Report:
    rb = ReportBuilder("nattrans")
    F, G = nt.dom, nt.cod
    cod = F.cod
    for x, c in nt.components.items():
        want = (F.obj_map[x], G.obj_map[x])
        if cod.arrows[c] != want:
            rb.violation("nattrans.endpoints", (x,),
                         f"component {c!r} has endpoints {cod.arrows[c]}, want {want}")
    for a, (x, y) in F.dom.arrows.items():
        left = cod.compose.get((nt.components[y], F.arr_map[a]))
        right = cod.compose.get((G.arr_map[a], nt.components[x]))
        if left != right or left is None:
            rb.violation("nattrans.naturality", (a,),
                         f"σ_dst∘F(a) = {left!r}, G(a)∘σ_src = {right!r}")
    return rb.build()


# -- constructions -----------------------------------------------------------

def product(left: FinCat, right: FinCat) -> FinCat:
    """Product category with pair ids; the compose table is a lazy view."""
    objects = tuple(pair_id(x, y) for x in left.objects for y in right.objects)
    arrows = {}
    decode: dict[str, tuple[str, str]] = {}
    encode: dict[tuple[str, str], str] = {}
    for a, (s1, d1) in left.arrows.items():
        for b, (s2, d2) in right.arrows.items():
            p = pair_id(a, b)
            arrows[p] = (pair_id(s1, s2), pair_id(d1, d2))
            decode[p] = (a, b)
            encode[(a, b)] = p
    identity = {
        pair_id(x, y): pair_id(left.identity[x], right.identity[y])
        for x in left.objects for y in right.objects
    }
    compose = ProductCompose(left, right, decode, encode)
    return FinCat(objects, arrows, identity, compose)


def identity_functor(cat: FinCat) -> Functor:
    return Functor(cat, cat, {o: o for o in cat.objects}, {a: a for a in cat.arrows})


def compose_functors(g: Functor, f: Functor) -> Functor:
    """g after f."""
    if g.dom is not f.cod and not g.dom.equal_tables(f.cod):
        raise StructureError("functors are not composable")
    return Functor(
        f.dom, g.cod,
        {x: g.obj_map[f.obj_map[x]] for x in f.dom.objects},
        {a: g.arr_map[f.arr_map[a]] for a in f.dom.arrows},
    )


def identity_nattrans(fun: Functor) -> NatTrans:
    return NatTrans(fun, fun, {x: fun.cod.identity[fun.obj_map[x]]
                               for x in fun.dom.objects})


def vcomp_nattrans(t2: NatTrans, t1: NatTrans) -> NatTrans:
    """Vertical composite: t2 after t1 (t1: F=>G, t2: G=>H)."""
    if t2.dom.key() != t1.cod.key():
        raise StructureError("vertical composition endpoint mismatch")
    cod = t1.dom.cod
    comps = {}
    for x in t1.dom.dom.objects:
        c = cod.compose.get((t2.components[x], t1.components[x]))
        if c is None:
            raise StructureError(f"components at {x!r} do not compose")
        comps[x] = c
    return NatTrans(t1.dom, t2.cod, comps)


def hcomp_nattrans(t2: NatTrans, t1: NatTrans) -> NatTrans:
    """Horizontal (Godement) composite of t1: F=>G (C->D) with t2: F'=>G' (D->E)."""
    F, G = t1.dom, t1.cod
    Fp, Gp = t2.dom, t2.cod
    if not Fp.dom.equal_tables(F.cod):
        raise StructureError("horizontal composition endpoint mismatch")
    cod = Fp.cod
    comps = {}
    for x in F.dom.objects:
        c = cod.compose.get((t2.components[G.obj_map[x]],
                             Fp.arr_map[t1.components[x]]))
        if c is None:
            raise StructureError(f"horizontal composite undefined at {x!r}")
        comps[x] = c
    return NatTrans(compose_functors(Fp, F), compose_functors(Gp, G), comps)


# -- enumeration --------------------------------------------------------------

def enumerate_functors(dom: FinCat, cod: FinCat,
                       budget: int = DEFAULT_BUDGET) -> list[Functor]:
    """All functors dom -> cod, in deterministic order.

    Identity arrows are forced to identities; only non-identity arrows are
    enumerated.  Raises BudgetExceeded before iterating if the candidate
    count is predicted to exceed the budget.
    """
    non_id = sorted(a for a in dom.arrows if not dom.is_identity(a))
    predicted = _capped_product(
        [len(cod.objects)] * len(dom.objects), budget)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget, "functor enumeration")
    results = []
    for obj_images in itertools.product(cod.objects, repeat=len(dom.objects)):
        obj_map = dict(zip(dom.objects, obj_images))
        cand_lists = []
        ok = True
        for a in non_id:
            s, d = dom.arrows[a]
            cands = cod.hom_set(obj_map[s], obj_map[d])
            if not cands:
                ok = False
                break
            cand_lists.append(cands)
        if not ok:
            continue
        predicted = _capped_product([len(c) for c in cand_lists], budget)
        if predicted > budget:
            raise BudgetExceeded(predicted, budget, "functor enumeration")
        for arr_images in itertools.product(*cand_lists):
            arr_map = dict(zip(non_id, arr_images))
            for o in dom.objects:
                arr_map[dom.identity[o]] = cod.identity[obj_map[o]]
            cand = Functor(dom, cod, obj_map, arr_map)
            good = True
            for (g, f), h in dom.compose.items():
                if cod.compose.get((arr_map[g], arr_map[f])) != arr_map[h]:
                    good = False
                    break
            if good:
                results.append(cand)
    return results


def enumerate_nattrans(dom: Functor, cod: Functor,
                       budget: int = DEFAULT_BUDGET) -> list[NatTrans]:
    """All natural transformations dom => cod, in deterministic order."""
    if not (dom.dom.equal_tables(cod.dom) and dom.cod.equal_tables(cod.cod)):
        raise StructureError("functors are not parallel")
    objs = dom.dom.objects
    target = dom.cod
    cand_lists = []
    for x in objs:
        cands = target.hom_set(dom.obj_map[x], cod.obj_map[x])
        if not cands:
            return []
        cand_lists.append(cands)
    predicted = _capped_product([len(c) for c in cand_lists], budget)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget, "natural transformation enumeration")
    results = []
    for images in itertools.product(*cand_lists):
        comps = dict(zip(objs, images))
        good = True
        for a, (x, y) in dom.dom.arrows.items():
            if (target.compose.get((comps[y], dom.arr_map[a]))
                    != target.compose.get((cod.arr_map[a], comps[x]))):
                good = False
                break
        if good:
            results.append(NatTrans(dom, cod, comps))
    return results
