"""Representable morphisms, the Yoneda embedding, and strictification.

Each 0-cell A yields a representable homomorphism hom(−, A) from the opposite
bicategory into the 2-category of the hom-categories (built by
`cat_as_bicategory`); 1-cells yield post-composition transformations and
2-cells yield whiskering modifications.  `strictify` assembles the hom
bicategory over all representables — always a 2-category — together with the
embedding into it and a biequivalence verdict.

`transport_canonical` pushes the comparison cells of a morphism along a
1-cell bracketing, and `check_reflection` uses it to verify that a morphism
carries an evaluated canonical 2-cell onto the corresponding canonical 2-cell
of the codomain — the commuting square that makes coherence transfer along
morphisms.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bicat import (Bicategory, CatBicategory, One, Two, cat_as_bicategory,
                    opposite)
from .errors import StructureError
from .fincat import DEFAULT_BUDGET, Functor, NatTrans
from .freebicat import (Assignment, CanonicalWitness, Comp, Gen, Id, OneTerm,
                        eval_one, eval_two)
from .homs import (HomBicategory, HomBicatSpec, build_hom_bicategory,
                   enumerate_modifications, enumerate_transformations,
                   is_biequivalence, modification_key)
from .maps import (Modification, Morphism, Transformation, _all_ones,
                   compose_transformations, identity_transformation)
from .report import Report, ReportBuilder


def _pair_id(x: str, a: str) -> str:
    return f"hom[{x},{a}]"


def representable_target(bic: Bicategory,
                         budget: int = DEFAULT_BUDGET) -> CatBicategory:
    """The 2-category of the hom-categories of `bic`, one 0-cell per ordered
    pair of 0-cells."""
    cats = []
    ids = []
    for x in bic.zero_cells:
        for a in bic.zero_cells:
            cats.append(bic.hom[(x, a)])
            ids.append(_pair_id(x, a))
    return cat_as_bicategory(cats, budget, ids)


def _post_functor(bic: Bicategory, target: CatBicategory,
                  f: One, x: str) -> One:
    """The 1-cell of the target naming f∘(−): hom(x, f.src) -> hom(x, f.dst)."""
    dom_cat = bic.hom[(x, f.src)]
    cod_cat = bic.hom[(x, f.dst)]
    obj_map = {}
    arr_map = {}
    for p in dom_cat.objects:
        obj_map[p] = bic.compose1(f, One(x, f.src, p)).name
    for t in dom_cat.arrows:
        arr_map[t] = bic.hcomp(bic.id2(f), Two(x, f.src, t)).name
    fun = Functor(dom_cat, cod_cat, obj_map, arr_map)
    return target.one_of_functor(_pair_id(x, f.src), _pair_id(x, f.dst), fun)


def _pre_functor(bic: Bicategory, target: CatBicategory,
                 p: One, a: str) -> One:
    """The 1-cell of the target naming (−)∘p: hom(p.dst, a) -> hom(p.src, a)."""
    dom_cat = bic.hom[(p.dst, a)]
    cod_cat = bic.hom[(p.src, a)]
    obj_map = {}
    arr_map = {}
    for g in dom_cat.objects:
        obj_map[g] = bic.compose1(One(p.dst, a, g), p).name
    for t in dom_cat.arrows:
        arr_map[t] = bic.hcomp(Two(p.dst, a, t), bic.id2(p)).name
    fun = Functor(dom_cat, cod_cat, obj_map, arr_map)
    return target.one_of_functor(_pair_id(p.dst, a), _pair_id(p.src, a), fun)


def _target_two(target: CatBicategory, src: One, dst: One,
                components: dict[str, str]) -> Two:
    """Resolve a natural transformation given by components to a target 2-cell."""
    pair = (src.src, src.dst)
    nt = NatTrans(target.functor_of[pair][src.name],
                  target.functor_of[pair][dst.name], components)
    return target.two_of_nattrans(pair[0], pair[1], nt)


def representable_obj(bic: Bicategory, a: str, op: Bicategory,
                      target: CatBicategory) -> Morphism:
    """The homomorphism hom(−, a): op -> target."""
    obj_map = {x: _pair_id(x, a) for x in op.zero_cells}
    hom_functors = {}
    for x in op.zero_cells:
        for y in op.zero_cells:
            cat = op.hom[(x, y)]
            obj_map_f = {}
            arr_map_f = {}
            for p in cat.objects:
                obj_map_f[p] = _pre_functor(bic, target, One(y, x, p), a).name
            for t in cat.arrows:
                p, q = cat.src(t), cat.dst(t)
                pre_p = One(obj_map[x], obj_map[y], obj_map_f[p])
                pre_q = One(obj_map[x], obj_map[y], obj_map_f[q])
                components = {
                    g: bic.hcomp(bic.id2(One(x, a, g)), Two(y, x, t)).name
                    for g in bic.hom[(x, a)].objects}
                arr_map_f[t] = _target_two(target, pre_p, pre_q,
                                           components).name
            hom_functors[(x, y)] = Functor(cat,
                                           target.hom[(obj_map[x], obj_map[y])],
                                           obj_map_f, arr_map_f)
    comp_cells = {}
    for x in op.zero_cells:
        for y in op.zero_cells:
            for z in op.zero_cells:
                for q in op.one_cells(y, z):
                    for p in op.one_cells(x, y):
                        qp = op.compose1(q, p)
                        f1q = One(obj_map[y], obj_map[z],
                                  hom_functors[(y, z)].obj_map[q.name])
                        f1p = One(obj_map[x], obj_map[y],
                                  hom_functors[(x, y)].obj_map[p.name])
                        src = target.compose1(f1q, f1p)
                        dst = One(obj_map[x], obj_map[z],
                                  hom_functors[(x, z)].obj_map[qp.name])
                        b_p = One(y, x, p.name)
                        b_q = One(z, y, q.name)
                        components = {
                            g: bic.a(One(x, a, g), b_p, b_q).name
                            for g in bic.hom[(x, a)].objects}
                        comp_cells[(q, p)] = _target_two(target, src, dst,
                                                         components)
    unit_cells = {}
    for x in op.zero_cells:
        src = target.one_id(obj_map[x])
        dst = One(obj_map[x], obj_map[x],
                  hom_functors[(x, x)].obj_map[op.id_one[x]])
        components = {g: bic.inv(bic.r(One(x, a, g))).name
                      for g in bic.hom[(x, a)].objects}
        unit_cells[x] = _target_two(target, src, dst, components)
    return Morphism(op, target, obj_map, hom_functors, comp_cells, unit_cells)


def representable_one(bic: Bicategory, f: One, rep_src: Morphism,
                      rep_dst: Morphism) -> Transformation:
    """The transformation hom(−, f.src) -> hom(−, f.dst) of post-composition
    by f; its comparison cells are associator components."""
    op, target = rep_src.dom, rep_src.cod
    comp_one = {x: _post_functor(bic, target, f, x) for x in op.zero_cells}
    comp_two = {}
    for p in _all_ones(op):
        x, y = p.src, p.dst
        b_p = One(y, x, p.name)
        src = target.compose1(rep_dst.f1(p), comp_one[x])
        dst = target.compose1(comp_one[y], rep_src.f1(p))
        components = {g: bic.a(f, One(x, f.src, g), b_p).name
                      for g in bic.hom[(x, f.src)].objects}
        comp_two[p] = _target_two(target, src, dst, components)
    return Transformation(rep_src, rep_dst, comp_one, comp_two)


def representable_two(bic: Bicategory, alpha: Two, rep_f: Transformation,
                      rep_g: Transformation) -> Modification:
    """The modification rep(f) -> rep(g) of whiskering by alpha: f -> g."""
    op = rep_f.dom.dom
    target = rep_f.dom.cod
    f = bic.two_src(alpha)
    comp = {}
    for x in op.zero_cells:
        components = {p: bic.hcomp(alpha, bic.id2(One(x, f.src, p))).name
                      for p in bic.hom[(x, f.src)].objects}
        comp[x] = _target_two(target, rep_f.sigma(x), rep_g.sigma(x),
                              components)
    return Modification(rep_f, rep_g, comp)


@dataclass(eq=False)
class YonedaPackage:
    base: Bicategory
    op: Bicategory
    target: CatBicategory
    rep_obj: dict[str, Morphism]
    rep_one: dict[One, Transformation]
    rep_two: dict[Two, Modification]


def yoneda(bic: Bicategory, budget: int = DEFAULT_BUDGET) -> YonedaPackage:
    """Representables for every cell of `bic`, sharing one opposite and one
    target so the pieces can be compared and composed."""
    op = opposite(bic)
    target = representable_target(bic, budget)
    rep_obj = {a: representable_obj(bic, a, op, target)
               for a in bic.zero_cells}
    rep_one = {}
    for f in _all_ones(bic):
        rep_one[f] = representable_one(bic, f, rep_obj[f.src],
                                       rep_obj[f.dst])
    rep_two = {}
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            for t in bic.two_cells(a, b):
                rep_two[t] = representable_two(
                    bic, t, rep_one[bic.two_src(t)], rep_one[bic.two_dst(t)])
    return YonedaPackage(bic, op, target, rep_obj, rep_one, rep_two)


def _modification_invertible(mod: Modification) -> bool:
    amb = mod.dom.dom.cod
    return all(amb.hom[(c.src, c.dst)].is_iso(c.name)
               for c in mod.comp.values())


def check_local_equivalence_of_Y(pkg: YonedaPackage,
                                 budget: int = DEFAULT_BUDGET) -> Report:
    """Faithful + full + essentially surjective on every hom, by exhaustive
    enumeration of the transformations and modifications between
    representables."""
    rb = ReportBuilder("yoneda")
    bic = pkg.base
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            cat = bic.hom[(a, b)]
            by_ends: dict[tuple[str, str], dict[tuple, str]] = {}
            for t in cat.arrows:
                ends = (cat.src(t), cat.dst(t))
                key = modification_key(pkg.rep_two[Two(a, b, t)])
                seen = by_ends.setdefault(ends, {})
                if key in seen:
                    rb.violation("yoneda.local-faithful",
                                 (a, b, seen[key], t))
                else:
                    seen[key] = t
            for f in cat.objects:
                for g in cat.objects:
                    image = {
                        modification_key(pkg.rep_two[Two(a, b, t)])
                        for t in cat.hom_set(f, g)}
                    fone, gone = One(a, b, f), One(a, b, g)
                    for mod in enumerate_modifications(
                            pkg.rep_one[fone], pkg.rep_one[gone], budget):
                        if modification_key(mod) not in image:
                            rb.violation("yoneda.local-full", (a, b, f, g))
                            break
            reps = [pkg.rep_one[One(a, b, f)] for f in cat.objects]
            for i, tr in enumerate(enumerate_transformations(
                    pkg.rep_obj[a], pkg.rep_obj[b], budget)):
                hit = False
                for rep in reps:
                    for mod in enumerate_modifications(rep, tr, budget):
                        if _modification_invertible(mod):
                            hit = True
                            break
                    if hit:
                        break
                if not hit:
                    rb.violation("yoneda.local-ess-surj", (a, b, f"t{i}"))
    return rb.build()


@dataclass(eq=False)
class Strictification:
    bicategory: HomBicategory
    embedding: Morphism
    biequivalence: bool
    package: YonedaPackage


def strictify(bic: Bicategory, budget: int = DEFAULT_BUDGET) -> Strictification:
    """The hom bicategory over all representables (a 2-category), the
    embedding of `bic` into it, and whether that embedding is a
    biequivalence."""
    pkg = yoneda(bic, budget)
    spec = HomBicatSpec(pkg.op, pkg.target,
                        [pkg.rep_obj[a] for a in bic.zero_cells])
    prime = build_hom_bicategory(spec, budget,
                                 ids=[f"Y[{a}]" for a in bic.zero_cells])
    obj_map = {a: f"Y[{a}]" for a in bic.zero_cells}
    hom_functors = {}
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            cat = bic.hom[(a, b)]
            obj_map_f = {}
            arr_map_f = {}
            for f in cat.objects:
                obj_map_f[f] = prime.one_of_transformation(
                    pkg.rep_one[One(a, b, f)]).name
            for t in cat.arrows:
                arr_map_f[t] = prime.two_of_modification(
                    pkg.rep_two[Two(a, b, t)]).name
            hom_functors[(a, b)] = Functor(
                cat, prime.hom[(obj_map[a], obj_map[b])], obj_map_f, arr_map_f)
    comp_cells = {}
    for c in bic.zero_cells:
        for b in bic.zero_cells:
            for a in bic.zero_cells:
                for g in bic.one_cells(b, c):
                    for f in bic.one_cells(a, b):
                        gf = bic.compose1(g, f)
                        lhs = compose_transformations(pkg.rep_one[g],
                                                      pkg.rep_one[f])
                        rhs = pkg.rep_one[gf]
                        comps = {}
                        for x in pkg.op.zero_cells:
                            components = {
                                p: bic.inv(bic.a(g, f, One(x, a, p))).name
                                for p in bic.hom[(x, a)].objects}
                            comps[x] = _target_two(
                                pkg.target, lhs.sigma(x), rhs.sigma(x),
                                components)
                        mod = Modification(lhs, rhs, comps)
                        comp_cells[(g, f)] = prime.two_of_modification(mod)
    unit_cells = {}
    for a in bic.zero_cells:
        ida = prime.transformation(
            One(obj_map[a], obj_map[a], prime.id_one[obj_map[a]]))
        rhs = pkg.rep_one[bic.one_id(a)]
        comps = {}
        for x in pkg.op.zero_cells:
            components = {p: bic.inv(bic.l(One(x, a, p))).name
                          for p in bic.hom[(x, a)].objects}
            comps[x] = _target_two(pkg.target, ida.sigma(x), rhs.sigma(x),
                                   components)
        mod = Modification(ida, rhs, comps)
        unit_cells[a] = prime.two_of_modification(mod)
    embedding = Morphism(bic, prime, obj_map, hom_functors, comp_cells,
                         unit_cells)
    return Strictification(prime, embedding, is_biequivalence(embedding, budget),
                           pkg)


# -- transport of canonical cells ----------------------------------------------------


def transport_assignment(mor: Morphism, asg: Assignment) -> Assignment:
    """Push an assignment into dom(mor) forward to an assignment into cod(mor)."""
    return Assignment({k: mor.f0(v) for k, v in asg.zero.items()},
                      {k: mor.f1(v) for k, v in asg.one.items()},
                      {k: mor.f2(v) for k, v in asg.two.items()})


def transport_canonical(mor: Morphism, t: OneTerm, asg: Assignment) -> Two:
    """The comparison cell φ_t: (t-bracketed composite of images) → F(eval t),
    built from the morphism's binary/nullary comparison cells."""
    cod = mor.cod
    if isinstance(t, Gen):
        return cod.id2(mor.f1(asg.one[t.name]))
    if isinstance(t, Id):
        return mor.phi0(asg.zero[t.zero])
    if isinstance(t, Comp):
        left = transport_canonical(mor, t.left, asg)
        right = transport_canonical(mor, t.right, asg)
        base = mor.dom
        el = eval_one(t.left, base, asg)
        er = eval_one(t.right, base, asg)
        return cod.vcomp(mor.phi(el, er), cod.hcomp(left, right))
    raise StructureError(f"not a 1-cell term: {t!r}")


def check_reflection(mor: Morphism, witness: CanonicalWitness,
                     asg: Assignment) -> bool:
    """Does the morphism carry the evaluated canonical 2-cell onto the
    canonical 2-cell of the codomain?  Tests the square
    F(eval u) ∘ φ_src = φ_dst ∘ eval'(u) with eval' over the pushed assignment."""
    base, cod = mor.dom, mor.cod
    pushed = transport_assignment(mor, asg)
    lhs = cod.vcomp(mor.f2(eval_two(witness.term, base, asg)),
                    transport_canonical(mor, witness.src, asg))
    rhs = cod.vcomp(transport_canonical(mor, witness.dst, asg),
                    eval_two(witness.term, cod, pushed))
    return lhs == rhs
