"""Maps between finite bicategories at all three levels.

Morphism := (obj_map, per-hom functors, comparison cells φ_{g,f}, φ_A);
Transformation := component 1-cells σ_A with comparison 2-cells
σ_f: Gf∘σ_A → σ_B∘Ff; Modification := component 2-cells Γ_A.

Checkers scan every axiom instance exhaustively and report violations with
the witnessing cells.  The composite/unit axioms are tested as the literal
pasted composites (no silent re-bracketing): the associativity steps are
taken exactly as drawn, so a checker pass certifies the drawn diagrams.

Strength classification: strict (all comparison cells identities), iso (all
invertible — homomorphisms / strong transformations), else lax.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bicat import Bicategory, One, Two
from .errors import StructureError
from .fincat import Functor, check_functor, compose_functors, identity_functor
from .report import Report, ReportBuilder

STRENGTH_ORDER = {"strict": 2, "iso": 1, "lax": 0}


def _composable_pairs(bic: Bicategory):
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            for c in bic.zero_cells:
                for g in bic.one_cells(b, c):
                    for f in bic.one_cells(a, b):
                        yield g, f


def _composable_triples(bic: Bicategory):
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            for c in bic.zero_cells:
                for d in bic.zero_cells:
                    for h in bic.one_cells(c, d):
                        for g in bic.one_cells(b, c):
                            for f in bic.one_cells(a, b):
                                yield h, g, f


def _all_ones(bic: Bicategory):
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            yield from bic.one_cells(a, b)


def _all_twos(bic: Bicategory):
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            yield from bic.two_cells(a, b)


@dataclass(eq=False)
class Morphism:
    dom: Bicategory
    cod: Bicategory
    obj_map: dict[str, str]
    hom_functors: dict[tuple[str, str], Functor]
    comp_cells: dict[tuple[One, One], Two]
    unit_cells: dict[str, Two]

    def __post_init__(self):
        zs = set(self.dom.zero_cells)
        if set(self.obj_map) != zs:
            raise StructureError("obj_map must cover exactly the 0-cells")
        for a, fa in self.obj_map.items():
            if fa not in self.cod.zero_cells:
                raise StructureError(f"obj_map value {fa!r} is not a 0-cell of cod")
        want = {(a, b) for a in zs for b in zs}
        if set(self.hom_functors) != want:
            raise StructureError("hom_functors must cover exactly the 0-cell pairs")
        for (a, b), fun in self.hom_functors.items():
            if not fun.dom.equal_tables(self.dom.hom[(a, b)]):
                raise StructureError(f"hom functor at {(a, b)} has wrong domain")
            if not fun.cod.equal_tables(
                    self.cod.hom[(self.obj_map[a], self.obj_map[b])]):
                raise StructureError(f"hom functor at {(a, b)} has wrong codomain")
        want_pairs = set()
        for g, f in _composable_pairs(self.dom):
            want_pairs.add((g, f))
        if set(self.comp_cells) != want_pairs:
            raise StructureError(
                "comp_cells must cover exactly the composable 1-cell pairs")
        for (g, f), cell in self.comp_cells.items():
            src = self.cod.compose1(self.f1(g), self.f1(f))
            dst = self.f1(self.dom.compose1(g, f))
            have = (self.cod.two_src(cell), self.cod.two_dst(cell))
            if have != (src, dst):
                raise StructureError(
                    f"comparison cell at ({g.name}, {f.name}) has endpoints "
                    f"{tuple(c.name for c in have)}, want ({src.name}, {dst.name})")
        if set(self.unit_cells) != zs:
            raise StructureError("unit_cells must cover exactly the 0-cells")
        for a, cell in self.unit_cells.items():
            src = self.cod.one_id(self.obj_map[a])
            dst = self.f1(self.dom.one_id(a))
            have = (self.cod.two_src(cell), self.cod.two_dst(cell))
            if have != (src, dst):
                raise StructureError(
                    f"unit comparison cell at {a!r} has endpoints "
                    f"{tuple(c.name for c in have)}, want ({src.name}, {dst.name})")

    def f0(self, a: str) -> str:
        return self.obj_map[a]

    def f1(self, f: One) -> One:
        fun = self.hom_functors[(f.src, f.dst)]
        return One(self.obj_map[f.src], self.obj_map[f.dst], fun.obj_map[f.name])

    def f2(self, t: Two) -> Two:
        fun = self.hom_functors[(t.src, t.dst)]
        return Two(self.obj_map[t.src], self.obj_map[t.dst], fun.arr_map[t.name])

    def phi(self, g: One, f: One) -> Two:
        return self.comp_cells[(g, f)]

    def phi0(self, a: str) -> Two:
        return self.unit_cells[a]


def check_morphism(mor: Morphism) -> Report:
    """Exhaustive axiom check: per-hom functoriality (structural), naturality
    of the comparison cells, the associativity hexagon, and both unit squares."""
    rb = ReportBuilder("morphism")
    dom, cod = mor.dom, mor.cod
    for (a, b), fun in mor.hom_functors.items():
        sub = check_functor(fun)
        for v in sub.violations:
            rb.structural(v.law, (a, b) + v.at, v.detail)
    for beta in _all_twos(dom):
        for alpha in _all_twos(dom):
            if alpha.dst != beta.src:
                continue
            g, f = dom.two_src(beta), dom.two_src(alpha)
            lhs = cod.vcomp(mor.phi(dom.two_dst(beta), dom.two_dst(alpha)),
                            cod.hcomp(mor.f2(beta), mor.f2(alpha)))
            rhs = cod.vcomp(mor.f2(dom.hcomp(beta, alpha)), mor.phi(g, f))
            if lhs != rhs:
                rb.violation("morphism.naturality", (beta.name, alpha.name))
    for h, g, f in _composable_triples(dom):
        fh, fg, ff = mor.f1(h), mor.f1(g), mor.f1(f)
        lhs = cod.vcomp(
            mor.f2(dom.a(h, g, f)),
            cod.vcomp(mor.phi(dom.compose1(h, g), f),
                      cod.hcomp(mor.phi(h, g), cod.id2(ff))))
        rhs = cod.vcomp(
            mor.phi(h, dom.compose1(g, f)),
            cod.vcomp(cod.hcomp(cod.id2(fh), mor.phi(g, f)),
                      cod.a(fh, fg, ff)))
        if lhs != rhs:
            rb.violation("morphism.hexagon", (h.name, g.name, f.name))
    for f in _all_ones(dom):
        ff = mor.f1(f)
        lhs = cod.vcomp(
            mor.f2(dom.r(f)),
            cod.vcomp(mor.phi(f, dom.one_id(f.src)),
                      cod.hcomp(cod.id2(ff), mor.phi0(f.src))))
        if lhs != cod.r(ff):
            rb.violation("morphism.runit", (f.name,))
        lhs = cod.vcomp(
            mor.f2(dom.l(f)),
            cod.vcomp(mor.phi(dom.one_id(f.dst), f),
                      cod.hcomp(mor.phi0(f.dst), cod.id2(ff))))
        if lhs != cod.l(ff):
            rb.violation("morphism.lunit", (f.name,))
    return rb.build()


@dataclass(eq=False)
class Transformation:
    dom: Morphism
    cod: Morphism
    comp_one: dict[str, One]
    comp_two: dict[One, Two]

    def __post_init__(self):
        f_mor, g_mor = self.dom, self.cod
        if f_mor.dom is not g_mor.dom or f_mor.cod is not g_mor.cod:
            raise StructureError(
                "transformation endpoints must be parallel morphisms")
        amb = f_mor.cod
        zs = set(f_mor.dom.zero_cells)
        if set(self.comp_one) != zs:
            raise StructureError("comp_one must cover exactly the 0-cells")
        for a, cell in self.comp_one.items():
            if (cell.src, cell.dst) != (f_mor.f0(a), g_mor.f0(a)):
                raise StructureError(
                    f"component at {a!r} must be a 1-cell F{a} → G{a}")
            if cell.name not in amb.hom[(cell.src, cell.dst)].objects:
                raise StructureError(f"component at {a!r} is not a 1-cell of cod")
        want = set(_all_ones(f_mor.dom))
        if set(self.comp_two) != want:
            raise StructureError("comp_two must cover exactly the 1-cells")
        for f, cell in self.comp_two.items():
            src = amb.compose1(g_mor.f1(f), self.comp_one[f.src])
            dst = amb.compose1(self.comp_one[f.dst], f_mor.f1(f))
            have = (amb.two_src(cell), amb.two_dst(cell))
            if have != (src, dst):
                raise StructureError(
                    f"comparison cell at {f.name!r} has endpoints "
                    f"{tuple(c.name for c in have)}, want ({src.name}, {dst.name})")

    def sigma(self, a: str) -> One:
        return self.comp_one[a]

    def sigma_one(self, f: One) -> Two:
        return self.comp_two[f]


def check_transformation(tr: Transformation) -> Report:
    """Naturality in 2-cells, the five-step composite axiom, and the unit
    axiom, each as the literal pasted composite."""
    rb = ReportBuilder("transformation")
    f_mor, g_mor = tr.dom, tr.cod
    base, amb = f_mor.dom, f_mor.cod
    for alpha in _all_twos(base):
        f, fp = base.two_src(alpha), base.two_dst(alpha)
        sa, sb = tr.sigma(alpha.src), tr.sigma(alpha.dst)
        lhs = amb.vcomp(tr.sigma_one(fp),
                        amb.hcomp(g_mor.f2(alpha), amb.id2(sa)))
        rhs = amb.vcomp(amb.hcomp(amb.id2(sb), f_mor.f2(alpha)),
                        tr.sigma_one(f))
        if lhs != rhs:
            rb.violation("transformation.naturality", (alpha.name,))
    for g, f in _composable_pairs(base):
        sa, sb, sc = tr.sigma(f.src), tr.sigma(f.dst), tr.sigma(g.dst)
        fg, ff = f_mor.f1(g), f_mor.f1(f)
        gg, gf = g_mor.f1(g), g_mor.f1(f)
        five = amb.a(gg, gf, sa)
        five = amb.vcomp(amb.hcomp(amb.id2(gg), tr.sigma_one(f)), five)
        five = amb.vcomp(amb.inv(amb.a(gg, sb, ff)), five)
        five = amb.vcomp(amb.hcomp(tr.sigma_one(g), amb.id2(ff)), five)
        five = amb.vcomp(amb.a(sc, fg, ff), five)
        lhs = amb.vcomp(amb.hcomp(amb.id2(sc), f_mor.phi(g, f)), five)
        rhs = amb.vcomp(tr.sigma_one(base.compose1(g, f)),
                        amb.hcomp(g_mor.phi(g, f), amb.id2(sa)))
        if lhs != rhs:
            rb.violation("transformation.composite", (g.name, f.name))
    for a in base.zero_cells:
        sa = tr.sigma(a)
        lhs = amb.vcomp(amb.hcomp(amb.id2(sa), f_mor.phi0(a)),
                        amb.vcomp(amb.inv(amb.r(sa)), amb.l(sa)))
        rhs = amb.vcomp(tr.sigma_one(base.one_id(a)),
                        amb.hcomp(g_mor.phi0(a), amb.id2(sa)))
        if lhs != rhs:
            rb.violation("transformation.unit", (a,))
    return rb.build()


@dataclass(eq=False)
class Modification:
    dom: Transformation
    cod: Transformation
    comp: dict[str, Two]

    def __post_init__(self):
        s, t = self.dom, self.cod
        if s.dom is not t.dom or s.cod is not t.cod:
            raise StructureError(
                "modification endpoints must be parallel transformations")
        amb = s.dom.cod
        zs = set(s.dom.dom.zero_cells)
        if set(self.comp) != zs:
            raise StructureError("components must cover exactly the 0-cells")
        for a, cell in self.comp.items():
            have = (amb.two_src(cell), amb.two_dst(cell))
            if have != (s.sigma(a), t.sigma(a)):
                raise StructureError(
                    f"component at {a!r} must be a 2-cell σ_{a} → σ̃_{a}")

    def gamma(self, a: str) -> Two:
        return self.comp[a]


def check_modification(mod: Modification) -> Report:
    rb = ReportBuilder("modification")
    s, t = mod.dom, mod.cod
    f_mor, g_mor = s.dom, s.cod
    base, amb = f_mor.dom, f_mor.cod
    for f in _all_ones(base):
        lhs = amb.vcomp(t.sigma_one(f),
                        amb.hcomp(amb.id2(g_mor.f1(f)), mod.gamma(f.src)))
        rhs = amb.vcomp(amb.hcomp(mod.gamma(f.dst), amb.id2(f_mor.f1(f))),
                        s.sigma_one(f))
        if lhs != rhs:
            rb.violation("modification.square", (f.name,))
    return rb.build()


# -- strength -------------------------------------------------------------------


def classify_strength(x) -> str:
    """'strict' if every comparison cell is an identity, 'iso' if every one
    is invertible, else 'lax'."""
    if isinstance(x, Morphism):
        amb = x.cod
        cells = list(x.comp_cells.values()) + list(x.unit_cells.values())
    elif isinstance(x, Transformation):
        amb = x.dom.cod
        cells = list(x.comp_two.values())
    else:
        raise StructureError(f"cannot classify {type(x).__name__}")
    if all(amb.hom[(c.src, c.dst)].is_identity(c.name) for c in cells):
        return "strict"
    if all(amb.hom[(c.src, c.dst)].is_iso(c.name) for c in cells):
        return "iso"
    return "lax"


# -- local properties --------------------------------------------------------------


def _functor_faithful(fun: Functor) -> bool:
    seen = {}
    for arr, (x, y) in fun.dom.arrows.items():
        key = (x, y, fun.arr_map[arr])
        if key in seen:
            return False
        seen[key] = arr
    return True


def _functor_full(fun: Functor) -> bool:
    for x in fun.dom.objects:
        for y in fun.dom.objects:
            image = {fun.arr_map[p] for p in fun.dom.hom_set(x, y)}
            want = set(fun.cod.hom_set(fun.obj_map[x], fun.obj_map[y]))
            if not want <= image:
                return False
    return True


def _functor_ess_surjective(fun: Functor) -> bool:
    image = {fun.obj_map[x] for x in fun.dom.objects}
    for d in fun.cod.objects:
        if d in image:
            continue
        if not any(fun.cod.is_iso(p)
                   for o in image for p in fun.cod.hom_set(o, d)):
            return False
    return True


_LOCAL_TESTS = {
    "faithful": (_functor_faithful,),
    "full": (_functor_full,),
    "essentially_surjective": (_functor_ess_surjective,),
    "equivalence": (_functor_faithful, _functor_full, _functor_ess_surjective),
}


def local_property(mor: Morphism, prop: str) -> bool:
    """True iff every hom functor of the morphism has the property."""
    if prop not in _LOCAL_TESTS:
        raise StructureError(
            f"unknown local property {prop!r}; choose from "
            f"{sorted(_LOCAL_TESTS)}")
    tests = _LOCAL_TESTS[prop]
    return all(t(fun) for fun in mor.hom_functors.values() for t in tests)


# -- composition --------------------------------------------------------------------


def identity_morphism(bic: Bicategory) -> Morphism:
    comp_cells = {}
    for g, f in _composable_pairs(bic):
        comp_cells[(g, f)] = bic.id2(bic.compose1(g, f))
    return Morphism(
        bic, bic,
        {a: a for a in bic.zero_cells},
        {(a, b): identity_functor(bic.hom[(a, b)])
         for a in bic.zero_cells for b in bic.zero_cells},
        comp_cells,
        {a: bic.id2(bic.one_id(a)) for a in bic.zero_cells},
    )


def compose_morphisms(g_mor: Morphism, f_mor: Morphism) -> Morphism:
    """G after F; comparison cells are the standard pastings G(φ)∘ψ."""
    if f_mor.cod is not g_mor.dom:
        raise StructureError("morphisms are not composable")
    dom, cod = f_mor.dom, g_mor.cod
    obj_map = {a: g_mor.f0(f_mor.f0(a)) for a in dom.zero_cells}
    hom_functors = {}
    for (a, b), fun in f_mor.hom_functors.items():
        outer = g_mor.hom_functors[(f_mor.f0(a), f_mor.f0(b))]
        hom_functors[(a, b)] = compose_functors(outer, fun)
    comp_cells = {}
    for (g, f), cell in f_mor.comp_cells.items():
        comp_cells[(g, f)] = cod.vcomp(
            g_mor.f2(cell), g_mor.phi(f_mor.f1(g), f_mor.f1(f)))
    unit_cells = {}
    for a, cell in f_mor.unit_cells.items():
        unit_cells[a] = cod.vcomp(g_mor.f2(cell), g_mor.phi0(f_mor.f0(a)))
    return Morphism(dom, cod, obj_map, hom_functors, comp_cells, unit_cells)


def identity_transformation(f_mor: Morphism) -> Transformation:
    """Components I_{FA}; comparison cells the unitor composite l⁻¹∘r."""
    amb = f_mor.cod
    comp_one = {a: amb.one_id(f_mor.f0(a)) for a in f_mor.dom.zero_cells}
    comp_two = {}
    for f in _all_ones(f_mor.dom):
        ff = f_mor.f1(f)
        comp_two[f] = amb.vcomp(amb.inv(amb.l(ff)), amb.r(ff))
    return Transformation(f_mor, f_mor, comp_one, comp_two)


def compose_transformations(tau: Transformation, sigma: Transformation
                            ) -> Transformation:
    """τ after σ: components compose; comparison cells are the five-step
    associator pasting threading σ_f then τ_f."""
    if sigma.cod is not tau.dom:
        raise StructureError("transformations are not composable")
    f_mor, g_mor, h_mor = sigma.dom, sigma.cod, tau.cod
    amb = f_mor.cod
    comp_one = {a: amb.compose1(tau.sigma(a), sigma.sigma(a))
                for a in f_mor.dom.zero_cells}
    comp_two = {}
    for f in _all_ones(f_mor.dom):
        ta, sa = tau.sigma(f.src), sigma.sigma(f.src)
        tb, sb = tau.sigma(f.dst), sigma.sigma(f.dst)
        ff, gf, hf = f_mor.f1(f), g_mor.f1(f), h_mor.f1(f)
        cell = amb.inv(amb.a(hf, ta, sa))
        cell = amb.vcomp(amb.hcomp(tau.sigma_one(f), amb.id2(sa)), cell)
        cell = amb.vcomp(amb.a(tb, gf, sa), cell)
        cell = amb.vcomp(amb.hcomp(amb.id2(tb), sigma.sigma_one(f)), cell)
        cell = amb.vcomp(amb.inv(amb.a(tb, sb, ff)), cell)
        comp_two[f] = cell
    return Transformation(f_mor, h_mor, comp_one, comp_two)


def identity_modification(tr: Transformation) -> Modification:
    amb = tr.dom.cod
    return Modification(tr, tr, {a: amb.id2(tr.sigma(a))
                                 for a in tr.dom.dom.zero_cells})


def vcomp_modifications(delta: Modification, gamma: Modification) -> Modification:
    if gamma.cod is not delta.dom:
        raise StructureError("modifications are not vertically composable")
    amb = gamma.dom.dom.cod
    comp = {a: amb.vcomp(delta.gamma(a), gamma.gamma(a)) for a in gamma.comp}
    return Modification(gamma.dom, delta.cod, comp)


def hcomp_modifications(delta: Modification, gamma: Modification) -> Modification:
    """Componentwise horizontal composite, living between the composite
    transformations."""
    amb = gamma.dom.dom.cod
    comp = {a: amb.hcomp(delta.gamma(a), gamma.gamma(a)) for a in gamma.comp}
    return Modification(compose_transformations(delta.dom, gamma.dom),
                        compose_transformations(delta.cod, gamma.cod), comp)
