"""Hom-bicategories: homomorphisms as 0-cells, strong transformations as
1-cells, modifications as 2-cells.

Everything is built by brute-force enumeration of component tables filtered
through the axiom checkers, with an upfront budget refusal: if the predicted
number of candidate tables exceeds the budget, the call raises
BudgetExceeded carrying the prediction instead of starting the scan.

`build_hom_bicategory` assembles the full structure — vertical composition of
modifications, horizontal composition via the five-step transformation
composite, and componentwise associators/unitors — resolving every composite
against the enumerated cells, so the result is a closed finite bicategory
ready for `check_bicategory`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bicat import Bicategory, One, Two, find_equivalences
from .errors import BudgetExceeded, StructureError
from .fincat import DEFAULT_BUDGET, FinCat, _capped_product
from .maps import (Modification, Morphism, Transformation, _all_ones,
                   check_modification, check_transformation, classify_strength,
                   compose_transformations, hcomp_modifications,
                   identity_modification, identity_transformation,
                   local_property, vcomp_modifications)


def transformation_key(tr: Transformation) -> tuple:
    """Hashable value identity of a transformation's component tables."""
    ones = tuple(sorted((a, c.name) for a, c in tr.comp_one.items()))
    twos = tuple(sorted((f.src, f.dst, f.name, c.name)
                        for f, c in tr.comp_two.items()))
    return (ones, twos)


def modification_key(mod: Modification) -> tuple:
    return tuple(sorted((a, c.name) for a, c in mod.comp.items()))


def enumerate_transformations(f_mor: Morphism, g_mor: Morphism,
                              budget: int = DEFAULT_BUDGET,
                              strong_only: bool = True) -> list[Transformation]:
    """All (strong) transformations F -> G, in deterministic order, by
    enumerating component tables and keeping the ones that pass the checker."""
    if f_mor.dom is not g_mor.dom or f_mor.cod is not g_mor.cod:
        raise StructureError("transformations require parallel morphisms")
    base, amb = f_mor.dom, f_mor.cod
    zs = list(base.zero_cells)
    ones = list(_all_ones(base))
    one_choices = [amb.one_cells(f_mor.f0(a), g_mor.f0(a)) for a in zs]
    outer = _capped_product((len(c) for c in one_choices), budget)
    if outer > budget:
        raise BudgetExceeded(outer, budget, "transformation component tables")

    def cell_choices(comp_one, f):
        src = amb.compose1(g_mor.f1(f), comp_one[f.src])
        dst = amb.compose1(comp_one[f.dst], f_mor.f1(f))
        cat = amb.hom[(src.src, src.dst)]
        names = cat.hom_set(src.name, dst.name)
        if strong_only:
            names = [t for t in names if cat.is_iso(t)]
        return [Two(src.src, src.dst, t) for t in names]

    predicted = 0
    for combo in itertools.product(*one_choices):
        comp_one = dict(zip(zs, combo))
        predicted += _capped_product(
            (len(cell_choices(comp_one, f)) for f in ones), budget)
        if predicted > budget:
            raise BudgetExceeded(predicted, budget,
                                 "transformation comparison tables")
    out = []
    for combo in itertools.product(*one_choices):
        comp_one = dict(zip(zs, combo))
        choices = [cell_choices(comp_one, f) for f in ones]
        for cells in itertools.product(*choices):
            tr = Transformation(f_mor, g_mor, comp_one, dict(zip(ones, cells)))
            if check_transformation(tr).ok:
                out.append(tr)
    return out


def enumerate_modifications(sigma: Transformation, tau: Transformation,
                            budget: int = DEFAULT_BUDGET) -> list[Modification]:
    """All modifications sigma -> tau, in deterministic order."""
    if sigma.dom is not tau.dom or sigma.cod is not tau.cod:
        raise StructureError("modifications require parallel transformations")
    amb = sigma.dom.cod
    zs = list(sigma.dom.dom.zero_cells)
    choices = []
    for a in zs:
        s, t = sigma.sigma(a), tau.sigma(a)
        cat = amb.hom[(s.src, s.dst)]
        choices.append([Two(s.src, s.dst, x)
                        for x in cat.hom_set(s.name, t.name)])
    predicted = _capped_product((len(c) for c in choices), budget)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget, "modification component tables")
    out = []
    for combo in itertools.product(*choices):
        mod = Modification(sigma, tau, dict(zip(zs, combo)))
        if check_modification(mod).ok:
            out.append(mod)
    return out


@dataclass(eq=False)
class HomBicatSpec:
    """0-cell selection for a hom-bicategory: homomorphisms dom -> cod.

    Every listed morphism must be strict or iso (lax comparison cells break
    the construction: composites of transformations need invertible φ)."""

    dom: Bicategory
    cod: Bicategory
    zero_cells: list[Morphism]

    def __post_init__(self):
        seen = set()
        for i, mor in enumerate(self.zero_cells):
            if id(mor) in seen:
                raise StructureError(f"morphism {i} listed twice")
            seen.add(id(mor))
            if mor.dom is not self.dom or mor.cod is not self.cod:
                raise StructureError(f"morphism {i} does not map dom to cod")
            if classify_strength(mor) == "lax":
                raise StructureError(
                    f"morphism {i} is lax; 0-cells must be homomorphisms")


@dataclass(eq=False)
class HomBicategory(Bicategory):
    """build_hom_bicategory output: keeps the transformation/modification
    dictionaries and reverse lookups so cell ids resolve to structures."""

    morphism_of: dict[str, Morphism] = field(default_factory=dict)
    zero_name: dict[Morphism, str] = field(default_factory=dict)
    transformation_of: dict[tuple[str, str], dict[str, Transformation]] = \
        field(default_factory=dict)
    modification_of: dict[tuple[str, str], dict[str, Modification]] = \
        field(default_factory=dict)
    transformation_name: dict[tuple[str, str], dict[tuple, str]] = \
        field(default_factory=dict)
    modification_name: dict[tuple[str, str], dict[tuple, str]] = \
        field(default_factory=dict)

    def transformation(self, f: One) -> Transformation:
        return self.transformation_of[(f.src, f.dst)][f.name]

    def modification(self, t: Two) -> Modification:
        return self.modification_of[(t.src, t.dst)][t.name]

    def one_of_transformation(self, tr: Transformation) -> One:
        a = self.zero_name[tr.dom]
        b = self.zero_name[tr.cod]
        name = self.transformation_name[(a, b)].get(transformation_key(tr))
        if name is None:
            raise StructureError("transformation is not a cell of this hom bicategory")
        return One(a, b, name)

    def two_of_modification(self, mod: Modification) -> Two:
        a = self.zero_name[mod.dom.dom]
        b = self.zero_name[mod.dom.cod]
        sname = self.one_of_transformation(mod.dom).name
        tname = self.one_of_transformation(mod.cod).name
        key = (sname, tname, modification_key(mod))
        name = self.modification_name[(a, b)].get(key)
        if name is None:
            raise StructureError("modification is not a cell of this hom bicategory")
        return Two(a, b, name)


def build_hom_bicategory(spec: HomBicatSpec, budget: int = DEFAULT_BUDGET,
                         ids=None) -> HomBicategory:
    """Enumerate all strong transformations and modifications between the
    listed homomorphisms and assemble them into a bicategory."""
    mors = list(spec.zero_cells)
    if ids is None:
        ids = [f"F{i}" for i in range(len(mors))]
    ids = [str(x) for x in ids]
    if len(ids) != len(mors):
        raise StructureError("ids must match the 0-cell list")
    if len(set(ids)) != len(ids):
        raise StructureError("duplicate 0-cell ids")
    amb = spec.cod
    zcells = tuple(ids)
    morphism_of = dict(zip(ids, mors))
    zero_name = {mor: name for name, mor in morphism_of.items()}

    hom: dict[tuple[str, str], FinCat] = {}
    transformation_of = {}
    modification_of = {}
    transformation_name = {}
    modification_name = {}
    for a in zcells:
        for b in zcells:
            trs = enumerate_transformations(morphism_of[a], morphism_of[b],
                                            budget)
            tnames = {f"t{i}": tr for i, tr in enumerate(trs)}
            tkeys = {transformation_key(tr): n for n, tr in tnames.items()}
            mnames: dict[str, Modification] = {}
            mkeys: dict[tuple, str] = {}
            arrows: dict[str, tuple[str, str]] = {}
            for sn, s in tnames.items():
                for tn, t in tnames.items():
                    for mod in enumerate_modifications(s, t, budget):
                        n = f"m{len(mnames)}"
                        mnames[n] = mod
                        mkeys[(sn, tn, modification_key(mod))] = n
                        arrows[n] = (sn, tn)

            def mod_name(mod, lookup_pair=(a, b), keys=None, names=None):
                keys = mkeys if keys is None else keys
                names = tnames if names is None else names
                sn = tkeys[transformation_key(mod.dom)]
                tn = tkeys[transformation_key(mod.cod)]
                n = keys.get((sn, tn, modification_key(mod)))
                if n is None:
                    raise StructureError(
                        f"composite modification missing from hom({lookup_pair})")
                return n

            identity = {tn: mod_name(identity_modification(t))
                        for tn, t in tnames.items()}
            compose = {}
            for n2, (s2, _t2) in arrows.items():
                for n1, (_s1, t1) in arrows.items():
                    if t1 == s2:
                        v = vcomp_modifications(mnames[n2], mnames[n1])
                        compose[(n2, n1)] = mod_name(v)
            hom[(a, b)] = FinCat(tuple(tnames), arrows, identity, compose)
            transformation_of[(a, b)] = tnames
            modification_of[(a, b)] = mnames
            transformation_name[(a, b)] = tkeys
            modification_name[(a, b)] = mkeys

    def one_name(a, b, tr):
        n = transformation_name[(a, b)].get(transformation_key(tr))
        if n is None:
            raise StructureError(
                f"composite transformation missing from hom({(a, b)})")
        return n

    def two_name(a, b, mod):
        sn = one_name(a, b, mod.dom)
        tn = one_name(a, b, mod.cod)
        n = modification_name[(a, b)].get((sn, tn, modification_key(mod)))
        if n is None:
            raise StructureError(
                f"composite modification missing from hom({(a, b)})")
        return n

    comp_obj = {}
    comp_arr = {}
    for a in zcells:
        for b in zcells:
            for c in zcells:
                otab = {}
                for g in hom[(b, c)].objects:
                    for f in hom[(a, b)].objects:
                        comp = compose_transformations(
                            transformation_of[(b, c)][g],
                            transformation_of[(a, b)][f])
                        otab[(g, f)] = one_name(a, c, comp)
                atab = {}
                for q in hom[(b, c)].arrows:
                    for p in hom[(a, b)].arrows:
                        h = hcomp_modifications(modification_of[(b, c)][q],
                                                modification_of[(a, b)][p])
                        atab[(q, p)] = two_name(a, c, h)
                comp_obj[(a, b, c)] = otab
                comp_arr[(a, b, c)] = atab
    id_one = {a: one_name(a, a, identity_transformation(morphism_of[a]))
              for a in zcells}

    assoc_tab = {}
    for a in zcells:
        for b in zcells:
            for c in zcells:
                for d in zcells:
                    tab = {}
                    for h in hom[(c, d)].objects:
                        for g in hom[(b, c)].objects:
                            for f in hom[(a, b)].objects:
                                th = transformation_of[(c, d)][h]
                                tg = transformation_of[(b, c)][g]
                                tf = transformation_of[(a, b)][f]
                                lhs = compose_transformations(
                                    compose_transformations(th, tg), tf)
                                rhs = compose_transformations(
                                    th, compose_transformations(tg, tf))
                                comps = {z: amb.a(th.sigma(z), tg.sigma(z),
                                                  tf.sigma(z))
                                         for z in spec.dom.zero_cells}
                                mod = Modification(lhs, rhs, comps)
                                tab[(h, g, f)] = two_name(a, d, mod)
                    assoc_tab[(a, b, c, d)] = tab
    lunit_tab = {}
    runit_tab = {}
    for a in zcells:
        for b in zcells:
            ltab = {}
            rtab = {}
            idb = transformation_of[(b, b)][id_one[b]]
            ida = transformation_of[(a, a)][id_one[a]]
            for f in hom[(a, b)].objects:
                tf = transformation_of[(a, b)][f]
                lcomp = compose_transformations(idb, tf)
                lmod = Modification(lcomp, tf,
                                    {z: amb.l(tf.sigma(z))
                                     for z in spec.dom.zero_cells})
                ltab[f] = two_name(a, b, lmod)
                rcomp = compose_transformations(tf, ida)
                rmod = Modification(rcomp, tf,
                                    {z: amb.r(tf.sigma(z))
                                     for z in spec.dom.zero_cells})
                rtab[f] = two_name(a, b, rmod)
            lunit_tab[(a, b)] = ltab
            runit_tab[(a, b)] = rtab

    return HomBicategory(zcells, hom, comp_obj, comp_arr, id_one,
                         assoc_tab, lunit_tab, runit_tab,
                         morphism_of=morphism_of, zero_name=zero_name,
                         transformation_of=transformation_of,
                         modification_of=modification_of,
                         transformation_name=transformation_name,
                         modification_name=modification_name)


def is_biequivalence(f_mor: Morphism, budget: int = DEFAULT_BUDGET) -> bool:
    """Local equivalence on every hom plus essential surjectivity on 0-cells
    (every codomain 0-cell internally equivalent to an image)."""
    if not local_property(f_mor, "equivalence"):
        return False
    cod = f_mor.cod
    image = sorted({f_mor.f0(a) for a in f_mor.dom.zero_cells})
    for d in cod.zero_cells:
        if d in image:
            continue
        if not any(find_equivalences(cod, x, d, budget) for x in image):
            return False
    return True
