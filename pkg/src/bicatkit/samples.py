"""Named example structures used by the test suite, CLI fixtures and docs.

Small finite categories (terminal, Z/2 monoid, 2-object poset), strict
2-categories built from tables (walking arrow, walking idempotent, walking
idempotent with a non-invertible endo-2-cell), the Z/2 cocycle bicategories,
and one exemplar of every strength level of morphism and transformation:

    morphisms        strict / iso / lax
    transformations  strict / iso ("strong") / lax ("plain")
"""
from __future__ import annotations

from .bicat import Bicategory, One, group_cocycle_bicategory
from .fincat import FinCat
from .maps import (Morphism, Transformation, identity_morphism,
                   identity_transformation)


def terminal_cat() -> FinCat:
    return FinCat(("*",), {"i": ("*", "*")}, {"*": "i"}, {("i", "i"): "i"})


def z2_monoid_cat() -> FinCat:
    """One object, arrows {e, s} with s∘s = e."""
    return FinCat(("*",), {"e": ("*", "*"), "s": ("*", "*")}, {"*": "e"},
                  {("e", "e"): "e", ("e", "s"): "s",
                   ("s", "e"): "s", ("s", "s"): "e"})


def poset2_cat() -> FinCat:
    """Two objects 0 ≤ 1 as a category."""
    return FinCat(("0", "1"),
                  {"i0": ("0", "0"), "i1": ("1", "1"), "le": ("0", "1")},
                  {"0": "i0", "1": "i1"},
                  {("i0", "i0"): "i0", ("i1", "i1"): "i1",
                   ("le", "i0"): "le", ("i1", "le"): "le"})


def strict_two_category(zero_cells, ones, ids, comp) -> Bicategory:
    """A 2-category with only identity 2-cells, from 1-cell tables.

    ones: {(a, b): [1-cell names]}; ids: {a: name}; comp: {(a, b, c):
    {(g, f): h}}.  2-cells are named "1" + the 1-cell name."""
    zero_cells = tuple(zero_cells)
    hom = {}
    for a in zero_cells:
        for b in zero_cells:
            objs = tuple(ones.get((a, b), ()))
            arrows = {f"1{o}": (o, o) for o in objs}
            identity = {o: f"1{o}" for o in objs}
            compose = {(f"1{o}", f"1{o}"): f"1{o}" for o in objs}
            hom[(a, b)] = FinCat(objs, arrows, identity, compose)
    comp_obj = {}
    comp_arr = {}
    for a in zero_cells:
        for b in zero_cells:
            for c in zero_cells:
                tab = comp.get((a, b, c), {})
                otab = {}
                atab = {}
                for g in hom[(b, c)].objects:
                    for f in hom[(a, b)].objects:
                        h = tab[(g, f)]
                        otab[(g, f)] = h
                        atab[(f"1{g}", f"1{f}")] = f"1{h}"
                comp_obj[(a, b, c)] = otab
                comp_arr[(a, b, c)] = atab
    assoc_tab = {}
    for a in zero_cells:
        for b in zero_cells:
            for c in zero_cells:
                for d in zero_cells:
                    tab = {}
                    for h in hom[(c, d)].objects:
                        for g in hom[(b, c)].objects:
                            for f in hom[(a, b)].objects:
                                hg = comp_obj[(b, c, d)][(h, g)]
                                tab[(h, g, f)] = f"1{comp_obj[(a, b, d)][(hg, f)]}"
                    assoc_tab[(a, b, c, d)] = tab
    lunit_tab = {}
    runit_tab = {}
    for a in zero_cells:
        for b in zero_cells:
            lunit_tab[(a, b)] = {f: f"1{f}" for f in hom[(a, b)].objects}
            runit_tab[(a, b)] = dict(lunit_tab[(a, b)])
    return Bicategory(zero_cells, hom, comp_obj, comp_arr,
                      {a: ids[a] for a in zero_cells},
                      assoc_tab, lunit_tab, runit_tab)


def trivial_two_category() -> Bicategory:
    """One 0-cell, one 1-cell, one 2-cell."""
    return strict_two_category(("*",), {("*", "*"): ["I"]}, {"*": "I"},
                               {("*", "*", "*"): {("I", "I"): "I"}})


def walking_arrow_two_category() -> Bicategory:
    """Two 0-cells with a single 1-cell between them and one empty hom."""
    return strict_two_category(
        ("A", "B"),
        {("A", "A"): ["iA"], ("B", "B"): ["iB"], ("A", "B"): ["w"],
         ("B", "A"): []},
        {"A": "iA", "B": "iB"},
        {("A", "A", "A"): {("iA", "iA"): "iA"},
         ("A", "A", "B"): {("w", "iA"): "w"},
         ("A", "B", "B"): {("iB", "w"): "w"},
         ("B", "B", "B"): {("iB", "iB"): "iB"}})


def walking_idempotent() -> Bicategory:
    """One 0-cell, 1-cells {I, w} with w∘w = w, identity 2-cells only."""
    t = {("I", "I"): "I", ("I", "w"): "w", ("w", "I"): "w", ("w", "w"): "w"}
    return strict_two_category(("*",), {("*", "*"): ["I", "w"]}, {"*": "I"},
                               {("*", "*", "*"): t})


def walking_idempotent_endo() -> Bicategory:
    """walking_idempotent plus a non-invertible idempotent 2-cell m: w -> w;
    horizontal/vertical composites are m whenever any factor is m."""
    objs = ("I", "w")
    arrows = {"1I": ("I", "I"), "1w": ("w", "w"), "m": ("w", "w")}
    compose = {("1I", "1I"): "1I", ("1w", "1w"): "1w",
               ("1w", "m"): "m", ("m", "1w"): "m", ("m", "m"): "m"}
    cat = FinCat(objs, arrows, {"I": "1I", "w": "1w"}, compose)
    hom = {("*", "*"): cat}
    octab = {("I", "I"): "I", ("I", "w"): "w", ("w", "I"): "w",
             ("w", "w"): "w"}
    atab = {}
    for q in arrows:
        for p in arrows:
            g, f = cat.src(q), cat.src(p)
            h = octab[(g, f)]
            atab[(q, p)] = "m" if "m" in (q, p) else f"1{h}"
    assoc = {("*", "*", "*", "*"):
             {(h, g, f): f"1{octab[(octab[(h, g)], f)]}"
              for h in objs for g in objs for f in objs}}
    unit = {("*", "*"): {f: f"1{f}" for f in objs}}
    return Bicategory(("*",), hom, {("*", "*", "*"): octab},
                      {("*", "*", "*"): atab}, {"*": "I"}, assoc,
                      unit, {("*", "*"): dict(unit[("*", "*")])})


def nontrivial_cocycle_bicategory() -> Bicategory:
    """Z/2 group bicategory twisted by the nontrivial normalized 3-cocycle."""
    return group_cocycle_bicategory(
        2, lambda i, j, k: -1 if (i, j, k) == (1, 1, 1) else 1)


def trivial_cocycle_bicategory() -> Bicategory:
    return group_cocycle_bicategory(2, lambda i, j, k: 1)


# -- morphism strength exemplars ------------------------------------------------------


def inclusion_morphism(dom: Bicategory, cod: Bicategory) -> Morphism:
    """The strict morphism that is the identity on cell names (dom must be a
    sub-structure of cod under the same names)."""
    from .fincat import Functor
    hom_functors = {}
    for (a, b), cat in dom.hom.items():
        hom_functors[(a, b)] = Functor(cat, cod.hom[(a, b)],
                                       {o: o for o in cat.objects},
                                       {t: t for t in cat.arrows})
    comp_cells = {}
    for a in dom.zero_cells:
        for b in dom.zero_cells:
            for c in dom.zero_cells:
                for g in dom.one_cells(b, c):
                    for f in dom.one_cells(a, b):
                        gf = dom.compose1(g, f)
                        comp_cells[(g, f)] = cod.id2(One(a, c, gf.name))
    unit_cells = {a: cod.id2(cod.one_id(a)) for a in dom.zero_cells}
    return Morphism(dom, cod, {a: a for a in dom.zero_cells}, hom_functors,
                    comp_cells, unit_cells)


def collapse_morphism(dom: Bicategory, cod: Bicategory) -> Morphism:
    """The strict morphism sending every 1-cell to the identity and every
    2-cell to its identity 2-cell (constant at the first 0-cell of cod)."""
    from .fincat import Functor
    z = cod.zero_cells[0]
    iz = cod.id_one[z]
    hom_functors = {}
    for (a, b), cat in dom.hom.items():
        hom_functors[(a, b)] = Functor(
            cat, cod.hom[(z, z)],
            {o: iz for o in cat.objects},
            {t: cod.hom[(z, z)].identity[iz] for t in cat.arrows})
    comp_cells = {}
    for a in dom.zero_cells:
        for b in dom.zero_cells:
            for c in dom.zero_cells:
                for g in dom.one_cells(b, c):
                    for f in dom.one_cells(a, b):
                        comp_cells[(g, f)] = cod.id2(cod.one_id(z))
    unit_cells = {a: cod.id2(cod.one_id(z)) for a in dom.zero_cells}
    return Morphism(dom, cod, {a: z for a in dom.zero_cells}, hom_functors,
                    comp_cells, unit_cells)


def lax_idempotent_morphism() -> Morphism:
    """walking_idempotent -> walking_idempotent_endo, identity on cells, with
    the non-invertible comparison cell φ_{w,w} = m.  Properly lax."""
    dom = walking_idempotent()
    cod = walking_idempotent_endo()
    mor = inclusion_morphism(dom, cod)
    w = One("*", "*", "w")
    comp_cells = dict(mor.comp_cells)
    comp_cells[(w, w)] = cod.two("*", "*", "m")
    return Morphism(dom, cod, mor.obj_map, mor.hom_functors, comp_cells,
                    mor.unit_cells)


def twisted_self_morphism(bic: Bicategory) -> Morphism:
    """Identity-on-cells self-morphism of a Z/2 cocycle bicategory with
    comparison cell −1 at (u,u) (a normalized 2-cochain twist).  Iso but not
    strict."""
    mor = identity_morphism(bic)
    u = bic.one("*", "*", "u")
    e = bic.one_id("*")
    comp_cells = dict(mor.comp_cells)
    comp_cells[(u, u)] = bic.two("*", "*", f"neg_{e.name}")
    return Morphism(bic, bic, mor.obj_map, mor.hom_functors, comp_cells,
                    mor.unit_cells)


# -- transformation strength exemplars -------------------------------------------------


def sign_transformation(bic: Bicategory) -> Transformation:
    """Self-transformation of the identity on a Z/2 cocycle bicategory whose
    comparison cell at u is the sign flip.  Strong (iso) but not strict."""
    mor = identity_morphism(bic)
    tr = identity_transformation(mor)
    u = bic.one("*", "*", "u")
    comp_two = dict(tr.comp_two)
    comp_two[u] = bic.two("*", "*", "neg_u")
    return Transformation(mor, mor, tr.comp_one, comp_two)


def plain_transformation() -> Transformation:
    """Self-transformation of walking_idempotent -> walking_idempotent_endo
    with component w and non-invertible comparison cell m.  Properly lax."""
    dom = walking_idempotent()
    cod = walking_idempotent_endo()
    mor = inclusion_morphism(dom, cod)
    w = One("*", "*", "w")
    i = One("*", "*", "I")
    comp_one = {"*": cod.one("*", "*", "w")}
    comp_two = {w: cod.two("*", "*", "m"), i: cod.id2(cod.one("*", "*", "w"))}
    return Transformation(mor, mor, comp_one, comp_two)


def strength_table() -> dict[str, dict[str, object]]:
    """The 3x2 strength exemplar table: one structure per (kind, strength)."""
    cocycle = nontrivial_cocycle_bicategory()
    idem = walking_idempotent()
    endo = walking_idempotent_endo()
    incl = inclusion_morphism(idem, endo)
    return {
        "morphism": {
            "strict": identity_morphism(cocycle),
            "iso": twisted_self_morphism(cocycle),
            "lax": lax_idempotent_morphism(),
        },
        "transformation": {
            "strict": identity_transformation(incl),
            "iso": sign_transformation(cocycle),
            "lax": plain_transformation(),
        },
    }
