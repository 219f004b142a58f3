"""Structure files: canonical JSON with a top-level ``kind`` discriminator.

Kinds: fincat, bicategory, computad, assignment, morphism, transformation,
modification, homspec.  Names are object keys; composition tables are
explicit sorted pair/triple lists; composite keys (hom pairs, triples,
quadruples of 0-cells) join their components with ``|``.  Serialization is
canonical — keys sorted, two-space indent, trailing newline — so structurally
equal values produce byte-equal files.  The full schema is documented in
docs/file-formats.md.

Maps embed the bicategories they act on, making every file self-contained;
parsing reconstructs shared instances so the in-memory identity expectations
of `maps` hold.
"""
from __future__ import annotations

import json

from .bicat import Bicategory, One, Two
from .errors import ParseError, StructureError
from .fincat import FinCat, Functor
from .freebicat import Assignment, TwoComputad
from .grammar import parse_one_term, print_one_term
from .homs import HomBicatSpec
from .maps import Modification, Morphism, Transformation

SEP = "|"


def _join(*parts: str) -> str:
    for p in parts:
        if SEP in p:
            raise StructureError(f"cell id {p!r} may not contain {SEP!r}")
    return SEP.join(parts)


def _split(key: str, n: int) -> tuple[str, ...]:
    parts = tuple(key.split(SEP))
    if len(parts) != n:
        raise ParseError(f"expected a {n}-part key, got {key!r}")
    return parts


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- categories ------------------------------------------------------------------


def _cat_body(cat: FinCat) -> dict:
    return {
        "objects": sorted(cat.objects),
        "arrows": {t: list(ends) for t, ends in cat.arrows.items()},
        "identity": dict(cat.identity),
        "compose": sorted([g, f, h] for (g, f), h in cat.compose.items()),
    }


def _cat_from(body) -> FinCat:
    return FinCat(tuple(body["objects"]),
                  {t: tuple(ends) for t, ends in body["arrows"].items()},
                  dict(body["identity"]),
                  {(g, f): h for g, f, h in body["compose"]})


# -- bicategories ----------------------------------------------------------------


def _bic_body(bic: Bicategory) -> dict:
    return {
        "zero_cells": list(bic.zero_cells),
        "hom": {_join(a, b): _cat_body(cat) for (a, b), cat in bic.hom.items()},
        "comp_obj": {_join(a, b, c): sorted([g, f, h]
                                            for (g, f), h in tab.items())
                     for (a, b, c), tab in bic.comp_obj.items()},
        "comp_arr": {_join(a, b, c): sorted([q, p, h]
                                            for (q, p), h in tab.items())
                     for (a, b, c), tab in bic.comp_arr.items()},
        "id_one": dict(bic.id_one),
        "assoc": {_join(a, b, c, d): sorted([h, g, f, v]
                                            for (h, g, f), v in tab.items())
                  for (a, b, c, d), tab in bic.assoc_tab.items()},
        "lunit": {_join(a, b): dict(tab)
                  for (a, b), tab in bic.lunit_tab.items()},
        "runit": {_join(a, b): dict(tab)
                  for (a, b), tab in bic.runit_tab.items()},
    }


def _bic_from(body) -> Bicategory:
    return Bicategory(
        tuple(body["zero_cells"]),
        {_split(k, 2): _cat_from(v) for k, v in body["hom"].items()},
        {_split(k, 3): {(g, f): h for g, f, h in v}
         for k, v in body["comp_obj"].items()},
        {_split(k, 3): {(q, p): h for q, p, h in v}
         for k, v in body["comp_arr"].items()},
        dict(body["id_one"]),
        {_split(k, 4): {(h, g, f): v for h, g, f, v in tab}
         for k, tab in body["assoc"].items()},
        {_split(k, 2): dict(tab) for k, tab in body["lunit"].items()},
        {_split(k, 2): dict(tab) for k, tab in body["runit"].items()},
    )


# -- cells and maps -----------------------------------------------------------------


def _one(c: One) -> list[str]:
    return [c.src, c.dst, c.name]


def _two(c: Two) -> list[str]:
    return [c.src, c.dst, c.name]


def _one_from(v) -> One:
    return One(*v)


def _two_from(v) -> Two:
    return Two(*v)


def _morphism_body(mor: Morphism) -> dict:
    return {
        "obj_map": dict(mor.obj_map),
        "hom_functors": {_join(a, b): {"obj_map": dict(fun.obj_map),
                                       "arr_map": dict(fun.arr_map)}
                         for (a, b), fun in mor.hom_functors.items()},
        "comp_cells": sorted(([_one(g), _one(f), _two(c)]
                              for (g, f), c in mor.comp_cells.items())),
        "unit_cells": {a: _two(c) for a, c in mor.unit_cells.items()},
    }


def _morphism_from(body, dom: Bicategory, cod: Bicategory) -> Morphism:
    obj_map = dict(body["obj_map"])
    hom_functors = {}
    for k, fb in body["hom_functors"].items():
        a, b = _split(k, 2)
        fa, fb_ = obj_map[a], obj_map[b]
        hom_functors[(a, b)] = Functor(dom.hom[(a, b)], cod.hom[(fa, fb_)],
                                       dict(fb["obj_map"]),
                                       dict(fb["arr_map"]))
    comp_cells = {(_one_from(g), _one_from(f)): _two_from(c)
                  for g, f, c in body["comp_cells"]}
    unit_cells = {a: _two_from(c) for a, c in body["unit_cells"].items()}
    return Morphism(dom, cod, obj_map, hom_functors, comp_cells, unit_cells)


def _transformation_body(tr: Transformation) -> dict:
    return {
        "comp_one": {a: _one(c) for a, c in tr.comp_one.items()},
        "comp_two": sorted([_one(f), _two(c)]
                           for f, c in tr.comp_two.items()),
    }


def _transformation_from(body, f_mor: Morphism,
                         g_mor: Morphism) -> Transformation:
    comp_one = {a: _one_from(c) for a, c in body["comp_one"].items()}
    comp_two = {_one_from(f): _two_from(c) for f, c in body["comp_two"]}
    return Transformation(f_mor, g_mor, comp_one, comp_two)


# -- top-level serialization -----------------------------------------------------------


def serialize_structure(x) -> str:
    """Canonical JSON text for any supported structure."""
    if isinstance(x, FinCat):
        doc = {"kind": "fincat", **_cat_body(x)}
    elif isinstance(x, Bicategory):
        doc = {"kind": "bicategory", **_bic_body(x)}
    elif isinstance(x, TwoComputad):
        doc = {"kind": "computad",
               "zero_cells": list(x.zero_cells),
               "one_gens": {n: list(ends) for n, ends in x.one_gens.items()},
               "two_gens": {n: [print_one_term(s), print_one_term(t)]
                            for n, (s, t) in x.two_gens.items()}}
    elif isinstance(x, Assignment):
        doc = {"kind": "assignment",
               "zero": dict(x.zero),
               "one": {n: _one(c) for n, c in x.one.items()},
               "two": {n: _two(c) for n, c in x.two.items()}}
    elif isinstance(x, Morphism):
        doc = {"kind": "morphism", "dom": _bic_body(x.dom),
               "cod": _bic_body(x.cod), **_morphism_body(x)}
    elif isinstance(x, Transformation):
        doc = {"kind": "transformation",
               "base": _bic_body(x.dom.dom), "ambient": _bic_body(x.dom.cod),
               "dom": _morphism_body(x.dom), "cod": _morphism_body(x.cod),
               **_transformation_body(x)}
    elif isinstance(x, Modification):
        doc = {"kind": "modification",
               "base": _bic_body(x.dom.dom.dom),
               "ambient": _bic_body(x.dom.dom.cod),
               "morphism_dom": _morphism_body(x.dom.dom),
               "morphism_cod": _morphism_body(x.dom.cod),
               "dom": _transformation_body(x.dom),
               "cod": _transformation_body(x.cod),
               "comp": {a: _two(c) for a, c in x.comp.items()}}
    elif isinstance(x, HomBicatSpec):
        doc = {"kind": "homspec", "dom": _bic_body(x.dom),
               "cod": _bic_body(x.cod),
               "morphisms": [_morphism_body(m) for m in x.zero_cells]}
    else:
        raise StructureError(f"cannot serialize {type(x).__name__}")
    return canonical_json(doc)


def parse_structure_text(text: str):
    """Parse canonical-JSON structure text; structural validation only."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("structure files need a top-level 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "fincat":
            return _cat_from(doc)
        if kind == "bicategory":
            return _bic_from(doc)
        if kind == "computad":
            return TwoComputad(
                tuple(doc["zero_cells"]),
                {n: tuple(ends) for n, ends in doc["one_gens"].items()},
                {n: (parse_one_term(s), parse_one_term(t))
                 for n, (s, t) in doc["two_gens"].items()})
        if kind == "assignment":
            return Assignment(dict(doc["zero"]),
                              {n: _one_from(c) for n, c in doc["one"].items()},
                              {n: _two_from(c) for n, c in doc["two"].items()})
        if kind == "morphism":
            dom = _bic_from(doc["dom"])
            cod = _bic_from(doc["cod"])
            return _morphism_from(doc, dom, cod)
        if kind == "transformation":
            base = _bic_from(doc["base"])
            amb = _bic_from(doc["ambient"])
            f_mor = _morphism_from(doc["dom"], base, amb)
            g_mor = _morphism_from(doc["cod"], base, amb)
            return _transformation_from(doc, f_mor, g_mor)
        if kind == "modification":
            base = _bic_from(doc["base"])
            amb = _bic_from(doc["ambient"])
            f_mor = _morphism_from(doc["morphism_dom"], base, amb)
            g_mor = _morphism_from(doc["morphism_cod"], base, amb)
            s = _transformation_from(doc["dom"], f_mor, g_mor)
            t = _transformation_from(doc["cod"], f_mor, g_mor)
            return Modification(s, t, {a: _two_from(c)
                                       for a, c in doc["comp"].items()})
        if kind == "homspec":
            dom = _bic_from(doc["dom"])
            cod = _bic_from(doc["cod"])
            return HomBicatSpec(dom, cod, [_morphism_from(m, dom, cod)
                                           for m in doc["morphisms"]])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed {kind} structure: {e}") from e
    raise ParseError(f"unknown structure kind {kind!r}")


def parse_structure(path):
    """Parse a structure file; errors carry the file name."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    try:
        return parse_structure_text(text)
    except (ParseError, StructureError) as e:
        raise type(e)(f"{path}: {e}") from e
