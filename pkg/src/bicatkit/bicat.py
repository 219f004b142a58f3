"""Finite bicategories as explicit tables, with exhaustive law checking.

0-cells are string ids; each ordered pair gets a hom FinCat whose objects are
the 1-cells and whose arrows are the 2-cells.  Horizontal composition is
stored as object/arrow tables (`comp_obj`/`comp_arr`); the functor view over
a product hom-category is available on demand via `comp_functor`.

`One` / `Two` are value-type addresses of 1-/2-cells (their hom location plus
the local id); all operations take and return these.

Law checking runs on an integer arena (see `bicatkit.kernels`): the compiled
kernels make the exhaustive pentagon / naturality / interchange scans cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, StructureError
from .fincat import (DEFAULT_BUDGET, FinCat, Functor, NatTrans, check_fincat,
                     compose_functors, enumerate_functors, enumerate_nattrans,
                     hcomp_nattrans, identity_functor, identity_nattrans,
                     pair_id, product, vcomp_nattrans)
from .kernels import (scan_assoc_nat, scan_comp_id, scan_comp_typing,
                      scan_interchange, scan_pentagon, scan_triangle,
                      scan_unitor_nat)
from .report import VIOLATION_CAP, Report, ReportBuilder


@dataclass(frozen=True)
class One:
    """Address of a 1-cell: 0-cell endpoints plus its id in hom(src, dst)."""

    src: str
    dst: str
    name: str


@dataclass(frozen=True)
class Two:
    """Address of a 2-cell: the hom pair it lives in plus its arrow id."""

    src: str
    dst: str
    name: str


@dataclass(eq=False)
class _Arena:
    """Integer view of a bicategory for the scan kernels."""

    one_names: list[tuple[str, str, str]]
    two_names: list[tuple[str, str, str]]
    one_index: dict[tuple[str, str, str], int]
    two_index: dict[tuple[str, str, str], int]
    zero_index: dict[str, int]
    one_src0: np.ndarray
    one_dst0: np.ndarray
    two_src: np.ndarray
    two_dst: np.ndarray
    id_one0: np.ndarray
    id2: np.ndarray
    comp1: np.ndarray
    comp2: np.ndarray
    vcomp: np.ndarray
    assoc: np.ndarray
    lun: np.ndarray
    run: np.ndarray


@dataclass(eq=False)
class Bicategory:
    zero_cells: tuple[str, ...]
    hom: dict[tuple[str, str], FinCat]
    comp_obj: dict[tuple[str, str, str], dict[tuple[str, str], str]]
    comp_arr: dict[tuple[str, str, str], dict[tuple[str, str], str]]
    id_one: dict[str, str]
    assoc_tab: dict[tuple[str, str, str, str], dict[tuple[str, str, str], str]]
    lunit_tab: dict[tuple[str, str], dict[str, str]]
    runit_tab: dict[tuple[str, str], dict[str, str]]

    def __post_init__(self):
        self.zero_cells = tuple(self.zero_cells)
        zs = set(self.zero_cells)
        if len(zs) != len(self.zero_cells):
            raise StructureError("duplicate 0-cell ids")
        if set(self.hom) != {(a, b) for a in zs for b in zs}:
            raise StructureError("hom table must cover exactly the ordered 0-cell pairs")
        if set(self.id_one) != zs:
            raise StructureError("id_one must cover exactly the 0-cells")
        for a, i in self.id_one.items():
            if i not in self.hom[(a, a)].objects:
                raise StructureError(f"identity 1-cell of {a!r} is not an object of hom({a},{a})")
        triples = {(a, b, c) for a in zs for b in zs for c in zs}
        if set(self.comp_obj) != triples or set(self.comp_arr) != triples:
            raise StructureError("comp tables must cover exactly the 0-cell triples")
        for (a, b, c) in triples:
            hab, hbc, hac = self.hom[(a, b)], self.hom[(b, c)], self.hom[(a, c)]
            tab = self.comp_obj[(a, b, c)]
            want = {(g, f) for g in hbc.objects for f in hab.objects}
            if set(tab) != want:
                raise StructureError(f"comp_obj at {(a, b, c)} is not total over object pairs")
            for gf, h in tab.items():
                if h not in hac.objects:
                    raise StructureError(f"comp_obj value {h!r} dangling at {(a, b, c)}")
            atab = self.comp_arr[(a, b, c)]
            want = {(q, p) for q in hbc.arrows for p in hab.arrows}
            if set(atab) != want:
                raise StructureError(f"comp_arr at {(a, b, c)} is not total over arrow pairs")
            for qp, h in atab.items():
                if h not in hac.arrows:
                    raise StructureError(f"comp_arr value {h!r} dangling at {(a, b, c)}")
        quads = {(a, b, c, d) for a in zs for b in zs for c in zs for d in zs}
        if set(self.assoc_tab) != quads:
            raise StructureError("assoc table must cover exactly the 0-cell quadruples")
        for (a, b, c, d) in quads:
            had = self.hom[(a, d)]
            tab = self.assoc_tab[(a, b, c, d)]
            want = {(h, g, f)
                    for h in self.hom[(c, d)].objects
                    for g in self.hom[(b, c)].objects
                    for f in self.hom[(a, b)].objects}
            if set(tab) != want:
                raise StructureError(f"assoc at {(a, b, c, d)} is not total over 1-cell triples")
            for (h, g, f), v in tab.items():
                if v not in had.arrows:
                    raise StructureError(f"assoc value {v!r} dangling at {(a, b, c, d)}")
                hg = self.comp_obj[(b, c, d)][(h, g)]
                gf = self.comp_obj[(a, b, c)][(g, f)]
                src = self.comp_obj[(a, b, d)][(hg, f)]
                dst = self.comp_obj[(a, c, d)][(h, gf)]
                if had.arrows[v] != (src, dst):
                    raise StructureError(
                        f"assoc component at {(h, g, f)} has endpoints "
                        f"{had.arrows[v]}, want ({src!r}, {dst!r})")
        pairs = {(a, b) for a in zs for b in zs}
        if set(self.lunit_tab) != pairs or set(self.runit_tab) != pairs:
            raise StructureError("unitor tables must cover exactly the 0-cell pairs")
        for (a, b) in pairs:
            hab = self.hom[(a, b)]
            ltab, rtab = self.lunit_tab[(a, b)], self.runit_tab[(a, b)]
            if set(ltab) != set(hab.objects) or set(rtab) != set(hab.objects):
                raise StructureError(f"unitor tables at {(a, b)} must cover the 1-cells")
            for f in hab.objects:
                lv, rv = ltab[f], rtab[f]
                if lv not in hab.arrows or rv not in hab.arrows:
                    raise StructureError(f"unitor value dangling at {(a, b)}")
                isrc = self.comp_obj[(a, b, b)][(self.id_one[b], f)]
                if hab.arrows[lv] != (isrc, f):
                    raise StructureError(f"left unitor at {f!r} has wrong endpoints")
                isrc = self.comp_obj[(a, a, b)][(f, self.id_one[a])]
                if hab.arrows[rv] != (isrc, f):
                    raise StructureError(f"right unitor at {f!r} has wrong endpoints")
        self._arena: _Arena | None = None

    # -- cell addressing ----------------------------------------------------

    def one(self, a: str, b: str, name: str) -> One:
        if name not in self.hom[(a, b)].objects:
            raise StructureError(f"no 1-cell {name!r} in hom({a},{b})")
        return One(a, b, name)

    def two(self, a: str, b: str, name: str) -> Two:
        if name not in self.hom[(a, b)].arrows:
            raise StructureError(f"no 2-cell {name!r} in hom({a},{b})")
        return Two(a, b, name)

    def one_cells(self, a: str, b: str) -> list[One]:
        return [One(a, b, f) for f in self.hom[(a, b)].objects]

    def two_cells(self, a: str, b: str) -> list[Two]:
        return [Two(a, b, t) for t in sorted(self.hom[(a, b)].arrows)]

    def one_id(self, a: str) -> One:
        return One(a, a, self.id_one[a])

    def two_src(self, t: Two) -> One:
        return One(t.src, t.dst, self.hom[(t.src, t.dst)].src(t.name))

    def two_dst(self, t: Two) -> One:
        return One(t.src, t.dst, self.hom[(t.src, t.dst)].dst(t.name))

    # -- operations ----------------------------------------------------------

    def compose1(self, g: One, f: One) -> One:
        """Horizontal composite g∘f of 1-cells (g after f)."""
        if f.dst != g.src:
            raise StructureError(f"1-cells not composable: {f} then {g}")
        name = self.comp_obj[(f.src, f.dst, g.dst)][(g.name, f.name)]
        return One(f.src, g.dst, name)

    def hcomp(self, beta: Two, alpha: Two) -> Two:
        """Horizontal composite beta*alpha of 2-cells (beta on the left factor)."""
        if alpha.dst != beta.src:
            raise StructureError(f"2-cells not horizontally composable: {alpha} then {beta}")
        name = self.comp_arr[(alpha.src, alpha.dst, beta.dst)][(beta.name, alpha.name)]
        return Two(alpha.src, beta.dst, name)

    def vcomp(self, beta: Two, alpha: Two) -> Two:
        """Vertical composite beta∘alpha (beta after alpha) in one hom-category."""
        if (alpha.src, alpha.dst) != (beta.src, beta.dst):
            raise StructureError("2-cells live in different hom-categories")
        cat = self.hom[(alpha.src, alpha.dst)]
        name = cat.compose.get((beta.name, alpha.name))
        if name is None:
            raise StructureError(f"2-cells not vertically composable: {alpha} then {beta}")
        return Two(alpha.src, alpha.dst, name)

    def id2(self, f: One) -> Two:
        return Two(f.src, f.dst, self.hom[(f.src, f.dst)].identity[f.name])

    def a(self, h: One, g: One, f: One) -> Two:
        """Associator component (h∘g)∘f -> h∘(g∘f)."""
        if f.dst != g.src or g.dst != h.src:
            raise StructureError("associator arguments are not composable")
        name = self.assoc_tab[(f.src, g.src, h.src, h.dst)][(h.name, g.name, f.name)]
        return Two(f.src, h.dst, name)

    def l(self, f: One) -> Two:
        """Left unitor component I∘f -> f."""
        return Two(f.src, f.dst, self.lunit_tab[(f.src, f.dst)][f.name])

    def r(self, f: One) -> Two:
        """Right unitor component f∘I -> f."""
        return Two(f.src, f.dst, self.runit_tab[(f.src, f.dst)][f.name])

    def inv(self, t: Two) -> Two:
        inv = self.hom[(t.src, t.dst)].inverse(t.name)
        if inv is None:
            raise StructureError(f"2-cell {t} is not invertible")
        return Two(t.src, t.dst, inv)

    # -- integer arena --------------------------------------------------------

    def arena(self) -> _Arena:
        if self._arena is not None:
            return self._arena
        zero_index = {z: i for i, z in enumerate(self.zero_cells)}
        one_names: list[tuple[str, str, str]] = []
        two_names: list[tuple[str, str, str]] = []
        for a in self.zero_cells:
            for b in self.zero_cells:
                cat = self.hom[(a, b)]
                for f in cat.objects:
                    one_names.append((a, b, f))
                for t in sorted(cat.arrows):
                    two_names.append((a, b, t))
        one_index = {k: i for i, k in enumerate(one_names)}
        two_index = {k: i for i, k in enumerate(two_names)}
        n0, n1, n2 = len(self.zero_cells), len(one_names), len(two_names)
        I = np.intc
        one_src0 = np.empty(n1, I)
        one_dst0 = np.empty(n1, I)
        for i, (a, b, _f) in enumerate(one_names):
            one_src0[i], one_dst0[i] = zero_index[a], zero_index[b]
        two_src = np.empty(n2, I)
        two_dst = np.empty(n2, I)
        id2 = np.empty(n1, I)
        for i, (a, b, f) in enumerate(one_names):
            id2[i] = two_index[(a, b, self.hom[(a, b)].identity[f])]
        for j, (a, b, t) in enumerate(two_names):
            s, d = self.hom[(a, b)].arrows[t]
            two_src[j] = one_index[(a, b, s)]
            two_dst[j] = one_index[(a, b, d)]
        id_one0 = np.empty(n0, I)
        for a, i in zero_index.items():
            id_one0[i] = one_index[(a, a, self.id_one[a])]
        comp1 = np.full((n1, n1), -1, I)
        for (a, b, c), tab in self.comp_obj.items():
            for (g, f), h in tab.items():
                comp1[one_index[(b, c, g)], one_index[(a, b, f)]] = one_index[(a, c, h)]
        comp2 = np.full((n2, n2), -1, I)
        for (a, b, c), tab in self.comp_arr.items():
            for (q, p), h in tab.items():
                comp2[two_index[(b, c, q)], two_index[(a, b, p)]] = two_index[(a, c, h)]
        vcomp = np.full((n2, n2), -1, I)
        for a in self.zero_cells:
            for b in self.zero_cells:
                cat = self.hom[(a, b)]
                for (q, p), h in cat.compose.items():
                    vcomp[two_index[(a, b, q)], two_index[(a, b, p)]] = two_index[(a, b, h)]
        assoc = np.full((n1, n1, n1), -1, I)
        for (a, b, c, d), tab in self.assoc_tab.items():
            for (h, g, f), v in tab.items():
                assoc[one_index[(c, d, h)], one_index[(b, c, g)],
                      one_index[(a, b, f)]] = two_index[(a, d, v)]
        lun = np.empty(n1, I)
        run = np.empty(n1, I)
        for i, (a, b, f) in enumerate(one_names):
            lun[i] = two_index[(a, b, self.lunit_tab[(a, b)][f])]
            run[i] = two_index[(a, b, self.runit_tab[(a, b)][f])]
        self._arena = _Arena(one_names, two_names, one_index, two_index,
                             zero_index, one_src0, one_dst0, two_src, two_dst,
                             id_one0, id2, comp1, comp2, vcomp, assoc, lun, run)
        return self._arena

    def comp_functor(self, a: str, b: str, c: str) -> Functor:
        """The composition functor hom(b,c) x hom(a,b) -> hom(a,c) as a Functor."""
        dom = product(self.hom[(b, c)], self.hom[(a, b)])
        obj_map = {pair_id(g, f): h for (g, f), h in self.comp_obj[(a, b, c)].items()}
        arr_map = {pair_id(q, p): h for (q, p), h in self.comp_arr[(a, b, c)].items()}
        return Functor(dom, self.hom[(a, c)], obj_map, arr_map)


# -- check ---------------------------------------------------------------------


def check_bicategory(bic: Bicategory) -> Report:
    """Exhaustively verify all bicategory laws; see module docstring for law names."""
    rb = ReportBuilder("bicategory")
    for a in bic.zero_cells:
        for b in bic.zero_cells:
            sub = check_fincat(bic.hom[(a, b)])
            for v in sub.violations:
                rb.structural(v.law, (a, b) + v.at, v.detail)
            for law, n in sub.suppressed.items():
                rb.suppress(law, n)
    ar = bic.arena()
    cap = VIOLATION_CAP

    def one_at(idx) -> str:
        return ar.one_names[idx][2]

    def two_at(idx) -> str:
        return ar.two_names[idx][2]

    rows, total = scan_comp_typing(ar.two_src, ar.two_dst, ar.comp1, ar.comp2, cap)
    for b, a in rows:
        rb.structural("bicategory.comp-typing", (two_at(b), two_at(a)))
    rb.suppress("bicategory.comp-typing", total - len(rows))

    rows, total = scan_comp_id(ar.comp1, ar.comp2, ar.id2, cap)
    for g, f in rows:
        rb.structural("bicategory.comp-identity", (one_at(g), one_at(f)))
    rb.suppress("bicategory.comp-identity", total - len(rows))

    rows, total = scan_interchange(ar.vcomp, ar.comp2, cap)
    for b2, b1, a2, a1 in rows:
        rb.structural("bicategory.interchange",
                      (two_at(b2), two_at(b1), two_at(a2), two_at(a1)))
    rb.suppress("bicategory.interchange", total - len(rows))

    for (zs, tab, law) in (
        (4, bic.assoc_tab, "bicategory.assoc-invertible"),
        (2, bic.lunit_tab, "bicategory.lunit-invertible"),
        (2, bic.runit_tab, "bicategory.runit-invertible"),
    ):
        for key, sub in tab.items():
            pair = (key[0], key[-1])
            cat = bic.hom[pair]
            for cells, v in sub.items():
                if cat.inverse(v) is None:
                    at = cells if isinstance(cells, tuple) else (cells,)
                    rb.violation(law, at)

    rows, total = scan_assoc_nat(ar.two_src, ar.two_dst, ar.comp2, ar.vcomp,
                                 ar.assoc, cap)
    for c, b, a in rows:
        rb.violation("bicategory.assoc-natural", (two_at(c), two_at(b), two_at(a)))
    rb.suppress("bicategory.assoc-natural", total - len(rows))

    rows, total = scan_unitor_nat(ar.two_src, ar.two_dst, ar.one_src0,
                                  ar.one_dst0, ar.id_one0, ar.comp2, ar.vcomp,
                                  ar.id2, ar.lun, ar.run, cap)
    for a, side in rows:
        law = "bicategory.lunit-natural" if side == 0 else "bicategory.runit-natural"
        rb.violation(law, (two_at(a),))
    rb.suppress("bicategory.unitor-natural", total - len(rows))

    rows, total = scan_pentagon(ar.comp1, ar.vcomp, ar.comp2, ar.id2, ar.assoc, cap)
    for k, h, g, f in rows:
        rb.violation("bicategory.pentagon",
                     (one_at(k), one_at(h), one_at(g), one_at(f)))
    rb.suppress("bicategory.pentagon", total - len(rows))

    rows, total = scan_triangle(ar.comp1, ar.vcomp, ar.comp2, ar.id2, ar.assoc,
                                ar.lun, ar.run, ar.one_src0, ar.id_one0, cap)
    for g, f in rows:
        rb.violation("bicategory.triangle", (one_at(g), one_at(f)))
    rb.suppress("bicategory.triangle", total - len(rows))
    return rb.build()


def is_two_category(bic: Bicategory) -> bool:
    """True iff all associator and unitor components are identity 2-cells."""
    for key, tab in bic.assoc_tab.items():
        cat = bic.hom[(key[0], key[-1])]
        if any(not cat.is_identity(v) for v in tab.values()):
            return False
    for tabs in (bic.lunit_tab, bic.runit_tab):
        for key, tab in tabs.items():
            cat = bic.hom[key]
            if any(not cat.is_identity(v) for v in tab.values()):
                return False
    return True


# -- whiskering ------------------------------------------------------------------


def whisker_left(bic: Bicategory, h: One, at: str) -> Functor:
    """Post-composition functor h∘(-): hom(at, h.src) -> hom(at, h.dst)."""
    dom, cod = bic.hom[(at, h.src)], bic.hom[(at, h.dst)]
    idh = bic.id2(h)
    return Functor(
        dom, cod,
        {f: bic.comp_obj[(at, h.src, h.dst)][(h.name, f)] for f in dom.objects},
        {p: bic.comp_arr[(at, h.src, h.dst)][(idh.name, p)] for p in dom.arrows},
    )


def whisker_right(bic: Bicategory, h: One, at: str) -> Functor:
    """Pre-composition functor (-)∘h: hom(h.dst, at) -> hom(h.src, at)."""
    dom, cod = bic.hom[(h.dst, at)], bic.hom[(h.src, at)]
    idh = bic.id2(h)
    return Functor(
        dom, cod,
        {f: bic.comp_obj[(h.src, h.dst, at)][(f, h.name)] for f in dom.objects},
        {p: bic.comp_arr[(h.src, h.dst, at)][(p, idh.name)] for p in dom.arrows},
    )


# -- opposite ---------------------------------------------------------------------


def opposite(bic: Bicategory) -> Bicategory:
    """Reverse 1-cells but not 2-cells; associator inverts with reversed
    arguments and the unitors swap."""
    zs = bic.zero_cells
    hom = {(a, b): bic.hom[(b, a)] for a in zs for b in zs}
    comp_obj = {}
    comp_arr = {}
    for a in zs:
        for b in zs:
            for c in zs:
                comp_obj[(a, b, c)] = {
                    (g, f): h for (f, g), h in bic.comp_obj[(c, b, a)].items()}
                comp_arr[(a, b, c)] = {
                    (q, p): h for (p, q), h in bic.comp_arr[(c, b, a)].items()}
    assoc = {}
    for a in zs:
        for b in zs:
            for c in zs:
                for d in zs:
                    tab = {}
                    cat = bic.hom[(d, a)]
                    for (f, g, h), v in bic.assoc_tab[(d, c, b, a)].items():
                        iv = cat.inverse(v)
                        if iv is None:
                            raise StructureError(
                                f"associator component {v!r} is not invertible; "
                                "opposite bicategory undefined")
                        tab[(h, g, f)] = iv
                    assoc[(a, b, c, d)] = tab
    lunit = {(a, b): dict(bic.runit_tab[(b, a)]) for a in zs for b in zs}
    runit = {(a, b): dict(bic.lunit_tab[(b, a)]) for a in zs for b in zs}
    return Bicategory(zs, hom, comp_obj, comp_arr, dict(bic.id_one),
                      assoc, lunit, runit)


# -- internal equivalences ---------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceWitness:
    forward: One
    backward: One
    unit: Two      # invertible I_A -> backward∘forward
    counit: Two    # invertible forward∘backward -> I_B


def find_equivalences(bic: Bicategory, a: str, b: str,
                      budget: int = DEFAULT_BUDGET) -> list[EquivalenceWitness]:
    """All internal equivalence witnesses (f, g, unit, counit) between two
    0-cells, in deterministic order."""
    out = []
    seen = 0
    ia, ib = bic.one_id(a), bic.one_id(b)
    for f in bic.one_cells(a, b):
        for g in bic.one_cells(b, a):
            gf = bic.compose1(g, f)
            fg = bic.compose1(f, g)
            cat_a = bic.hom[(a, a)]
            cat_b = bic.hom[(b, b)]
            units = [u for u in cat_a.hom_set(ia.name, gf.name) if cat_a.is_iso(u)]
            counits = [c for c in cat_b.hom_set(fg.name, ib.name) if cat_b.is_iso(c)]
            seen += max(len(units), 1) * max(len(counits), 1)
            if seen > budget:
                raise BudgetExceeded(seen, budget, "equivalence search")
            for u in units:
                for c in counits:
                    out.append(EquivalenceWitness(
                        f, g, Two(a, a, u), Two(b, b, c)))
    return out


# -- bicategory of categories -------------------------------------------------------


@dataclass(eq=False)
class CatBicategory(Bicategory):
    """cat_as_bicategory output: keeps the functor/nattrans dictionaries and
    reverse lookups so 1-/2-cell ids can be resolved to the structures they name."""

    cats: dict[str, FinCat] = field(default_factory=dict)
    functor_of: dict[tuple[str, str], dict[str, Functor]] = field(default_factory=dict)
    nattrans_of: dict[tuple[str, str], dict[str, NatTrans]] = field(default_factory=dict)
    functor_name: dict[tuple[str, str], dict[tuple, str]] = field(default_factory=dict)
    nattrans_name: dict[tuple[str, str], dict[tuple, str]] = field(default_factory=dict)

    def one_of_functor(self, a: str, b: str, fun: Functor) -> One:
        return One(a, b, self.functor_name[(a, b)][fun.key()])

    def two_of_nattrans(self, a: str, b: str, nt: NatTrans) -> Two:
        return Two(a, b, self.nattrans_name[(a, b)][nt.key()])


def cat_as_bicategory(cats, budget: int = DEFAULT_BUDGET,
                      ids=None) -> CatBicategory:
    """The 2-category with the given categories as 0-cells, functors as
    1-cells, and natural transformations as 2-cells, built by enumeration."""
    cats = list(cats)
    if ids is None:
        ids = [f"C{i}" for i in range(len(cats))]
    ids = [str(x) for x in ids]
    if len(set(ids)) != len(ids):
        raise StructureError("duplicate 0-cell ids")
    zcells = tuple(ids)
    by_id = dict(zip(ids, cats))
    functor_of: dict[tuple[str, str], dict[str, Functor]] = {}
    functor_name: dict[tuple[str, str], dict[tuple, str]] = {}
    nattrans_of: dict[tuple[str, str], dict[str, NatTrans]] = {}
    nattrans_name: dict[tuple[str, str], dict[tuple, str]] = {}
    hom = {}
    for a in zcells:
        for b in zcells:
            funs = enumerate_functors(by_id[a], by_id[b], budget)
            fnames = {f"F{i}": fun for i, fun in enumerate(funs)}
            fkeys = {fun.key(): name for name, fun in fnames.items()}
            arrows = {}
            nnames: dict[str, NatTrans] = {}
            nkeys: dict[tuple, str] = {}
            identity = {}
            k = 0
            for fn, fun in fnames.items():
                for gn, gun in fnames.items():
                    for nt in enumerate_nattrans(fun, gun, budget):
                        name = f"n{k}"
                        k += 1
                        arrows[name] = (fn, gn)
                        nnames[name] = nt
                        nkeys[nt.key()] = name
            for fn, fun in fnames.items():
                identity[fn] = nkeys[identity_nattrans(fun).key()]
            compose = {}
            for n2, (f2, g2) in arrows.items():
                for n1, (f1, g1) in arrows.items():
                    if g1 == f2:
                        v = vcomp_nattrans(nnames[n2], nnames[n1])
                        compose[(n2, n1)] = nkeys[v.key()]
            hom[(a, b)] = FinCat(tuple(fnames), arrows, identity, compose)
            functor_of[(a, b)] = fnames
            functor_name[(a, b)] = fkeys
            nattrans_of[(a, b)] = nnames
            nattrans_name[(a, b)] = nkeys
    comp_obj = {}
    comp_arr = {}
    for a in zcells:
        for b in zcells:
            for c in zcells:
                otab = {}
                for g in hom[(b, c)].objects:
                    for f in hom[(a, b)].objects:
                        comp = compose_functors(functor_of[(b, c)][g],
                                                functor_of[(a, b)][f])
                        otab[(g, f)] = functor_name[(a, c)][comp.key()]
                atab = {}
                for q in hom[(b, c)].arrows:
                    for p in hom[(a, b)].arrows:
                        h = hcomp_nattrans(nattrans_of[(b, c)][q],
                                           nattrans_of[(a, b)][p])
                        atab[(q, p)] = nattrans_name[(a, c)][h.key()]
                comp_obj[(a, b, c)] = otab
                comp_arr[(a, b, c)] = atab
    id_one = {a: functor_name[(a, a)][identity_functor(by_id[a]).key()]
              for a in zcells}
    assoc = {}
    for a in zcells:
        for b in zcells:
            for c in zcells:
                for d in zcells:
                    tab = {}
                    for h in hom[(c, d)].objects:
                        for g in hom[(b, c)].objects:
                            for f in hom[(a, b)].objects:
                                hg = comp_obj[(b, c, d)][(h, g)]
                                src = comp_obj[(a, b, d)][(hg, f)]
                                tab[(h, g, f)] = hom[(a, d)].identity[src]
                    assoc[(a, b, c, d)] = tab
    lunit = {}
    runit = {}
    for a in zcells:
        for b in zcells:
            cat = hom[(a, b)]
            lunit[(a, b)] = {f: cat.identity[f] for f in cat.objects}
            runit[(a, b)] = {f: cat.identity[f] for f in cat.objects}
    return CatBicategory(zcells, hom, comp_obj, comp_arr, id_one, assoc,
                         lunit, runit, cats=by_id, functor_of=functor_of,
                         nattrans_of=nattrans_of, functor_name=functor_name,
                         nattrans_name=nattrans_name)


# -- group cocycle fixture ------------------------------------------------------------


def _zn_names(n: int) -> list[str]:
    if n == 2:
        return ["e", "u"]
    return ["e"] + [f"u{k}" for k in range(1, n)]


def group_cocycle_bicategory(n: int, cocycle) -> Bicategory:
    """One 0-cell, 1-cells the cyclic group Z/n, hom-categories with a sign
    automorphism at each 1-cell, associator given by a normalized 3-cocycle.

    ``cocycle`` maps triples of group elements (ints mod n) to +1/-1 and must
    be normalized (value +1 whenever an argument is 0).  Inputs whose tables
    break the laws are rejected with the witnessing cells named.
    """
    if n < 1:
        raise StructureError("group order must be positive")
    cval = cocycle if callable(cocycle) else (lambda i, j, k: cocycle[(i, j, k)])
    names = _zn_names(n)
    idx = {name: k for k, name in enumerate(names)}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = cval(i, j, k)
                if v not in (1, -1):
                    raise StructureError(f"cocycle value at {(i, j, k)} must be +1 or -1")
                if 0 in (i, j, k) and v != 1:
                    raise StructureError(
                        f"cocycle is not normalized: value -1 at {(i, j, k)}")
    pos = {f: f"pos_{f}" for f in names}
    neg = {f: f"neg_{f}" for f in names}
    arrows = {}
    for f in names:
        arrows[pos[f]] = (f, f)
        arrows[neg[f]] = (f, f)
    compose = {}
    for f in names:
        compose[(pos[f], pos[f])] = pos[f]
        compose[(pos[f], neg[f])] = neg[f]
        compose[(neg[f], pos[f])] = neg[f]
        compose[(neg[f], neg[f])] = pos[f]
    cat = FinCat(tuple(names), arrows, {f: pos[f] for f in names}, compose)
    star = "*"
    sign_of = {}
    for f in names:
        sign_of[pos[f]] = 1
        sign_of[neg[f]] = -1
    comp_obj = {(star, star, star): {
        (g, f): names[(idx[g] + idx[f]) % n] for g in names for f in names}}
    comp_arr_tab = {}
    for q in arrows:
        for p in arrows:
            target = names[(idx[cat.src(q)] + idx[cat.src(p)]) % n]
            s = sign_of[q] * sign_of[p]
            comp_arr_tab[(q, p)] = pos[target] if s == 1 else neg[target]
    comp_arr = {(star, star, star): comp_arr_tab}
    assoc = {(star, star, star, star): {}}
    for h in names:
        for g in names:
            for f in names:
                target = names[(idx[h] + idx[g] + idx[f]) % n]
                s = cval(idx[h], idx[g], idx[f])
                assoc[(star, star, star, star)][(h, g, f)] = (
                    pos[target] if s == 1 else neg[target])
    lunit = {(star, star): {f: pos[f] for f in names}}
    runit = {(star, star): {f: pos[f] for f in names}}
    bic = Bicategory((star,), {(star, star): cat}, comp_obj, comp_arr,
                     {star: names[0]}, assoc, lunit, runit)
    report = check_bicategory(bic)
    if not report.ok:
        first = (report.violations or report.structural)[0]
        raise StructureError(
            f"cocycle tables break {first.law} at ({', '.join(first.at)})")
    return bic
