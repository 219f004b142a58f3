"""Free bicategories on 2-computads.

Terms are immutable trees.  1-cell terms: `Id(A)`, `Gen(e)`, `Comp(t, u)`
(meaning t∘u, u applied first).  2-cell terms: `IdTwo`, `GenTwo`, the
structural isomorphism leaves `Assoc`/`LUnit`/`RUnit` and their formal
inverses, and `VComp`/`HComp` nodes.

Three decision procedures live here:

- `normalize`: rewrite a 1-cell term to its right-nested identity-free
  normal form, producing a canonical 2-cell witness built from Assoc, LUnit
  and RUnit steps (rotate-to-right, units eliminated innermost-first).
- `coherence_equal`: parallel canonical 2-cells (no generator leaves) are
  equal — the decidable face of the coherence theorem — so equality is
  endpoint comparison.
- `two_cell_equal`: the general word problem.  Each term is strictified to a
  sequence of moves "generator γ applied at position p of a generator
  string"; sequences are canonicalized modulo interchange by greedy
  leftmost layers (a concurrency-trace normal form); terms are equal iff
  they are parallel and have identical layered forms.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (AssignmentError, NotCanonicalError, NotParallelError,
                     StructureError)
from .bicat import Bicategory, One, Two


# -- 1-cell terms -----------------------------------------------------------


@dataclass(frozen=True)
class Id:
    zero: str


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Comp:
    left: "OneTerm"
    right: "OneTerm"


OneTerm = Id | Gen | Comp


# -- 2-cell terms -----------------------------------------------------------


@dataclass(frozen=True)
class IdTwo:
    one: OneTerm


@dataclass(frozen=True)
class GenTwo:
    name: str


@dataclass(frozen=True)
class Assoc:
    h: OneTerm
    g: OneTerm
    f: OneTerm


@dataclass(frozen=True)
class InvAssoc:
    h: OneTerm
    g: OneTerm
    f: OneTerm


@dataclass(frozen=True)
class LUnit:
    f: OneTerm


@dataclass(frozen=True)
class InvLUnit:
    f: OneTerm


@dataclass(frozen=True)
class RUnit:
    f: OneTerm


@dataclass(frozen=True)
class InvRUnit:
    f: OneTerm


@dataclass(frozen=True)
class VComp:
    after: "TwoTerm"
    before: "TwoTerm"


@dataclass(frozen=True)
class HComp:
    left: "TwoTerm"
    right: "TwoTerm"


TwoTerm = (IdTwo | GenTwo | Assoc | InvAssoc | LUnit | InvLUnit | RUnit
           | InvRUnit | VComp | HComp)

_STRUCTURAL = (Assoc, InvAssoc, LUnit, InvLUnit, RUnit, InvRUnit)


# -- computads ----------------------------------------------------------------


@dataclass(eq=False)
class TwoComputad:
    """Generating data: 0-cells, 1-cell generators with 0-cell endpoints,
    and 2-cell generators with parallel 1-cell-term endpoints."""

    zero_cells: tuple[str, ...]
    one_gens: dict[str, tuple[str, str]]
    two_gens: dict[str, tuple[OneTerm, OneTerm]]

    def __post_init__(self):
        self.zero_cells = tuple(self.zero_cells)
        zs = set(self.zero_cells)
        if len(zs) != len(self.zero_cells):
            raise StructureError("duplicate 0-cells in computad")
        for e, (a, b) in self.one_gens.items():
            if a not in zs or b not in zs:
                raise StructureError(f"1-generator {e!r} has dangling endpoints")
        for g, (s, d) in self.two_gens.items():
            s0, s1 = validate_one(s, self)
            d0, d1 = validate_one(d, self)
            if (s0, s1) != (d0, d1):
                raise StructureError(f"2-generator {g!r} endpoints are not parallel")
        self._spans = None

    def spans(self) -> dict[str, tuple[int, int]]:
        """Per 2-generator: lengths of the source/target generator strings."""
        if self._spans is None:
            self._spans = {g: (len(gen_seq(s)), len(gen_seq(d)))
                           for g, (s, d) in self.two_gens.items()}
        return self._spans


# -- 1-cell term endpoints and generator strings -------------------------------


def validate_one(t: OneTerm, cpd: TwoComputad) -> tuple[str, str]:
    """Check endpoint coherence at every node; return (src 0-cell, dst 0-cell)."""
    if isinstance(t, Id):
        if t.zero not in cpd.zero_cells:
            raise StructureError(f"unknown 0-cell {t.zero!r}")
        return t.zero, t.zero
    if isinstance(t, Gen):
        if t.name not in cpd.one_gens:
            raise StructureError(f"unknown 1-generator {t.name!r}")
        return cpd.one_gens[t.name]
    if isinstance(t, Comp):
        ls, ld = validate_one(t.left, cpd)
        rs, rd = validate_one(t.right, cpd)
        if rd != ls:
            raise StructureError(
                f"1-cell terms not composable at {print_friendly(t)}")
        return rs, ld
    raise StructureError(f"not a 1-cell term: {t!r}")


def print_friendly(t) -> str:
    from .grammar import print_one_term, print_two_term
    try:
        if isinstance(t, (Id, Gen, Comp)):
            return print_one_term(t)
        return print_two_term(t)
    except Exception:
        return repr(t)


def one_src0(t: OneTerm, cpd: TwoComputad) -> str:
    if isinstance(t, Id):
        return t.zero
    if isinstance(t, Gen):
        return cpd.one_gens[t.name][0]
    return one_src0(t.right, cpd)


def one_dst0(t: OneTerm, cpd: TwoComputad) -> str:
    if isinstance(t, Id):
        return t.zero
    if isinstance(t, Gen):
        return cpd.one_gens[t.name][1]
    return one_dst0(t.left, cpd)


def _dst0_maybe(t: OneTerm, cpd: TwoComputad | None) -> str:
    if cpd is not None:
        return one_dst0(t, cpd)
    if isinstance(t, Id):
        return t.zero
    if isinstance(t, Comp):
        return _dst0_maybe(t.left, None)
    raise StructureError(
        "a computad is required to resolve generator endpoints")


def _src0_maybe(t: OneTerm, cpd: TwoComputad | None) -> str:
    if cpd is not None:
        return one_src0(t, cpd)
    if isinstance(t, Id):
        return t.zero
    if isinstance(t, Comp):
        return _src0_maybe(t.right, None)
    raise StructureError(
        "a computad is required to resolve generator endpoints")


def gen_seq(t: OneTerm) -> tuple[str, ...]:
    """Generator names of a 1-cell term, read left to right."""
    if isinstance(t, Id):
        return ()
    if isinstance(t, Gen):
        return (t.name,)
    return gen_seq(t.left) + gen_seq(t.right)


# -- 2-cell term endpoints ------------------------------------------------------


def two_endpoints(u: TwoTerm, cpd: TwoComputad | None = None,
                  check: bool = True) -> tuple[OneTerm, OneTerm]:
    """(src, dst) 1-cell terms of a 2-cell term.

    With check=True, vertical interfaces must match on the nose.  A computad
    is needed only to resolve GenTwo endpoints and the 0-cells of the
    identity 1-cells introduced by unitors.
    """
    if isinstance(u, IdTwo):
        return u.one, u.one
    if isinstance(u, GenTwo):
        if cpd is None:
            raise StructureError(
                "a computad is required to resolve generator endpoints")
        if u.name not in cpd.two_gens:
            raise StructureError(f"unknown 2-generator {u.name!r}")
        return cpd.two_gens[u.name]
    if isinstance(u, Assoc):
        return Comp(Comp(u.h, u.g), u.f), Comp(u.h, Comp(u.g, u.f))
    if isinstance(u, InvAssoc):
        return Comp(u.h, Comp(u.g, u.f)), Comp(Comp(u.h, u.g), u.f)
    if isinstance(u, LUnit):
        return Comp(Id(_dst0_maybe(u.f, cpd)), u.f), u.f
    if isinstance(u, InvLUnit):
        return u.f, Comp(Id(_dst0_maybe(u.f, cpd)), u.f)
    if isinstance(u, RUnit):
        return Comp(u.f, Id(_src0_maybe(u.f, cpd))), u.f
    if isinstance(u, InvRUnit):
        return u.f, Comp(u.f, Id(_src0_maybe(u.f, cpd)))
    if isinstance(u, VComp):
        bs, bd = two_endpoints(u.before, cpd, check)
        as_, ad = two_endpoints(u.after, cpd, check)
        if check and bd != as_:
            raise StructureError(
                "vertical composite interface mismatch: "
                f"{print_friendly(bd)} vs {print_friendly(as_)}")
        return bs, ad
    if isinstance(u, HComp):
        ls, ld = two_endpoints(u.left, cpd, check)
        rs, rd = two_endpoints(u.right, cpd, check)
        return Comp(ls, rs), Comp(ld, rd)
    raise StructureError(f"not a 2-cell term: {u!r}")


def two_src(u: TwoTerm, cpd: TwoComputad | None = None) -> OneTerm:
    return two_endpoints(u, cpd)[0]


def two_dst(u: TwoTerm, cpd: TwoComputad | None = None) -> OneTerm:
    return two_endpoints(u, cpd)[1]


def validate_two(u: TwoTerm, cpd: TwoComputad) -> tuple[OneTerm, OneTerm]:
    """Full well-formedness: every referenced cell exists, every 1-cell
    argument is endpoint-coherent, vertical interfaces match, and horizontal
    composites are 0-cell composable.  Returns (src, dst)."""
    if isinstance(u, IdTwo):
        validate_one(u.one, cpd)
    elif isinstance(u, _STRUCTURAL):
        args = ((u.h, u.g, u.f) if isinstance(u, (Assoc, InvAssoc))
                else (u.f,))
        for t in args:
            validate_one(t, cpd)
        if isinstance(u, (Assoc, InvAssoc)):
            if (one_src0(u.g, cpd) != one_dst0(u.f, cpd)
                    or one_src0(u.h, cpd) != one_dst0(u.g, cpd)):
                raise StructureError("associator arguments are not composable")
    elif isinstance(u, VComp):
        validate_two(u.before, cpd)
        validate_two(u.after, cpd)
    elif isinstance(u, HComp):
        ls, _ = validate_two(u.left, cpd)
        rs, _ = validate_two(u.right, cpd)
        if one_src0(ls, cpd) != one_dst0(rs, cpd):
            raise StructureError("horizontal composite is not 0-cell composable")
    elif not isinstance(u, GenTwo):
        raise StructureError(f"not a 2-cell term: {u!r}")
    return two_endpoints(u, cpd, check=True)


# -- canonical 2-cells --------------------------------------------------------


@dataclass(frozen=True)
class CanonicalWitness:
    """A 2-cell term with no generator leaves, with recorded endpoints."""

    term: TwoTerm
    src: OneTerm
    dst: OneTerm


def is_canonical(u: TwoTerm) -> bool:
    if isinstance(u, GenTwo):
        return False
    if isinstance(u, VComp):
        return is_canonical(u.before) and is_canonical(u.after)
    if isinstance(u, HComp):
        return is_canonical(u.left) and is_canonical(u.right)
    return True


def as_canonical(u, cpd: TwoComputad | None = None) -> CanonicalWitness:
    if isinstance(u, CanonicalWitness):
        return u
    if not is_canonical(u):
        raise NotCanonicalError(
            "term contains 2-cell generators; use two_cell_equal instead")
    s, d = two_endpoints(u, cpd)
    return CanonicalWitness(u, s, d)


def invert_canonical(w):
    """Formal inverse of a canonical 2-cell (VComp reverses, leaves flip)."""
    if isinstance(w, CanonicalWitness):
        return CanonicalWitness(invert_canonical(w.term), w.dst, w.src)
    if isinstance(w, IdTwo):
        return w
    if isinstance(w, Assoc):
        return InvAssoc(w.h, w.g, w.f)
    if isinstance(w, InvAssoc):
        return Assoc(w.h, w.g, w.f)
    if isinstance(w, LUnit):
        return InvLUnit(w.f)
    if isinstance(w, InvLUnit):
        return LUnit(w.f)
    if isinstance(w, RUnit):
        return InvRUnit(w.f)
    if isinstance(w, InvRUnit):
        return RUnit(w.f)
    if isinstance(w, VComp):
        return VComp(invert_canonical(w.before), invert_canonical(w.after))
    if isinstance(w, HComp):
        return HComp(invert_canonical(w.left), invert_canonical(w.right))
    raise NotCanonicalError("cannot invert a 2-cell generator")


def coherence_equal(u, v, cpd: TwoComputad | None = None) -> bool:
    """Equality of parallel canonical 2-cells: by coherence this is endpoint
    comparison.  Refuses terms containing generator leaves."""
    cu, cv = as_canonical(u, cpd), as_canonical(v, cpd)
    return cu.src == cv.src and cu.dst == cv.dst


# -- normalization ---------------------------------------------------------------


def _vc(after: TwoTerm, before: TwoTerm) -> TwoTerm:
    if isinstance(after, IdTwo):
        return before
    if isinstance(before, IdTwo):
        return after
    return VComp(after, before)


def _merge(nl: OneTerm, nr: OneTerm) -> tuple[OneTerm, TwoTerm]:
    """Merge two normal forms: returns (nf of nl∘nr, witness nl∘nr → nf)."""
    if isinstance(nl, Id):
        return nr, LUnit(nr)
    if isinstance(nl, Gen):
        if isinstance(nr, Id):
            return nl, RUnit(nl)
        return Comp(nl, nr), IdTwo(Comp(nl, nr))
    m, wm = _merge(nl.right, nr)
    rot = Assoc(nl.left, nl.right, nr)
    return Comp(nl.left, m), _vc(HComp(IdTwo(nl.left), wm), rot)


def _norm(t: OneTerm) -> tuple[OneTerm, TwoTerm]:
    if isinstance(t, (Id, Gen)):
        return t, IdTwo(t)
    nl, wl = _norm(t.left)
    nr, wr = _norm(t.right)
    inner = (IdTwo(Comp(nl, nr))
             if isinstance(wl, IdTwo) and isinstance(wr, IdTwo)
             else HComp(wl, wr))
    m, wm = _merge(nl, nr)
    return m, _vc(wm, inner)


def normalize(t: OneTerm) -> tuple[OneTerm, CanonicalWitness]:
    """Right-nested identity-free normal form plus a canonical witness t → nf."""
    nf, w = _norm(t)
    return nf, CanonicalWitness(w, t, nf)


def rebracket(s: OneTerm, t: OneTerm) -> CanonicalWitness:
    """A canonical 2-cell s → t for terms sharing a normal form."""
    nfs, ws = normalize(s)
    nft, wt = normalize(t)
    if nfs != nft:
        raise StructureError(
            f"terms have distinct normal forms: {print_friendly(nfs)} vs "
            f"{print_friendly(nft)}")
    return CanonicalWitness(_vc(invert_canonical(wt.term), ws.term), s, t)


# -- the word problem ---------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    """One strictified rewrite: a 2-generator applied at a position in a
    generator string."""

    pos: int
    gen: str


def strict_moves(u: TwoTerm, cpd: TwoComputad) -> list[Move]:
    """Strictify: erase canonical leaves, linearize VComp/HComp into a move
    sequence over the generator string of src(u)."""
    if isinstance(u, GenTwo):
        return [Move(0, u.name)]
    if isinstance(u, VComp):
        return strict_moves(u.before, cpd) + strict_moves(u.after, cpd)
    if isinstance(u, HComp):
        off = len(gen_seq(two_src(u.left, cpd)))
        right = [Move(m.pos + off, m.gen) for m in strict_moves(u.right, cpd)]
        return right + strict_moves(u.left, cpd)
    return []


def _try_swap(seq: list[Move], i: int, spans: dict[str, tuple[int, int]]) -> bool:
    """Swap adjacent moves seq[i], seq[i+1] when their spans are disjoint,
    adjusting positions; the span-on-the-left rule is preferred when both
    apply (degenerate empty-span cases)."""
    x, y = seq[i], seq[i + 1]
    s1, d1 = spans[x.gen]
    s2, d2 = spans[y.gen]
    if y.pos + s2 <= x.pos:
        seq[i] = y
        seq[i + 1] = Move(x.pos + d2 - s2, x.gen)
        return True
    if y.pos >= x.pos + d1:
        seq[i] = Move(y.pos - (d1 - s1), y.gen)
        seq[i + 1] = x
        return True
    return False


def _bubbles_to_base(seq: list[Move], base: int, j: int,
                     spans: dict[str, tuple[int, int]]) -> bool:
    trial = seq[base:j + 1]
    for k in range(len(trial) - 1, 0, -1):
        if not _try_swap(trial, k - 1, spans):
            return False
    return True


def _sink(seq: list[Move], base: int, i: int,
          spans: dict[str, tuple[int, int]]) -> None:
    """Insertion-sort seq[i] leftward (not past base) while the swapped pair
    would be in strictly ascending (pos, gen) order."""
    while i > base:
        saved = (seq[i - 1], seq[i])
        if not _try_swap(seq, i - 1, spans):
            break
        if (seq[i - 1].pos, seq[i - 1].gen) < (seq[i].pos, seq[i].gen):
            i -= 1
        else:
            seq[i - 1], seq[i] = saved
            break


def foata_layers(moves, spans: dict[str, tuple[int, int]]) -> list[list[Move]]:
    """Greedy leftmost layered normal form modulo interchange.

    Each layer collects every move that can commute back to the layer's
    entry point, sorted by (position, generator); layers are emitted until
    the sequence is exhausted.  Trace-equivalent sequences get identical
    layerings (validated against an exhaustive rewrite-graph oracle).
    """
    seq = list(moves)
    n = len(seq)
    layers: list[list[Move]] = []
    base = 0
    while base < n:
        zone_end = base
        j = base
        while j < n:
            if not _bubbles_to_base(seq, base, j, spans):
                j += 1
                continue
            seg = seq[zone_end:j + 1]
            for k in range(len(seg) - 1, 0, -1):
                _try_swap(seg, k - 1, spans)
            seq[zone_end:j + 1] = seg
            _sink(seq, base, zone_end, spans)
            zone_end += 1
            j = zone_end
        layers.append(seq[base:zone_end])
        base = zone_end
    return layers


def two_cell_equal(u: TwoTerm, v: TwoTerm, cpd: TwoComputad) -> bool:
    """Decide equality in the free bicategory on the computad.

    Both terms are validated; non-parallel inputs raise NotParallelError.
    """
    su, du = validate_two(u, cpd)
    sv, dv = validate_two(v, cpd)
    if su != sv or du != dv:
        raise NotParallelError(
            f"terms are not parallel: ({print_friendly(su)} → "
            f"{print_friendly(du)}) vs ({print_friendly(sv)} → "
            f"{print_friendly(dv)})")
    sp = cpd.spans()
    return (foata_layers(strict_moves(u, cpd), sp)
            == foata_layers(strict_moves(v, cpd), sp))


# -- evaluation -------------------------------------------------------------------


@dataclass(eq=False)
class Assignment:
    """Interpretation of computad generators in a bicategory: 0-cells to
    0-cells, 1-generators to 1-cells, 2-generators to 2-cells."""

    zero: dict[str, str]
    one: dict[str, One]
    two: dict[str, Two]


def check_assignment(asg: Assignment, cpd: TwoComputad, bic: Bicategory) -> None:
    """Raise AssignmentError unless the assignment covers the computad and
    respects all endpoints."""
    for z in cpd.zero_cells:
        if z not in asg.zero:
            raise AssignmentError(f"0-cell {z!r} is unassigned")
        if asg.zero[z] not in bic.zero_cells:
            raise AssignmentError(f"0-cell {z!r} maps to unknown {asg.zero[z]!r}")
    for e, (a, b) in cpd.one_gens.items():
        if e not in asg.one:
            raise AssignmentError(f"1-generator {e!r} is unassigned")
        cell = asg.one[e]
        if (cell.src, cell.dst) != (asg.zero[a], asg.zero[b]):
            raise AssignmentError(
                f"1-generator {e!r} endpoint mismatch: maps to "
                f"({cell.src},{cell.dst}), want ({asg.zero[a]},{asg.zero[b]})")
        if cell.name not in bic.hom[(cell.src, cell.dst)].objects:
            raise AssignmentError(f"1-generator {e!r} maps to unknown 1-cell")
    for g, (s, d) in cpd.two_gens.items():
        if g not in asg.two:
            raise AssignmentError(f"2-generator {g!r} is unassigned")
        cell = asg.two[g]
        if cell.name not in bic.hom[(cell.src, cell.dst)].arrows:
            raise AssignmentError(f"2-generator {g!r} maps to unknown 2-cell")
        want_s = eval_one(s, bic, asg)
        want_d = eval_one(d, bic, asg)
        if bic.two_src(cell) != want_s or bic.two_dst(cell) != want_d:
            raise AssignmentError(f"2-generator {g!r} endpoint mismatch")


def eval_one(t: OneTerm, bic: Bicategory, asg: Assignment) -> One:
    """Interpret a 1-cell term (strict-homomorphism shape on the nose)."""
    if isinstance(t, Id):
        if t.zero not in asg.zero:
            raise AssignmentError(f"0-cell {t.zero!r} is unassigned")
        return bic.one_id(asg.zero[t.zero])
    if isinstance(t, Gen):
        if t.name not in asg.one:
            raise AssignmentError(f"1-generator {t.name!r} is unassigned")
        return asg.one[t.name]
    try:
        return bic.compose1(eval_one(t.left, bic, asg),
                            eval_one(t.right, bic, asg))
    except StructureError as exc:
        raise AssignmentError(f"assignment endpoint mismatch: {exc}") from exc


def eval_two(u: TwoTerm, bic: Bicategory, asg: Assignment) -> Two:
    """Interpret a 2-cell term; structural leaves map to the bicategory's
    a/l/r components (inverted where formal inverses are used)."""
    if isinstance(u, IdTwo):
        return bic.id2(eval_one(u.one, bic, asg))
    if isinstance(u, GenTwo):
        if u.name not in asg.two:
            raise AssignmentError(f"2-generator {u.name!r} is unassigned")
        return asg.two[u.name]
    try:
        if isinstance(u, Assoc):
            return bic.a(eval_one(u.h, bic, asg), eval_one(u.g, bic, asg),
                         eval_one(u.f, bic, asg))
        if isinstance(u, InvAssoc):
            return bic.inv(eval_two(Assoc(u.h, u.g, u.f), bic, asg))
        if isinstance(u, LUnit):
            return bic.l(eval_one(u.f, bic, asg))
        if isinstance(u, InvLUnit):
            return bic.inv(eval_two(LUnit(u.f), bic, asg))
        if isinstance(u, RUnit):
            return bic.r(eval_one(u.f, bic, asg))
        if isinstance(u, InvRUnit):
            return bic.inv(eval_two(RUnit(u.f), bic, asg))
        if isinstance(u, VComp):
            return bic.vcomp(eval_two(u.after, bic, asg),
                             eval_two(u.before, bic, asg))
        if isinstance(u, HComp):
            return bic.hcomp(eval_two(u.left, bic, asg),
                             eval_two(u.right, bic, asg))
    except AssignmentError:
        raise
    except StructureError as exc:
        raise AssignmentError(f"assignment endpoint mismatch: {exc}") from exc
    raise StructureError(f"not a 2-cell term: {u!r}")


def eval_canonical(w: CanonicalWitness, bic: Bicategory, asg: Assignment) -> Two:
    return eval_two(w.term, bic, asg)


# -- the commuting square of unitors and associators ----------------------------------


def diagram1_legs(h: OneTerm, g: OneTerm, f: OneTerm,
                  cpd: TwoComputad | None = None
                  ) -> tuple[CanonicalWitness, CanonicalWitness]:
    """The two legs of the square from (h∘(I∘g))∘f to h∘(g∘f): the inverse
    associator / right unitor route and the associator / left unitor route.
    Both are canonical, so coherence_equal holds for them."""
    if cpd is not None:
        if (one_src0(g, cpd) != one_dst0(f, cpd)
                or one_src0(h, cpd) != one_dst0(g, cpd)):
            raise StructureError("1-cell terms are not composable")
    c = _dst0_maybe(g, cpd)
    mid = Comp(Id(c), g)
    src = Comp(Comp(h, mid), f)
    dst = Comp(h, Comp(g, f))
    left = VComp(Assoc(h, g, f),
                 VComp(HComp(HComp(RUnit(h), IdTwo(g)), IdTwo(f)),
                       HComp(InvAssoc(h, Id(c), g), IdTwo(f))))
    right = VComp(HComp(IdTwo(h), HComp(LUnit(g), IdTwo(f))),
                  Assoc(h, mid, f))
    return (CanonicalWitness(left, src, dst),
            CanonicalWitness(right, src, dst))
