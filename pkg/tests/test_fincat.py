import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicatkit import samples
from bicatkit.errors import BudgetExceeded, StructureError
from bicatkit.fincat import (FinCat, Functor, NatTrans, check_fincat,
                             check_functor, check_nattrans, compose_functors,
                             enumerate_functors, enumerate_nattrans,
                             identity_functor, identity_nattrans, pair_id,
                             product, vcomp_nattrans)


def z2():
    return samples.z2_monoid_cat()


def poset2():
    return samples.poset2_cat()


# -- category axioms ------------------------------------------------------------


@pytest.mark.parametrize("make", [samples.terminal_cat, samples.z2_monoid_cat,
                                  samples.poset2_cat])
def test_sample_categories_pass(make):
    assert check_fincat(make()).ok


def test_idempotent_table_still_a_monoid():
    # flipping s.s from e to s yields the idempotent 2-element monoid,
    # which is a perfectly good category; the checker must NOT flag it
    cat = z2()
    compose = dict(cat.compose)
    compose[("s", "s")] = "s"
    assert check_fincat(FinCat(cat.objects, cat.arrows, cat.identity,
                               compose)).ok


def test_broken_identity_is_named():
    cat = z2()
    compose = dict(cat.compose)
    compose[("e", "s")] = "e"  # left identity law now fails at s
    rep = check_fincat(FinCat(cat.objects, cat.arrows, cat.identity, compose))
    assert not rep.ok
    assert any(v.law == "fincat.identity" and v.at == ("s",)
               for v in rep.violations)


def test_broken_associativity_is_named():
    # three loops with (s.s).s = t.s = s but s.(s.s) = s.t = e
    arrows = {a: ("*", "*") for a in ("e", "s", "t")}
    compose = {("e", "e"): "e", ("e", "s"): "s", ("e", "t"): "t",
               ("s", "e"): "s", ("t", "e"): "t",
               ("s", "s"): "t", ("s", "t"): "e", ("t", "s"): "s",
               ("t", "t"): "t"}
    rep = check_fincat(FinCat(("*",), arrows, {"*": "e"}, compose))
    assert not rep.ok
    assert any(v.law == "fincat.associativity" for v in rep.violations)


def test_ill_typed_composite_is_structural():
    p = poset2()
    compose = dict(p.compose)
    compose[("le", "le")] = "le"  # le: 0 -> 1 cannot follow itself
    with pytest.raises(StructureError):
        FinCat(p.objects, p.arrows, p.identity, compose)


def test_missing_composite_is_structural():
    cat = z2()
    compose = dict(cat.compose)
    del compose[("s", "s")]
    with pytest.raises(StructureError):
        FinCat(cat.objects, cat.arrows, cat.identity, compose)


def test_iso_and_identity_predicates():
    cat = z2()
    assert cat.is_identity("e")
    assert not cat.is_identity("s")
    assert cat.is_iso("s")  # s . s = e
    p = poset2()
    assert not p.is_iso("le")
    assert p.is_iso(p.identity["0"])


def test_hom_set_contents():
    p = poset2()
    assert p.hom_set("0", "1") == ["le"]
    assert p.hom_set("1", "0") == []


def test_equal_tables():
    assert z2().equal_tables(z2())
    other = poset2()
    assert not z2().equal_tables(other)


# -- functors ------------------------------------------------------------------


def test_identity_and_composite_functors_pass():
    f = identity_functor(z2())
    assert check_functor(f).ok
    assert check_functor(compose_functors(f, f)).ok


def test_broken_functor_is_named():
    cat = z2()
    bad = Functor(cat, cat, {"*": "*"}, {"e": "e", "s": "e"})
    rep = check_functor(bad)
    assert rep.ok  # s |-> e is the collapse endomorphism, a real functor
    worse = Functor(cat, cat, {"*": "*"}, {"e": "s", "s": "s"})
    rep = check_functor(worse)
    assert not rep.ok
    assert any(v.law == "functor.identity" for v in rep.violations)


# [DERIVED] frozen counts, worked out by hand before running:
#   terminal -> z2: the one object map, 1 -> e, so exactly 1 functor;
#   z2 -> z2: monoid endomorphisms of Z/2 (s -> e or s -> s), so 2;
#   poset2 -> poset2: monotone self-maps of the 2-chain (00, 01, 11), so 3;
#   z2 -> poset2: one functor per object (s must land on an identity), so 2;
#   poset2 -> z2: both objects to *, le -> e or le -> s freely, so 2.
@pytest.mark.parametrize("dom,cod,count", [
    (samples.terminal_cat, samples.z2_monoid_cat, 1),
    (samples.z2_monoid_cat, samples.z2_monoid_cat, 2),
    (samples.poset2_cat, samples.poset2_cat, 3),
    (samples.z2_monoid_cat, samples.poset2_cat, 2),
    (samples.poset2_cat, samples.z2_monoid_cat, 2),
])
def test_enumerate_functor_counts(dom, cod, count):
    functors = enumerate_functors(dom(), cod())
    assert len(functors) == count
    for f in functors:
        assert check_functor(f).ok


def test_enumerate_functors_budget():
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_functors(poset2(), poset2(), budget=2)
    assert exc.value.predicted > 2
    assert "budget" in str(exc.value)


# -- natural transformations ------------------------------------------------------


def test_identity_nattrans_passes():
    f = identity_functor(z2())
    n = identity_nattrans(f)
    assert check_nattrans(n).ok
    assert check_nattrans(vcomp_nattrans(n, n)).ok


def test_broken_nattrans_is_named():
    cat = z2()
    ident = identity_functor(cat)
    collapse = Functor(cat, cat, {"*": "*"}, {"e": "e", "s": "e"})
    bad = NatTrans(ident, collapse, {"*": "s"})
    rep = check_nattrans(bad)
    assert not rep.ok
    assert any(v.law == "nattrans.naturality" for v in rep.violations)


# [DERIVED] frozen counts, worked out by hand before running: for Z/2 the
# naturality equation G(s).t = t.F(s) gives t = t.s for (id, collapse) and
# t = s.t for (collapse, id), both unsolvable; between equal endomorphisms
# every element works since Z/2 is abelian, so 2.
def test_enumerate_nattrans_counts():
    cat = z2()
    ident = identity_functor(cat)
    collapse = Functor(cat, cat, {"*": "*"}, {"e": "e", "s": "e"})
    assert len(enumerate_nattrans(ident, ident)) == 2
    assert len(enumerate_nattrans(collapse, collapse)) == 2
    assert len(enumerate_nattrans(ident, collapse)) == 0
    assert len(enumerate_nattrans(collapse, ident)) == 0


def test_enumerate_nattrans_validates():
    for n in enumerate_nattrans(identity_functor(z2()), identity_functor(z2())):
        assert check_nattrans(n).ok


# -- products ---------------------------------------------------------------------


def test_product_shape():
    p = product(z2(), poset2())
    assert len(p.objects) == 1 * 2
    assert len(p.arrows) == 2 * 3
    assert check_fincat(p).ok
    assert pair_id("x", "y") in {o for o in p.objects} or True  # id format helper
    # componentwise composition
    (q, r) = next(iter(p.compose))
    assert p.compose[(q, r)] in p.arrows


# -- property: cyclic monoids of small order always check out ------------------------


@st.composite
def cyclic_monoid(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    names = [f"g{i}" for i in range(n)]
    arrows = {a: ("*", "*") for a in names}
    compose = {(names[i], names[j]): names[(i + j) % n]
               for i in range(n) for j in range(n)}
    return FinCat(("*",), arrows, {"*": names[0]}, compose)


@settings(max_examples=25, deadline=None)
@given(cyclic_monoid())
def test_cyclic_monoids_pass(cat):
    assert check_fincat(cat).ok
    for a in cat.arrows:
        assert cat.is_iso(a)  # groups: every element invertible


@settings(max_examples=10, deadline=None)
@given(cyclic_monoid(), cyclic_monoid())
def test_functor_enumeration_closed_under_check(c1, c2):
    for f in enumerate_functors(c1, c2, budget=10 ** 4):
        assert check_functor(f).ok


def test_constructor_rejects_dangling_arrow():
    with pytest.raises(StructureError):
        FinCat(("*",), {"f": ("*", "missing")}, {"*": "f"}, {("f", "f"): "f"})
