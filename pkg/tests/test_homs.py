"""Hom-bicategories: enumeration of transformations and modifications
between morphisms, assembled into a bicategory that passes the axiom
checker.  Enumeration counts are verified against a brute-force search
that tries every candidate component assignment."""

from __future__ import annotations

import itertools

import pytest

from bicatkit import samples
from bicatkit.bicat import One, Two, check_bicategory, is_two_category
from bicatkit.errors import BudgetExceeded, StructureError
from bicatkit.homs import (
    HomBicatSpec,
    build_hom_bicategory,
    enumerate_modifications,
    enumerate_transformations,
    is_biequivalence,
)
from bicatkit.maps import (
    Modification,
    Transformation,
    check_modification,
    check_transformation,
    classify_strength,
    identity_morphism,
)


@pytest.fixture(scope="module")
def cocycle():
    return samples.nontrivial_cocycle_bicategory()


@pytest.fixture(scope="module")
def walking_arrow():
    return samples.walking_arrow_two_category()


# ---------------------------------------------------------------------------
# brute-force oracles: try every component assignment, keep the lawful ones


def brute_transformations(F, G, strong_only=True):
    amb = F.cod
    zs = F.dom.zero_cells
    one_choices = {a: list(amb.one_cells(F.f0(a), G.f0(a))) for a in zs}
    all_ones = [
        One(a, b, f)
        for (a, b), cat in F.dom.hom.items()
        for f in cat.objects
    ]
    found = []
    for picked in itertools.product(*(one_choices[a] for a in zs)):
        comp_one = dict(zip(zs, picked))
        cell_choices = []
        for f in all_ones:
            src1 = amb.compose1(comp_one[f.dst], F.f1(f))
            dst1 = amb.compose1(G.f1(f), comp_one[f.src])
            cat = amb.hom[(src1.src, src1.dst)]
            cell_choices.append(
                [
                    Two(src1.src, src1.dst, n)
                    for n, (s, d) in cat.arrows.items()
                    if s == src1.name and d == dst1.name
                ]
            )
        for cells in itertools.product(*cell_choices):
            tr = Transformation(F, G, comp_one, dict(zip(all_ones, cells)))
            if not check_transformation(tr).ok:
                continue
            if strong_only and classify_strength(tr) == "lax":
                continue
            found.append(tr)
    return found


def brute_modifications(sigma, tau):
    amb = sigma.dom.cod
    zs = sigma.dom.dom.zero_cells
    choices = []
    for a in zs:
        sa, ta = sigma.sigma(a), tau.sigma(a)
        cat = amb.hom[(sa.src, sa.dst)]
        choices.append(
            [
                Two(sa.src, sa.dst, n)
                for n, (s, d) in cat.arrows.items()
                if s == sa.name and d == ta.name
            ]
        )
    found = []
    for cells in itertools.product(*choices):
        mod = Modification(sigma, tau, dict(zip(zs, cells)))
        if check_modification(mod).ok:
            found.append(mod)
    return found


def _tr_key(tr):
    return (
        tuple(sorted((a, o.name) for a, o in tr.comp_one.items())),
        tuple(sorted((f.name, c.name) for f, c in tr.comp_two.items())),
    )


# ---------------------------------------------------------------------------
# enumeration against the oracle


class TestEnumeration:
    def test_self_transformations_of_cocycle_identity(self, cocycle):
        idm = identity_morphism(cocycle)
        found = enumerate_transformations(idm, idm)
        # frozen: the identity and the sign transformation
        assert len(found) == 2
        assert sorted(classify_strength(t) for t in found) == ["iso", "strict"]
        assert all(check_transformation(t).ok for t in found)
        brute = brute_transformations(idm, idm)
        assert {_tr_key(t) for t in found} == {_tr_key(t) for t in brute}

    def test_enumeration_is_deterministic(self, cocycle):
        idm = identity_morphism(cocycle)
        a = [_tr_key(t) for t in enumerate_transformations(idm, idm)]
        b = [_tr_key(t) for t in enumerate_transformations(idm, idm)]
        assert a == b

    def test_transformations_to_the_twisted_morphism(self, cocycle):
        idm = identity_morphism(cocycle)
        tw = samples.twisted_self_morphism(cocycle)
        found = enumerate_transformations(idm, tw)
        assert len(found) == 2  # frozen
        brute = brute_transformations(idm, tw)
        assert {_tr_key(t) for t in found} == {_tr_key(t) for t in brute}

    def test_walking_arrow_counts(self, walking_arrow):
        ida = identity_morphism(walking_arrow)
        coll = samples.collapse_morphism(walking_arrow, walking_arrow)
        # frozen: collapse admits a map back to the identity but not from it,
        # because hom(B, A) is empty
        assert len(enumerate_transformations(ida, ida)) == 1
        assert len(enumerate_transformations(ida, coll)) == 0
        assert len(enumerate_transformations(coll, ida)) == 1
        assert len(enumerate_transformations(coll, coll)) == 1

    def test_modifications_of_the_sign_transformation(self, cocycle):
        sign = samples.sign_transformation(cocycle)
        found = enumerate_modifications(sign, sign)
        assert len(found) == 2  # frozen: +1 and -1 at the single 0-cell
        assert all(check_modification(m).ok for m in found)
        assert len(brute_modifications(sign, sign)) == 2
        names = sorted(m.gamma("*").name for m in found)
        assert names == ["neg_e", "pos_e"]


# ---------------------------------------------------------------------------
# hom-bicategory assembly


class TestHomBicategory:
    def test_walking_arrow_pair_builds_a_two_category(self, walking_arrow):
        ida = identity_morphism(walking_arrow)
        coll = samples.collapse_morphism(walking_arrow, walking_arrow)
        hb = build_hom_bicategory(HomBicatSpec(walking_arrow, walking_arrow, [ida, coll]))
        assert hb.zero_cells == ("F0", "F1")
        assert check_bicategory(hb).ok
        assert is_two_category(hb)
        sizes = {k: len(cat.objects) for k, cat in hb.hom.items()}
        assert sizes == {
            ("F0", "F0"): 1,
            ("F0", "F1"): 0,
            ("F1", "F0"): 1,
            ("F1", "F1"): 1,
        }
        assert hb.morphism_of["F0"] is ida
        assert hb.morphism_of["F1"] is coll
        assert hb.zero_name[ida] == "F0"
        # identity 1-cells are the identity transformations
        idt = hb.transformation_of[("F0", "F0")][hb.id_one["F0"]]
        assert check_transformation(idt).ok
        assert classify_strength(idt) == "strict"

    def test_cocycle_pair_builds_a_weak_bicategory(self, cocycle):
        idm = identity_morphism(cocycle)
        tw = samples.twisted_self_morphism(cocycle)
        hb = build_hom_bicategory(HomBicatSpec(cocycle, cocycle, [idm, tw]))
        assert check_bicategory(hb).ok
        # the cocycle signs survive into the hom-bicategory: it is weak
        assert not is_two_category(hb)
        sizes = {k: len(cat.objects) for k, cat in hb.hom.items()}
        assert set(sizes.values()) == {2}

    def test_lookup_tables_name_every_cell(self, cocycle):
        idm = identity_morphism(cocycle)
        hb = build_hom_bicategory(HomBicatSpec(cocycle, cocycle, [idm]))
        for (a, b), cat in hb.hom.items():
            assert set(hb.transformation_of[(a, b)]) == set(cat.objects)
            assert set(hb.modification_of[(a, b)]) == set(cat.arrows)
            for tr in hb.transformation_of[(a, b)].values():
                assert check_transformation(tr).ok
            for mod in hb.modification_of[(a, b)].values():
                assert check_modification(mod).ok


# ---------------------------------------------------------------------------
# spec validation and budgets


class TestSpecAndBudget:
    def test_duplicate_morphisms_rejected(self, walking_arrow):
        ida = identity_morphism(walking_arrow)
        with pytest.raises(StructureError, match="listed twice"):
            HomBicatSpec(walking_arrow, walking_arrow, [ida, ida])

    def test_lax_zero_cells_rejected(self):
        lax = samples.lax_idempotent_morphism()
        with pytest.raises(StructureError, match="lax"):
            HomBicatSpec(lax.dom, lax.cod, [lax])

    def test_foreign_morphism_rejected(self, walking_arrow):
        other = identity_morphism(samples.walking_idempotent())
        with pytest.raises(StructureError, match="does not map"):
            HomBicatSpec(walking_arrow, walking_arrow, [other])

    def test_enumeration_budget_reports_predicted_size(self, cocycle):
        idm = identity_morphism(cocycle)
        with pytest.raises(BudgetExceeded) as info:
            enumerate_transformations(idm, idm, budget=1)
        assert info.value.predicted == 2
        # the full candidate space is 8; within budget it completes
        assert len(enumerate_transformations(idm, idm, budget=8)) == 2

    def test_hom_build_respects_budget(self, cocycle):
        idm = identity_morphism(cocycle)
        tw = samples.twisted_self_morphism(cocycle)
        spec = HomBicatSpec(cocycle, cocycle, [idm, tw])
        with pytest.raises(BudgetExceeded):
            build_hom_bicategory(spec, budget=4)


# ---------------------------------------------------------------------------
# biequivalence recognition


class TestBiequivalence:
    def test_identity_is_a_biequivalence(self, cocycle):
        assert is_biequivalence(identity_morphism(cocycle))

    def test_twisted_self_morphism_is_a_biequivalence(self, cocycle):
        assert is_biequivalence(samples.twisted_self_morphism(cocycle))

    def test_collapse_is_not(self, walking_arrow):
        coll = samples.collapse_morphism(walking_arrow, walking_arrow)
        assert not is_biequivalence(coll)
