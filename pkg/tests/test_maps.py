"""Morphisms of bicategories, transformations, modifications: axioms,
composition closure, and the strict/iso/lax strength classification."""

from __future__ import annotations

import pytest

from bicatkit import samples
from bicatkit.bicat import One
from bicatkit.errors import StructureError
from bicatkit.fincat import Functor
from bicatkit.maps import (
    STRENGTH_ORDER,
    Modification,
    Morphism,
    Transformation,
    check_modification,
    check_morphism,
    check_transformation,
    classify_strength,
    compose_morphisms,
    compose_transformations,
    hcomp_modifications,
    identity_modification,
    identity_morphism,
    identity_transformation,
    local_property,
    vcomp_modifications,
)


@pytest.fixture(scope="module")
def cocycle():
    return samples.nontrivial_cocycle_bicategory()


@pytest.fixture(scope="module")
def endo():
    return samples.walking_idempotent_endo()


# ---------------------------------------------------------------------------
# the strength exemplar table


class TestStrengthTable:
    # one exemplar per (kind, strength); classification is frozen
    EXPECTED = {
        ("morphism", "strict"),
        ("morphism", "iso"),
        ("morphism", "lax"),
        ("transformation", "strict"),
        ("transformation", "iso"),
        ("transformation", "lax"),
    }

    def test_table_is_complete_and_classified(self):
        table = samples.strength_table()
        seen = set()
        for kind, by_strength in table.items():
            for strength, x in by_strength.items():
                seen.add((kind, strength))
                assert classify_strength(x) == strength
        assert seen == self.EXPECTED

    def test_exemplars_satisfy_their_axioms(self):
        table = samples.strength_table()
        for x in table["morphism"].values():
            assert check_morphism(x).ok
        for x in table["transformation"].values():
            assert check_transformation(x).ok

    def test_strength_order_is_strict_above_iso_above_lax(self):
        assert STRENGTH_ORDER["strict"] > STRENGTH_ORDER["iso"] > STRENGTH_ORDER["lax"]


# ---------------------------------------------------------------------------
# axiom checkers accept the samples and their composites


class TestClosure:
    def test_identity_morphism_is_strict(self, cocycle):
        m = identity_morphism(cocycle)
        assert check_morphism(m).ok
        assert classify_strength(m) == "strict"

    def test_inclusion_and_collapse_pass(self, endo):
        idem = samples.walking_idempotent()
        wa = samples.walking_arrow_two_category()
        for mor in (
            samples.inclusion_morphism(idem, endo),
            samples.collapse_morphism(endo, endo),
            samples.collapse_morphism(wa, wa),
        ):
            assert check_morphism(mor).ok

    def test_composites_of_morphisms_pass(self, cocycle, endo):
        twisted = samples.twisted_self_morphism(cocycle)
        assert check_morphism(compose_morphisms(twisted, twisted)).ok
        incl = samples.inclusion_morphism(samples.walking_idempotent(), endo)
        coll = samples.collapse_morphism(endo, endo)
        both = compose_morphisms(coll, incl)
        assert check_morphism(both).ok
        assert both.dom is incl.dom and both.cod is coll.cod

    def test_twist_composed_with_itself_untwists(self, cocycle):
        # the comparison cells multiply, so the (-1) twist squares away
        twisted = samples.twisted_self_morphism(cocycle)
        assert classify_strength(twisted) == "iso"
        square = compose_morphisms(twisted, twisted)
        assert classify_strength(square) == "strict"

    def test_composites_of_transformations_pass(self, cocycle):
        sign = samples.sign_transformation(cocycle)
        assert check_transformation(sign).ok
        double = compose_transformations(sign, sign)
        assert check_transformation(double).ok
        # sign components square to the identity transformation's strength
        assert classify_strength(double) == "strict"

    def test_identity_transformation_and_modification_pass(self, cocycle):
        tr = identity_transformation(identity_morphism(cocycle))
        assert check_transformation(tr).ok
        assert classify_strength(tr) == "strict"
        mod = identity_modification(tr)
        assert check_modification(mod).ok

    def test_modification_composites_pass(self, cocycle):
        sign = samples.sign_transformation(cocycle)
        gamma = identity_modification(sign)
        assert check_modification(vcomp_modifications(gamma, gamma)).ok
        # horizontal composition pastes along the shared base morphism
        other = identity_modification(identity_transformation(sign.dom))
        assert check_modification(hcomp_modifications(gamma, other)).ok


# ---------------------------------------------------------------------------
# every axiom is individually detectable


class TestMutations:
    def test_unnormalized_comparison_cell_breaks_hexagon(self, cocycle):
        u = cocycle.one("*", "*", "u")
        e = cocycle.one_id("*")
        m = identity_morphism(cocycle)
        cc = dict(m.comp_cells)
        cc[(u, e)] = cocycle.two("*", "*", "neg_u")
        bad = Morphism(cocycle, cocycle, m.obj_map, m.hom_functors, cc, m.unit_cells)
        rep = check_morphism(bad)
        assert not rep.ok
        assert {v.law for v in rep.violations} == {
            "morphism.hexagon",
            "morphism.runit",
        }

    def test_flipped_unit_cell_breaks_unit_laws(self, cocycle):
        m = identity_morphism(cocycle)
        uc = dict(m.unit_cells)
        uc["*"] = cocycle.two("*", "*", "neg_e")
        bad = Morphism(cocycle, cocycle, m.obj_map, m.hom_functors, m.comp_cells, uc)
        rep = check_morphism(bad)
        assert {v.law for v in rep.violations} == {
            "morphism.lunit",
            "morphism.runit",
        }

    def test_non_functorial_hom_action_breaks_naturality(self, cocycle):
        m = identity_morphism(cocycle)
        hf = dict(m.hom_functors)
        f0 = hf[("*", "*")]
        am = dict(f0.arr_map)
        am["neg_u"] = "pos_u"
        hf[("*", "*")] = Functor(f0.dom, f0.cod, f0.obj_map, am)
        bad = Morphism(cocycle, cocycle, m.obj_map, hf, m.comp_cells, m.unit_cells)
        rep = check_morphism(bad)
        assert {v.law for v in rep.violations} == {
            "morphism.hexagon",
            "morphism.naturality",
        }

    def test_flipped_identity_component_breaks_unit_and_composite(self, cocycle):
        tr = samples.sign_transformation(cocycle)
        e = cocycle.one_id("*")
        c2 = dict(tr.comp_two)
        c2[e] = cocycle.two("*", "*", "neg_e")
        bad = Transformation(tr.dom, tr.cod, tr.comp_one, c2)
        rep = check_transformation(bad)
        assert {v.law for v in rep.violations} == {
            "transformation.composite",
            "transformation.unit",
        }

    def test_wrong_component_breaks_composite(self, cocycle):
        tr = samples.sign_transformation(cocycle)
        u = cocycle.one("*", "*", "u")
        e = cocycle.one_id("*")
        bad = Transformation(
            tr.dom,
            tr.cod,
            {"*": u},
            {u: cocycle.two("*", "*", "pos_e"), e: cocycle.two("*", "*", "pos_u")},
        )
        rep = check_transformation(bad)
        assert {v.law for v in rep.violations} == {"transformation.composite"}

    def test_unit_comparison_cell_breaks_unit(self, endo):
        pl = samples.plain_transformation()
        i = One("*", "*", "I")
        c2 = dict(pl.comp_two)
        c2[i] = endo.two("*", "*", "m")
        bad = Transformation(pl.dom, pl.cod, pl.comp_one, c2)
        rep = check_transformation(bad)
        assert {v.law for v in rep.violations} == {"transformation.unit"}

    def test_identity_comparison_against_collapsing_cod_breaks_naturality(
        self, endo
    ):
        F = identity_morphism(endo)
        G = samples.collapse_morphism(endo, endo)
        w = One("*", "*", "w")
        i = One("*", "*", "I")
        comp_one = {"*": endo.one("*", "*", "w")}
        bad = Transformation(
            F,
            G,
            comp_one,
            {w: endo.two("*", "*", "1w"), i: endo.two("*", "*", "1w")},
        )
        rep = check_transformation(bad)
        assert {v.law for v in rep.violations} == {"transformation.naturality"}
        # absorbing the idempotent cell instead satisfies every law
        good = Transformation(
            F,
            G,
            comp_one,
            {w: endo.two("*", "*", "m"), i: endo.two("*", "*", "1w")},
        )
        assert check_transformation(good).ok

    def test_mismatched_comparison_cells_break_modification_square(self, endo):
        pl = samples.plain_transformation()
        w = One("*", "*", "w")
        c2 = dict(pl.comp_two)
        c2[w] = endo.two("*", "*", "1w")
        strictly = Transformation(pl.dom, pl.cod, pl.comp_one, c2)
        assert check_transformation(strictly).ok
        gamma = Modification(pl, strictly, {"*": endo.two("*", "*", "1w")})
        rep = check_modification(gamma)
        assert {v.law for v in rep.violations} == {"modification.square"}


# ---------------------------------------------------------------------------
# construction-time structure validation


class TestStructure:
    def test_missing_hom_functor_rejected(self, cocycle):
        m = identity_morphism(cocycle)
        with pytest.raises(StructureError):
            Morphism(cocycle, cocycle, m.obj_map, {}, m.comp_cells, m.unit_cells)

    def test_missing_component_rejected(self, cocycle):
        m = identity_morphism(cocycle)
        tr = identity_transformation(m)
        with pytest.raises(StructureError):
            Transformation(m, m, {}, tr.comp_two)

    def test_non_parallel_modification_rejected(self, cocycle):
        sign = samples.sign_transformation(cocycle)
        plain = samples.plain_transformation()
        with pytest.raises(StructureError):
            Modification(sign, plain, {"*": cocycle.two("*", "*", "pos_e")})

    def test_wrong_comparison_cell_endpoints_rejected(self, cocycle):
        m = identity_morphism(cocycle)
        u = cocycle.one("*", "*", "u")
        e = cocycle.one_id("*")
        cc = dict(m.comp_cells)
        cc[(u, u)] = cocycle.two("*", "*", "pos_u")  # should land at e
        with pytest.raises(StructureError):
            Morphism(cocycle, cocycle, m.obj_map, m.hom_functors, cc, m.unit_cells)


# ---------------------------------------------------------------------------
# local properties of hom functors


class TestLocalProperties:
    def test_identity_is_a_local_equivalence(self, cocycle):
        m = identity_morphism(cocycle)
        for prop in ("faithful", "full", "essentially_surjective", "equivalence"):
            assert local_property(m, prop)

    def test_collapse_loses_every_local_property(self, endo):
        # hom(I, w) is empty upstream but collapses onto hom(I, I) = {1I},
        # so the constant functor is neither full nor faithful
        coll = samples.collapse_morphism(endo, endo)
        assert not local_property(coll, "full")
        assert not local_property(coll, "faithful")
        assert not local_property(coll, "essentially_surjective")
        assert not local_property(coll, "equivalence")

    def test_inclusion_is_faithful_but_not_essentially_surjective(self, endo):
        incl = samples.inclusion_morphism(samples.walking_idempotent(), endo)
        assert local_property(incl, "faithful")
        assert not local_property(incl, "full")  # m is not in the image
        assert local_property(incl, "essentially_surjective")
        assert not local_property(incl, "equivalence")

    def test_unknown_property_rejected(self, cocycle):
        with pytest.raises(StructureError):
            local_property(identity_morphism(cocycle), "invertible")
