"""Canonical serialization: byte-stable round trips for every structure
kind, shipped fixture integrity, and parse-error reporting."""

from __future__ import annotations

import json
import pathlib
import subprocess
import sys

import pytest

from bicatkit import samples
from bicatkit.bicat import Bicategory, check_bicategory
from bicatkit.errors import ParseError, StructureError
from bicatkit.fincat import check_fincat
from bicatkit.freebicat import Assignment, TwoComputad, check_assignment
from bicatkit.grammar import parse_one_term
from bicatkit.homs import HomBicatSpec
from bicatkit.maps import (
    check_modification,
    check_morphism,
    check_transformation,
    identity_modification,
    identity_morphism,
)
from bicatkit.structio import (
    parse_structure,
    parse_structure_text,
    serialize_structure,
)

REPO = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = REPO / "src" / "bicatkit" / "fixtures"


def roundtrip(x):
    text = serialize_structure(x)
    y = parse_structure_text(text)
    assert serialize_structure(y) == text
    return y


# ---------------------------------------------------------------------------
# per-kind round trips


class TestRoundTrips:
    def test_fincat(self):
        for cat in (samples.terminal_cat(), samples.z2_monoid_cat(),
                    samples.poset2_cat()):
            y = roundtrip(cat)
            assert check_fincat(y).ok
            assert y.equal_tables(cat)

    def test_bicategory(self):
        for bic in (
            Bicategory((), {}, {}, {}, {}, {}, {}, {}),
            samples.walking_arrow_two_category(),
            samples.walking_idempotent_endo(),
            samples.nontrivial_cocycle_bicategory(),
        ):
            y = roundtrip(bic)
            assert check_bicategory(y).ok
            assert serialize_structure(y) == serialize_structure(bic)

    def test_computad_and_assignment(self):
        cpd = TwoComputad(
            ("pt",), {"u": ("pt", "pt")},
            {"z": (parse_one_term("(u*u)"), parse_one_term("id[pt]"))},
        )
        roundtrip(cpd)
        bic = samples.nontrivial_cocycle_bicategory()
        asg = Assignment(
            {"pt": "*"},
            {"u": bic.one("*", "*", "u")},
            {"z": bic.two("*", "*", "pos_e")},
        )
        y = roundtrip(asg)
        check_assignment(y, cpd, bic)

    def test_morphism(self):
        bic = samples.nontrivial_cocycle_bicategory()
        for mor in (
            identity_morphism(bic),
            samples.twisted_self_morphism(bic),
            samples.lax_idempotent_morphism(),
        ):
            y = roundtrip(mor)
            assert check_morphism(y).ok
            # dom and cod hom categories are rebuilt as shared instances
            for (a, b), fun in y.hom_functors.items():
                assert fun.dom is y.dom.hom[(a, b)]

    def test_transformation(self):
        bic = samples.nontrivial_cocycle_bicategory()
        for tr in (samples.sign_transformation(bic), samples.plain_transformation()):
            y = roundtrip(tr)
            assert check_transformation(y).ok
            assert y.dom.dom is y.cod.dom
            assert y.dom.cod is y.cod.cod

    def test_modification(self):
        bic = samples.nontrivial_cocycle_bicategory()
        mod = identity_modification(samples.sign_transformation(bic))
        y = roundtrip(mod)
        assert check_modification(y).ok
        assert y.dom.dom is y.cod.dom  # shared base morphism
        # base and ambient bicategories are stored once and shared too
        assert y.dom.dom.dom is y.cod.cod.dom
        assert serialize_structure(y.dom.dom.dom) == serialize_structure(
            y.dom.dom.cod
        )

    def test_homspec(self):
        wa = samples.walking_arrow_two_category()
        spec = HomBicatSpec(
            wa, wa, [identity_morphism(wa), samples.collapse_morphism(wa, wa)]
        )
        y = roundtrip(spec)
        assert len(y.zero_cells) == 2
        assert y.zero_cells[0].dom is y.zero_cells[1].dom

    def test_serialization_is_stable_and_newline_terminated(self):
        text = serialize_structure(samples.terminal_cat())
        assert text == serialize_structure(samples.terminal_cat())
        assert text.endswith("\n")
        doc = json.loads(text)
        assert doc["kind"] == "fincat"
        assert list(doc) == sorted(doc)


# ---------------------------------------------------------------------------
# shipped fixtures


class TestFixtures:
    def test_every_fixture_round_trips_byte_for_byte(self):
        files = sorted(FIXTURES.glob("*.json"))
        assert len(files) == 17
        for path in files:
            text = path.read_text(encoding="utf-8")
            obj = parse_structure(path)
            assert serialize_structure(obj) == text, path.name

    def test_regeneration_script_reproduces_shipped_bytes(self, tmp_path):
        subprocess.run(
            [sys.executable, str(REPO / "scripts" / "gen_fixtures.py"),
             str(tmp_path)],
            check=True,
            capture_output=True,
        )
        fresh = sorted(p.name for p in tmp_path.glob("*.json"))
        shipped = sorted(p.name for p in FIXTURES.glob("*.json"))
        assert fresh == shipped
        for name in shipped:
            assert (tmp_path / name).read_bytes() == (FIXTURES / name).read_bytes()


# ---------------------------------------------------------------------------
# parse errors


class TestParseErrors:
    def test_invalid_json_reports_line_and_column(self):
        with pytest.raises(ParseError, match=r"line 1, column 19"):
            parse_structure_text('{"kind": "fincat",')

    def test_unknown_kind(self):
        with pytest.raises(ParseError, match="unknown structure kind 'widget'"):
            parse_structure_text('{"kind": "widget"}')

    def test_missing_field(self):
        with pytest.raises(ParseError, match="malformed fincat"):
            parse_structure_text('{"kind": "fincat", "objects": ["*"]}')

    def test_top_level_must_be_an_object(self):
        with pytest.raises(ParseError, match="top-level 'kind'"):
            parse_structure_text("[1, 2]")

    def test_dangling_reference_is_a_structure_error(self):
        text = json.dumps(
            {
                "kind": "fincat",
                "objects": ["*"],
                "arrows": {"f": ["*", "nope"]},
                "identity": {"*": "f"},
                "compose": [],
            }
        )
        with pytest.raises(StructureError, match="dangling endpoint"):
            parse_structure_text(text)

    def test_file_errors_carry_the_path(self, tmp_path):
        bad = tmp_path / "broken.fincat.json"
        bad.write_text('{"kind": "fincat"', encoding="utf-8")
        with pytest.raises(ParseError, match="broken.fincat.json"):
            parse_structure(bad)

    def test_separator_character_rejected_in_cell_ids(self):
        wa = samples.walking_arrow_two_category()
        renamed = Bicategory(
            ("A|x", "B"),
            {(a.replace("A", "A|x"), b.replace("A", "A|x")): c
             for (a, b), c in wa.hom.items()},
            {tuple(z.replace("A", "A|x") for z in k): t
             for k, t in wa.comp_obj.items()},
            {tuple(z.replace("A", "A|x") for z in k): t
             for k, t in wa.comp_arr.items()},
            {a.replace("A", "A|x"): v for a, v in wa.id_one.items()},
            {tuple(z.replace("A", "A|x") for z in k): t
             for k, t in wa.assoc_tab.items()},
            {tuple(z.replace("A", "A|x") for z in k): t
             for k, t in wa.lunit_tab.items()},
            {tuple(z.replace("A", "A|x") for z in k): t
             for k, t in wa.runit_tab.items()},
        )
        with pytest.raises(StructureError, match="may not contain"):
            serialize_structure(renamed)
