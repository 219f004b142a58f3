"""Regenerate the packaged fixture files.

Every fixture is built from library constructors and written in the canonical
serialization, so this script is deterministic: running it twice, or running
it against a fresh checkout, reproduces the shipped bytes exactly (the test
suite enforces this).

Usage: python3 scripts/gen_fixtures.py [DEST_DIR]
"""
from __future__ import annotations

import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from bicatkit import samples
from bicatkit.bicat import Bicategory
from bicatkit.freebicat import Assignment, TwoComputad
from bicatkit.grammar import parse_one_term
from bicatkit.homs import HomBicatSpec
from bicatkit.maps import identity_modification, identity_morphism
from bicatkit.structio import serialize_structure


def flip_assoc(bic: Bicategory, quad, triple) -> Bicategory:
    """Copy of ``bic`` with one associator component's sign flipped."""
    tab = dict(bic.assoc_tab[quad])
    v = tab[triple]
    pre, _, rest = v.partition("_")
    tab[triple] = {"pos": "neg", "neg": "pos"}[pre] + "_" + rest
    assoc = dict(bic.assoc_tab)
    assoc[quad] = tab
    return Bicategory(bic.zero_cells, bic.hom, bic.comp_obj, bic.comp_arr,
                      bic.id_one, assoc, bic.lunit_tab, bic.runit_tab)


def build_fixtures() -> dict[str, object]:
    cocycle = samples.nontrivial_cocycle_bicategory()
    wa = samples.walking_arrow_two_category()
    star = cocycle.zero_cells[0]

    computad = TwoComputad(
        ("pt",), {"u": ("pt", "pt")},
        {"z": (parse_one_term("(u*u)"), parse_one_term("id[pt]"))})
    assignment = Assignment({"pt": star},
                            {"u": cocycle.one(star, star, "u")},
                            {"z": cocycle.two(star, star, "pos_e")})

    sign_tr = samples.sign_transformation(cocycle)

    return {
        "terminal.fincat.json": samples.terminal_cat(),
        "z2-monoid.fincat.json": samples.z2_monoid_cat(),
        "poset2.fincat.json": samples.poset2_cat(),
        "empty.bicat.json": Bicategory((), {}, {}, {}, {}, {}, {}, {}),
        "walking-arrow.bicat.json": wa,
        "cocycle-z2.bicat.json": cocycle,
        "cocycle-z2-flip-uue.bicat.json": flip_assoc(
            cocycle, (star, star, star, star), ("u", "u", "e")),
        "cocycle-trivial.bicat.json": samples.trivial_cocycle_bicategory(),
        "z2-presentation.computad.json": computad,
        "u-to-cocycle.assignment.json": assignment,
        "identity-cocycle.morphism.json": identity_morphism(cocycle),
        "twisted-self.morphism.json": samples.twisted_self_morphism(cocycle),
        "lax-idempotent.morphism.json": samples.lax_idempotent_morphism(),
        "sign.transformation.json": sign_tr,
        "plain.transformation.json": samples.plain_transformation(),
        "sign-identity.modification.json": identity_modification(sign_tr),
        "pair.homspec.json": HomBicatSpec(
            wa, wa, [identity_morphism(wa), samples.collapse_morphism(wa, wa)]),
    }


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else argv
    dest = pathlib.Path(args[0]) if args else SRC / "bicatkit" / "fixtures"
    dest.mkdir(parents=True, exist_ok=True)
    for name, obj in sorted(build_fixtures().items()):
        text = serialize_structure(obj)
        (dest / name).write_text(text, encoding="utf-8")
        print(f"wrote {dest / name} ({len(text)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
