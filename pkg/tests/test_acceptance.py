"""Thirteen acceptance checks, one per registry criterion.

Each test runs one numbered check from the shared verification
registry and reports a single pass/fail line; the ``verify-all``
command drives the same registry, so this file and the CLI agree by
construction.
"""

import cactus45.reference as ref
from cactus45.verify import CRITERIA, run_criterion

import fixtures


def _run(number: int) -> None:
    result = run_criterion(number)
    mark = "PASS" if result.passed else "FAIL"
    print(f"[{mark}] criterion {result.number} ({result.name}): {result.details}")
    assert result.passed, (
        f"criterion {result.number} ({result.name}): {result.details}"
    )


def test_criterion_01_sphere_counts_and_tables():
    _run(1)


def test_criterion_02_pure_element_enumeration():
    _run(2)


def test_criterion_03_central_images_and_parity_law():
    _run(3)


def test_criterion_04_reversal_conjugation_table():
    _run(4)


def test_criterion_05_cayley_complex_structure():
    _run(5)


def test_criterion_06_edge_length_and_face_angles():
    _run(6)


def test_criterion_07_fundamental_polygon():
    _run(7)


def test_criterion_08_side_pairings():
    _run(8)


def test_criterion_09_corner_cycles_and_presentation():
    _run(9)


def test_criterion_10_one_relator_reduction():
    _run(10)


def test_criterion_11_companion_isomorphisms():
    _run(11)


def test_criterion_12_surface_classification():
    _run(12)


def test_criterion_13_action_properties():
    _run(13)


def test_registry_is_complete():
    assert [number for number, _, _ in CRITERIA] == list(range(1, 14))
    names = [name for _, name, _ in CRITERIA]
    assert len(set(names)) == 13


def test_reference_tables_agree_with_test_fixtures():
    # the package ships its own frozen copy of the tables (the installed
    # CLI cannot import the test tree); both copies must stay identical
    assert ref.SHORT_PURE_WORDS == fixtures.A_WORDS
    assert ref.EQUIVALENT_SPELLINGS[0] == fixtures.A_WORDS[16]
    assert ref.TRANSLATION_GENERATORS == fixtures.G_DEF
    assert ref.TRANSLATION_INVERSES == fixtures.G_INV_DEF
    assert ref.INVERSE_PARTNERS == fixtures.A_INVERSE_PAIRS
    assert ref.CENTRAL_IMAGES == fixtures.PI_A
    assert list(ref.SPHERE2_WORDS) == fixtures.LENGTH2_WORDS
    assert list(ref.SPHERE3_WORDS) == fixtures.TABLE_LENGTH3
    assert list(ref.SPHERE4_WORDS) == fixtures.TABLE_LENGTH4_PRINTED
    assert ref.SPHERE4_REPEATED_SPELLING == fixtures.TABLE_LENGTH4_DUPLICATE
    assert ref.SPHERE4_UNLISTED_ELEMENT == fixtures.TABLE_LENGTH4_MISSING
    assert list(ref.IDENTITY_FACES) == fixtures.FACES_AT_E
    assert list(ref.CORNERS_AT_2PI5) == list(fixtures.V_WORDS.values())
    assert list(ref.CORNERS_AT_4PI5) == fixtures.ANGLE_4PI5_CORNERS
    assert list(ref.CORNERS_AT_3PI5) == fixtures.ANGLE_3PI5_CORNERS
    assert ref.SIDE_PAIRING_TABLE == fixtures.SIDE_PAIRINGS
    assert ref.FIVE_TERM_CYCLE["generators"] == tuple(
        fixtures.CYCLE_5["generators"]
    )
    assert ref.FIVE_TERM_CYCLE["vertices"] == tuple(fixtures.CYCLE_5["vertices"])
    assert list(ref.FIVE_TERM_CYCLE["fifths"]) == fixtures.CYCLE_5["fifths"]
    assert len(ref.THREE_TERM_CYCLES) == len(fixtures.CYCLES_3) == 5
    for mine, theirs in zip(ref.THREE_TERM_CYCLES, fixtures.CYCLES_3):
        assert mine["generators"] == tuple(theirs["generators"])
        assert mine["vertices"] == tuple(theirs["vertices"])
        assert list(mine["fifths"]) == theirs["fifths"]
    assert list(ref.CYCLE_RELATORS) == fixtures.TEN_GEN_RELATORS
