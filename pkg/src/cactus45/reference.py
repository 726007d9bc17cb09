"""Frozen reference tables backing the end-to-end verification registry.

Everything here is literal data: the twenty short translation words and
their bookkeeping (generator correspondence, inverse partners,
symmetric-group images), reference spellings for the small spheres of
the five-generator subgroup, the quadrilateral faces at the identity,
and the fundamental-polygon combinatorics (corner labels grouped by
angle class, side pairings, corner cycles, and the cycle relators).
The verification registry recomputes each claim from first principles
and checks the result against these tables; nothing here is consulted
by the computational modules themselves.
"""

from __future__ import annotations

# ---------------------------------------------------------------------------
# the twenty length-4 words over the five-generator subgroup whose
# symmetric-group image is central (identity or the double transposition)

SHORT_PURE_WORDS = {
    1: "s13 s24 s12 s34",
    2: "s13 s24 s13 s24",
    3: "s13 s34 s23 s12",
    4: "s13 s34 s13 s23",
    5: "s23 s12 s23 s13",
    6: "s23 s12 s24 s12",
    7: "s23 s34 s13 s34",
    8: "s24 s34 s23 s34",
    9: "s24 s12 s24 s23",
    10: "s24 s12 s23 s34",
    11: "s24 s13 s24 s13",
    12: "s24 s23 s13 s34",
    13: "s34 s23 s34 s24",
    14: "s34 s23 s12 s24",
    15: "s34 s13 s34 s23",
    16: "s34 s13 s23 s24",
    17: "s34 s12 s24 s13",
    18: "s12 s24 s12 s23",
    19: "s12 s23 s34 s13",
    20: "s12 s23 s12 s13",
}

# one short word admits a second published spelling; both must certify
# equal under the exact rewriting engine
EQUIVALENT_SPELLINGS = ("s34 s13 s23 s24", "s34 s13 s24 s34")

# translation generators: name -> (short-word index, parity); parity 1
# means the six-generator spelling carries a trailing full reversal
TRANSLATION_GENERATORS = {
    "g1": (1, 1),
    "g2": (2, 0),
    "g3": (3, 1),
    "g4": (4, 1),
    "g5": (5, 0),
    "g6": (6, 1),
    "g7": (7, 1),
    "g8": (8, 0),
    "g9": (10, 1),
    "g10": (12, 1),
}

TRANSLATION_INVERSES = {
    "g1": (16, 1),
    "g2": (11, 0),
    "g3": (14, 1),
    "g4": (9, 1),
    "g5": (20, 0),
    "g6": (15, 1),
    "g7": (18, 1),
    "g8": (13, 0),
    "g9": (19, 1),
    "g10": (17, 1),
}

# inverse partners among the twenty short words (self-inverses once)
INVERSE_PARTNERS = {
    1: 17,
    2: 11,
    3: 19,
    4: 4,
    5: 20,
    6: 18,
    7: 15,
    8: 13,
    9: 9,
    10: 14,
    12: 16,
}

# displayed symmetric-group images of the first twelve short words
CENTRAL_IMAGES = {
    1: "(14)(23)",
    2: "e",
    3: "(14)(23)",
    4: "(14)(23)",
    5: "e",
    6: "(14)(23)",
    7: "(14)(23)",
    8: "e",
    10: "(14)(23)",
    12: "(14)(23)",
}

# ---------------------------------------------------------------------------
# reference spellings for the small spheres

SPHERE2_WORDS = (
    "s12 s23", "s13 s23", "s13 s24", "s13 s34", "s13 s12",
    "s23 s12", "s23 s34", "s24 s34", "s24 s12", "s24 s13",
    "s24 s23", "s34 s23", "s34 s13", "s34 s12", "s12 s24",
)

SPHERE3_WORDS = (
    "s13 s23 s34", "s13 s23 s24", "s13 s24 s12", "s13 s24 s13",
    "s13 s24 s23", "s13 s34 s23", "s13 s34 s13", "s13 s34 s12",
    "s23 s13 s24", "s23 s13 s23", "s23 s12 s23", "s23 s12 s24",
    "s23 s12 s34", "s23 s34 s13", "s23 s34 s23", "s23 s34 s24",
    "s24 s34 s13", "s24 s34 s12", "s24 s12 s24", "s24 s12 s23",
    "s24 s12 s13", "s24 s13 s24", "s24 s13 s34", "s24 s13 s12",
    "s34 s24 s12", "s34 s24 s34", "s34 s23 s34", "s34 s23 s12",
    "s34 s23 s13", "s34 s13 s34", "s34 s13 s24", "s34 s13 s23",
    "s12 s34 s23", "s12 s34 s24", "s12 s24 s13", "s12 s24 s12",
    "s12 s24 s34", "s12 s23 s34", "s12 s23 s12", "s12 s23 s13",
)

# the published length-4 list, kept verbatim: 105 entries with one
# spelling repeated, so exactly one of the 105 elements goes unlisted
SPHERE4_WORDS = (
    "s13 s23 s34 s12", "s13 s23 s34 s13", "s13 s23 s34 s23", "s13 s23 s34 s24",
    "s13 s24 s34 s13", "s13 s24 s34 s12", "s13 s24 s12 s24", "s13 s24 s12 s13",
    "s13 s24 s12 s13", "s13 s24 s13 s24", "s13 s24 s13 s34", "s13 s24 s13 s12",
    "s13 s34 s24 s12", "s13 s34 s24 s34", "s13 s34 s23 s34", "s13 s34 s23 s12",
    "s13 s34 s23 s13", "s13 s34 s13 s34", "s13 s34 s13 s24", "s13 s34 s13 s23",
    "s13 s12 s34 s23", "s13 s12 s34 s24", "s23 s13 s24 s13", "s23 s13 s24 s12",
    "s23 s13 s24 s34", "s23 s12 s13 s34", "s23 s12 s13 s12", "s23 s12 s23 s12",
    "s23 s12 s23 s34", "s23 s12 s23 s24", "s23 s12 s24 s12", "s23 s12 s24 s13",
    "s23 s12 s24 s23", "s23 s34 s12 s23", "s23 s34 s12 s13", "s23 s34 s13 s24",
    "s23 s34 s13 s34", "s23 s34 s13 s12", "s23 s34 s23 s12", "s23 s34 s23 s34",
    "s23 s34 s23 s24", "s23 s24 s23 s12", "s23 s24 s23 s13", "s24 s34 s13 s34",
    "s24 s34 s13 s24", "s24 s34 s13 s23", "s24 s12 s34 s23", "s24 s12 s34 s24",
    "s24 s12 s24 s13", "s24 s12 s24 s12", "s24 s12 s24 s34", "s24 s12 s23 s34",
    "s24 s12 s23 s12", "s24 s12 s23 s13", "s24 s13 s23 s34", "s24 s13 s23 s24",
    "s24 s13 s24 s12", "s24 s13 s24 s13", "s24 s13 s24 s23", "s24 s13 s34 s23",
    "s24 s13 s34 s13", "s24 s13 s34 s12", "s24 s23 s13 s24", "s24 s23 s13 s23",
    "s34 s24 s12 s23", "s34 s24 s12 s24", "s34 s24 s12 s34", "s34 s23 s24 s13",
    "s34 s23 s24 s23", "s34 s23 s34 s23", "s34 s23 s34 s13", "s34 s23 s34 s12",
    "s34 s23 s12 s24", "s34 s23 s12 s23", "s34 s23 s12 s13", "s34 s13 s12 s24",
    "s34 s13 s12 s34", "s34 s13 s34 s13", "s34 s13 s34 s23", "s34 s13 s34 s24",
    "s34 s13 s24 s13", "s34 s13 s24 s12", "s34 s13 s24 s34", "s34 s12 s13 s34",
    "s34 s12 s13 s12", "s12 s34 s23 s12", "s12 s34 s23 s34", "s12 s34 s23 s24",
    "s12 s24 s23 s12", "s12 s24 s23 s13", "s12 s24 s13 s34", "s12 s24 s13 s24",
    "s12 s24 s13 s23", "s12 s24 s12 s23", "s12 s24 s12 s24", "s12 s24 s12 s34",
    "s12 s23 s24 s13", "s12 s23 s24 s23", "s12 s23 s34 s23", "s12 s23 s34 s13",
    "s12 s23 s34 s12", "s12 s23 s12 s24", "s12 s23 s12 s23", "s12 s23 s12 s13",
    "s12 s13 s12 s24",
)

SPHERE4_REPEATED_SPELLING = "s13 s24 s12 s13"
SPHERE4_UNLISTED_ELEMENT = "s13 s24 s12 s23"  # canonical form

# ---------------------------------------------------------------------------
# the five quadrilateral faces at the identity vertex

IDENTITY_FACES = (
    ("e", "s12", "s12 s13", "s13"),
    ("e", "s13", "s13 s12", "s23"),
    ("e", "s23", "s23 s24", "s24"),
    ("e", "s24", "s24 s23", "s34"),
    ("e", "s34", "s34 s12", "s12"),
)

# ---------------------------------------------------------------------------
# fundamental-polygon combinatorics: corner labels by angle class

CORNERS_AT_2PI5 = (
    "s13 s24 s23",
    "s23 s34 s12",
    "s24 s13 s23",
    "s34 s13 s12",
    "s12 s24 s34",
)

CORNERS_AT_4PI5 = ("s13 s23", "s13 s12", "s24 s34", "s24 s23", "s34 s12")

CORNERS_AT_3PI5 = (
    "s12 s23", "s13 s24", "s13 s34", "s23 s12", "s23 s34",
    "s24 s12", "s24 s13", "s34 s23", "s34 s13", "s12 s24",
)

# side pairings: generator -> ((source endpoints), (target endpoints));
# the generator's action carries source[k] to target[k] for k = 0, 1
SIDE_PAIRING_TABLE = {
    "g1": (("s34 s12", "s34 s13"), ("s13 s24", "s13 s23")),
    "g2": (("s24 s13", "s24 s13 s23"), ("s13 s24", "s13 s24 s23")),
    "g3": (("s34 s23", "s34 s23 s13"), ("s13 s34", "s13 s34 s24")),
    "g4": (("s24 s34", "s24 s12"), ("s13 s34", "s13 s12")),
    "g5": (("s13 s23", "s12 s23"), ("s23 s12", "s23 s13")),
    "g6": (("s34 s13", "s34 s13 s12"), ("s23 s12", "s23 s12 s34")),
    "g7": (("s12 s24", "s12 s24 s34"), ("s23 s34", "s23 s34 s12")),
    "g8": (("s24 s23", "s34 s23"), ("s23 s34", "s24 s34")),
    "g9": (("s12 s23", "s12 s23 s24"), ("s24 s12", "s24 s12 s13")),
    "g10": (("s12 s34", "s12 s24"), ("s24 s13", "s24 s23")),
}

# corner cycles: the five-term cycle walks the length-3 corners (each
# at 2pi/5); each three-term cycle has corner angles summing to 2pi
FIVE_TERM_CYCLE = {
    "generators": ("g2^-1", "g9^-1", "g7", "g6^-1", "g3"),
    "vertices": (
        "s13 s24 s23",
        "s24 s13 s23",
        "s12 s23 s24",
        "s23 s34 s12",
        "s34 s13 s12",
    ),
    "fifths": (2, 2, 2, 2, 2),
}

THREE_TERM_CYCLES = (
    {"generators": ("g4^-1", "g8^-1", "g3"),
     "vertices": ("s13 s34", "s24 s34", "s34 s23"), "fifths": (3, 4, 3)},
    {"generators": ("g4^-1", "g9^-1", "g5"),
     "vertices": ("s13 s12", "s24 s12", "s12 s23"), "fifths": (4, 3, 3)},
    {"generators": ("g6^-1", "g1", "g5"),
     "vertices": ("s23 s12", "s34 s13", "s13 s23"), "fifths": (3, 3, 4)},
    {"generators": ("g7^-1", "g10", "g8"),
     "vertices": ("s23 s34", "s12 s24", "s24 s23"), "fifths": (3, 3, 4)},
    {"generators": ("g2", "g1^-1", "g10"),
     "vertices": ("s24 s13", "s13 s24", "s34 s12"), "fifths": (3, 3, 4)},
)

# the six cycle relators of the resulting ten-generator presentation
CYCLE_RELATORS = (
    "g3 g6^-1 g7 g9^-1 g2^-1",
    "g3 g8^-1 g4^-1",
    "g5 g9^-1 g4^-1",
    "g5 g1 g6^-1",
    "g8 g10 g7^-1",
    "g10 g1^-1 g2",
)
