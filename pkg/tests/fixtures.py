"""Frozen reference data shared by the test modules.

Everything here is literal: the twenty short pure elements and their
bookkeeping (inverse partners, symmetric-group images, the conjugation
table for the full reversal), reference spellings for the length-2/3/4
spheres, the Dirichlet polygon combinatorics (corner labels, side
pairings, corner cycles), the target presentations, and the
isomorphism data for the two companion groups.  Tests verify all of it
computationally and never read anything outside this directory.
"""

# the twenty words of length 4 over the five-generator subgroup whose
# symmetric-group image is central (e or the double transposition)
A_WORDS = {
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

# translation generators: name -> (a-index, parity); parity 1 means a
# trailing full-reversal letter in the six-generator spelling
G_DEF = {
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

G_INV_DEF = {
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

# a_i^-1 = a_j: the eleven distinct statements (self-inverses once)
A_INVERSE_PAIRS = {
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

# symmetric-group images of the first twelve a-words
PI_A = {
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

# conjugation by the full reversal: s14 a_i = a_{13-i} s14 for i = 1..12
CONJ_RANGE = list(range(1, 13))

# the fifteen length-2 elements, one spelling each
LENGTH2_WORDS = [
    "s12 s23",
    "s13 s23",
    "s13 s24",
    "s13 s34",
    "s13 s12",
    "s23 s12",
    "s23 s34",
    "s24 s34",
    "s24 s12",
    "s24 s13",
    "s24 s23",
    "s34 s23",
    "s34 s13",
    "s34 s12",
    "s12 s24",
]

# the five quadrilateral faces at the identity vertex
FACES_AT_E = [
    ("e", "s12", "s12 s13", "s13"),
    ("e", "s13", "s13 s12", "s23"),
    ("e", "s23", "s23 s24", "s24"),
    ("e", "s24", "s24 s23", "s34"),
    ("e", "s34", "s34 s12", "s12"),
]

# reference spellings for the forty length-3 elements
TABLE_LENGTH3 = [
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
]

# reference spellings for the length-4 sphere, kept verbatim: 105
# entries, one spelling repeated, so exactly one of the 105 elements
# has no spelling in this list (recorded below)
TABLE_LENGTH4_PRINTED = [
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
]

TABLE_LENGTH4_DUPLICATE = "s13 s24 s12 s13"
TABLE_LENGTH4_MISSING = "s13 s24 s12 s23"  # canonical form

# the length-3 corners of the Dirichlet polygon
V_WORDS = {
    1: "s13 s24 s23",
    2: "s23 s34 s12",
    3: "s24 s13 s23",
    4: "s34 s13 s12",
    5: "s12 s24 s34",
}

# corner angle classes (multiples of pi/5): the five length-3 corners
# sit at 2pi/5; these five length-2 corners at 4pi/5; the remaining
# ten length-2 corners at 3pi/5
ANGLE_4PI5_CORNERS = ["s13 s23", "s13 s12", "s24 s34", "s24 s23", "s34 s12"]
ANGLE_3PI5_CORNERS = [
    "s12 s23", "s13 s24", "s13 s34", "s23 s12", "s23 s34",
    "s24 s12", "s24 s13", "s34 s23", "s34 s13", "s12 s24",
]

# side pairings: generator -> ((source endpoints), (target endpoints)),
# with gamma(g, source[k]) = target[k] for k = 0, 1
SIDE_PAIRINGS = {
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

# corner cycles.  The five-corner cycle walks all length-3 corners
# (each angle 2pi/5); the 3-cycles each have angles summing to 2pi.
CYCLE_5 = {
    "generators": ["g2^-1", "g9^-1", "g7", "g6^-1", "g3"],
    "vertices": [
        "s13 s24 s23",
        "s24 s13 s23",
        "s12 s23 s24",
        "s23 s34 s12",
        "s34 s13 s12",
    ],
    "fifths": [2, 2, 2, 2, 2],
}
CYCLES_3 = [
    {"generators": ["g4^-1", "g8^-1", "g3"],
     "vertices": ["s13 s34", "s24 s34", "s34 s23"], "fifths": [3, 4, 3]},
    {"generators": ["g4^-1", "g9^-1", "g5"],
     "vertices": ["s13 s12", "s24 s12", "s12 s23"], "fifths": [4, 3, 3]},
    {"generators": ["g6^-1", "g1", "g5"],
     "vertices": ["s23 s12", "s34 s13", "s13 s23"], "fifths": [3, 3, 4]},
    {"generators": ["g7^-1", "g10", "g8"],
     "vertices": ["s23 s34", "s12 s24", "s24 s23"], "fifths": [3, 3, 4]},
    {"generators": ["g2", "g1^-1", "g10"],
     "vertices": ["s24 s13", "s13 s24", "s34 s12"], "fifths": [3, 3, 4]},
]

# the resulting ten-generator presentation (cycle relators)
TEN_GEN_RELATORS = [
    "g3 g6^-1 g7 g9^-1 g2^-1",
    "g3 g8^-1 g4^-1",
    "g5 g9^-1 g4^-1",
    "g5 g1 g6^-1",
    "g8 g10 g7^-1",
    "g10 g1^-1 g2",
]

# eliminations reducing it to one relator on five generators
ELIMINATIONS = [
    ("g1", "g2 g10"),
    ("g5", "g4 g9"),
    ("g6", "g5 g1"),
    ("g7", "g8 g10"),
    ("g3", "g4 g8"),
]
ONE_RELATOR = "g2 g9 g10^-1 g8^-1 g4 g9 g2 g10 g8^-1 g4^-1"

# companion group 1: a one-relator group on five letters whose relator
# has length ten
ALT_RELATOR = (
    "alpha gamma epsilon beta epsilon alpha^-1 delta^-1 beta gamma delta^-1"
)
ALT_F_IMAGES = {
    "alpha": "g4 g9",
    "beta": "g2 g10",
    "gamma": "g10^-1",
    "delta": "g4",
    "epsilon": "g8^-1 g4 g9",
}
ALT_G_IMAGES = {
    "g2": "beta gamma",
    "g4": "delta",
    "g8": "alpha epsilon^-1",
    "g9": "delta^-1 alpha",
    "g10": "gamma^-1",
}

# companion group 2: the nonorientable surface group of genus five
SURFACE_RELATOR = "a1 a1 a2 a2 a3 a3 a4 a4 a5 a5"
SURFACE_F_IMAGES_TEN = {
    "a1": "g1^-1",
    "a2": "g2 g10 g5^-1 g8 g3^-1",
    "a3": "g4",
    "a4": "g9 g10^-1",
    "a5": "g8^-1 g6",
}
SURFACE_F_IMAGES_FIVE = {
    "a1": "g10^-1 g2^-1",
    "a2": "g2 g10 g9^-1 g4^-1 g4^-1",
    "a3": "g4",
    "a4": "g9 g10^-1",
    "a5": "g8^-1 g4 g9 g2 g10",
}
SURFACE_G_IMAGES = {
    "g2": "a2 a3 a3 a4",
    "g4": "a3",
    "g8": "a3^-1 a2^-1 a1^-1 a1^-1 a5^-1",
    "g9": "a3^-1 a3^-1 a2^-1 a1^-1",
    "g10": "a4^-1 a3^-1 a3^-1 a2^-1 a1^-1",
}
