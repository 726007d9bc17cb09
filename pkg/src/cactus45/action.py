"""Pure elements of the four-strand cactus group and their action on
the vertex words of the five-generator subgroup.

A pure element is stored in split form: a word over the five
short-interval generators times an optional trailing full reversal.
Acting on a vertex then amounts to concatenation — the full reversal
is absorbed by the mirror relabeling — followed by canonicalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

from .cactus import (
    Permutation,
    j4_presentation,
    j4prime_presentation,
    mirror_generator,
    project_to_symmetric,
    push_s14_right,
)
from .rewrite import (
    DEFAULT_BUDGET,
    EqualityResult,
    RewriteBudget,
    canonical_form,
    sphere,
    words_equal,
)
from .words import Word, invert

_J4 = j4_presentation()
_J4P = j4prime_presentation()
_ID4 = Permutation.identity(4)
_FULL_REVERSAL = Permutation((4, 3, 2, 1))


def mirror_word(w: Word) -> Word:
    """Letterwise mirror relabeling (conjugation by the full reversal)."""
    return Word(w.alphabet, [(mirror_generator(nm), e) for nm, e in w.letters])


def embed_with_reversal(vertex: Word, parity: int) -> Word:
    """The six-generator word vertex · s14^parity."""
    letters = [(nm, e) for nm, e in vertex.letters]
    if parity:
        letters.append(("s14", 1))
    return Word(_J4.alphabet, letters)


@dataclass(frozen=True)
class PureElement:
    word: Word  # spelling over all six generators
    j4p_form: Word  # canonical five-generator component
    parity: int  # 1 when a trailing full reversal is present

    @classmethod
    def from_word(cls, w: Word, budget: RewriteBudget = DEFAULT_BUDGET) -> "PureElement":
        if project_to_symmetric(w, 4) != _ID4:
            raise ValueError(f"{w} is not pure: nontrivial strand permutation")
        j4p_raw, parity = push_s14_right(w)
        return cls(w, canonical_form(j4p_raw, _J4P, budget), parity)

    @classmethod
    def from_vertex(
        cls, vertex: Word, parity: int, budget: RewriteBudget = DEFAULT_BUDGET
    ) -> "PureElement":
        word = embed_with_reversal(vertex, parity)
        if project_to_symmetric(word, 4) != _ID4:
            raise ValueError(
                f"{vertex} with reversal parity {parity} is not pure"
            )
        return cls(word, canonical_form(vertex, _J4P, budget), parity)

    @classmethod
    def identity(cls) -> "PureElement":
        return cls(Word(_J4.alphabet, ()), Word(_J4P.alphabet, ()), 0)

    @property
    def is_identity(self) -> bool:
        return self.parity == 0 and len(self.j4p_form) == 0

    def __mul__(self, other: "PureElement") -> "PureElement":
        return self.compose(other)

    def compose(
        self, other: "PureElement", budget: RewriteBudget = DEFAULT_BUDGET
    ) -> "PureElement":
        moved = mirror_word(other.j4p_form) if self.parity else other.j4p_form
        return PureElement(
            self.word * other.word,
            canonical_form(self.j4p_form * moved, _J4P, budget),
            (self.parity + other.parity) % 2,
        )

    def inverse(self, budget: RewriteBudget = DEFAULT_BUDGET) -> "PureElement":
        # (v · s14^p)^-1 = mirror^p(v^-1) · s14^p
        j4p_inv = invert(self.j4p_form)
        if self.parity:
            j4p_inv = mirror_word(j4p_inv)
        return PureElement(
            invert(self.word),
            canonical_form(j4p_inv, _J4P, budget),
            self.parity,
        )

    def certify_split(self, budget: RewriteBudget = DEFAULT_BUDGET) -> EqualityResult:
        """Certificate that the stored spelling equals the split form."""
        return words_equal(
            self.word,
            embed_with_reversal(self.j4p_form, self.parity),
            _J4,
            budget,
            certificate=True,
        )


def gamma(
    g: PureElement, h: Word, budget: RewriteBudget = DEFAULT_BUDGET
) -> Word:
    """Image of the vertex h under the pure element g."""
    moved = mirror_word(h) if g.parity else h
    return canonical_form(g.j4p_form * moved, _J4P, budget)


def orbit_point(g: PureElement, budget: RewriteBudget = DEFAULT_BUDGET) -> Word:
    """Image of the identity vertex under g."""
    return gamma(g, Word(_J4P.alphabet, ()), budget)


# translation generators of the pure subgroup: five-generator component
# plus reversal parity; three are reversal-free, the other seven carry
# a trailing full reversal
GENERATOR_TABLE: Dict[str, tuple] = {
    "g1": ("s13 s24 s12 s34", 1),
    "g2": ("s13 s24 s13 s24", 0),
    "g3": ("s13 s34 s23 s12", 1),
    "g4": ("s13 s34 s13 s23", 1),
    "g5": ("s23 s12 s23 s13", 0),
    "g6": ("s23 s12 s24 s12", 1),
    "g7": ("s23 s34 s13 s34", 1),
    "g8": ("s24 s34 s23 s34", 0),
    "g9": ("s24 s12 s23 s34", 1),
    "g10": ("s24 s23 s13 s34", 1),
}

GENERATOR_NAMES = tuple(GENERATOR_TABLE)


def standard_generators(budget: RewriteBudget = DEFAULT_BUDGET) -> Dict[str, PureElement]:
    out = {}
    for name, (text, parity) in GENERATOR_TABLE.items():
        out[name] = PureElement.from_vertex(_J4P.word(text), parity, budget)
    return out


def standard_generator(name: str, budget: RewriteBudget = DEFAULT_BUDGET) -> PureElement:
    base = name[:-3] if name.endswith("^-1") else name
    if base not in GENERATOR_TABLE:
        raise KeyError(f"unknown pure generator {name!r}")
    text, parity = GENERATOR_TABLE[base]
    g = PureElement.from_vertex(_J4P.word(text), parity, budget)
    return g.inverse(budget) if base != name else g


def pure_elements_within(
    max_dist: int, budget: RewriteBudget = DEFAULT_BUDGET
) -> List[PureElement]:
    """Nontrivial pure elements whose orbit point lies within max_dist
    of the identity vertex, via the central-image filter on spheres."""
    if max_dist < 0:
        raise ValueError("max_dist must be >= 0")
    if max_dist > 4:
        raise ValueError(
            "enumeration is supported up to distance 4; odd distances "
            "are excluded by the parity law and larger even ones are "
            "outside the verified budget"
        )
    found: List[PureElement] = []
    for L in range(1, max_dist + 1):
        for v in sphere(_J4P, L, budget):
            p = project_to_symmetric(v, 4)
            if p == _ID4:
                found.append(PureElement.from_vertex(v, 0, budget))
            elif p == _FULL_REVERSAL:
                found.append(PureElement.from_vertex(v, 1, budget))
    return found
