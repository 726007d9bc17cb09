"""Cactus-group algebra: interval generators, presentations of J_n and
its length-restricted subgroups, the projection to the symmetric group,
purity tests, and the normal form that pushes the full-interval
generator of J_4 to the right.

Generator s{p}{q} reverses the positions p..q of a row of n objects.
Relations:

  * every generator squares to the identity;
  * disjoint intervals commute;
  * a reversal of [p,q] conjugates a nested reversal of [m,r] to the
    reversal of the mirrored interval [p+q-r, p+q-m].

A nesting relation and its mirror image are the same relator up to
cyclic rotation, so presentation construction deduplicates to one
stored instance per unordered pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Tuple

from .words import Alphabet, Generator, Presentation, Word, free_reduce


@dataclass(frozen=True)
class IntervalGenerator:
    p: int
    q: int

    def __post_init__(self):
        if not 1 <= self.p < self.q:
            raise ValueError(f"need 1 <= p < q, got [{self.p},{self.q}]")

    @property
    def name(self) -> str:
        if self.q <= 9:
            return f"s{self.p}{self.q}"
        return f"s{self.p}_{self.q}"

    @property
    def length(self) -> int:
        return self.q - self.p + 1


def interval_generators(n: int, lengths=None) -> Tuple[IntervalGenerator, ...]:
    """All interval generators of J_n, ordered by (p, q); optionally
    restricted to intervals whose length lies in `lengths`."""
    gens = []
    for p in range(1, n):
        for q in range(p + 1, n + 1):
            g = IntervalGenerator(p, q)
            if lengths is None or g.length in lengths:
                gens.append(g)
    return tuple(gens)


def _intervals_disjoint(a: IntervalGenerator, b: IntervalGenerator) -> bool:
    return a.q < b.p or b.q < a.p


def _nested_in(inner: IntervalGenerator, outer: IntervalGenerator) -> bool:
    return (
        outer.p <= inner.p
        and inner.q <= outer.q
        and (inner.p, inner.q) != (outer.p, outer.q)
    )


def _mirror_in(inner: IntervalGenerator, outer: IntervalGenerator) -> IntervalGenerator:
    s = outer.p + outer.q
    return IntervalGenerator(s - inner.q, s - inner.p)


def _presentation_for(gens: Tuple[IntervalGenerator, ...]) -> Presentation:
    alphabet = Alphabet(Generator(g.name, involutive=True) for g in gens)
    pool = set(gens)
    relators = []

    def w(*names):
        return Word(alphabet, [(nm, 1) for nm in names])

    for g in gens:
        relators.append(w(g.name, g.name))
    for a in gens:
        for b in gens:
            if (a.p, a.q) < (b.p, b.q) and _intervals_disjoint(a, b):
                relators.append(w(a.name, b.name, a.name, b.name))
    for outer in gens:
        for inner in gens:
            if _nested_in(inner, outer):
                mir = _mirror_in(inner, outer)
                if mir not in pool:
                    # the conjugate falls outside the generating set;
                    # the relation is not expressible here
                    continue
                # outer · inner = mirror · outer, as a 4-letter relator
                relators.append(w(outer.name, inner.name, outer.name, mir.name))
    return Presentation(alphabet, relators)


@lru_cache(maxsize=None)
def cactus_presentation(n: int) -> Presentation:
    if n < 2:
        raise ValueError("cactus groups need n >= 2")
    return _presentation_for(interval_generators(n))


@lru_cache(maxsize=None)
def _subgroup_presentation_cached(n: int, lengths: FrozenSet[int]) -> Presentation:
    return _presentation_for(interval_generators(n, lengths))


def subgroup_presentation(n: int, S: Iterable[int]) -> Presentation:
    """Presentation on the generators whose interval length lies in S,
    keeping exactly the relations among those generators."""
    S = frozenset(S)
    if not S:
        raise ValueError("S must be a nonempty subset of {2..n}")
    if not S <= set(range(2, n + 1)):
        raise ValueError(f"S must be a subset of {{2..{n}}}, got {sorted(S)}")
    return _subgroup_presentation_cached(n, S)


def j4_presentation() -> Presentation:
    return cactus_presentation(4)


def j4prime_presentation() -> Presentation:
    return subgroup_presentation(4, {2, 3})


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}, stored as the image tuple (1-based)."""

    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Composite: apply self first, then other."""
        if len(self.images) != len(other.images):
            raise ValueError("size mismatch")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def sign(self) -> int:
        seen = set()
        sign = 1
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            length = 0
            i = start
            while i not in seen:
                seen.add(i)
                i = self(i)
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def cycles(self) -> Tuple[Tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its least element,
        sorted by that element."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            i = self(start)
            while i != start:
                cyc.append(i)
                seen.add(i)
                i = self(i)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "e"
        if len(self.images) <= 9:
            return "".join("(" + "".join(str(i) for i in c) + ")" for c in cycs)
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycs)


@lru_cache(maxsize=None)
def reversal_permutation(n: int, p: int, q: int) -> Permutation:
    """The permutation sending position i to p+q-i for p <= i <= q."""
    if not 1 <= p < q <= n:
        raise ValueError(f"bad interval [{p},{q}] for n={n}")
    images = list(range(1, n + 1))
    for i in range(p, q + 1):
        images[i - 1] = p + q - i
    return Permutation(tuple(images))


def _parse_interval_name(name: str) -> Tuple[int, int]:
    body = name[1:]
    if "_" in body:
        ps, qs = body.split("_", 1)
        return int(ps), int(qs)
    return int(body[0]), int(body[1:])


def project_to_symmetric(w: Word, n: int) -> Permutation:
    """Image of a cactus word in the symmetric group; letters compose
    left to right (first letter acts first)."""
    perm = Permutation.identity(n)
    for name, _exp in w.letters:
        p, q = _parse_interval_name(name)
        perm = perm.then(reversal_permutation(n, p, q))
    return perm


def is_pure(w: Word, n: int) -> bool:
    return project_to_symmetric(w, n).is_identity()


_MIRROR4 = {"s12": "s34", "s34": "s12", "s13": "s24", "s24": "s13", "s23": "s23"}


def mirror_generator(name: str) -> str:
    """Conjugation of a J_4' generator by the full reversal s14."""
    return _MIRROR4[name]


def push_s14_right(w: Word) -> Tuple[Word, int]:
    """Rewrite a J_4 word as (word with no s14) · s14^parity.

    Single left-to-right scan: each s14 toggles a parity flag, and any
    later letter crossed by an odd number of s14's is replaced by its
    mirrored interval.  Adjacent s14 pairs cancel through the parity
    flag, so |output| + parity <= |input|.  The group element is
    unchanged (same symmetric-group image, same J_4 class).
    """
    target = j4prime_presentation().alphabet
    parity = 0
    out = []
    for name, _exp in w.letters:
        if name == "s14":
            parity ^= 1
        else:
            out.append((_MIRROR4[name] if parity else name, 1))
    return Word(target, out), parity
