"""Bounded rewriting over involutive presentations: equality oracle,
canonical forms, and geodesic spheres.

Moves are derived from the stored relators:

  * squares x·x sanction deletion or insertion of an adjacent equal
    pair (length -2 / +2);
  * each cyclic rotation y1 y2 y3 y4 of a length-4 relator sanctions
    replacing the adjacent pair (y1, y2) by (y4, y3) in place
    (length-preserving "swap").

Canonical forms come in two exact tiers.  The slack-0 tier is a
descending closure: explore the swap-closure component at the current
length, recurse through every deletion, never insert; the result is
the shortlex-least word so reachable, and it is constant on each
swap-component, which makes the memo sound.  For slack > 0 the search
additionally inserts pairs subject to an absolute length cap
(start length + slack); that reachable set is constant on rewrite
classes sharing the cap, so results are cached per (slack-0 canonical,
cap).  Equality under a budget compares these canonical forms, which
decides cap-bounded connectivity exactly; "false" therefore means
not-found-within-budget unless the symmetric-group image already
separates the words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .words import Presentation, Word
from . import cactus

PROVEN_UNEQUAL = "PROVEN-UNEQUAL"
NOT_FOUND = "NOT-FOUND-WITHIN-BUDGET"
EQUAL = "EQUAL"


class RewriteBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RewriteBudget:
    slack: int = 2
    max_states: int = 200_000

    def __post_init__(self):
        if self.slack < 0 or self.slack % 2 != 0:
            raise ValueError("slack must be a nonnegative even integer")
        if self.max_states <= 0:
            raise ValueError("max_states must be positive")


DEFAULT_BUDGET = RewriteBudget()


@dataclass(frozen=True)
class Move:
    """One rewrite step: apply `relator` at `position`.

    kind 'swap' uses a length-4 relator rotation y1 y2 y3 y4 to replace
    the pair (y1, y2) by (y4, y3); 'delete' removes an adjacent equal
    pair matching the square relator; 'insert' inserts that pair.
    """

    position: int
    relator: Word
    kind: str

    def apply(self, w: Word) -> Word:
        ls = w.letters
        pos = self.pos_check(w)
        rl = self.relator.letters
        if self.kind == "swap":
            if ls[pos : pos + 2] != rl[0:2]:
                raise ValueError(f"swap mismatch at {pos}: {w}")
            new = ls[:pos] + (rl[3], rl[2]) + ls[pos + 2 :]
        elif self.kind == "delete":
            if ls[pos : pos + 2] != rl[0:2]:
                raise ValueError(f"delete mismatch at {pos}: {w}")
            new = ls[:pos] + ls[pos + 2 :]
        elif self.kind == "insert":
            new = ls[:pos] + rl[0:2] + ls[pos:]
        else:
            raise ValueError(f"unknown move kind {self.kind!r}")
        return Word(w.alphabet, new)

    def pos_check(self, w: Word) -> int:
        limit = len(w.letters) if self.kind == "insert" else len(w.letters) - 2
        if not 0 <= self.position <= max(limit, 0):
            raise ValueError(f"move position {self.position} out of range for {w}")
        return self.position

    def inverted(self) -> "Move":
        if self.kind == "swap":
            rl = self.relator.letters
            back = Word(self.relator.alphabet, (rl[3], rl[2], rl[1], rl[0]))
            return Move(self.position, back, "swap")
        if self.kind == "delete":
            return Move(self.position, self.relator, "insert")
        return Move(self.position, self.relator, "delete")


@dataclass(frozen=True)
class EqualityCertificate:
    moves: Tuple[Move, ...]

    def replay(self, w: Word) -> Word:
        for m in self.moves:
            w = m.apply(w)
        return w

    def verify(self, w1: Word, w2: Word) -> bool:
        try:
            return self.replay(w1) == w2
        except ValueError:
            return False


@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    status: str
    certificate: Optional[EqualityCertificate] = None

    def __bool__(self) -> bool:
        return self.equal


def _tuple_key(t: Tuple[int, ...]) -> Tuple:
    return (len(t), t)


class RewriteSystem:
    """Per-presentation engine working on tuples of generator indices."""

    def __init__(self, P: Presentation):
        alphabet = P.alphabet
        if not all(g.involutive for g in alphabet):
            raise ValueError("rewrite layer handles involutive alphabets only")
        self.presentation = P
        self.alphabet = alphabet
        self.n = len(alphabet)
        self.names = alphabet.names()
        # squares present as stored relators, per generator index
        self.squares = set()
        # (a, b) -> tuple of ((c, d), rotation-as-index-tuple)
        self.pair_map: Dict[Tuple[int, int], Tuple] = {}
        pair_map: Dict[Tuple[int, int], List] = {}
        for r in P.relators:
            idx = tuple(alphabet.index(nm) for nm, _ in r.letters)
            if len(idx) == 2:
                if idx[0] != idx[1]:
                    raise ValueError(f"unexpected length-2 relator {r}")
                self.squares.add(idx[0])
                continue
            if len(idx) != 4:
                raise ValueError(
                    f"rewrite layer expects relators of length 2 or 4, got {r}"
                )
            rots = {idx[i:] + idx[:i] for i in range(4)}
            for rot in rots:
                if rot[::-1] not in rots:
                    raise ValueError(f"relator {r} is not reversal-closed")
                pair_map.setdefault((rot[0], rot[1]), []).append(
                    ((rot[3], rot[2]), rot)
                )
        self.pair_map = {k: tuple(v) for k, v in pair_map.items()}
        if len(self.squares) != self.n:
            raise ValueError("every generator needs its square relator")
        # symmetric-group projection, if the names parse as intervals
        self.sym_n: Optional[int] = None
        try:
            bounds = [cactus._parse_interval_name(nm) for nm in self.names]
            self.sym_n = max(q for _, q in bounds)
            self._gen_perms = [
                cactus.reversal_permutation(self.sym_n, p, q) for p, q in bounds
            ]
        except (ValueError, IndexError):
            self._gen_perms = []
        self._dcanon: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        self._xcanon: Dict[Tuple, Tuple[int, ...]] = {}
        self._spheres: Dict[Tuple[int, int], Tuple] = {}

    # -- encoding ---------------------------------------------------------

    def encode(self, w: Word) -> Tuple[int, ...]:
        if w.alphabet != self.alphabet:
            raise ValueError("word over a different alphabet")
        return tuple(self.alphabet.index(nm) for nm, _ in w.letters)

    def decode(self, t: Sequence[int]) -> Word:
        return Word(self.alphabet, [(self.names[i], 1) for i in t])

    def project(self, t: Sequence[int]) -> cactus.Permutation:
        perm = cactus.Permutation.identity(self.sym_n)
        for i in t:
            perm = perm.then(self._gen_perms[i])
        return perm

    # -- raw moves --------------------------------------------------------

    def swap_neighbors(self, t):
        for pos in range(len(t) - 1):
            entries = self.pair_map.get((t[pos], t[pos + 1]))
            if entries:
                for (c, d), _rot in entries:
                    yield t[:pos] + (c, d) + t[pos + 2 :]

    def delete_neighbors(self, t):
        for pos in range(len(t) - 1):
            if t[pos] == t[pos + 1]:
                yield t[:pos] + t[pos + 2 :]

    def insert_neighbors(self, t):
        for pos in range(len(t) + 1):
            for g in range(self.n):
                yield t[:pos] + (g, g) + t[pos:]

    def moves_from(self, t, allow_insert: bool):
        """(neighbor, move descriptor) pairs; descriptors are
        (kind, position, payload) with payload the rotation for swaps
        or the generator index for delete/insert."""
        for pos in range(len(t) - 1):
            entries = self.pair_map.get((t[pos], t[pos + 1]))
            if entries:
                for (c, d), rot in entries:
                    yield t[:pos] + (c, d) + t[pos + 2 :], ("swap", pos, rot)
            if t[pos] == t[pos + 1]:
                yield t[:pos] + t[pos + 2 :], ("delete", pos, t[pos])
        if allow_insert:
            for pos in range(len(t) + 1):
                for g in range(self.n):
                    yield t[:pos] + (g, g) + t[pos:], ("insert", pos, g)

    def descriptor_to_move(self, desc) -> Move:
        kind, pos, payload = desc
        if kind == "swap":
            rel = self.decode(payload)
        else:
            rel = self.decode((payload, payload))
        return Move(pos, rel, kind)

    # -- canonical forms --------------------------------------------------

    def dcanon(self, t: Tuple[int, ...], counter: Optional[List[int]] = None,
               max_states: int = DEFAULT_BUDGET.max_states) -> Tuple[int, ...]:
        """Slack-0 canonical form: shortlex-least word reachable by
        swaps and deletions (descending closure)."""
        cached = self._dcanon.get(t)
        if cached is not None:
            return cached
        if counter is None:
            counter = [0]
        comp = {t}
        stack = [t]
        children = set()
        hit = None
        while stack and hit is None:
            x = stack.pop()
            counter[0] += 1
            if counter[0] > max_states:
                raise RewriteBudgetExceeded(
                    f"canonical form exceeded {max_states} states"
                )
            for y in self.swap_neighbors(x):
                if y not in comp:
                    comp.add(y)
                    cached = self._dcanon.get(y)
                    if cached is not None:
                        hit = cached
                        break
                    stack.append(y)
            for y in self.delete_neighbors(x):
                children.add(y)
        if hit is not None:
            best = hit
        else:
            best = min(comp)
            for ch in children:
                v = self.dcanon(ch, counter, max_states)
                if _tuple_key(v) < _tuple_key(best):
                    best = v
        for x in comp:
            self._dcanon[x] = best
        return best

    def xcanon(self, t: Tuple[int, ...], cap: int,
               max_states: int = DEFAULT_BUDGET.max_states) -> Tuple[int, ...]:
        """Shortlex-least word reachable with intermediate length <= cap.

        The reachable set under an absolute cap is the same from every
        member of the class that fits under the cap, so the value is
        cached per (slack-0 canonical, cap)."""
        c0 = self.dcanon(t, max_states=max_states)
        key = (c0, cap)
        cached = self._xcanon.get(key)
        if cached is not None:
            return cached
        best = c0
        visited = {c0}
        queue = deque([c0])
        count = 0
        while queue:
            x = queue.popleft()
            count += 1
            if count > max_states:
                raise RewriteBudgetExceeded(
                    f"canonical form exceeded {max_states} states at cap {cap}"
                )
            neighbors = list(self.swap_neighbors(x))
            neighbors.extend(self.delete_neighbors(x))
            if len(x) + 2 <= cap:
                neighbors.extend(self.insert_neighbors(x))
            for y in neighbors:
                if y not in visited:
                    visited.add(y)
                    queue.append(y)
                    if _tuple_key(y) < _tuple_key(best):
                        best = y
        self._xcanon[key] = best
        return best

    def canonical(self, t: Tuple[int, ...], budget: RewriteBudget) -> Tuple[int, ...]:
        if budget.slack == 0:
            return self.dcanon(t, max_states=budget.max_states)
        return self.xcanon(t, len(t) + budget.slack, budget.max_states)

    # -- paths and certificates ------------------------------------------

    def find_path(self, t1, t2, cap: int, max_states: int):
        """Moves connecting t1 to t2 with intermediate length <= cap,
        by bidirectional BFS; None if the budget runs out first."""
        if t1 == t2:
            return []
        sides = (
            {t1: None},  # state -> (parent, descriptor)
            {t2: None},
        )
        queues = (deque([t1]), deque([t2]))
        count = 0
        meet = None
        while (queues[0] or queues[1]) and meet is None:
            side = 0 if len(queues[0]) <= len(queues[1]) and queues[0] else 1
            frontier = queues[side]
            for _ in range(len(frontier)):
                x = frontier.popleft()
                count += 1
                if count > max_states:
                    return None
                for y, desc in self.moves_from(x, allow_insert=True):
                    if len(y) > cap or y in sides[side]:
                        continue
                    sides[side][y] = (x, desc)
                    frontier.append(y)
                    if y in sides[1 - side]:
                        meet = y
                        break
                if meet is not None:
                    break
        if meet is None:
            return None

        def trail(side_map, state):
            moves = []
            while side_map[state] is not None:
                parent, desc = side_map[state]
                moves.append(desc)
                state = parent
            moves.reverse()
            return moves

        forward = [self.descriptor_to_move(d) for d in trail(sides[0], meet)]
        backward = [self.descriptor_to_move(d) for d in trail(sides[1], meet)]
        return forward + [m.inverted() for m in reversed(backward)]


_SYSTEMS: Dict[Presentation, RewriteSystem] = {}


def system_for(P: Presentation) -> RewriteSystem:
    sys = _SYSTEMS.get(P)
    if sys is None:
        sys = RewriteSystem(P)
        _SYSTEMS[P] = sys
    return sys


def rewrite_neighbors(w: Word, P: Presentation, slack: int = DEFAULT_BUDGET.slack):
    """All words one move away: swaps, pair deletions, and (when slack
    allows a +2 excursion) pair insertions."""
    sys = system_for(P)
    t = sys.encode(w)
    out = set()
    for y, _desc in sys.moves_from(t, allow_insert=slack >= 2):
        if y != t:
            out.add(sys.decode(y))
    return out


def words_equal(
    w1: Word,
    w2: Word,
    P: Presentation,
    budget: RewriteBudget = DEFAULT_BUDGET,
    certificate: bool = False,
) -> EqualityResult:
    """Budgeted equality in the presented group.

    True verdicts are sound (a rewrite path exists under the budget's
    length cap); false verdicts are PROVEN-UNEQUAL when the
    symmetric-group projection differs, otherwise
    NOT-FOUND-WITHIN-BUDGET.
    """
    sys = system_for(P)
    t1, t2 = sys.encode(w1), sys.encode(w2)
    if sys.sym_n is not None and sys.project(t1).images != sys.project(t2).images:
        return EqualityResult(False, PROVEN_UNEQUAL)
    try:
        c1 = sys.dcanon(t1, max_states=budget.max_states)
        c2 = sys.dcanon(t2, max_states=budget.max_states)
        equal = c1 == c2
        if not equal and budget.slack > 0:
            cap = max(len(t1), len(t2)) + budget.slack
            equal = sys.xcanon(t1, cap, budget.max_states) == sys.xcanon(
                t2, cap, budget.max_states
            )
    except RewriteBudgetExceeded:
        return EqualityResult(False, NOT_FOUND)
    if not equal:
        return EqualityResult(False, NOT_FOUND)
    if not certificate:
        return EqualityResult(True, EQUAL)
    cap = max(len(t1), len(t2)) + budget.slack
    path = sys.find_path(t1, t2, cap, budget.max_states)
    if path is None:
        return EqualityResult(True, EQUAL, None)
    cert = EqualityCertificate(tuple(path))
    if not cert.verify(w1, w2):
        raise AssertionError("internal error: certificate failed to replay")
    return EqualityResult(True, EQUAL, cert)


def canonical_form(w: Word, P: Presentation, budget: RewriteBudget = DEFAULT_BUDGET) -> Word:
    sys = system_for(P)
    return sys.decode(sys.canonical(sys.encode(w), budget))


def sphere(P: Presentation, L: int, budget: RewriteBudget = DEFAULT_BUDGET):
    """Canonical representatives of the elements of geodesic length
    exactly L, sorted shortlex."""
    if L < 0:
        raise ValueError("L must be >= 0")
    sys = system_for(P)
    key = (budget.slack, L)
    cached = sys._spheres.get(key)
    if cached is None:
        if L == 0:
            reps = ((),)
        else:
            prev = sphere(P, L - 1, budget)
            found = set()
            for w in prev:
                t = sys.encode(w)
                for g in range(sys.n):
                    c = sys.canonical(t + (g,), budget)
                    if len(c) == L:
                        found.add(c)
            reps = tuple(sorted(found, key=_tuple_key))
        sys._spheres[key] = reps
        cached = reps
    return [sys.decode(t) for t in cached]


def ball_counts(P: Presentation, radius: int, budget: RewriteBudget = DEFAULT_BUDGET):
    return [len(sphere(P, L, budget)) for L in range(radius + 1)]
