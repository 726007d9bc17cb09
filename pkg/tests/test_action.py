import random

import pytest

from cactus45 import (
    Permutation,
    RewriteBudget,
    canonical_form,
    invert,
    j4_presentation,
    j4prime_presentation,
    sphere,
)
from cactus45.action import (
    GENERATOR_TABLE,
    PureElement,
    embed_with_reversal,
    gamma,
    mirror_word,
    orbit_point,
    pure_elements_within,
    standard_generator,
    standard_generators,
)

from fixtures import A_WORDS, G_DEF, G_INV_DEF

J4 = j4_presentation()
P = j4prime_presentation()
B0 = RewriteBudget(slack=0)


def w(text):
    return P.word(text)


def a_canon(i):
    return canonical_form(w(A_WORDS[i]), P)


@pytest.fixture(scope="module")
def gens():
    return standard_generators()


@pytest.fixture(scope="module")
def all_twenty(gens):
    out = dict(gens)
    for name, g in gens.items():
        out[name + "^-1"] = g.inverse()
    return out


def test_gamma_identity_acts_trivially():
    e = PureElement.identity()
    for h in sphere(P, 2):
        assert gamma(e, h) == h


def test_gamma_example_g1(gens):
    assert gamma(gens["g1"], w("s34 s12")) == w("s13 s24")


def test_orbit_points_match_table(gens):
    for name, (idx, _parity) in G_DEF.items():
        assert orbit_point(gens[name]) == a_canon(idx)
    assert orbit_point(PureElement.identity()) == w("e")


def test_generator_parities(gens):
    for name, (_idx, parity) in G_DEF.items():
        assert gens[name].parity == parity


def test_inverse_generators_match_table(all_twenty):
    for name, (idx, parity) in G_INV_DEF.items():
        ginv = all_twenty[name + "^-1"]
        assert ginv.parity == parity
        assert ginv.j4p_form == a_canon(idx)
        assert standard_generator(name + "^-1").j4p_form == a_canon(idx)


def test_unknown_generator_name():
    with pytest.raises(KeyError):
        standard_generator("g11")


def test_split_form_certified(gens):
    for name in ("g1", "g2", "g9"):
        res = gens[name].certify_split()
        assert res.equal and res.certificate is not None


def test_from_word_roundtrip(gens):
    raw = J4.word("s13 s24 s12 s34 s14")
    g = PureElement.from_word(raw)
    assert g.j4p_form == gens["g1"].j4p_form
    assert g.parity == 1


def test_from_word_rejects_impure():
    with pytest.raises(ValueError):
        PureElement.from_word(J4.word("s12"))
    with pytest.raises(ValueError):
        PureElement.from_vertex(w(A_WORDS[1]), 0)


def test_mirror_word_involution():
    rng = random.Random(11)
    names = [g.name for g in P.alphabet]
    for _ in range(20):
        word = Word_from(names, rng)
        assert mirror_word(mirror_word(word)) == word


def Word_from(names, rng):
    from cactus45 import Word

    return Word(P.alphabet, [(rng.choice(names), 1) for _ in range(rng.randrange(0, 8))])


def test_pure_enumeration_small():
    assert pure_elements_within(0) == []
    assert pure_elements_within(3) == []


def test_pure_enumeration_bounds():
    with pytest.raises(ValueError):
        pure_elements_within(5)
    with pytest.raises(ValueError):
        pure_elements_within(-1)


def test_pure_enumeration_is_the_twenty(all_twenty):
    got = {(g.j4p_form, g.parity) for g in pure_elements_within(4)}
    expected = {(g.j4p_form, g.parity) for g in all_twenty.values()}
    assert len(got) == 20
    assert got == expected


def test_orbit_distance_parity(all_twenty):
    for g in all_twenty.values():
        assert len(orbit_point(g, B0)) % 2 == 0
    rng = random.Random(23)
    items = list(all_twenty.values())
    for _ in range(12):
        prod = rng.choice(items).compose(rng.choice(items), B0)
        assert len(prod.j4p_form) % 2 == 0


def test_compose_inverse_is_identity(all_twenty):
    for g in all_twenty.values():
        assert g.compose(g.inverse(B0), B0).is_identity
        assert g.inverse(B0).compose(g, B0).is_identity


def test_action_law(all_twenty):
    items = list(all_twenty.values())
    rng = random.Random(5)
    pairs = [(rng.choice(items), rng.choice(items)) for _ in range(40)]
    hs = sphere(P, 2)
    for g, gp in pairs:
        prod = g.compose(gp, B0)
        for h in hs:
            assert gamma(prod, h, B0) == gamma(g, gamma(gp, h, B0), B0)


def test_action_is_isometric(all_twenty):
    rng = random.Random(7)
    ball = [v for L in range(3) for v in sphere(P, L)]

    def dist(u, v):
        return len(canonical_form(invert(u) * v, P, B0))

    for g in all_twenty.values():
        for _ in range(6):
            h1, h2 = rng.choice(ball), rng.choice(ball)
            assert dist(h1, h2) == dist(gamma(g, h1, B0), gamma(g, h2, B0))


def test_action_is_free_on_vertices(all_twenty):
    ball = [v for L in range(4) for v in sphere(P, L)]
    for g in all_twenty.values():
        for h in ball:
            assert gamma(g, h, B0) != h


def test_parity_of_pi_images():
    full = Permutation((4, 3, 2, 1))
    for g in pure_elements_within(4):
        from cactus45 import project_to_symmetric

        img = project_to_symmetric(g.j4p_form, 4)
        assert img == (full if g.parity else Permutation.identity(4))
