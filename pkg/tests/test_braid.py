import random

import pytest

from confspace.braid import (
    SPHERE,
    BraidWord,
    CapacityError,
    Perm,
    SymHom,
    alpha_word,
    are_conjugate,
    canonical_form,
    check_relations,
    doubling_hom,
    exceptional_four,
    exceptional_six,
    exponent_sum,
    full_twist_word,
    gorin_words,
    hom_from_pair,
    hom_properties,
    is_transitive,
    lattice_hom,
    mu_image,
    search_homs,
    sphere_kernel_word,
    standard_gallery,
    standard_mu,
    verify_sym_hom,
    word,
    words_equal,
)


# -- permutations -----------------------------------------------------------


def test_perm_validation():
    with pytest.raises(ValueError):
        Perm((1, 1, 3))


def test_perm_composition_order():
    # products apply the left factor first
    a = Perm.transposition(3, 1)
    b = Perm.transposition(3, 2)
    assert (a * b)(1) == 3
    assert (a * b).cycle_type() == (3,)


def test_perm_inverse_and_cycles():
    rng = random.Random(1)
    for _ in range(20):
        p = Perm(tuple(rng.sample(range(1, 8), 7)))
        assert (p * p.inverse()).is_identity()
        assert sum(len(c) for c in p.cycles()) == 7


# -- words and the canonical form -------------------------------------------


def test_word_validation():
    with pytest.raises(ValueError):
        word(3, 3)
    with pytest.raises(ValueError):
        word(3, 0)
    with pytest.raises(ValueError):
        BraidWord(1, ())


def test_parse_round_trip():
    w = BraidWord.parse(4, "1 2 -1")
    assert w.letters == (1, 2, -1)


def test_braid_relation():
    assert words_equal(word(3, 1, 2, 1), word(3, 2, 1, 2))


def test_far_commutation():
    assert words_equal(word(4, 1, 3), word(4, 3, 1))


def test_distinct_elements_detected():
    assert not words_equal(word(3, 1, 2), word(3, 2, 1))
    assert not words_equal(word(3, 1), word(3, -1))


def test_free_cancellation():
    assert words_equal(word(3, 1, -1), BraidWord(3, ()))
    assert words_equal(word(4, -2, 2, 3, -3), BraidWord(4, ()))


def test_strand_count_mismatch():
    with pytest.raises(ValueError):
        words_equal(word(3, 1), word(4, 1))


def test_gorin_relation():
    for n in (4, 5, 6):
        lhs, rhs = gorin_words(n)
        assert words_equal(lhs, rhs)
        assert exponent_sum(lhs) == exponent_sum(rhs) == 0


def test_full_twist_is_central():
    for n in (3, 4):
        c = full_twist_word(n)
        for i in range(1, n):
            assert words_equal(c * word(n, i), word(n, i) * c)


def test_canonical_form_well_defined():
    # conjugating the half twist by itself and mixed insertions
    w1 = word(4, 1, 2, 3, 1, 2, 1)  # the positive half twist
    w2 = word(4, 3, 2, 1, 3, 2, 3)
    assert words_equal(w1, w2)
    cf = canonical_form(w1)
    assert cf.infimum == 1 and cf.factors == ()


def test_full_twist_canonical_form():
    for n in (3, 4, 5):
        cf = canonical_form(full_twist_word(n))
        assert cf.infimum == 2 and cf.factors == ()


def test_single_negative_generator_canonical_form():
    cf = canonical_form(word(4, -2))
    assert cf.infimum == -1 and len(cf.factors) == 1


def test_random_words_cancel_with_inverses():
    rng = random.Random(77)
    for _ in range(100):
        n = rng.choice((3, 4, 5, 6))
        w = BraidWord(n, tuple(
            rng.choice([g for g in range(-(n - 1), n) if g])
            for _ in range(rng.randint(1, 12))))
        assert words_equal(w * w.inverse(), BraidWord(n, ()))
        assert words_equal(w.inverse() * w, BraidWord(n, ()))


_RELATORS = {
    n: (
        [[i, i + 1, i, -(i + 1), -i, -(i + 1)] for i in range(1, n - 1)]
        + [[i, j, -i, -j] for i in range(1, n) for j in range(1, n)
           if abs(i - j) >= 2]
        + [[i, -i] for i in range(1, n)]
        + [[-i, i] for i in range(1, n)]
    )
    for n in (3, 4, 5, 6)
}


def test_relator_insertion_invariance():
    rng = random.Random(99)
    for _ in range(500):
        n = rng.choice((3, 4, 5, 6))
        base = [rng.choice([g for g in range(-(n - 1), n) if g])
                for _ in range(rng.randint(0, 10))]
        relator = rng.choice(_RELATORS[n])
        pos = rng.randint(0, len(base))
        other = base[:pos] + relator + base[pos:]
        w1, w2 = BraidWord(n, tuple(base)), BraidWord(n, tuple(other))
        assert words_equal(w1, w2)
        assert exponent_sum(w1) == exponent_sum(w2)
        assert mu_image(w1) == mu_image(w2)


def test_equality_is_equivalence():
    rng = random.Random(7)
    ws = [BraidWord(4, tuple(rng.choice([1, 2, 3, -1, -2, -3])
                             for _ in range(rng.randint(0, 6))))
          for _ in range(12)]
    for a in ws:
        assert words_equal(a, a)
    for a in ws:
        for b in ws:
            assert words_equal(a, b) == words_equal(b, a)
    for a in ws:
        for b in ws:
            for c in ws:
                if words_equal(a, b) and words_equal(b, c):
                    assert words_equal(a, c)


# -- projections and sums ----------------------------------------------------


def test_mu_image_generator():
    assert mu_image(word(3, 1)) == Perm.from_cycles(3, (1, 2))


def test_mu_kills_sphere_kernel_generator():
    for n in (3, 4, 5, 6, 7):
        assert mu_image(sphere_kernel_word(n)).is_identity()


def test_mu_alpha_is_long_cycle():
    for n in range(3, 8):
        assert mu_image(alpha_word(n)).cycle_type() == (n,)


def test_exponent_sum():
    assert exponent_sum(BraidWord(3, ())) == 0
    assert exponent_sum(full_twist_word(4)) == 4 * 3
    w = word(5, 1, -2, 3, -4, 4)
    assert exponent_sum(w) == 1


# -- homomorphisms -----------------------------------------------------------


def test_mu_satisfies_artin_presentation():
    for n in range(3, 9):
        images = tuple(Perm.transposition(n, i) for i in range(1, n))
        assert verify_sym_hom(images, n, n) is not None


def test_verify_reports_violation():
    bad = (Perm.from_cycles(3, (1, 2)), Perm.identity(3))
    violation = check_relations(bad, 3, 3)
    assert violation is not None and violation[0] == "braid"
    assert verify_sym_hom(bad, 3, 3) is None
    far = (Perm.from_cycles(5, (1, 2)), Perm.identity(5),
           Perm.from_cycles(5, (1, 3)), Perm.identity(5))
    violation = check_relations(far, 5, 5)
    assert violation is not None


def test_verify_wrong_count():
    with pytest.raises(ValueError):
        check_relations((Perm.identity(3),), 4, 3)


def test_hom_from_pair_reconstructs_mu():
    for n in (4, 5, 6):
        mu = standard_mu(n)
        a = mu.apply(alpha_word(n))
        h = hom_from_pair(mu.images[0], a, n, n)
        assert h is not None and h.images == mu.images


def test_hom_from_pair_exceptional_six():
    s = Perm.from_cycles(6, (1, 2), (3, 4), (5, 6))
    a = Perm.from_cycles(6, (1, 2, 3), (4, 5))
    h = hom_from_pair(s, a, 6, 6)
    assert h is not None
    assert h.apply(alpha_word(6)) == a


def test_hom_from_pair_generic_failure():
    s = Perm.from_cycles(5, (1, 2))
    a = Perm.from_cycles(5, (1, 2, 3))
    assert hom_from_pair(s, a, 5, 5) is None


def test_hom_from_pair_output_verifies():
    rng = random.Random(15)
    found = 0
    while found < 5:
        s = Perm(tuple(rng.sample(range(1, 5), 4)))
        a = Perm(tuple(rng.sample(range(1, 5), 4)))
        h = hom_from_pair(s, a, 4, 4)
        if h is not None:
            assert verify_sym_hom(h.images, 4, 4) is not None
            found += 1


def test_sphere_presentation_gallery():
    for n in (5, 6, 7, 8):
        for which, expect in ((1, False), (2, True), (3, False)):
            h = doubling_hom(n, which)
            holds = check_relations(h.images, n, 2 * n, SPHERE) is None
            assert holds == expect


def test_doubling_hom_window_cycle():
    h = doubling_hom(7, 1)
    for i in range(1, 7):
        expected = Perm.from_cycles(
            14, (2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1))
        assert h.images[i - 1] == expected


def test_exceptional_four_bracket_notes():
    h1, h2, h3 = (exceptional_four(i) for i in (1, 2, 3))
    assert h1.images[2] == h1.images[0]
    assert h2.images[2] == h2.images[0].inverse()
    assert h3.images[2] == h3.images[0]
    assert hom_properties(h3)["image_order"] == 12


def test_lattice_hom_transitivity_matches_coprimality():
    from math import gcd
    for r in range(2, 7):
        for x in range(r):
            for y in range(r):
                h = lattice_hom(5, r, x, y)
                assert is_transitive(h) == (gcd(gcd(x, y), r) == 1)


def test_lattice_hom_never_primitive():
    for r in (2, 3):
        for n in (4, 5):
            blocks = hom_properties(lattice_hom(n, r, 1, 1))["blocks"]
            assert blocks is not None and 1 < len(blocks) < r * n


def test_standard_gallery_dispatch():
    assert standard_gallery("mu", n=5).k == 5
    assert standard_gallery("nu6").k == 6
    assert standard_gallery("nu43").k == 4
    assert standard_gallery("phi2", n=5).k == 10
    assert standard_gallery("phixy", n=4, r=2, x=1, y=0).k == 8
    with pytest.raises(ValueError):
        standard_gallery("mu")
    with pytest.raises(ValueError):
        standard_gallery("unknown")


def test_trivial_hom_properties():
    h = SymHom(4, 4, tuple(Perm.identity(4) for _ in range(3)))
    props = hom_properties(h)
    assert props["cyclic_image"] and not props["transitive"]


def test_mu_properties():
    props = hom_properties(standard_mu(5))
    assert props["transitive"]
    assert props["image_order"] == 120
    assert not props["cyclic_image"]


# -- conjugacy ---------------------------------------------------------------


def test_conjugate_witness_roundtrip():
    rng = random.Random(21)
    mu = standard_mu(5)
    for _ in range(5):
        t = Perm(tuple(rng.sample(range(1, 6), 5)))
        other = SymHom(5, 5, tuple(t.inverse() * im * t for im in mu.images))
        w = are_conjugate(mu, other)
        assert w is not None
        assert all(w.inverse() * a * w == b
                   for a, b in zip(mu.images, other.images))


def test_nonconjugate_pair():
    assert are_conjugate(standard_mu(6), exceptional_six()) is None


def test_conjugacy_cycle_type_fast_path():
    h1 = standard_mu(4)
    h2 = exceptional_four(1)
    assert h1.images[0].cycle_type() != h2.images[0].cycle_type()
    assert are_conjugate(h1, h2) is None


def test_conjugacy_dimension_guard():
    with pytest.raises(ValueError):
        are_conjugate(standard_mu(4), standard_mu(5))


# -- exhaustive search -------------------------------------------------------


def test_search_capacity_guard():
    with pytest.raises(CapacityError):
        search_homs(4, 9)


def test_search_four_four():
    classes = search_homs(4, 4)
    nct = [c for c in classes if not c["cyclic"] and c["transitive"]]
    assert len(nct) == 4
    gallery = [standard_mu(4)] + [exceptional_four(i) for i in (1, 2, 3)]
    for target in gallery:
        assert sum(
            1 for c in nct if are_conjugate(c["hom"], target) is not None
        ) == 1


def test_search_five_five():
    classes = search_homs(5, 5)
    nct = [c for c in classes if not c["cyclic"] and c["transitive"]]
    assert len(nct) == 1
    assert are_conjugate(nct[0]["hom"], standard_mu(5)) is not None


def test_search_five_four_all_cyclic():
    classes = search_homs(5, 4)
    assert classes and all(c["cyclic"] for c in classes)


def test_search_six_six():
    classes = search_homs(6, 6)
    nct = [c for c in classes if not c["cyclic"] and c["transitive"]]
    assert len(nct) == 2
    mu, nu = standard_mu(6), exceptional_six()
    assert sum(1 for c in nct
               if are_conjugate(c["hom"], mu) is not None) == 1
    assert sum(1 for c in nct
               if are_conjugate(c["hom"], nu) is not None) == 1


def test_noncyclic_images_surjective_or_alternating():
    for n in (5, 6):
        for c in search_homs(n, n):
            if not c["cyclic"]:
                assert c["surjective"]
    for c in search_homs(4, 4):
        if not c["cyclic"] and c["transitive"]:
            assert c["surjective"] or c["image_order"] == 12
