import random
from fractions import Fraction

import pytest

from confspace.polyring import (
    BinaryForm,
    MultiPoly,
    bareiss_det,
    discriminant_int,
    discriminant_monic,
    discriminant_projective,
    poly_eval,
    resultant,
    resultant_int,
    sylvester_matrix,
)
from oracles import cofactor_det, eval_terms, poly_gcd_degree

X, Y = MultiPoly.var("x"), MultiPoly.var("y")


def rand_poly(rng, nvars=3, nterms=4, deg=3, coeff=9):
    terms = {}
    for _ in range(nterms):
        mono = tuple(
            sorted(
                (("v%d" % rng.randint(0, nvars - 1)), rng.randint(1, deg))
                for _ in range(rng.randint(0, 2))
            )
        )
        mono = tuple((v, e) for v, e in dict(mono).items())
        terms[mono] = terms.get(mono, 0) + rng.randint(-coeff, coeff)
    return MultiPoly(terms)


def test_eval_zero_polynomial():
    assert poly_eval(MultiPoly.zero(), {"x": 5}) == 0


def test_eval_direct():
    assert poly_eval(X ** 2 - Y, {"x": 3, "y": 2}) == 7


def test_eval_unassigned_variable_named():
    with pytest.raises(ValueError) as err:
        poly_eval(X ** 2 - Y, {"x": 1})
    assert "y" in str(err.value)


def test_eval_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        f, g = rand_poly(rng), rand_poly(rng)
        point = {"v%d" % i: Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                 for i in range(3)}
        assert poly_eval(f * g, point) == eval_terms(f, point) * eval_terms(
            g, point)
        assert poly_eval(f + g, point) == eval_terms(f, point) + eval_terms(
            g, point)


def test_ring_laws_on_random_triples():
    rng = random.Random(5)
    for _ in range(40):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_canonical_form():
    rng = random.Random(17)
    for _ in range(30):
        p = rand_poly(rng)
        assert (p - p).is_zero()
        assert (p - p).terms == {}
        q = MultiPoly(dict(p.terms))
        assert p == q and hash(p) == hash(q)
        assert p.sorted_terms() == q.sorted_terms()


def test_identity_determinant():
    mat = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    assert bareiss_det(mat) == 1


def test_two_by_two_determinant():
    a, b, c, d = (MultiPoly.var(v) for v in "abcd")
    assert bareiss_det([[a, b], [c, d]]) == a * d - b * c


def test_bareiss_matches_cofactor_random_integers():
    rng = random.Random(23)
    for _ in range(15):
        m = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        assert bareiss_det(m) == cofactor_det(m)


def test_bareiss_matches_cofactor_linear_entries():
    rng = random.Random(29)
    vs = [MultiPoly.var(v) for v in "abc"]
    for size in (2, 3, 4, 5):
        for _ in range(4):
            m = [
                [
                    MultiPoly.const(rng.randint(-3, 3))
                    + rng.choice(vs) * rng.randint(-2, 2)
                    for _ in range(size)
                ]
                for _ in range(size)
            ]
            assert bareiss_det(m) == cofactor_det(m)


def test_bareiss_rejects_non_square():
    with pytest.raises(ValueError):
        bareiss_det([[1, 2, 3], [4, 5, 6]])


def test_monic_discriminant_degree_two():
    # hand expansion of the 3-by-3 matrix fixes the sign
    w1, w2 = MultiPoly.var("w1"), MultiPoly.var("w2")
    assert discriminant_monic(2) == 4 * w2 - w1 ** 2


def test_discriminant_rejects_low_degree():
    with pytest.raises(ValueError):
        discriminant_monic(1)
    with pytest.raises(ValueError):
        discriminant_projective(0)


def test_projective_discriminant_homogeneous():
    for n in range(2, 7):
        D = discriminant_projective(n)
        assert D.is_homogeneous(2 * (n - 1))


def test_projective_restricts_to_monic():
    for n in range(2, 6):
        D = discriminant_projective(n)
        subs = {"z0": MultiPoly.one()}
        subs.update({"z%d" % i: MultiPoly.var("w%d" % i)
                     for i in range(1, n + 1)})
        assert D.substitute(subs) == discriminant_monic(n)


def test_full_sylvester_carries_leading_factor():
    # with the leading coefficient kept in the first column the
    # determinant picks up exactly one factor of it
    for n in (2, 3, 4):
        zs = [MultiPoly.var("z%d" % i) for i in range(n + 1)]
        deriv = [zs[i] * (n - i) for i in range(n)]
        full = bareiss_det(sylvester_matrix(zs, deriv))
        assert full == zs[0] * discriminant_projective(n)


def test_monic_scaling_action():
    # rescaling the roots rescales the discriminant isobarically
    t = MultiPoly.var("t")
    for n in (3, 4, 5):
        d = discriminant_monic(n)
        scaled = d.substitute({
            "w%d" % i: MultiPoly.var("w%d" % i) * t ** i
            for i in range(1, n + 1)
        })
        assert scaled == t ** (n * (n - 1)) * d


def test_resultant_linear():
    a, b = MultiPoly.var("a"), MultiPoly.var("b")
    res = resultant([MultiPoly.one(), -a], [MultiPoly.one(), -b])
    assert res == a - b or res == b - a


def test_resultant_of_poly_with_itself_vanishes():
    rng = random.Random(3)
    for _ in range(5):
        coeffs = [MultiPoly.const(rng.randint(1, 5))] + [
            MultiPoly.const(rng.randint(-5, 5)) for _ in range(3)
        ]
        assert bareiss_det(sylvester_matrix(coeffs, coeffs)) == 0
        assert resultant(coeffs, coeffs) == 0


def test_resultant_rejects_zero_input():
    with pytest.raises(ValueError):
        resultant([MultiPoly.zero()], [MultiPoly.one(), MultiPoly.one()])


def test_resultant_int_matches_sylvester():
    rng = random.Random(41)
    for _ in range(300):
        n = rng.randint(1, 7)
        m = rng.randint(1, 7)
        f = [rng.randint(-9, 9) for _ in range(n + 1)]
        g = [rng.randint(-9, 9) for _ in range(m + 1)]
        if f[0] == 0:
            f[0] = 1
        if g[0] == 0:
            g[0] = 1
        assert resultant_int(f, g) == bareiss_det(sylvester_matrix(f, g))


def test_discriminant_int_matches_symbolic():
    rng = random.Random(43)
    for _ in range(50):
        n = rng.randint(2, 5)
        coeffs = [rng.randint(-6, 6) for _ in range(n + 1)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = 1
        D = discriminant_projective(n)
        point = {"z%d" % i: coeffs[i] for i in range(n + 1)}
        assert discriminant_int(coeffs) == poly_eval(D, point)


def test_squarefree_detection_against_gcd():
    rng = random.Random(47)
    checked = 0
    while checked < 100:
        n = rng.randint(2, 6)
        coeffs = [1] + [rng.randint(-4, 4) for _ in range(n)]
        deriv = [(n - i) * coeffs[i] for i in range(n)]
        d_val = discriminant_int(coeffs)
        gcd_deg = poly_gcd_degree(coeffs, deriv)
        assert (d_val != 0) == (gcd_deg == 0)
        checked += 1


def test_exact_division_roundtrip():
    rng = random.Random(53)
    for _ in range(30):
        f, g = rand_poly(rng), rand_poly(rng)
        if g.is_zero():
            continue
        assert (f * g).exact_divide(g) == f


def test_exact_division_rejects_inexact():
    with pytest.raises(ValueError):
        (X ** 2 + 1).exact_divide(X + 1)


def test_binary_form_validation():
    with pytest.raises(ValueError):
        BinaryForm(2, [MultiPoly.zero()] * 3)
    with pytest.raises(ValueError):
        BinaryForm(2, [MultiPoly.one()] * 2)


def test_binary_form_product_degree():
    f = BinaryForm(2, [1, 0, -1])
    g = BinaryForm(1, [1, 1])
    assert f.multiply(g).degree == 3


def test_json_round_trip():
    rng = random.Random(59)
    for _ in range(20):
        p = rand_poly(rng)
        data = p.to_json_terms()
        assert MultiPoly.from_json_terms(data) == p
        # canonical order: graded first
        degs = [sum(e.values()) for _, e in data]
        assert degs == sorted(degs, reverse=True)
