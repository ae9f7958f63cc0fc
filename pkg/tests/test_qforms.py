import random
from fractions import Fraction

import pytest

from schur_ed.numth import factorize, is_prime, squarefree_part
from schur_ed.polyq import parse_poly
from schur_ed.qforms import (
    INF,
    TWO,
    BrauerClass2,
    EtaleAlgebraQ,
    Place,
    QuadFormQ,
    SquareClass,
    brauer_index,
    contains_ones,
    diagonalize_gram,
    discriminant,
    etale_discriminant,
    hasse_invariant,
    hilbert_symbol,
    is_isometric,
    is_isotropic,
    lemma_disc_one_identity,
    quaternion_class,
    random_etale_algebra,
    signature,
    splitting_tower,
    trace_form,
    witt_index,
)

from oracles import (
    companion_power_traces,
    sum_three_squares_insoluble_mod8,
    sum_three_squares_soluble_mod_p,
)


# ---------------------------------------------------------------------------
# numth support
# ---------------------------------------------------------------------------

def test_numth_basics():
    assert is_prime(2) and is_prime(97) and not is_prime(91)
    assert is_prime(2 ** 61 - 1)
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert squarefree_part(-108) == -3
    assert squarefree_part(4) == 1


def test_place_validation():
    with pytest.raises(ValueError):
        Place.finite(6)
    assert Place.finite(13).p == 13
    assert INF.is_infinite


# ---------------------------------------------------------------------------
# Hilbert symbols
# ---------------------------------------------------------------------------

def test_symbol_split_cases():
    for v in (INF, TWO, Place.finite(3), Place.finite(7)):
        for b in (2, -3, Fraction(5, 7)):
            assert hilbert_symbol(1, b, v) == 1


def test_symbol_minus_one_minus_one():
    assert hilbert_symbol(-1, -1, INF) == -1
    assert hilbert_symbol(-1, -1, TWO) == -1
    for p in (3, 5, 7, 11, 13, 17):
        assert hilbert_symbol(-1, -1, Place.finite(p)) == 1
    # local solubility witnesses computed by brute enumeration
    assert sum_three_squares_insoluble_mod8()
    for p in (3, 5, 7, 11):
        assert sum_three_squares_soluble_mod_p(p)


def test_symbol_bilinear_symmetric_hyperbolic():
    rng = random.Random(101)
    places = [INF, TWO] + [Place.finite(p) for p in (3, 5, 7, 11, 13)]
    for _ in range(1000):
        a = Fraction(rng.randint(1, 80) * rng.choice([1, -1]),
                     rng.randint(1, 12))
        b = Fraction(rng.randint(1, 80) * rng.choice([1, -1]),
                     rng.randint(1, 12))
        c = Fraction(rng.randint(1, 80) * rng.choice([1, -1]))
        v = rng.choice(places)
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
        assert (hilbert_symbol(a, b * c, v)
                == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v))
        assert hilbert_symbol(a, -a, v) == 1


def test_product_formula():
    rng = random.Random(77)
    for _ in range(1000):
        a = rng.randint(1, 500) * rng.choice([1, -1])
        b = rng.randint(1, 500) * rng.choice([1, -1])
        quaternion_class(a, b)  # even-cardinality invariant checked inside


def test_brauer_class_group_law():
    c1 = quaternion_class(-1, -1)
    assert c1 == BrauerClass2([TWO, INF])
    assert (c1 + c1).is_zero()
    assert brauer_index(c1) == 2
    assert brauer_index(BrauerClass2.zero()) == 1
    with pytest.raises(ValueError):
        BrauerClass2([INF])  # odd cardinality


# ---------------------------------------------------------------------------
# form invariants
# ---------------------------------------------------------------------------

def test_hasse_examples():
    assert hasse_invariant(QuadFormQ([1, 1, 1, 1])).is_zero()
    assert hasse_invariant(QuadFormQ([-1, -1])) == BrauerClass2([TWO, INF])


def test_hasse_unaffected_by_unit_summand():
    rng = random.Random(500)
    for _ in range(500):
        dim = rng.randint(1, 6)
        diag = [Fraction(rng.randint(1, 50) * rng.choice([1, -1]),
                         rng.randint(1, 6)) for _ in range(dim)]
        q = QuadFormQ(diag)
        assert hasse_invariant(QuadFormQ([1] + diag)) == hasse_invariant(q)


def test_discriminant_examples():
    assert discriminant(QuadFormQ([2, 2])).is_one()
    assert discriminant(QuadFormQ([1, -3])) == SquareClass(-3)
    for a in (2, -5, Fraction(3, 7)):
        assert discriminant(QuadFormQ([a, a])).is_one()
    assert discriminant(QuadFormQ([1, -3])).representative == -3


def test_signature():
    assert signature(QuadFormQ([1, -1, 2, -7, 5])) == (3, 2)


def test_isotropy_examples():
    assert is_isotropic(QuadFormQ([1, -1]))
    assert witt_index(QuadFormQ([1, -1])) == 1
    assert not is_isotropic(QuadFormQ([1, 1, 1, 1]))
    assert not is_isotropic(QuadFormQ([1, 1, 1, -7]))
    assert is_isotropic(QuadFormQ([1, 1, 1, -5]))
    assert witt_index(QuadFormQ([1, 1, -1, -1])) == 2
    assert witt_index(QuadFormQ([1, 1, 1, 1])) == 0


def test_isotropy_small_search_agreement():
    # exhaustive small search as an independent oracle on dim-3 forms
    rng = random.Random(31)
    for _ in range(40):
        diag = [rng.randint(1, 10) * rng.choice([1, -1]) for _ in range(3)]
        q = QuadFormQ(diag)
        found = False
        bound = 12
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                for z in range(-bound, bound + 1):
                    if (x, y, z) == (0, 0, 0):
                        continue
                    if diag[0] * x * x + diag[1] * y * y + diag[2] * z * z == 0:
                        found = True
        if found:
            assert is_isotropic(q), (diag, "search found a zero")
        # no assertion in the other direction: the search bound is small


def test_contains_ones():
    assert contains_ones(QuadFormQ([1, 1]), 2)
    assert not contains_ones(QuadFormQ([-1, -1]), 1)
    assert contains_ones(QuadFormQ([2, 3, 5, 30]), 0)
    with pytest.raises(ValueError):
        contains_ones(QuadFormQ([1]), 2)


def test_isometry_classification():
    assert is_isometric(QuadFormQ([2, 2]), QuadFormQ([1, 1]))
    assert not is_isometric(QuadFormQ([1, 1]), QuadFormQ([1, -1]))
    # random congruence scaling by squares preserves the class
    rng = random.Random(8)
    for _ in range(50):
        diag = [Fraction(rng.randint(1, 30) * rng.choice([1, -1]))
                for _ in range(4)]
        scaled = [d * Fraction(rng.randint(1, 9)) ** 2 for d in diag]
        assert is_isometric(QuadFormQ(diag), QuadFormQ(scaled))


def test_diagonalize_gram_congruence_invariance():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(2, 5)
        diag = [Fraction(rng.randint(1, 12) * rng.choice([1, -1]))
                for _ in range(n)]
        g = [[diag[i] if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
        # random unimodular congruence
        for _ in range(6):
            i, j = rng.sample(range(n), 2)
            c = Fraction(rng.randint(-3, 3))
            for k in range(n):
                g[i][k] += c * g[j][k]
            for k in range(n):
                g[k][i] += c * g[k][j]
        new_diag = diagonalize_gram(g)
        assert is_isometric(QuadFormQ(new_diag), QuadFormQ(diag))


def test_diagonalize_gram_rejects_singular():
    with pytest.raises(ValueError):
        diagonalize_gram([[Fraction(0), Fraction(0)],
                          [Fraction(0), Fraction(1)]])


# ---------------------------------------------------------------------------
# trace forms
# ---------------------------------------------------------------------------

def test_power_sums_against_companion_oracle():
    for text in ("x^2 - 1", "x^2 - 7", "x^3 - 2", "x^4 + x - 3"):
        f = parse_poly(text)
        from schur_ed.polyq import power_sums

        d = len(f) - 1
        assert power_sums(f, 2 * d) == companion_power_traces(f, 2 * d)


def test_trace_form_examples():
    q = trace_form(EtaleAlgebraQ.from_polynomial(parse_poly("x^2 - 1")))
    assert q.diag == (Fraction(2), Fraction(2))
    assert is_isometric(q, QuadFormQ([1, 1]))
    from schur_ed.polyq import poly

    for d in (2, 5, -3):
        q = trace_form(EtaleAlgebraQ.from_polynomial(poly([-d, 0, 1])))
        assert is_isometric(q, QuadFormQ([2, 2 * d]))
    q3 = trace_form(EtaleAlgebraQ.from_polynomial(parse_poly("x^3 - 2")))
    assert is_isometric(q3, QuadFormQ([3, 12, -3]))


def test_trace_form_rejects_non_squarefree():
    with pytest.raises(ValueError):
        EtaleAlgebraQ.from_polynomial(parse_poly("x^2 - 2x + 1"))


def test_etale_disc_examples():
    E = EtaleAlgebraQ.from_polynomial(parse_poly("x^2 - 7"))
    assert etale_discriminant(E).representative == 7
    E = EtaleAlgebraQ.from_polynomial(parse_poly("x^2 - 1"))
    assert etale_discriminant(E).is_one()
    E = EtaleAlgebraQ.from_polynomial(parse_poly("x^3 - 2"))
    assert etale_discriminant(E).representative == -3


def test_etale_disc_with_cross_terms():
    f = parse_poly("x^2 - 2")
    g = parse_poly("x^2 - 3")
    E = EtaleAlgebraQ((f, g))
    # disc = 8 * 12 * Res(f,g)^2; squarefree part 6
    assert etale_discriminant(E).representative == 6
    assert discriminant(trace_form(E)) == etale_discriminant(E)


def test_etale_rejects_common_factor():
    with pytest.raises(ValueError):
        EtaleAlgebraQ((parse_poly("x^2 - 1"), parse_poly("x - 1")))


def test_random_etale_disc_and_subform():
    rng = random.Random(6)
    for n in (4, 6, 9, 12):
        s = n.bit_count()
        for _ in range(25):
            E = random_etale_algebra(n, rng)
            assert E.dim == n
            q = trace_form(E)
            assert discriminant(q) == etale_discriminant(E)
            assert contains_ones(q, s)


# ---------------------------------------------------------------------------
# splitting towers and the disc-1 identity
# ---------------------------------------------------------------------------

def test_splitting_tower_split_form():
    rep = splitting_tower(QuadFormQ([1, 1]))
    assert rep.adjoined == [] and rep.degree == 1 and rep.all_ok
    assert rep.residual is None
    assert rep.assumes_sqrt_minus_one


def test_splitting_tower_generic_pair():
    rep = splitting_tower(QuadFormQ([3, 5]))
    assert rep.degree == 2 and rep.all_ok
    assert rep.adjoined == [Fraction(-3, 5)]


def test_splitting_tower_dim5():
    rep = splitting_tower(QuadFormQ([2, 3, 5, 7, 11]))
    assert rep.degree == 4
    assert rep.residual == Fraction(11)
    assert rep.all_ok
    assert len(rep.adjoined) == 2


def test_splitting_tower_redundant_adjunction():
    # second pair needs the same class as the first: degree stays 2
    rep = splitting_tower(QuadFormQ([3, 5, 15, 1]))
    assert rep.all_ok
    assert rep.degree == 2


def test_tower_degree_bounds_index():
    rng = random.Random(14)
    for _ in range(60):
        dim = rng.randint(1, 7)
        q = QuadFormQ([Fraction(rng.randint(1, 30) * rng.choice([1, -1]))
                       for _ in range(dim)])
        rep = splitting_tower(q)
        assert rep.degree <= 2 ** (dim // 2)
        assert brauer_index(hasse_invariant(q)) <= max(2, rep.degree) or \
            rep.degree == 1


def test_index_bound_definite_form():
    c = hasse_invariant(QuadFormQ([-1, -1, -1, -1]))
    assert brauer_index(c) <= 2 <= 2 ** (4 // 2)


def test_lemma_identity_examples():
    assert lemma_disc_one_identity(QuadFormQ([2, 2]))
    # <1> + q' with disc q' = 1 reduces to the unit-summand identity
    assert lemma_disc_one_identity(QuadFormQ([1, 3, 3]))
    with pytest.raises(ValueError):
        lemma_disc_one_identity(QuadFormQ([1, 2]))


def test_lemma_identity_random():
    rng = random.Random(15)
    for _ in range(200):
        dim = rng.randint(2, 8)
        entries = [Fraction(rng.randint(1, 40) * rng.choice([1, -1]))
                   for _ in range(dim - 1)]
        prod = Fraction(1)
        for e in entries:
            prod *= e
        entries.append(1 / prod)
        q = QuadFormQ(entries)
        assert discriminant(q).is_one()
        assert lemma_disc_one_identity(q)


def test_quadform_parse_and_json():
    q = QuadFormQ.parse("1,-1,2/3")
    assert q.diag == (Fraction(1), Fraction(-1), Fraction(2, 3))
    data = q.to_json()
    assert data["dim"] == 3 and data["witt_index"] == 1
