import math
import random

import pytest

from schur_ed.covers import (
    CocycleInconsistency,
    CoverElem,
    CoverSpec,
    FiniteGroupTable,
    SizeBoundExceeded,
    alt_cover_subgroup,
    center,
    cocycle,
    conjugacy_classes,
    cyclic_table,
    generalized_quaternion_table,
    get_cover,
    group_from_spec_json,
    in_alt_cover,
    inv,
    iso_small,
    mul,
    preimage_subgroup,
    verify_presentation,
)
from schur_ed.perms import (
    adjacent_transposition,
    canonical_word,
    compose,
    from_cycles,
    identity_perm,
    inversions,
    parity,
    perm_from_word,
    right_multiply_adjacent,
    sylow2_alt_generators,
    sylow2_sym_generators,
)

from oracles import compose_naive, nu2_factorial


# ---------------------------------------------------------------------------
# canonical words
# ---------------------------------------------------------------------------

def test_canonical_word_examples():
    assert canonical_word(identity_perm(5)) == []
    assert canonical_word(adjacent_transposition(5, 1)) == [1]
    w = canonical_word(from_cycles(3, [(1, 3)]))
    assert len(w) == 3
    assert perm_from_word(3, w) == from_cycles(3, [(1, 3)])


def test_canonical_word_random_roundtrip():
    rng = random.Random(0)
    for n in (4, 6, 9):
        for _ in range(300):
            img = list(range(1, n + 1))
            rng.shuffle(img)
            p = tuple(img)
            w = canonical_word(p)
            assert perm_from_word(n, w) == p
            assert len(w) == inversions(p)
            # suffix property: dropping the last letter is canonical again
            if w:
                parent = right_multiply_adjacent(p, w[-1])
                assert canonical_word(parent) == w[:-1]


def test_compose_matches_naive_oracle():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(2, 8)
        a = list(range(1, n + 1))
        b = list(range(1, n + 1))
        rng.shuffle(a)
        rng.shuffle(b)
        assert compose(tuple(a), tuple(b)) == compose_naive(tuple(a), tuple(b))


# ---------------------------------------------------------------------------
# cocycle and cover arithmetic
# ---------------------------------------------------------------------------

def test_cocycle_normalized():
    spec = CoverSpec(5, "plus")
    rng = random.Random(2)
    e = identity_perm(5)
    for _ in range(30):
        img = list(range(1, 6))
        rng.shuffle(img)
        assert cocycle(e, tuple(img), spec) == 0
        assert cocycle(tuple(img), e, spec) == 0


def test_generator_squares():
    plus = get_cover(CoverSpec(6, "plus"))
    minus = get_cover(CoverSpec(6, "minus"))
    for i in range(1, 6):
        assert plus.mul(plus.gen(i), plus.gen(i)) == plus.identity
        assert minus.mul(minus.gen(i), minus.gen(i)) == minus.z


def test_far_commutation_and_braid():
    plus = get_cover(CoverSpec(5, "plus"))
    minus = get_cover(CoverSpec(5, "minus"))
    assert plus.word(1, 3, 1, 3) == plus.z
    assert minus.word(1, 3, 1, 3) == minus.z
    assert plus.word(1, 2, 1, 2, 1, 2) == plus.identity
    assert minus.word(1, 2, 1, 2, 1, 2) == minus.z


def test_mul_inverse_and_associativity():
    spec = CoverSpec(6, "minus")
    cov = get_cover(spec)
    rng = random.Random(3)

    def random_elem():
        img = list(range(1, 7))
        rng.shuffle(img)
        return CoverElem(rng.randint(0, 1), tuple(img))

    for _ in range(120):
        g, h, k = random_elem(), random_elem(), random_elem()
        assert mul(g, inv(g, spec), spec) == cov.identity
        assert mul(mul(g, h, spec), k, spec) == mul(g, mul(h, k, spec), spec)


def test_cocycle_identity_property():
    # c(s,t) + c(st,r) = c(t,r) + c(s,tr) mod 2 on random triples
    for variant in ("plus", "minus"):
        spec = CoverSpec(6, variant)
        rng = random.Random(4)
        for _ in range(1000):
            perms = []
            for _ in range(3):
                img = list(range(1, 7))
                rng.shuffle(img)
                perms.append(tuple(img))
            s, t, r = perms
            lhs = cocycle(s, t, spec) ^ cocycle(compose(s, t), r, spec)
            rhs = cocycle(t, r, spec) ^ cocycle(s, compose(t, r), spec)
            assert lhs == rhs


def test_projection_is_homomorphism_with_kernel_z():
    spec = CoverSpec(5, "plus")
    cov = get_cover(spec)
    rng = random.Random(5)
    for _ in range(50):
        img = list(range(1, 6))
        rng.shuffle(img)
        g = CoverElem(rng.randint(0, 1), tuple(img))
        h = CoverElem(rng.randint(0, 1), tuple(img[::-1]))
        assert mul(g, h, spec).perm == compose(g.perm, h.perm)
    assert cov.z.perm == identity_perm(5)
    assert mul(cov.z, cov.z, spec) == cov.identity


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n,variant", [(4, "plus"), (4, "minus"),
                                       (5, "plus"), (5, "minus")])
def test_verify_presentation_small(n, variant):
    report = verify_presentation(CoverSpec(n, variant))
    assert report.all_ok, report.failures()
    assert report.order == 2 * math.factorial(n)
    assert report.order_method == "closure"


def test_verify_presentation_transversal():
    for n in (9, 11, 12):
        report = verify_presentation(CoverSpec(n, "minus"))
        assert report.all_ok
        assert report.order == 2 * math.factorial(n)
        assert report.order_method == "transversal"


def test_preimage_order_formula(zoo):
    # |preimage of Sylow_2(S_n)| = 2^(n - s + 1), s = popcount(n)
    for n in (6, 10, 12):
        table, _ = zoo.sylow_cover(n, "plus", "sym")
        s = n.bit_count()
        assert table.order == 2 ** (n - s + 1)


def test_fault_injection_reports_failure():
    spec = CoverSpec(4, "plus")
    cov = get_cover(spec)

    def bad_mul(g, h):
        out = cov.mul(g, h)
        # flip the central bit whenever the right factor moves point 1
        if h.perm[0] != 1:
            out = CoverElem(out.eps ^ 1, out.perm)
        return out

    report = verify_presentation(spec, mul_fn=bad_mul)
    assert not report.all_ok
    assert report.failures()


def test_cocycle_abort_on_corrupt_lift():
    spec = CoverSpec(4, "plus")
    cov = get_cover(CoverSpec(4, "plus"))
    sigma = from_cycles(4, [(1, 2)])
    cov.elementary_cocycle(sigma, 2)  # warm the cache
    corrupt = dict(cov._lifts)
    # poison a cached lift so the product is neither +target nor -target
    key = right_multiply_adjacent(sigma, 2)
    masks, a, b, scale = cov._flift(key)
    cov._lifts[key] = (masks, a * 3, b, scale)
    cov._elem_bits.pop((sigma, 2))
    with pytest.raises(CocycleInconsistency):
        cov.elementary_cocycle(sigma, 2)
    cov._lifts.clear()
    cov._lifts.update(corrupt)
    cov._elem_bits.pop((sigma, 2), None)


# ---------------------------------------------------------------------------
# Sylow subgroups and preimages
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 4, 6, 8, 10, 12])
def test_sylow_sym_order(n):
    gens = sylow2_sym_generators(n)
    if n == 1:
        assert gens == []
        return
    table = FiniteGroupTable.generate(gens, compose, identity_perm(n), 1 << 18)
    assert table.order == 2 ** nu2_factorial(n)


def test_sylow_4_is_dihedral_of_order_8():
    gens = sylow2_sym_generators(4)
    table = FiniteGroupTable.generate(gens, compose, identity_perm(4), 100)
    assert table.order == 8
    orders = table.element_order_multiset()
    assert orders == {1: 1, 2: 5, 4: 2}  # dihedral, not quaternion


@pytest.mark.parametrize("n", [4, 5, 6, 8, 9, 12])
def test_sylow_alt_order(n):
    gens = sylow2_alt_generators(n)
    assert all(parity(g) == 0 for g in gens)
    table = FiniteGroupTable.generate(gens, compose, identity_perm(n), 1 << 18)
    assert table.order == 2 ** (nu2_factorial(n) - 1)


def test_preimage_subgroup_orders():
    spec = CoverSpec(8, "plus")
    t = preimage_subgroup(sylow2_sym_generators(8), spec)
    assert t.order == 2 ** (nu2_factorial(8) + 1) == 256
    t2 = preimage_subgroup([], spec)
    assert t2.order == 2
    klein = sylow2_alt_generators(4)
    for variant in ("plus", "minus"):
        t3 = preimage_subgroup(klein, CoverSpec(4, variant))
        assert t3.order == 8


def test_preimage_size_bound():
    spec = CoverSpec(8, "plus")
    with pytest.raises(SizeBoundExceeded):
        preimage_subgroup(sylow2_sym_generators(8), spec, size_bound=10)


def test_alt_cover_subgroup():
    spec = CoverSpec(4, "plus")
    t = alt_cover_subgroup(spec)
    assert t.order == 24
    assert all(parity(e.perm) == 0 for e in t.elements)
    cov = get_cover(spec)
    assert in_alt_cover(cov.z)
    assert not in_alt_cover(cov.gen(1))


def test_group_from_spec_json():
    table, z = group_from_spec_json({"n": 6, "variant": "minus",
                                     "subgroup": "sylow2"})
    assert table.order == 2 ** (nu2_factorial(6) + 1)
    table, z = group_from_spec_json({"n": 4, "variant": "plus",
                                     "subgroup": "full"})
    assert table.order == 48


# ---------------------------------------------------------------------------
# centers, classes, isomorphism
# ---------------------------------------------------------------------------

def test_center_of_sylow_cover_is_z():
    spec = CoverSpec(8, "minus")
    t = preimage_subgroup(sylow2_sym_generators(8), spec)
    c = center(t)
    cov = get_cover(spec)
    assert sorted(c.elements) == sorted([cov.identity, cov.z])


def test_center_of_abelian_group_is_everything():
    t = cyclic_table(8)
    assert center(t).order == 8


def test_conjugacy_classes_small():
    t = FiniteGroupTable.generate([1], lambda a, b: (a + b) % 2, 0, 10)
    classes = conjugacy_classes(t)
    assert [len(c) for c in classes] == [1, 1]
    q8 = generalized_quaternion_table(8)
    sizes = sorted(len(c) for c in conjugacy_classes(q8))
    assert sizes == [1, 1, 2, 2, 2]


def test_conjugacy_class_count_matches_chartab(zoo):
    table, _ = zoo.sylow_cover(6, "plus", "sym")
    ct = zoo.chartab(6, "plus", "sym")
    assert len(conjugacy_classes(table)) == len(ct.degrees)


def test_iso_small():
    q8 = generalized_quaternion_table(8)
    h4 = preimage_subgroup(sylow2_alt_generators(4), CoverSpec(4, "plus"))
    assert iso_small(h4, q8)
    assert not iso_small(q8, cyclic_table(8))
    q16 = generalized_quaternion_table(16)
    h6 = preimage_subgroup(sylow2_alt_generators(6), CoverSpec(6, "plus"))
    assert iso_small(h6, q16)
    with pytest.raises(SizeBoundExceeded):
        iso_small(cyclic_table(200), cyclic_table(200))


def test_alt_cover_same_for_both_variants_small():
    # the two covers restrict to isomorphic double covers of A_4; for n = 5
    # compare order multisets (the group is past the backtracking bound)
    a_plus = alt_cover_subgroup(CoverSpec(4, "plus"))
    a_minus = alt_cover_subgroup(CoverSpec(4, "minus"))
    assert iso_small(a_plus, a_minus)
    b_plus = alt_cover_subgroup(CoverSpec(5, "plus"))
    b_minus = alt_cover_subgroup(CoverSpec(5, "minus"))
    assert (b_plus.element_order_multiset()
            == b_minus.element_order_multiset())


def test_lemma_witnesses_q8():
    for n in (4, 5):
        for variant in ("plus", "minus"):
            cov = get_cover(CoverSpec(n, variant))
            sigma = cov.word(1, 2, 3, 1, 2, 3)
            tau = cov.word(1, 3)
            assert sigma.perm == from_cycles(n, [(1, 3), (2, 4)])
            assert tau.perm == from_cycles(n, [(1, 2), (3, 4)])
            z = cov.z
            assert cov.mul(sigma, sigma) == z
            assert cov.mul(tau, tau) == z
            assert cov.mul(sigma, tau) == cov.mul(z, cov.mul(tau, sigma))
            witness = FiniteGroupTable.generate([sigma, tau], cov.mul,
                                                cov.identity, 64)
            assert witness.order == 8
            assert iso_small(witness, generalized_quaternion_table(8))


def test_lemma_witnesses_q16():
    for n in (6, 7):
        cov = get_cover(CoverSpec(n, "plus"))
        x = cov.word(1, 2, 3, 5)
        y = cov.word(1, 3)
        assert x.perm == from_cycles(n, [(1, 2, 3, 4), (5, 6)])
        assert cov.power(x, 8) == cov.identity
        assert cov.power(y, 4) == cov.identity
        assert cov.power(y, 2) == cov.power(x, 4)
        assert cov.mul(cov.mul(y, x), cov.inv(y)) == cov.inv(x)
        witness = FiniteGroupTable.generate([x, y], cov.mul, cov.identity, 64)
        assert witness.order == 16
        assert iso_small(witness, generalized_quaternion_table(16))
