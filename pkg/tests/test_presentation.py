import random

import pytest

from solvpoly.algebra import DegreeFunction, MonomialOrder, build_algebra
from solvpoly.coeff import FieldSpec
from solvpoly.presentation import (
    FreePoly,
    OverlapFailure,
    ShapeViolation,
    Word,
    WordOrder,
    bounded_completion,
    free_divide,
    free_poly_str,
    occurrences,
    overlap_elements,
    verify_presentation,
    word_divides,
    word_str,
)

from conftest import random_poly

Q = FieldSpec("Rationals")


def wo(n, weights=None, priority=None):
    return WordOrder(DegreeFunction(weights or (1,) * n),
                     letter_priority=priority)


def cmp_words(order, a, b):
    """Compare two Word wrappers (the order itself takes raw tuples)."""
    return order.compare(a.letters, b.letters)


def random_word(rnd, n, max_len=5):
    return Word(tuple(rnd.randrange(n) for _ in range(rnd.randint(0, max_len))))


def random_free_poly(rnd, n, max_terms=3, max_len=4):
    data = {}
    for _ in range(rnd.randint(1, max_terms)):
        w = random_word(rnd, n, max_len)
        c = Q.scalar(rnd.randint(-3, 3), rnd.randint(1, 2))
        if not c.is_zero():
            data[w] = data.get(w, Q.zero) + c
    f = FreePoly(Q, n, data)
    return f if not f.is_zero() else FreePoly(Q, n, {Word(()): Q.one})


# ---------------------------------------------------------------------------
# words and word orders
# ---------------------------------------------------------------------------

def test_word_concatenation_and_division():
    u = Word((0, 1))
    w = Word((2, 0, 1, 0))
    assert (u * Word((0,))).letters == (0, 1, 0)
    assert word_divides(u.letters, w.letters)
    assert occurrences(u.letters, w.letters) == [1]
    assert not word_divides((1, 1), w.letters)
    assert not word_divides((), w.letters)


def test_word_order_total_and_multiplicative(rng):
    order = wo(3, weights=(2, 1, 4), priority=(1, 0, 2))
    for _ in range(300):
        u = random_word(rng, 3)
        v = random_word(rng, 3)
        w = random_word(rng, 3)
        cu, cv = cmp_words(order, u, v), cmp_words(order, v, u)
        assert cu == -cv
        assert (cu == 0) == (u.letters == v.letters)
        # both-sided compatibility with concatenation
        assert cmp_words(order, w * u, w * v) == cu
        assert cmp_words(order, u * w, v * w) == cu
        if u.letters:
            assert cmp_words(order, Word(()), u) == -1


def test_word_order_examples():
    order = wo(3, weights=(2, 1, 4), priority=(1, 0, 2))
    X1, X2, X3 = Word((0,)), Word((1,)), Word((2,))
    assert cmp_words(order, X1 * X2, X2 * X1) == 1
    assert cmp_words(order, X3 * X1, X1 * X3) == 1
    # same weighted degree 6, decided letterwise
    assert cmp_words(order, X3 * X1, X3 * X2 * X2) == 1
    # a proper prefix is always smaller under positive weights
    assert cmp_words(order, X1, X1 * X2) == -1


# ---------------------------------------------------------------------------
# division with trace
# ---------------------------------------------------------------------------

def test_free_divide_reconstructs(rng):
    order = wo(2)
    for _ in range(40):
        h = random_free_poly(rng, 2)
        G = [random_free_poly(rng, 2) for _ in range(2)]
        trace, rem = free_divide(h, G, order)
        rebuilt = rem
        for lam, u, j, v in trace:
            rebuilt = rebuilt + G[j].sandwich(u, v).scale(lam)
        assert rebuilt == h
        # the remainder is normal: no leading word of G divides a term
        for w, _ in rem.terms:
            for g in G:
                assert not word_divides(g.lm(order).letters, w)


def test_free_divide_prefers_leftmost_occurrence():
    order = wo(2, priority=(1, 0))
    # rule X1 X2 -> X2 X1 applied to X1 X2 X1 rewrites in one step
    g = FreePoly(Q, 2, {Word((0, 1)): Q.one, Word((1, 0)): -Q.one})
    h = FreePoly(Q, 2, {Word((0, 1, 0)): Q.one})
    trace, rem = free_divide(h, [g], order)
    assert rem == FreePoly(Q, 2, {Word((1, 0, 0)): Q.one})
    assert trace[0][1].letters == ()  # left cofactor of the first step


# ---------------------------------------------------------------------------
# overlaps: library enumeration versus brute force
# ---------------------------------------------------------------------------

def brute_overlap_shifts(w1, w2, same):
    """All proper border matches w1*u = v*w2, checked from scratch."""
    p, q = len(w1.letters), len(w2.letters)
    shifts = []
    for k in range(0, p):
        if k + q < p:
            continue
        if k == 0 and p == q and same:
            continue
        v = Word(w1.letters[:k])
        u = Word(w2.letters[p - k:])
        if (v * w2).letters != (w1 * u).letters:
            continue
        if word_divides(w1.letters, v.letters) or \
                word_divides(w2.letters, u.letters):
            continue
        shifts.append(k)
    return shifts


def test_overlap_enumeration_matches_brute_force(rng):
    order = wo(2)
    for _ in range(120):
        f = random_free_poly(rng, 2, max_terms=2, max_len=4)
        g = random_free_poly(rng, 2, max_terms=2, max_len=4)
        got = sorted(o.shift for o in overlap_elements(f, g, order))
        want = sorted(brute_overlap_shifts(f.lm(order), g.lm(order),
                                           f == g))
        assert got == want


def test_overlap_values_cancel_leading_words(rng):
    order = wo(3)
    for _ in range(60):
        f = random_free_poly(rng, 3, max_terms=3, max_len=4)
        g = random_free_poly(rng, 3, max_terms=3, max_len=4)
        top = f.lm(order) * g.lm(order)
        for o in overlap_elements(f, g, order):
            if not o.value.is_zero():
                assert cmp_words(order, o.value.lm(order), top) == -1


def test_self_overlaps_of_a_power():
    order = wo(3, weights=(2, 1, 4), priority=(1, 0, 2))
    f = FreePoly(Q, 3, {Word((2, 2, 2, 2)): Q.one, Word(()): Q.one})
    shifts = sorted(o.shift for o in overlap_elements(f, f, order))
    assert shifts == [1, 2, 3]


def test_interior_inclusion_is_not_an_overlap():
    order = wo(2)
    f = FreePoly(Q, 2, {Word((0, 1, 1, 0)): Q.one})
    g = FreePoly(Q, 2, {Word((1, 1)): Q.one})
    assert overlap_elements(f, g, order) == []


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

def ex14_relations(lam=5, mu=2):
    """Three rewriting rules with weights (2, 1, 4), one true overlap."""
    one = Q.one

    def fp(data):
        return FreePoly(Q, 3, data)

    g1 = fp({Word((0, 1)): one, Word((1, 0)): -one})
    g2 = fp({Word((2, 0)): one, Word((0, 2)): -Q.scalar(lam),
             Word((2, 1, 1)): -Q.scalar(mu), Word((1,) * 6): -Q.scalar(3),
             Word((1, 1)): -one, Word(()): -Q.scalar(7)})
    g3 = fp({Word((2, 1)): one, Word((1, 2)): -one})
    return [g1, g2, g3]


def test_certifies_weighted_three_generator_example():
    order = wo(3, weights=(2, 1, 4), priority=(1, 0, 2))
    rep = verify_presentation(ex14_relations(), order)
    assert rep.certified
    assert rep.verdict == "SolvableTypeCertified"
    assert rep.overlaps_checked == 1
    assert str(rep.lambdas[(0, 1)]) == "1"
    assert str(rep.lambdas[(2, 0)]) == "5"
    rep.require_certified()


def test_zero_lambda_is_a_shape_violation():
    order = wo(3, weights=(2, 1, 4), priority=(1, 0, 2))
    with pytest.raises(ShapeViolation):
        verify_presentation(ex14_relations(lam=0), order)


def test_wrong_relation_count_is_a_shape_violation():
    order = wo(3)
    with pytest.raises(ShapeViolation):
        verify_presentation(ex14_relations()[:2], order)


def test_square_leading_word_is_a_shape_violation():
    order = wo(2)
    g = FreePoly(Q, 2, {Word((1, 1)): Q.one, Word((0, 0)): -Q.one})
    with pytest.raises(ShapeViolation):
        verify_presentation([g], order)


def test_nonconfluent_presentation_is_rejected():
    order = wo(3)
    one = Q.one
    # zx = xz + y^2 breaks the zyx diamond against the other two rules
    g1 = FreePoly(Q, 3, {Word((1, 0)): one, Word((0, 1)): -Q.scalar(2)})
    g2 = FreePoly(Q, 3, {Word((2, 0)): one, Word((0, 2)): -one,
                         Word((1, 1)): -one})
    g3 = FreePoly(Q, 3, {Word((2, 1)): one, Word((1, 2)): -one})
    rep = verify_presentation([g1, g2, g3], order)
    assert not rep.certified
    assert rep.verdict == "NotCertified"
    assert len(rep.failures) >= 1
    with pytest.raises(OverlapFailure):
        rep.require_certified()


def test_weyl_presentation_certifies():
    order = wo(2)
    g = FreePoly(Q, 2, {Word((1, 0)): Q.one, Word((0, 1)): -Q.one,
                        Word(()): -Q.one})
    rep = verify_presentation([g], order)
    assert rep.certified
    assert rep.overlaps_checked == 0


def test_certified_presentations_build_associative_algebras(rng):
    """Dual route: certification implies the rewriting product works."""
    n = 3
    checked = 0
    for _ in range(25):
        lams = {}
        rels = []
        eqs = []
        names = ("a", "b", "c")
        for j in range(n):
            for i in range(j):
                lam = rng.choice([1, 2, 3, -1, Q.scalar(1, 2).value])
                tail_c = rng.choice([0, 0, 1, -2])
                lams[(j, i)] = lam
                data = {Word((j, i)): Q.one,
                        Word((i, j)): -Q.scalar(lam)}
                if tail_c:
                    data[Word(())] = Q.scalar(-tail_c)
                rels.append(FreePoly(Q, n, data))
                eq = "%s*%s = %s*%s*%s" % (names[j], names[i], lam,
                                           names[i], names[j])
                if tail_c:
                    eq += " + %d" % tail_c
                eqs.append(eq)
        rep = verify_presentation(rels, wo(n))
        if not rep.certified:
            continue
        checked += 1
        A = build_algebra(Q, names,
                          MonomialOrder("grlex", n,
                                        degree=DegreeFunction((1, 1, 1))),
                          eqs)
        for _ in range(4):
            f = random_poly(A, rng, max_degree=2, max_terms=2)
            g = random_poly(A, rng, max_degree=2, max_terms=2)
            h = random_poly(A, rng, max_degree=2, max_terms=2)
            assert A.multiply(A.multiply(f, g), h) == A.multiply(
                f, A.multiply(g, h))
    assert checked >= 5


# ---------------------------------------------------------------------------
# bounded completion
# ---------------------------------------------------------------------------

def test_completion_of_complete_system_is_unchanged():
    order = wo(2)
    g = FreePoly(Q, 2, {Word((1, 0)): Q.one, Word((0, 1)): -Q.one,
                        Word(()): -Q.one})
    basis, complete = bounded_completion([g], order, max_new=8)
    assert complete
    assert len(basis) == 1


def test_completion_respects_budget():
    order = wo(3)
    one = Q.one
    g1 = FreePoly(Q, 3, {Word((1, 0)): one, Word((0, 1)): -Q.scalar(2)})
    g2 = FreePoly(Q, 3, {Word((2, 0)): one, Word((0, 2)): -one,
                         Word((1, 1)): -one})
    g3 = FreePoly(Q, 3, {Word((2, 1)): one, Word((1, 2)): -one})
    basis, complete = bounded_completion([g1, g2, g3], order, max_new=0)
    assert not complete
    assert len(basis) == 3
    basis, complete = bounded_completion([g1, g2, g3], order, max_new=16)
    assert complete
    # the completed system certifies
    checked = [b for b in basis]
    for i, f in enumerate(checked):
        for g in checked:
            for o in overlap_elements(f, g, order):
                _, rem = free_divide(o.value, checked, order)
                assert rem.is_zero()


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def test_word_and_poly_rendering():
    names = ("x", "y")
    assert word_str(Word(()), names) == "1"
    assert word_str(Word((0, 0, 1, 0)), names) == "x^2*y*x"
    f = FreePoly(Q, 2, {Word((1, 0)): Q.one, Word(()): -Q.scalar(1, 2)})
    text = free_poly_str(f, names)
    assert "y*x" in text and "1/2" in text
