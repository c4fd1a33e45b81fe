import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multifold import (
    DomainError,
    Interval,
    Poly,
    PolyParseError,
    cauchy_root_bound,
    count_real_roots,
    eval_horner,
    horner_chain,
    isolate_real_roots,
    negate_variable,
    poly_parse,
    poly_to_text,
    resultant,
    squarefree_part,
    sturm_chain,
)
from multifold.algebra import (
    poly_gcd,
    primitive_part,
    simplest_rational_in,
    squarefree_decomposition,
)

from helpers import naive_eval, random_poly

X = Poly.identity()

fractions_st = st.fractions(min_value=-10, max_value=10, max_denominator=10)
polys_st = st.lists(fractions_st, min_size=0, max_size=9).map(Poly.from_coeffs)
nonzero_polys_st = polys_st.filter(lambda p: not p.is_zero)


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------


def test_parse_quadratic():
    assert poly_parse("x^2 - 2").coeffs == (Fraction(-2), Fraction(0), Fraction(1))


def test_parse_quintic_with_fraction():
    p = poly_parse("16x^5 - 20x^3 + 5x - 1/2")
    assert p.coeffs == (
        Fraction(-1, 2),
        Fraction(5),
        Fraction(0),
        Fraction(-20),
        Fraction(0),
        Fraction(16),
    )


def test_parse_zero():
    assert poly_parse("0").is_zero


def test_parse_whitespace_insensitive():
    assert poly_parse(" 2 x ^ 2 - 1 / 2 ") == poly_parse("2x^2-1/2")


def test_parse_merges_repeated_terms():
    assert poly_parse("x + x") == poly_parse("2x")


def test_parse_leading_plus_and_bare_x():
    assert poly_parse("+x") == X
    assert poly_parse("-x") == -X


def test_parse_error_double_caret_reports_position():
    with pytest.raises(PolyParseError) as err:
        poly_parse("x^^2")
    assert err.value.position == 2


def test_parse_error_zero_denominator():
    with pytest.raises(PolyParseError, match="zero denominator"):
        poly_parse("1/0")


def test_parse_error_empty():
    with pytest.raises(PolyParseError):
        poly_parse("   ")


def test_parse_error_trailing_garbage():
    with pytest.raises(PolyParseError):
        poly_parse("x$1")


def test_parse_error_huge_exponent():
    with pytest.raises(PolyParseError, match="exponent too large"):
        poly_parse("x^99999999")


@given(polys_st)
def test_text_round_trip(p):
    assert poly_parse(poly_to_text(p)) == p


# ---------------------------------------------------------------------------
# Horner evaluation and chain
# ---------------------------------------------------------------------------


def test_eval_horner_example():
    assert eval_horner(poly_parse("x^2 - 2"), Fraction(3, 2)) == Fraction(1, 4)
    assert naive_eval(poly_parse("x^2 - 2"), Fraction(3, 2)) == Fraction(1, 4)


def test_eval_horner_at_zero_is_constant_term():
    p = poly_parse("7x^3 - 4x + 9/2")
    assert eval_horner(p, 0) == Fraction(9, 2)


def test_eval_horner_quintic_exact_rational_root():
    assert eval_horner(poly_parse("16x^5 - 20x^3 + 5x - 1/2"), Fraction(1, 2)) == 0


@given(polys_st, fractions_st)
def test_eval_horner_matches_power_sum(p, x):
    assert eval_horner(p, x) == naive_eval(p, x)


def test_horner_chain_quadratic():
    chain = horner_chain(poly_parse("2x^2 + 3x + 5"))
    assert chain.partials == (
        Poly.constant(2),
        poly_parse("2x + 3"),
        poly_parse("2x^2 + 3x + 5"),
    )


def test_horner_chain_identity():
    assert horner_chain(X).partials == (Poly.constant(1), X)


def test_horner_chain_sqrt_two():
    assert horner_chain(poly_parse("x^2 - 2")).partials == (
        Poly.constant(1),
        X,
        poly_parse("x^2 - 2"),
    )


def test_horner_chain_rejects_zero():
    with pytest.raises(DomainError):
        horner_chain(Poly.zero())


@given(nonzero_polys_st)
def test_horner_chain_invariants(p):
    chain = horner_chain(p)
    assert chain.partials[0] == Poly.constant(p.leading_coefficient)
    assert chain.partials[-1] == p
    for i in range(1, len(chain.partials)):
        k = p.degree - i
        assert chain.partials[i] == X * chain.partials[i - 1] + p[k]


# ---------------------------------------------------------------------------
# Variable negation and root bound
# ---------------------------------------------------------------------------


def test_negate_variable_examples():
    assert negate_variable(poly_parse("x + 2")) == poly_parse("-x + 2")
    assert negate_variable(poly_parse("x^2 - 2")) == poly_parse("x^2 - 2")
    assert negate_variable(poly_parse("x^3")) == poly_parse("-x^3")


@given(polys_st)
def test_negate_variable_is_involution(p):
    assert negate_variable(negate_variable(p)) == p


@given(polys_st, fractions_st)
def test_negate_variable_evaluates_mirrored(p, x):
    assert eval_horner(negate_variable(p), x) == eval_horner(p, -x)


def test_cauchy_bound_examples():
    assert cauchy_root_bound(poly_parse("x^2 - 2")) == 3
    assert cauchy_root_bound(poly_parse("x - 1")) == 2
    assert cauchy_root_bound(poly_parse("x^3")) == 1


def test_cauchy_bound_rejects_constant_and_zero():
    with pytest.raises(DomainError):
        cauchy_root_bound(Poly.constant(5))
    with pytest.raises(DomainError):
        cauchy_root_bound(Poly.zero())


# ---------------------------------------------------------------------------
# Squarefree structure
# ---------------------------------------------------------------------------


def test_squarefree_part_examples():
    assert squarefree_part((X - 1) * (X - 1)) == X - 1
    assert squarefree_part(poly_parse("x^2 - 2")) == poly_parse("x^2 - 2")
    assert squarefree_part(X**3) == X


@given(nonzero_polys_st)
def test_squarefree_part_has_constant_gcd_with_derivative(p):
    q = squarefree_part(p)
    if q.degree >= 1:
        assert poly_gcd(q, q.derivative()).degree == 0


def test_squarefree_decomposition_reassembles():
    rng = random.Random(42)
    for _ in range(25):
        f1 = random_poly(rng, max_degree=2)
        f2 = random_poly(rng, max_degree=2)
        p = f1 * f2 * f2
        factors = squarefree_decomposition(p)
        rebuilt = Poly.constant(1)
        for f, m in factors:
            rebuilt = rebuilt * f**m
        assert primitive_part(rebuilt) == primitive_part(p)


# ---------------------------------------------------------------------------
# Resultants
# ---------------------------------------------------------------------------


def test_resultant_two_linear():
    assert resultant(poly_parse("x - 1"), poly_parse("x - 2")) == -1


def test_resultant_against_constant():
    f = poly_parse("x^3 - 2x + 1")
    assert resultant(f, Poly.constant(Fraction(5))) == Fraction(125)
    assert resultant(Poly.constant(Fraction(5)), f) == Fraction(125)


def test_resultant_quadratic_and_x():
    assert resultant(poly_parse("x^2 + 1"), X) == 1


def test_resultant_rejects_zero():
    with pytest.raises(DomainError):
        resultant(Poly.zero(), X)


@settings(max_examples=60)
@given(
    st.lists(fractions_st, min_size=2, max_size=5).map(Poly.from_coeffs).filter(lambda p: p.degree >= 1),
    st.lists(fractions_st, min_size=2, max_size=5).map(Poly.from_coeffs).filter(lambda p: p.degree >= 1),
)
def test_resultant_antisymmetry(f, g):
    flip = Fraction(-1) ** (f.degree * g.degree)
    assert resultant(f, g) == flip * resultant(g, f)


def test_resultant_zero_iff_common_factor():
    rng = random.Random(7)
    for _ in range(40):
        shared = random_poly(rng, max_degree=2, min_degree=1)
        f1 = random_poly(rng, max_degree=2, min_degree=1)
        g1 = random_poly(rng, max_degree=2, min_degree=1)
        if rng.random() < 0.5:
            f, g = shared * f1, shared * g1
        else:
            f, g = f1, g1
        res = resultant(f, g)
        has_common = poly_gcd(f, g).degree >= 1
        assert (res == 0) == has_common


# ---------------------------------------------------------------------------
# Sturm chains and root counting
# ---------------------------------------------------------------------------


def test_sturm_chain_sqrt_two():
    chain = sturm_chain(poly_parse("x^2 - 2"))
    assert chain.seq == (poly_parse("x^2 - 2"), poly_parse("2x"), Poly.constant(2))


def test_sturm_chain_linear():
    assert sturm_chain(poly_parse("x - 1")).seq == (poly_parse("x - 1"), Poly.constant(1))


def test_sturm_chain_no_real_roots():
    chain = sturm_chain(poly_parse("x^2 + 1"))
    assert chain.seq == (poly_parse("x^2 + 1"), poly_parse("2x"), Poly.constant(-1))


def test_sturm_chain_recurrence_holds():
    rng = random.Random(11)
    for _ in range(20):
        p = random_poly(rng, max_degree=6)
        chain = sturm_chain(p)
        assert chain.seq[0] == squarefree_part(p)
        assert chain.seq[1] == chain.seq[0].derivative()
        for i in range(2, len(chain.seq)):
            assert chain.seq[i] == -(chain.seq[i - 2] % chain.seq[i - 1])
        assert chain.seq[-1].degree == 0


def test_count_real_roots_examples():
    two = sturm_chain(poly_parse("x^2 - 2"))
    assert count_real_roots(two, Interval(-3, 3)) == 2
    none = sturm_chain(poly_parse("x^2 + 1"))
    assert count_real_roots(none, Interval(-10, 10)) == 0
    assert count_real_roots(two, Interval(2, 2)) == 0


def test_count_real_roots_half_open_at_root_endpoints():
    chain = sturm_chain(X * (X - 1))
    assert count_real_roots(chain, Interval(0, 1)) == 1  # 0 excluded, 1 included
    assert count_real_roots(chain, Interval(-1, 0)) == 1
    assert count_real_roots(chain, Interval(-1, 1)) == 2


# ---------------------------------------------------------------------------
# Isolation
# ---------------------------------------------------------------------------


def test_isolate_sqrt_two():
    ivs = isolate_real_roots(poly_parse("x^2 - 2"))
    assert len(ivs) == 2
    neg, pos = ivs
    assert -2 < neg.lo and neg.hi < -1
    assert 1 < pos.lo and pos.hi < 2


def test_isolate_no_real_roots():
    assert isolate_real_roots(poly_parse("x^2 + 1")) == []


def test_isolate_root_at_origin():
    ivs = isolate_real_roots(X)
    assert len(ivs) == 1
    assert ivs[0].lo < 0 < ivs[0].hi


def test_isolate_rejects_constant():
    with pytest.raises(DomainError):
        isolate_real_roots(Poly.constant(3))


def test_isolation_counts_partition_total():
    rng = random.Random(13)
    for _ in range(30):
        p = random_poly(rng, max_degree=6)
        chain = sturm_chain(p)
        bound = cauchy_root_bound(p)
        total = count_real_roots(chain, Interval(-bound, bound))
        ivs = isolate_real_roots(p)
        assert len(ivs) == total
        for iv in ivs:
            assert count_real_roots(chain, iv) == 1
        for a, b in zip(ivs, ivs[1:]):
            assert a.hi <= b.lo


# ---------------------------------------------------------------------------
# Simplest rational
# ---------------------------------------------------------------------------


def test_simplest_rational_recovers_half():
    lo = Fraction(1, 2) - Fraction(1, 10**13)
    hi = Fraction(1, 2) + Fraction(1, 10**13)
    assert simplest_rational_in(lo, hi) == Fraction(1, 2)


def test_simplest_rational_prefers_integers_and_zero():
    assert simplest_rational_in(Fraction(-1, 3), Fraction(1, 5)) == 0
    assert simplest_rational_in(Fraction(3, 2), Fraction(7, 2)) == 2
    assert simplest_rational_in(Fraction(-7, 2), Fraction(-3, 2)) == -2


def test_simplest_rational_within_tight_negative_interval():
    lo = Fraction(-2, 3) - Fraction(1, 10**9)
    hi = Fraction(-2, 3) + Fraction(1, 10**9)
    assert simplest_rational_in(lo, hi) == Fraction(-2, 3)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(1, 0)
