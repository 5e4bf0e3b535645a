import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonbasis import gapset, intset, sumset, verify
from nonbasis.errors import BNotOutside, GcdViolation, WrongResidue
from nonbasis.families import Params, build_full, build_gapped
from nonbasis.intset import Window, materialize
from nonbasis.verify import (
    Budget,
    InSumset,
    OutExceptional,
    OutShiftedY,
    Unknown,
    YPrimeFilter,
)

GEOM2 = gapset.Geometric(2, 1)


def fam201():
    return build_gapped(Params(2, 0, 1, "n0"), GEOM2)


def fam301():
    return build_gapped(Params(3, 0, 1, "n0"), GEOM2)


@pytest.mark.parametrize(
    "params,n,i,q,k",
    [
        (Params(3, 0, 1, "n0"), 5, 1, 2, 2),
        (Params(2, 0, 1, "n0"), 7, 1, 4, 1),
        (Params(2, 0, 1, "n0"), 6, 0, 3, 2),
    ],
)
def test_residue_decompose_examples(params, n, i, q, k):
    rd = verify.residue_decompose(params, n)
    assert (rd.i, rd.q, rd.k) == (i, q, k)


@settings(max_examples=200)
@given(
    st.integers(2, 7),
    st.integers(-12, 12),
    st.integers(-12, 12),
    st.integers(-500, 500),
)
def test_residue_decompose_reconstructs(h, s, t, n):
    import math

    if math.gcd(h, abs(s - t)) != 1:
        return
    rd = verify.residue_decompose(Params(h, s, t, "z"), n)
    assert rd.i * (s - t) + h * rd.q == n
    assert 0 <= rd.i < h and rd.k == h - rd.i


def test_residue_decompose_needs_gcd_one():
    with pytest.raises(GcdViolation):
        verify.residue_decompose(Params(2, 1, 3, "z"), 5)


@pytest.mark.parametrize(
    "params,n,z1",
    [
        (Params(2, 0, 1, "n0"), 7, 3),
        (Params(3, 0, 1, "n0"), 7, 2),
        (Params(2, 1, 3, "n0"), 10, 3),
    ],
)
def test_unique_rep_z1(params, n, z1):
    assert verify.unique_rep_z1(params, n) == z1
    h, s, t = params.h, params.s, params.t
    assert (h - 1) * s + h * z1 + t == n


def test_unique_rep_wrong_residue():
    with pytest.raises(WrongResidue):
        verify.unique_rep_z1(Params(2, 0, 1, "n0"), 6)


def test_decide_2x_examples():
    xs = fam201().x_spec()
    assert verify.decide_kX(xs, 2, 8) == verify.KDecision("in", (3, 5))
    assert verify.decide_kX(xs, 2, 4).status == "out"
    assert verify.decide_kX(xs, 2, 0) == verify.KDecision("in", (0, 0))


def test_decide_2x_matches_exhaustive():
    fam = fam201()
    xs = fam.x_spec()
    x0 = [x for x in range(300) if fam.x_contains(x)]
    for m in range(0, 200):
        want = any(fam.x_contains(m - x) for x in x0 if x <= m - x)
        got = verify.decide_kX(xs, 2, m)
        assert (got.status == "in") == want, m
        if got.status == "in":
            a, b = got.witness
            assert a + b == m and fam.x_contains(a) and fam.x_contains(b)


def test_decide_3x_matches_exhaustive():
    for gen in (GEOM2, gapset.Triangular()):
        fam = build_gapped(Params(3, 0, 1, "n0"), gen)
        xs = fam.x_spec()
        x0 = [x for x in range(200) if fam.x_contains(x)]
        pair_sums = {a + b for a in x0 for b in x0 if a <= b}
        for m in range(0, 120):
            want = any(m - x in pair_sums for x in x0 if x <= m)
            got = verify.decide_kX(xs, 3, m)
            assert (got.status == "in") == want, (gen, m)
            if got.status == "in":
                assert len(got.witness) == 3 and sum(got.witness) == m
                assert all(fam.x_contains(x) for x in got.witness)


def test_decide_kx_over_z_always_in():
    fam = build_gapped(Params(2, 0, 1, "z"), GEOM2)
    xs = fam.x_spec()
    for m in (-50, -3, 0, 4, 9, 1000):
        got = verify.decide_kX(xs, 2, m)
        assert got.status == "in"
        assert sum(got.witness) == m


def test_decide_kx_budget_exhaustion():
    xs = fam201().x_spec()
    got = verify.decide_kX(xs, 2, 8, Budget(0))
    assert got.status == "unknown"


def test_decide_kx_needs_certified_x_shape():
    from nonbasis.errors import UncertifiableTail
    from nonbasis.intset import ModClass

    with pytest.raises(UncertifiableTail):
        verify.decide_kX(ModClass(2, 1), 2, 8)
    with pytest.raises(GcdViolation):
        verify.decide_kX(fam201().x_spec(), 1, 8)


def test_classify_examples():
    fam = fam201()
    assert verify.classify(fam, 7) == InSumset(1, (3,))
    assert verify.classify(fam, 5) == OutShiftedY(2)
    assert verify.classify(fam, 4) == OutExceptional("F0")


def test_classify_f1_case():
    # s large: small n in the t-s class fall below (h-1)s + t
    fam = build_gapped(Params(2, 5, 2, "n0"), GEOM2)
    n = 5  # n = t-s = -3 = 1 mod 2... pick explicitly below threshold
    h, s, t = fam.h, fam.s, fam.t
    assert (n - (t - s)) % h == 0 and n < (h - 1) * s + t
    assert verify.classify(fam, n) == OutExceptional("F1")


def test_classify_all_s_representation():
    # n = h*s with n not congruent to t-s: the all-singleton sum
    fam = build_gapped(Params(2, 3, 0, "n0"), GEOM2)
    v = verify.classify(fam, 6)
    assert v == InSumset(2, ())


def test_classify_needs_gapped():
    with pytest.raises(GcdViolation):
        verify.classify(build_full(Params(2, 0, 1, "n0")), 5)


@pytest.mark.parametrize(
    "h,s,t,gen",
    [
        (2, 0, 1, GEOM2),
        (3, 0, 1, GEOM2),
        (2, 3, 2, gapset.Triangular()),
        (4, 1, 2, gapset.Factorial()),
        (5, 2, 0, gapset.Geometric(3, 1)),
    ],
)
def test_classify_agrees_with_oracle(h, s, t, gen):
    fam = build_gapped(Params(h, s, t, "n0"), gen)
    hi = 400
    a = materialize(fam.spec, Window(0, hi))
    folded = sumset.hfold_exact_bounded_below(a, h, target=Window(0, hi))
    for n in range(hi + 1):
        v = verify.classify(fam, n)
        assert not isinstance(v, Unknown)
        assert isinstance(v, InSumset) == folded.member(n), (h, s, t, n)
        assert verify.verify_certificate(fam, n, v), (h, s, t, n, v)


def test_classify_z_soundness():
    fam = build_gapped(Params(2, 0, 1, "z"), GEOM2)
    a = materialize(fam.spec, Window(-300, 300))
    folded = sumset.hfold_truncated(a, 2, Window(-100, 100))
    for n in range(-100, 101):
        v = verify.classify(fam, n)
        if folded.member(n):
            assert isinstance(v, InSumset)
        assert verify.verify_certificate(fam, n, v)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 60), st.integers(0, 5))
def test_classify_translation_equivariance(n, c):
    base = build_gapped(Params(2, 0, 1, "n0"), GEOM2)
    moved = build_gapped(Params(2, 0 + c, 1 + c, "n0"), GEOM2)
    v1 = verify.classify(base, n)
    v2 = verify.classify(moved, n + 2 * c)
    assert type(v1) is type(v2)


def test_catalog_example():
    cat = verify.complement_catalog(fam201(), Window(0, 20))
    assert cat.shifted_y == (3, 5, 9, 17)
    assert cat.exceptional == (4, 6, 10)
    assert cat.unknown == ()


def test_catalog_small_window_all_covered():
    cat = verify.complement_catalog(fam201(), Window(0, 2))
    assert cat == verify.Catalog((), (), ())


def test_full_family_has_empty_complement():
    fam = build_full(Params(2, 0, 1, "n0"))
    a = materialize(fam.spec, Window(0, 50))
    r = sumset.hfold_exact_bounded_below(a, 2, target=Window(0, 50))
    assert r.dense.complement().members() == []


def test_catalog_partition_disjoint():
    cat = verify.complement_catalog(fam301(), Window(0, 400))
    assert not set(cat.shifted_y) & set(cat.exceptional)
    assert cat.unknown == ()


def test_escape_eq_s_example():
    rep = verify.escape_check(fam201(), 2, Window(0, 40))
    assert rep.residue_case == "eq_s"
    assert rep.verdict == "becomes_basis"
    assert rep.predicted_exceptions == (5,)
    # leftover complement is the predicted exception plus surviving F points
    assert set(rep.leftover) <= {5} | {4, 6, 10}


def test_escape_eq_t_example():
    rep = verify.escape_check(fam201(), 3, Window(0, 40))
    assert rep.residue_case == "eq_t"
    assert rep.verdict == "stays_nonbasis"
    assert set(rep.added) <= {3} | {4, 6, 10}
    assert 3 in rep.added
    assert 5 in rep.remaining_shifted


def test_escape_not_st_example():
    rep = verify.escape_check(fam301(), 2, Window(0, 60))
    assert rep.residue_case == "not_st"
    assert rep.verdict == "becomes_basis"
    assert rep.predicted_exceptions == (7,)


def test_escape_rejects_inside_b():
    with pytest.raises(BNotOutside):
        verify.escape_check(fam201(), 7, Window(0, 40))


def test_augment_even_indices():
    rep = verify.augment_check(fam201(), YPrimeFilter("even_indices"), Window(0, 200))
    assert rep.verdict == "stays_nonbasis"
    assert set(rep.missing_shifted) == {5, 17, 65}


def test_augment_cofinite():
    rep = verify.augment_check(
        fam201(), YPrimeFilter("drop_values", (1,)), Window(0, 200)
    )
    assert rep.verdict == "becomes_basis_on_window"
    assert set(rep.leftover) == {3, 4}


def test_augment_empty_matches_catalog():
    window = Window(0, 120)
    rep = verify.augment_check(fam201(), YPrimeFilter("none"), window)
    assert rep.verdict == "stays_nonbasis"
    cat = verify.complement_catalog(fam201(), window)
    assert sorted(rep.leftover) == sorted(cat.shifted_y + cat.exceptional)


def test_augment_all_becomes_full_family():
    rep = verify.augment_check(fam201(), YPrimeFilter("all"), Window(0, 120))
    assert rep.verdict == "becomes_basis_on_window"


def test_augment_z_uses_full_truncation_for_b():
    # over Z, adjoined elements above the window still matter through
    # negative partners; the augmented oracle must include them
    fam = build_gapped(Params(3, 1, 0, "z"), GEOM2)
    rep = verify.augment_check(fam, YPrimeFilter("all"), Window(-200, 200))
    assert rep.verdict == "becomes_basis_on_window"
    assert rep.extras == ()
    even = verify.augment_check(fam, YPrimeFilter("even_indices"), Window(-200, 200))
    assert even.verdict == "stays_nonbasis"


def test_lemma_geom2_h2():
    rep = verify.lemma_basis_check(GEOM2, 2, Window(0, 200))
    assert rep.bad_u == (0, 1, 2, 3)
    assert rep.complement == (1, 2, 4)
    assert rep.covered_above_threshold
    assert rep.matches_prediction


def test_lemma_factorial_h2():
    rep = verify.lemma_basis_check(gapset.Factorial(), 2, Window(0, 200))
    assert rep.bad_u == (0, 1, 2)
    assert rep.covered_above_threshold
    assert rep.matches_prediction


def test_lemma_geom2_h3():
    rep = verify.lemma_basis_check(GEOM2, 3, Window(0, 200))
    assert set(rep.complement) <= {1, 2, 4}
    assert rep.covered_above_threshold


def test_verdict_certificates_resum():
    fam = fam301()
    for n in range(0, 120):
        v = verify.classify(fam, n)
        if isinstance(v, InSumset):
            total = v.s_count * fam.s + sum(fam.h * x + fam.t for x in v.xs)
            assert total == n
            assert v.s_count + len(v.xs) == fam.h
        elif isinstance(v, OutShiftedY):
            assert fam.shifted_y_value(v.y) == n
            assert fam.y_contains(v.y)
