import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonbasis import gapset, sumset
from nonbasis.errors import DomainConstraint, GcdViolation
from nonbasis.families import (
    Family,
    Params,
    build_full,
    build_gapped,
    gcd_case,
)
from nonbasis.intset import Window, materialize

GEOM2 = gapset.Geometric(2, 1)


@pytest.mark.parametrize(
    "h,s,t,d,tag",
    [
        (2, 1, 3, 2, "nonbasis"),
        (3, 0, 1, 1, "basis"),
        (6, 2, 10, 2, "nonbasis"),
        (4, 3, 3, 4, "nonbasis"),  # gcd(h, 0) = h
        (5, 9, 2, 1, "basis"),
    ],
)
def test_gcd_case(h, s, t, d, tag):
    case = gcd_case(h, s, t)
    assert case.d == d and case.tag == tag


def test_build_full_z():
    fam = build_full(Params(2, 1, 3, "z"))
    # the singleton 1 is absorbed into the odd class
    assert materialize(fam.spec, Window(-5, 5)).members() == [-5, -3, -1, 1, 3, 5]


def test_build_full_n0():
    fam = build_full(Params(3, 0, 1, "n0"))
    assert materialize(fam.spec, Window(0, 10)).members() == [0, 1, 4, 7, 10]
    fam2 = build_full(Params(2, 0, 1, "n0"))
    assert materialize(fam2.spec, Window(0, 7)).members() == [0, 1, 3, 5, 7]


def test_build_gapped_examples():
    fam = build_gapped(Params(2, 0, 1, "n0"), GEOM2)
    assert materialize(fam.spec, Window(0, 12)).members() == [0, 1, 7, 11]
    fam3 = build_gapped(Params(3, 0, 1, "n0"), GEOM2)
    assert materialize(fam3.spec, Window(0, 16)).members() == [0, 1, 10, 16]


def test_gcd_violation():
    with pytest.raises(GcdViolation):
        build_gapped(Params(2, 1, 3, "n0"), GEOM2)


def test_domain_constraints():
    with pytest.raises(DomainConstraint):
        Params(2, -1, 1, "n0")
    with pytest.raises(DomainConstraint):
        Params(1, 0, 1, "z")
    with pytest.raises(DomainConstraint):
        Params(2, 0, 1, "q")
    Params(2, -5, -3, "z")  # negatives fine over Z


def test_membership_helpers():
    fam = build_gapped(Params(2, 0, 1, "n0"), GEOM2)
    assert fam.x_contains(3) and not fam.x_contains(4) and not fam.x_contains(-1)
    assert fam.y_contains(4) and not fam.y_contains(3)
    assert fam.a_contains(7) and not fam.a_contains(9)
    assert fam.shifted_y_value(2) == 5
    assert fam.is_gapped
    assert not build_full(Params(2, 0, 1, "n0")).is_gapped


PARAM_GRID = [
    (h, s, t, dom)
    for h in (2, 3, 4, 5)
    for s, t in ((0, 1), (2, 1), (3, 7), (1, 0))
    for dom in ("z", "n0")
]


@pytest.mark.parametrize("h,s,t,dom", PARAM_GRID)
def test_sumset_residues_confined(h, s, t, dom):
    """Every oracle sumset member is i(s-t) + ht mod h for some i."""
    params = Params(h, s, t, dom)
    fam = build_full(params)
    if dom == "n0":
        a = materialize(fam.spec, Window(0, 300))
        r = sumset.hfold_exact_bounded_below(a, h, target=Window(0, 300))
    else:
        a = materialize(fam.spec, Window(-300, 300))
        r = sumset.hfold_truncated(a, h, Window(-150, 150))
    allowed = {(i * (s - t) + h * t) % h for i in range(h)}
    assert all(n % h in allowed for n in r.members())
    d = gcd_case(h, s, t).d
    if d >= 2:
        assert all((n - h * t) % d == 0 for n in r.members())


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 5),
    st.integers(0, 8),
    st.integers(0, 8),
    st.sampled_from([GEOM2, gapset.Triangular(), gapset.Factorial()]),
)
def test_gapped_is_full_minus_shifted_y(h, s, t, gen):
    """On any window the gapped family is the full family minus {h*y + t}."""
    if gcd_case(h, s, t).d != 1:
        return
    params = Params(h, s, t, "n0")
    gapped = build_gapped(params, gen)
    full = build_full(params)
    w = Window(0, 160)
    got = materialize(gapped.spec, w)
    whole = materialize(full.spec, w)
    removed = {
        h * y + t
        for y in gapset.elements_in(gen, Window(0, 160))
        if w.contains(h * y + t) and h * y + t != s
    }
    assert set(got.members()) == set(whole.members()) - removed


def test_gapped_union_disjoint():
    # gcd(h, s - t) = 1 forces s out of the progression part
    fam = build_gapped(Params(3, 2, 1, "n0"), GEOM2)
    h, s, t = fam.h, fam.s, fam.t
    assert (s - t) % h != 0
