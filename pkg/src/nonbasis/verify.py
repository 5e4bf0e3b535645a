"""Certificate-producing membership classification and structural checks.

Everything here decides questions about h-fold sumsets of the gapped
families through the residue decomposition and the gap structure of Y,
and returns certificates that can be re-verified by plain arithmetic:
an explicit representation for members, a shifted-Y witness or an
exceptional-set tag for non-members.  The finite searches are budgeted;
running out of probes yields a first-class Unknown, never a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import gapset, intset, sumset
from .errors import (
    BNotOutside,
    DomainConstraint,
    GcdViolation,
    UncertifiableTail,
    WrongResidue,
)
from .families import DOMAIN_N0, DOMAIN_Z, Family, Params
from .intset import DenseSet, Diff, GapTail, ModClass, ModClassNonneg, SetSpec, Window

DEFAULT_BUDGET = 1_000_000


class _BudgetExhausted(Exception):
    pass


class Budget:
    """Countdown of membership probes for one decision."""

    __slots__ = ("remaining",)

    def __init__(self, probes: int = DEFAULT_BUDGET):
        self.remaining = probes

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise _BudgetExhausted()


@dataclass(frozen=True)
class ResidueDecomposition:
    i: int
    q: int
    k: int


@dataclass(frozen=True)
class InSumset:
    """n = s_count * s + sum(h * x + t for x in xs), every x in X."""

    s_count: int
    xs: tuple[int, ...]


@dataclass(frozen=True)
class OutShiftedY:
    """n = (h-1)s + h*y + t with y in Y."""

    y: int


@dataclass(frozen=True)
class OutExceptional:
    tag: str  # "F0" or "F1"


@dataclass(frozen=True)
class Unknown:
    reason: str


Verdict = InSumset | OutShiftedY | OutExceptional | Unknown


@dataclass(frozen=True)
class KDecision:
    status: str  # "in" | "out" | "unknown"
    witness: tuple[int, ...] = ()


def residue_decompose(params: Params, n: int) -> ResidueDecomposition:
    """Unique (i, q) with n = i(s-t) + h*q and i in {0..h-1}; k = h - i."""
    h, s, t = params.h, params.s, params.t
    st = (s - t) % h
    if st == 0 or math.gcd(h, st) != 1:
        raise GcdViolation(f"residue decomposition needs gcd({h},{s}-{t}) = 1")
    inv = pow(st, -1, h)
    i = (n % h) * inv % h
    q = (n - i * (s - t)) // h
    return ResidueDecomposition(i, q, h - i)


def unique_rep_z1(params: Params, n: int) -> int:
    """z1 with n = (h-1)s + (h*z1 + t); requires n = t-s (mod h)."""
    h, s, t = params.h, params.s, params.t
    if (n - (t - s)) % h != 0:
        raise WrongResidue(f"{n} is not congruent to t-s = {t - s} mod {h}")
    return (n - (h - 1) * s - t) // h


def _xparts(xspec: SetSpec) -> tuple[str, gapset.GapGenerator]:
    if (
        isinstance(xspec, Diff)
        and isinstance(xspec.drop, GapTail)
        and isinstance(xspec.keep, (ModClass, ModClassNonneg))
        and xspec.keep.m == 1
    ):
        domain = DOMAIN_Z if isinstance(xspec.keep, ModClass) else DOMAIN_N0
        return domain, xspec.drop.gen
    raise UncertifiableTail(
        "X must be Z or N0 minus a certified gap set for structural decisions"
    )


def _probes(domain: str, gen: gapset.GapGenerator, budget: Budget):
    def in_y(v: int) -> bool:
        budget.spend()
        return gapset.is_member(gen, v)

    def in_x(v: int) -> bool:
        if domain == DOMAIN_N0 and v < 0:
            return False
        return not in_y(v)

    return in_x, in_y


def _decide_2x(domain: str, gen: gapset.GapGenerator, m: int, in_x, in_y) -> KDecision:
    if domain == DOMAIN_N0 and m < 0:
        return KDecision("out")
    r3 = gapset.gap_radius(gen, 3)
    u = m // 2
    if u - 1 > r3:
        # All four of {u-1, u, u+1, u+2} sit beyond the close-pair radius,
        # so at most one lies in Y and one decomposition must survive.
        if m % 2 == 0:
            if in_x(u):
                return KDecision("in", (u, u))
            return KDecision("in", (u - 1, u + 1))
        if in_x(u) and in_x(u + 1):
            return KDecision("in", (u, u + 1))
        return KDecision("in", (u - 1, u + 2))
    if domain == DOMAIN_N0:
        for x in range(0, m // 2 + 1):
            if in_x(x) and in_x(m - x):
                return KDecision("in", (x, m - x))
        return KDecision("out")
    # Over Z every negative integer is in X; climb until m + j clears Y.
    j = 1
    while True:
        if in_x(m + j):
            return KDecision("in", (-j, m + j))
        j += 1


def _decide_kx_exhaustive(domain, gen, k: int, m: int, in_x, in_y) -> KDecision:
    if k == 2:
        return _decide_2x(domain, gen, m, in_x, in_y)
    if m < 0:
        return KDecision("out")
    for x in range(0, m // k + 1):
        if not in_x(x):
            continue
        sub = _decide_kx_exhaustive(domain, gen, k - 1, m - x, in_x, in_y)
        if sub.status == "in":
            return KDecision("in", (x,) + sub.witness)
    return KDecision("out")


def decide_kX(xspec: SetSpec, k: int, m: int, budget: Budget | None = None) -> KDecision:
    """Is m a sum of k elements of X?  Exact over N0; always In over Z.

    k = 2 is the four-point argument around m/2 with an exhaustive scan of
    the finite region below the close-pair radius.  k >= 3 first tries
    k-2 copies of the smallest nonnegative X element plus a pair, then
    falls back to an exhaustive scan over the smallest summand.
    """
    if k < 2:
        raise GcdViolation(f"decide_kX needs k >= 2, got {k}")
    domain, gen = _xparts(xspec)
    budget = budget if budget is not None else Budget()
    in_x, in_y = _probes(domain, gen, budget)
    try:
        if k == 2:
            return _decide_2x(domain, gen, m, in_x, in_y)
        if domain == DOMAIN_N0 and m < 0:
            return KDecision("out")
        x0 = 0
        while not in_x(x0):
            x0 += 1
        sub = _decide_2x(domain, gen, m - (k - 2) * x0, in_x, in_y)
        if sub.status == "in":
            return KDecision("in", (x0,) * (k - 2) + sub.witness)
        return _decide_kx_exhaustive(domain, gen, k, m, in_x, in_y)
    except _BudgetExhausted:
        return KDecision("unknown")


@lru_cache(maxsize=512)
def _prefix_fold(family: Family) -> tuple[DenseSet, DenseSet]:
    # Oracle for the below-threshold region n < (h-2)s + ht of an N0 family.
    p = family.params
    thr = (p.h - 2) * p.s + p.h * p.t
    w = Window(0, max(thr - 1, 0))
    dense = intset.materialize(family.spec, w)
    folded = sumset.hfold_exact_bounded_below(dense, p.h, target=w)
    return dense, folded.dense


def classify(family: Family, n: int, budget: Budget | None = None) -> Verdict:
    """Theorem-backed membership verdict for n against the h-fold sumset."""
    if not family.is_gapped:
        raise GcdViolation("classification applies to gapped families only")
    p = family.params
    h, s, t = p.h, p.s, p.t
    n0 = p.domain == DOMAIN_N0
    if n0 and n < 0:
        raise DomainConstraint(f"{n} is outside N0")
    budget = budget if budget is not None else Budget()

    if (n - (t - s)) % h == 0:
        z1 = (n - (h - 1) * s - t) // h
        if n0 and z1 < 0:
            return OutExceptional("F1")
        if family.y_contains(z1):
            return OutShiftedY(z1)
        return InSumset(h - 1, (z1,))

    if n0 and n < (h - 2) * s + h * t:
        # Below the structural threshold: read the answer off the exact oracle.
        dense, folded = _prefix_fold(family)
        if folded.member(n):
            wit = sumset.witness(dense, h, n)
            assert wit is not None
            s_count = sum(1 for v in wit if v == s)
            xs = tuple((v - t) // h for v in wit if v != s)
            return InSumset(s_count, xs)
        return OutExceptional("F0")

    rd = residue_decompose(p, n)
    if rd.i == 0 and n == h * s:
        return InSumset(h, ())
    dec = decide_kX(family.x_spec(), rd.k, rd.q - t, budget)
    if dec.status == "in":
        return InSumset(rd.i, dec.witness)
    if dec.status == "out":
        return OutExceptional("F0")
    return Unknown("probe budget exhausted")


def verify_certificate(family: Family, n: int, verdict: Verdict) -> bool:
    """Re-check a verdict by plain arithmetic and membership tests."""
    h, s, t = family.h, family.s, family.t
    if isinstance(verdict, InSumset):
        if verdict.s_count + len(verdict.xs) != h:
            return False
        total = verdict.s_count * s + sum(h * x + t for x in verdict.xs)
        return total == n and all(family.x_contains(x) for x in verdict.xs)
    if isinstance(verdict, OutShiftedY):
        return (
            n == family.shifted_y_value(verdict.y)
            and family.y_contains(verdict.y)
        )
    if isinstance(verdict, OutExceptional):
        if verdict.tag == "F1":
            return (
                family.domain == DOMAIN_N0
                and (n - (t - s)) % h == 0
                and n < (h - 1) * s + t
            )
        return (n - (t - s)) % h != 0
    return isinstance(verdict, Unknown)


def exceptional_bound(family: Family) -> int:
    """Certified upper bound for every exceptional complement element (N0).

    Above the structural threshold an exceptional n forces a k-fold X
    decision to fail, which confines q - t below the close-pair region
    2*R(3) + 5 plus the repeated-minimum slack; below the threshold n is
    bounded by the threshold itself, and the wrong-sign class F1 by
    (h-1)s + t.
    """
    if not family.is_gapped:
        raise GcdViolation("exceptional bound applies to gapped families only")
    h, s, t = family.h, family.s, family.t
    r3 = gapset.gap_radius(family.y, 3)
    x0 = 0
    while gapset.is_member(family.y, x0):
        x0 += 1
    out_cap = 2 * r3 + 5 + (h - 2) * x0
    f0_high = (h - 1) * abs(s - t) + h * t + h * out_cap
    f0_low = (h - 2) * s + h * t
    f1 = (h - 1) * s + t
    return max(f0_high, f0_low, f1)


@dataclass(frozen=True)
class Catalog:
    shifted_y: tuple[int, ...]
    exceptional: tuple[int, ...]
    unknown: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "shifted_y": list(self.shifted_y),
            "exceptional": list(self.exceptional),
            "unknown": list(self.unknown),
        }


def _shifted_values_in(family: Family, window: Window) -> list[int]:
    h, s, t = family.h, family.s, family.t
    base = (h - 1) * s + t
    ylo = -((base - window.lo) // h)  # ceil((window.lo - base) / h)
    yhi = (window.hi - base) // h
    if ylo > yhi or family.y is None:
        return []
    ylo = max(ylo, 0)
    if ylo > yhi:
        return []
    return [
        base + h * y for y in gapset.elements_in(family.y, Window(ylo, yhi))
    ]


def _z_source(family: Family, window: Window) -> Window:
    h, s, t = family.h, family.s, family.t
    slack = h * (abs(s) + abs(t) + h + 2)
    reach = max(abs(window.lo), abs(window.hi))
    return Window(-(reach + slack), reach + slack)


def _family_oracle(family: Family, window: Window) -> sumset.SumsetResult:
    """Windowed oracle sumset: exact for N0 families, truncated for Z."""
    if family.domain == DOMAIN_N0:
        src = Window(0, window.hi)
        dense = intset.materialize(family.spec, src)
        return sumset.hfold_exact_bounded_below(dense, family.h, target=window)
    src = _z_source(family, window)
    dense = intset.materialize(family.spec, src)
    return sumset.hfold_truncated(dense, family.h, target=window)


def complement_catalog(
    family: Family,
    window: Window,
    budget_probes: int = DEFAULT_BUDGET,
    crosscheck: bool = True,
) -> Catalog:
    """Partition of window minus hA into shifted-Y / exceptional / unknown.

    For N0 families the complement is read off the exact oracle and every
    element is classified; with crosscheck the classification is also
    compared with the oracle pointwise across the whole window.  For Z
    families the catalog is classification-driven and the truncated oracle
    is required not to contradict any Out verdict.
    """
    if not family.is_gapped:
        raise GcdViolation("catalog applies to gapped families only")
    n0 = family.domain == DOMAIN_N0
    if n0 and window.lo < 0:
        raise DomainConstraint("N0 catalog window must start at 0 or above")
    oracle = _family_oracle(family, window)
    shifted: list[int] = []
    exceptional: list[int] = []
    unknown: list[int] = []

    if n0:
        candidates = oracle.dense.complement().members()
    else:
        candidates = range(window.lo, window.hi + 1)

    for n in candidates:
        v = classify(family, n, Budget(budget_probes))
        if isinstance(v, InSumset):
            if n0:
                raise AssertionError(
                    f"classify says {n} is a member but the exact oracle disagrees"
                )
            continue
        if oracle.member(n):
            raise AssertionError(
                f"oracle contains {n} but classify returned {type(v).__name__}"
            )
        if isinstance(v, OutShiftedY):
            shifted.append(n)
        elif isinstance(v, OutExceptional):
            exceptional.append(n)
        else:
            unknown.append(n)

    if n0 and crosscheck:
        comp = set(candidates)
        for n in range(window.lo, window.hi + 1):
            if n in comp:
                continue
            v = classify(family, n, Budget(budget_probes))
            if not isinstance(v, InSumset):
                raise AssertionError(
                    f"oracle contains {n} but classify returned {type(v).__name__}"
                )
    return Catalog(tuple(shifted), tuple(exceptional), tuple(unknown))


@dataclass(frozen=True)
class EscapeReport:
    b: int
    residue_case: str  # "not_st" | "eq_s" | "eq_t"
    verdict: str  # "becomes_basis" | "stays_nonbasis" | "inconclusive"
    threshold: int
    predicted_exceptions: tuple[int, ...]
    leftover: tuple[int, ...]
    added: tuple[int, ...]
    remaining_shifted: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "b": self.b,
            "residue_case": self.residue_case,
            "verdict": self.verdict,
            "threshold": self.threshold,
            "predicted_exceptions": list(self.predicted_exceptions),
            "leftover": list(self.leftover),
            "added": list(self.added),
            "remaining_shifted": list(self.remaining_shifted),
        }


def _oracle_pair_with(family: Family, extra: list[int], window: Window):
    """Oracle sumsets of A and of A plus the extra elements, same source."""
    if family.domain == DOMAIN_N0:
        src = Window(0, window.hi)
    else:
        src = _z_source(family, window)
    dense_a = intset.materialize(family.spec, src)
    bits = dense_a.bits
    for b in extra:
        if src.contains(b):
            bits |= 1 << (b - src.lo)
    dense_ab = DenseSet(src, bits)
    if family.domain == DOMAIN_N0:
        fa = sumset.hfold_exact_bounded_below(dense_a, family.h, target=window)
        fab = sumset.hfold_exact_bounded_below(dense_ab, family.h, target=window)
    else:
        fa = sumset.hfold_truncated(dense_a, family.h, target=window)
        fab = sumset.hfold_truncated(dense_ab, family.h, target=window)
    return fa, fab


def escape_check(
    family: Family,
    b: int,
    window: Window,
    budget_probes: int = DEFAULT_BUDGET,
) -> EscapeReport:
    """What adjoining one element b outside A does to the h-fold sumset.

    The three residue cases of b against s and t mod h behave differently:
    b not congruent to either (possible only for h >= 3) and b = s (mod h)
    make the window complement above a computed threshold collapse to a
    finite predicted exception list; b = t (mod h) adds at most the single
    shifted image of its y' plus part of the exceptional set.
    """
    if not family.is_gapped:
        raise GcdViolation("escape check applies to gapped families only")
    h, s, t = family.h, family.s, family.t
    n0 = family.domain == DOMAIN_N0
    if n0 and b < 0:
        raise DomainConstraint(f"b = {b} is outside N0")
    if family.a_contains(b):
        raise BNotOutside(f"b = {b} already belongs to the family")

    if (b - s) % h == 0:
        case = "eq_s"
    elif (b - t) % h == 0:
        case = "eq_t"
    else:
        case = "not_st"

    fa, fab = _oracle_pair_with(family, [b], window)
    comp_a = set(fa.dense.complement().members())
    comp_ab_list = fab.dense.complement().members()
    comp_ab = set(comp_ab_list)
    shifted_all = set(_shifted_values_in(family, window))
    f_window = comp_a - shifted_all

    if case == "eq_t":
        added = sorted(
            DenseSet(window, fab.dense.bits & ~fa.dense.bits).members()
        )
        cover = (h - 1) * s + b
        ok = set(added) <= f_window | {cover}
        remaining = sorted(comp_ab & (shifted_all - {cover}))
        return EscapeReport(
            b,
            case,
            "stays_nonbasis" if ok else "inconclusive",
            window.lo,
            (),
            tuple(comp_ab_list),
            tuple(added),
            tuple(remaining[:32]),
        )

    budget = Budget(budget_probes)
    predicted: list[int] = []
    threshold = window.lo
    if case == "eq_s":
        u = (b - s) // h
        for n in _shifted_values_in(family, window):
            y = (n - (h - 1) * s - t) // h
            w_val = y - (h - 1) * u
            if (n0 and w_val < 0) or family.y_contains(w_val):
                predicted.append(n)
    else:
        if h == 2:
            raise AssertionError("not_st is vacuous for h = 2")
        inv = pow((s - t) % h, -1, h)
        i = ((t - b) * inv - 1) % h
        if i > h - 3:
            raise AssertionError("not_st congruence landed on s or t")
        kk = h - i - 1
        if n0:
            threshold = b + (h - 3) * s + (h - 1) * t
        for n in _shifted_values_in(family, window):
            if n < threshold:
                continue
            num = n - b - i * s - (h - i - 1) * t
            assert num % h == 0
            dec = decide_kX(family.x_spec(), kk, num // h, budget)
            if dec.status == "out":
                predicted.append(n)
            elif dec.status == "unknown":
                return EscapeReport(
                    b, case, "inconclusive", threshold, tuple(predicted),
                    tuple(comp_ab_list), (), (),
                )

    allowed = f_window | set(predicted)
    ok = all(n in allowed for n in comp_ab if n >= threshold)
    return EscapeReport(
        b,
        case,
        "becomes_basis" if ok else "inconclusive",
        threshold,
        tuple(sorted(predicted)),
        tuple(comp_ab_list),
        (),
        (),
    )


@dataclass(frozen=True)
class YPrimeFilter:
    """Index/value selection of a subset Y' of Y.

    Kinds with a finite Y minus Y' ("all", "drop_values") are the
    co-finite selections; the rest leave infinitely many elements out.
    """

    kind: str  # "none" | "all" | "even_indices" | "odd_indices" | "drop_values" | "keep_values"
    values: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in (
            "none",
            "all",
            "even_indices",
            "odd_indices",
            "drop_values",
            "keep_values",
        ):
            raise DomainConstraint(f"unknown y-prime filter {self.kind!r}")

    def selects(self, index: int, y: int) -> bool:
        if self.kind == "none":
            return False
        if self.kind == "all":
            return True
        if self.kind == "even_indices":
            return index % 2 == 0
        if self.kind == "odd_indices":
            return index % 2 == 1
        if self.kind == "drop_values":
            return y not in self.values
        return y in self.values

    @property
    def complement_is_finite(self) -> bool:
        return self.kind in ("all", "drop_values")


@dataclass(frozen=True)
class AugmentReport:
    filter_kind: str
    verdict: str  # "stays_nonbasis" | "becomes_basis_on_window" | "inconclusive"
    missing_shifted: tuple[int, ...]
    extras: tuple[int, ...]
    leftover: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "filter_kind": self.filter_kind,
            "verdict": self.verdict,
            "missing_shifted": list(self.missing_shifted),
            "extras": list(self.extras),
            "leftover": list(self.leftover),
        }


def augment_check(
    family: Family,
    yprime: YPrimeFilter,
    window: Window,
    budget_probes: int = DEFAULT_BUDGET,
) -> AugmentReport:
    """Adjoin B = {h*y' + t : y' in Y'} and see what the complement keeps.

    Shifted images of the dropped part of Y must survive in the complement
    for the augmented set to stay a nonbasis; a co-finite Y' leaves only
    finitely many of them plus exceptional-set residue.
    """
    if not family.is_gapped:
        raise GcdViolation("augment check applies to gapped families only")
    h, s, t = family.h, family.s, family.t
    # Over Z, adjoined elements above the window can still reach it with
    # negative partners, so B is collected across the whole oracle source.
    src_hi = window.hi if family.domain == DOMAIN_N0 else _z_source(family, window).hi
    ymax = max((src_hi - t) // h, 0)
    selected_b: list[int] = []
    dropped_shifted: set[int] = set()
    for idx, y in gapset.indexed_elements_in(family.y, Window(0, ymax)):
        if yprime.selects(idx, y):
            selected_b.append(h * y + t)
        else:
            n = family.shifted_y_value(y)
            if window.contains(n):
                dropped_shifted.add(n)

    fa, fab = _oracle_pair_with(family, selected_b, window)
    comp_a = set(fa.dense.complement().members())
    comp_ab_list = fab.dense.complement().members()
    comp_ab = set(comp_ab_list)
    shifted_all = set(_shifted_values_in(family, window))
    f_window = comp_a - shifted_all

    beyond_f = comp_ab - f_window
    missing = sorted(beyond_f & dropped_shifted)
    extras = sorted(beyond_f - dropped_shifted)

    if extras:
        verdict = "inconclusive"
    elif yprime.complement_is_finite:
        verdict = "becomes_basis_on_window"
    else:
        verdict = "stays_nonbasis" if missing else "becomes_basis_on_window"
    return AugmentReport(
        yprime.kind,
        verdict,
        tuple(missing[:64]),
        tuple(extras[:64]),
        tuple(comp_ab_list),
    )


@dataclass(frozen=True)
class LemmaReport:
    bad_u: tuple[int, ...]
    threshold: int
    complement: tuple[int, ...]
    covered_above_threshold: bool
    predicted_complement: tuple[int, ...] | None
    matches_prediction: bool | None

    def as_dict(self) -> dict:
        return {
            "bad_u": list(self.bad_u),
            "threshold": self.threshold,
            "complement": list(self.complement),
            "covered_above_threshold": self.covered_above_threshold,
            "predicted_complement": (
                None
                if self.predicted_complement is None
                else list(self.predicted_complement)
            ),
            "matches_prediction": self.matches_prediction,
        }


def lemma_basis_check(
    gen: gapset.GapGenerator, h: int, window: Window
) -> LemmaReport:
    """Check that X0 = N0 minus Y is a basis of order h above a threshold.

    The u with at least two of {u-1, u, u+1, u+2} in Y are finite and
    computed from the close-pair radius; above 2*(max bad u + 1), plus
    (h-2) copies of the smallest X element for h > 2, the sumset has to
    cover everything.  The oracle complement is compared against that, and
    for h = 2 against the exhaustively predicted miss set.
    """
    if h < 2:
        raise DomainConstraint(f"lemma check needs h >= 2, got {h}")
    if window.lo < 0:
        raise DomainConstraint("lemma check runs over N0 windows")
    r3 = gapset.gap_radius(gen, 3)
    bad = []
    for u in range(0, r3 + 3):
        hits = sum(
            1 for v in (u - 1, u, u + 1, u + 2) if v >= 0 and gapset.is_member(gen, v)
        )
        if hits >= 2:
            bad.append(u)
    max_bad = max(bad, default=0)
    thr2 = 2 * (max_bad + 1)
    x0 = 0
    while gapset.is_member(gen, x0):
        x0 += 1
    threshold = thr2 + (h - 2) * x0

    xspec = Diff(ModClassNonneg(1, 0), GapTail(gen))
    src = Window(0, window.hi)
    dense = intset.materialize(xspec, src)
    folded = sumset.hfold_exact_bounded_below(dense, h, target=window)
    comp = folded.dense.complement().members()
    covered = all(c < threshold for c in comp)

    predicted = None
    matches = None
    if h == 2:
        predicted = []
        for m in range(window.lo, min(threshold, window.hi + 1)):
            if not any(
                not gapset.is_member(gen, x) and not gapset.is_member(gen, m - x)
                for x in range(0, m // 2 + 1)
            ):
                predicted.append(m)
        matches = comp == predicted
        predicted = tuple(predicted)
    return LemmaReport(
        tuple(bad), threshold, tuple(comp), covered, predicted, matches
    )
