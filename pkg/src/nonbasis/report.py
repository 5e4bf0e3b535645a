"""Preset verification runs and the shared report shape.

A report is a plain dict with stable key order:

    {"family": {...}, "window": [lo, hi], "catalog": {...} | null,
     "checks": [{"name", "status", "details"}, ...]}

so identical configurations serialize to byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import gapset, grammar, intset, sumset, verify
from .families import DOMAIN_N0, DOMAIN_Z, Family, Params, build_full, gcd_case
from .intset import Window

PASS = "pass"
FAIL = "fail"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    details: str

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


def check(name: str, ok: bool, details: str) -> Check:
    return Check(name, PASS if ok else FAIL, details)


def family_to_dict(family: Family) -> dict:
    return {
        "h": family.h,
        "s": family.s,
        "t": family.t,
        "domain": family.domain,
        "gap": None if family.y is None else grammar.format_generator(family.y),
        "spec": grammar.format_spec(family.spec),
    }


def report_dict(
    family: dict | None,
    window: Window | None,
    catalog: verify.Catalog | None,
    checks: list[Check],
) -> dict:
    return {
        "family": family,
        "window": None if window is None else [window.lo, window.hi],
        "catalog": None if catalog is None else catalog.as_dict(),
        "checks": [c.as_dict() for c in checks],
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def format_ranges(values: list[int]) -> str:
    """Compact run notation for a sorted integer list: "3-6,9-10,17"."""
    if not values:
        return "(empty)"
    parts = []
    start = prev = values[0]
    for v in values[1:]:
        if v == prev + 1:
            prev = v
            continue
        parts.append(f"{start}-{prev}" if prev > start else f"{start}")
        start = prev = v
    parts.append(f"{start}-{prev}" if prev > start else f"{start}")
    return ",".join(parts)


def render_text(report: dict) -> str:
    lines = []
    fam = report.get("family")
    if fam:
        bits = [f"{k}={fam[k]}" for k in ("h", "s", "t", "domain") if fam.get(k) is not None]
        lines.append("family: " + " ".join(bits))
        if fam.get("gap"):
            lines.append(f"gap: {fam['gap']}")
        if fam.get("spec"):
            lines.append(f"spec: {fam['spec']}")
    if report.get("window"):
        lo, hi = report["window"]
        lines.append(f"window: {lo}:{hi}")
    cat = report.get("catalog")
    if cat is not None:
        whole = sorted(cat["shifted_y"] + cat["exceptional"] + cat["unknown"])
        lines.append(f"complement: {format_ranges(whole)}")
        lines.append(f"  shifted_y:   {cat['shifted_y']}")
        lines.append(f"  exceptional: {cat['exceptional']}")
        lines.append(f"  unknown:     {cat['unknown']}")
    for c in report.get("checks", []):
        lines.append(f"[{c['status']:>7}] {c['name']}: {c['details']}")
    return "\n".join(lines) + "\n"


def exit_code(checks: list[Check]) -> int:
    if any(c.status == FAIL for c in checks):
        return 1
    if any(c.status == UNKNOWN for c in checks):
        return 3
    return 0


def _z_source(params: Params, window: Window) -> Window:
    h, s, t = params.h, params.s, params.t
    slack = h * (abs(s) + abs(t) + h + 2)
    reach = max(abs(window.lo), abs(window.hi))
    return Window(-(reach + slack), reach + slack)


def full_family_oracle(params: Params, window: Window) -> sumset.SumsetResult:
    fam = build_full(params)
    if params.domain == DOMAIN_N0:
        dense = intset.materialize(fam.spec, Window(0, window.hi))
        return sumset.hfold_exact_bounded_below(dense, params.h, target=window)
    dense = intset.materialize(fam.spec, _z_source(params, window))
    return sumset.hfold_truncated(dense, params.h, target=window)


def residue_class_bits(window: Window, h: int, r: int) -> int:
    return intset.materialize(intset.ModClass(h, r), window).bits


def dichotomy_checks(params: Params, window: Window) -> list[Check]:
    """The gcd dichotomy against the oracle on a window.

    d >= 2: the sumset touches no residue class outside the h/d admissible
    ones, so at least h(d-1)/d classes are missed entirely.  d = 1: the
    complement above (h-1)|s-t| + ht is empty (exactly, for N0; for Z the
    truncated oracle must cover the whole window).
    """
    h, s, t = params.h, params.s, params.t
    case = gcd_case(h, s, t)
    oracle = full_family_oracle(params, window)
    checks = []
    if case.d >= 2:
        allowed = {(i * (s - t) + h * t) % h for i in range(h)}
        bad_mask = 0
        for c in range(h):
            if c not in allowed:
                bad_mask |= residue_class_bits(window, h, c)
        ok_bad = oracle.dense.bits & bad_mask == 0
        missed = [
            c
            for c in range(h)
            if oracle.dense.bits & residue_class_bits(window, h, c) == 0
        ]
        need = h * (case.d - 1) // case.d
        checks.append(
            check(
                "residue_obstruction",
                ok_bad,
                f"d={case.d}; sumset avoids all {h - len(allowed)} inadmissible classes mod {h}",
            )
        )
        checks.append(
            check(
                "missed_classes",
                len(missed) >= need,
                f"missed {len(missed)} of {h} classes, need >= {need}",
            )
        )
    else:
        thr = (h - 1) * abs(s - t) + h * t
        comp = oracle.dense.complement().members()
        if params.domain == DOMAIN_N0:
            above = [n for n in comp if n >= thr]
            checks.append(
                check(
                    "coverage_above_threshold",
                    not above,
                    f"complement meets [{thr}, {window.hi}] in {len(above)} points",
                )
            )
        else:
            checks.append(
                check(
                    "full_coverage",
                    not comp,
                    f"truncated oracle misses {len(comp)} window points",
                )
            )
    return checks


def uniqueness_check(params: Params, cap_hi: int) -> Check:
    """Representation multiplicity along n = t-s (mod h) above the threshold.

    Each such n in the safe region must have exactly one multiset
    representation against the truncated set; checked for the whole region
    at once with the saturating-multiplicity sweep.
    """
    h, s, t = params.h, params.s, params.t
    if gcd_case(h, s, t).d != 1:
        return Check("uniqueness", FAIL, "gcd case is not 1")
    fam = build_full(params)
    pad = (h + 1) * (abs(s) + abs(t) + 1) + h
    # The canonical representation of every checked n fits inside
    # [-pad, cap_hi + pad]; any second multiset inside the truncation would
    # already disprove uniqueness, so a modest truncation is a fair test.
    if params.domain == DOMAIN_N0:
        src = Window(0, cap_hi + pad)
    else:
        src = Window(-pad, cap_hi + pad)
    dense = intset.materialize(fam.spec, src)
    ge1, ge2 = sumset.multiplicity_pair(dense, h, cap_hi)
    base = h * src.lo
    thr = (h - 1) * abs(s - t) + h * t
    start = thr + ((t - s) - thr) % h
    checked = bad = 0
    first_bad = None
    for n in range(start, cap_hi + 1, h):
        rel = n - base
        if rel < 0:
            continue
        one = (ge1 >> rel) & 1
        two = (ge2 >> rel) & 1
        checked += 1
        if not one or two:
            bad += 1
            if first_bad is None:
                first_bad = n
    if checked == 0:
        return Check("uniqueness", UNKNOWN, f"no residues in [{start}, {cap_hi}]")
    return check(
        "uniqueness",
        bad == 0,
        f"{checked} residues checked in [{start}, {cap_hi}]"
        + (f"; first failure at {first_bad}" if first_bad is not None else ""),
    )


def lemma_checks(gen: gapset.GapGenerator, h: int, window: Window) -> list[Check]:
    rep = verify.lemma_basis_check(gen, h, window)
    checks = [
        Check(
            "bad_u_finite",
            PASS,
            f"bad u set {list(rep.bad_u)}; threshold {rep.threshold}",
        ),
        check(
            "covered_above_threshold",
            rep.covered_above_threshold,
            f"oracle complement {format_ranges(list(rep.complement))}",
        ),
    ]
    if rep.matches_prediction is not None:
        checks.append(
            check(
                "prediction_matches",
                bool(rep.matches_prediction),
                f"predicted {list(rep.predicted_complement or ())}",
            )
        )
    return checks


def sample_escape_bs(family: Family, per_case: int, hi: int) -> dict[str, list[int]]:
    """Deterministic b samples per residue case, all outside A."""
    h, s, t = family.h, family.s, family.t
    n0 = family.domain == DOMAIN_N0
    out: dict[str, list[int]] = {"not_st": [], "eq_s": [], "eq_t": []}
    u = 1
    while len(out["eq_s"]) < per_case and h * u + s <= hi:
        for cand in (s + h * u, s - h * u):
            if len(out["eq_s"]) >= per_case:
                break
            if cand <= hi and (cand >= 0 or not n0) and cand != s:
                out["eq_s"].append(cand)
        u += 1
    if family.y is not None:
        for y in gapset.elements_in(family.y, Window(0, (hi - t) // h)):
            if len(out["eq_t"]) >= per_case:
                break
            out["eq_t"].append(h * y + t)
    if h >= 3:
        classes = [c for c in range(h) if c != s % h and c != t % h]
        b = 0
        while len(out["not_st"]) < per_case and b <= hi:
            if b % h in classes and (b >= 0 or not n0):
                out["not_st"].append(b)
            b += 1
    return out


def escape_checks(
    family: Family,
    window: Window,
    per_case: int = 3,
    budget_probes: int = verify.DEFAULT_BUDGET,
) -> list[Check]:
    samples = sample_escape_bs(family, per_case, window.hi // 2)
    checks = []
    for case, expected in (
        ("not_st", "becomes_basis"),
        ("eq_s", "becomes_basis"),
        ("eq_t", "stays_nonbasis"),
    ):
        for b in samples[case]:
            rep = verify.escape_check(family, b, window, budget_probes)
            status = PASS if rep.verdict == expected else (
                UNKNOWN if rep.verdict == "inconclusive" else FAIL
            )
            detail = f"verdict {rep.verdict}"
            if rep.predicted_exceptions:
                detail += f", predicted exceptions {list(rep.predicted_exceptions)}"
            if case == "eq_t":
                detail += f", adds {list(rep.added)}"
            checks.append(Check(f"escape_{case}_b{b}", status, detail))
    return checks


def augment_checks(
    family: Family,
    window: Window,
    budget_probes: int = verify.DEFAULT_BUDGET,
) -> list[Check]:
    checks = []
    even = verify.augment_check(
        family, verify.YPrimeFilter("even_indices"), window, budget_probes
    )
    checks.append(
        check(
            "augment_even_indices",
            even.verdict == "stays_nonbasis",
            f"verdict {even.verdict}; missing {list(even.missing_shifted[:8])}",
        )
    )
    first_y = next(gapset.values(family.y))
    drop = verify.augment_check(
        family, verify.YPrimeFilter("drop_values", (first_y,)), window, budget_probes
    )
    checks.append(
        check(
            "augment_cofinite",
            drop.verdict == "becomes_basis_on_window",
            f"verdict {drop.verdict}; leftover {format_ranges(list(drop.leftover))}",
        )
    )
    return checks


def catalog_checks(
    family: Family,
    window: Window,
    budget_probes: int = verify.DEFAULT_BUDGET,
) -> tuple[verify.Catalog, list[Check]]:
    """Complement characterization plus certificate hygiene on a window."""
    n0 = family.domain == DOMAIN_N0
    checks = []
    try:
        catalog = verify.complement_catalog(
            family, window, budget_probes, crosscheck=n0
        )
        agree = True
        agree_detail = "classification agrees with the oracle pointwise"
    except AssertionError as exc:  # oracle/classify contradiction
        catalog = verify.Catalog((), (), ())
        agree = False
        agree_detail = str(exc)
    checks.append(check("oracle_agreement", agree, agree_detail))
    if not agree:
        return catalog, checks

    predicted = [
        n for n in verify._shifted_values_in(family, window) if n >= window.lo
    ]
    checks.append(
        check(
            "shifted_y_match",
            list(catalog.shifted_y) == predicted,
            f"{len(catalog.shifted_y)} shifted-Y complement points",
        )
    )
    checks.append(
        check(
            "disjoint_partition",
            not (set(catalog.shifted_y) & set(catalog.exceptional)),
            "shifted-Y and exceptional parts are disjoint",
        )
    )
    no_unknown = Check(
        "no_unknowns",
        PASS if not catalog.unknown else UNKNOWN,
        f"{len(catalog.unknown)} unclassified complement points",
    )
    checks.append(no_unknown)
    if n0:
        bound = verify.exceptional_bound(family)
        checks.append(
            check(
                "exceptional_within_bound",
                all(n <= bound for n in catalog.exceptional),
                f"exceptional set {format_ranges(list(catalog.exceptional))} "
                f"within certified bound {bound}",
            )
        )
    else:
        checks.append(
            Check(
                "window_relative_f",
                PASS,
                "exceptional entries carry per-entry Out certificates and are "
                "relative to this window",
            )
        )
    return catalog, checks


def stability_check(family: Family, window: Window) -> Check:
    """Z-case: the windowed complement must not move when the truncation grows."""
    h = family.h
    small = verify._z_source(family, window)
    big = Window(small.lo * 2, small.hi * 2)
    comps = []
    for src in (small, big):
        dense = intset.materialize(family.spec, src)
        folded = sumset.hfold_truncated(dense, h, target=window)
        comps.append(folded.dense.complement().members())
    return check(
        "truncation_stability",
        comps[0] == comps[1],
        f"complement stable across source radii {small.hi} and {big.hi}",
    )
