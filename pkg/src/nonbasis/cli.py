"""Command-line front door: construct families, compute sumsets, verify theorems.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid parameters,
3 Unknown verdicts present.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import grammar, intset, report, sumset, verify
from .errors import NonbasisError
from .families import DOMAIN_N0, DOMAIN_Z, Family, Params, build_full, build_gapped, gcd_case
from .intset import Window

_PRESET_DOMAIN = {"thm1": DOMAIN_Z, "thm2": DOMAIN_Z, "thm3": DOMAIN_N0, "thm4": DOMAIN_N0}
_PRESET_WINDOW = {
    "thm1": "-2000:2000",
    "thm2": "-1000:1000",
    "thm3": "0:2000",
    "thm4": "0:20000",
    "lemma": "0:20000",
}


def _parse_window(text: str) -> Window:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise NonbasisError(f"window must look like LO:HI, got {text!r}")
    try:
        return Window(int(lo), int(hi))
    except ValueError as exc:
        raise NonbasisError(f"bad window {text!r}: {exc}") from exc


def _add_family_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--h", type=int, required=True, help="order of the sumset")
    p.add_argument("--s", type=int, required=required, help="the singleton element")
    p.add_argument("--t", type=int, required=required, help="offset of the h-progression")
    p.add_argument(
        "--domain",
        choices=[DOMAIN_Z, DOMAIN_N0],
        required=required,
        help="carrier: z or n0",
    )
    p.add_argument("--gap", help="gap generator literal, e.g. geometric,2,1")


def _add_io_args(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--budget", type=int, default=None, help="probe budget per decision")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nonbasis",
        description="Construct nonbasis families, compute h-fold sumsets, "
        "and verify their structure on integer windows.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family and print its spec")
    _add_family_args(p)
    _add_io_args(p)

    p = sub.add_parser("sumset", help="brute-force h-fold sumset on a window")
    _add_family_args(p, required=False)
    p.add_argument("--spec", help="set spec literal instead of family parameters")
    p.add_argument("--fold", type=int, help="fold count (defaults to --h)")
    p.add_argument("--window", required=True, help="target window LO:HI")
    p.add_argument("--source", help="source window LO:HI (defaults to target)")
    _add_io_args(p)

    p = sub.add_parser("classify", help="membership verdict for one integer")
    _add_family_args(p)
    p.add_argument("--n", type=int, required=True)
    _add_io_args(p)

    p = sub.add_parser("catalog", help="complement catalog on a window")
    _add_family_args(p)
    p.add_argument("--window", required=True)
    _add_io_args(p)

    p = sub.add_parser("verify", help="run a theorem verification preset")
    p.add_argument("preset", choices=["thm1", "lemma", "thm2", "thm3", "thm4"])
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--domain", choices=[DOMAIN_Z, DOMAIN_N0])
    p.add_argument("--gap")
    p.add_argument("--window")
    _add_io_args(p)
    return ap


def _family_from_args(args, domain: str | None = None) -> Family:
    dom = domain or args.domain
    params = Params(args.h, args.s, args.t, dom)
    if args.gap:
        return build_gapped(params, grammar.parse_generator(args.gap))
    return build_full(params)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("NONBASIS_BUDGET")
    return int(env) if env else verify.DEFAULT_BUDGET


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(args, rep: dict) -> str:
    return report.render_json(rep) if args.format == "json" else report.render_text(rep)


def _cmd_construct(args) -> int:
    fam = _family_from_args(args)
    rep = report.report_dict(report.family_to_dict(fam), None, None, [])
    _emit(args, _render(args, rep))
    return 0


def _cmd_sumset(args) -> int:
    target = _parse_window(args.window)
    h = args.fold if args.fold is not None else args.h
    if args.spec:
        spec = grammar.parse_spec(args.spec)
        fam_dict = {"h": h, "s": None, "t": None, "domain": args.domain, "gap": None,
                    "spec": grammar.format_spec(spec)}
        bounded_below = False
    else:
        if args.s is None or args.t is None or args.domain is None:
            raise NonbasisError("sumset needs either --spec or full family parameters")
        fam = _family_from_args(args)
        spec = fam.spec
        fam_dict = report.family_to_dict(fam)
        bounded_below = fam.domain == DOMAIN_N0
    source = _parse_window(args.source) if args.source else target
    dense = intset.materialize(spec, source)
    if bounded_below and source.lo >= 0:
        safe_hi = source.hi + (h - 1) * source.lo
        tgt = Window(max(target.lo, h * source.lo), min(target.hi, safe_hi))
        result = sumset.hfold_exact_bounded_below(dense, h, target=tgt)
    else:
        result = sumset.hfold_truncated(dense, h, target=target)
    members = result.members()
    rep = {
        "family": fam_dict,
        "window": [result.target.lo, result.target.hi],
        "source": [source.lo, source.hi],
        "h": h,
        "exactness": result.exactness,
        "count": len(members),
        "ranges": report.format_ranges(members),
    }
    if args.format == "json":
        _emit(args, report.render_json(rep))
    else:
        _emit(
            args,
            f"{h}-fold sumset on {result.target.lo}:{result.target.hi} "
            f"({result.exactness})\nmembers: {report.format_ranges(members)}\n",
        )
    return 0


def _verdict_dict(v: verify.Verdict) -> dict:
    if isinstance(v, verify.InSumset):
        return {"kind": "in_sumset", "s_count": v.s_count, "xs": list(v.xs)}
    if isinstance(v, verify.OutShiftedY):
        return {"kind": "out_shifted_y", "y": v.y}
    if isinstance(v, verify.OutExceptional):
        return {"kind": "out_exceptional", "tag": v.tag}
    return {"kind": "unknown", "reason": v.reason}


def _cmd_classify(args) -> int:
    fam = _family_from_args(args)
    verdict = verify.classify(fam, args.n, verify.Budget(_budget(args)))
    rep = {
        "family": report.family_to_dict(fam),
        "n": args.n,
        "verdict": _verdict_dict(verdict),
    }
    if args.format == "json":
        _emit(args, report.render_json(rep))
    else:
        _emit(args, f"n={args.n}: {_verdict_dict(verdict)}\n")
    return 3 if isinstance(verdict, verify.Unknown) else 0


def _cmd_catalog(args) -> int:
    fam = _family_from_args(args)
    window = _parse_window(args.window)
    catalog, checks = report.catalog_checks(fam, window, _budget(args))
    rep = report.report_dict(report.family_to_dict(fam), window, catalog, checks)
    _emit(args, _render(args, rep))
    return report.exit_code(checks)


def _cmd_verify(args) -> int:
    preset = args.preset
    window = _parse_window(args.window or _PRESET_WINDOW[preset])
    budget = _budget(args)

    if preset == "lemma":
        if not args.gap:
            raise NonbasisError("verify lemma needs --gap")
        gen = grammar.parse_generator(args.gap)
        checks = report.lemma_checks(gen, args.h, window)
        fam_dict = {"h": args.h, "s": None, "t": None, "domain": DOMAIN_N0,
                    "gap": grammar.format_generator(gen), "spec": None}
        rep = report.report_dict(fam_dict, window, None, checks)
        _emit(args, _render(args, rep))
        return report.exit_code(checks)

    domain = _PRESET_DOMAIN[preset]
    if args.domain and args.domain != domain:
        raise NonbasisError(f"preset {preset} runs over domain {domain!r}")
    if args.s is None or args.t is None:
        raise NonbasisError(f"preset {preset} needs --s and --t")

    if preset in ("thm1", "thm3"):
        params = Params(args.h, args.s, args.t, domain)
        checks = report.dichotomy_checks(params, window)
        if gcd_case(args.h, args.s, args.t).d == 1:
            checks.append(report.uniqueness_check(params, min(window.hi, 4000)))
        fam = build_full(params)
        rep = report.report_dict(report.family_to_dict(fam), window, None, checks)
        _emit(args, _render(args, rep))
        return report.exit_code(checks)

    # thm2 / thm4: gapped complement structure, escapes, augmentation
    if not args.gap:
        raise NonbasisError(f"preset {preset} needs --gap")
    fam = _family_from_args(args, domain)
    catalog, checks = report.catalog_checks(fam, window, budget)
    if preset == "thm2":
        checks.append(report.stability_check(fam, window))
    checks.extend(report.escape_checks(fam, window, per_case=3, budget_probes=budget))
    checks.extend(report.augment_checks(fam, window, budget))
    rep = report.report_dict(report.family_to_dict(fam), window, catalog, checks)
    _emit(args, _render(args, rep))
    return report.exit_code(checks)


_DISPATCH = {
    "construct": _cmd_construct,
    "sumset": _cmd_sumset,
    "classify": _cmd_classify,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except NonbasisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
