"""Command-line front end: batch verification and one-off computations.

Exit codes: 0 all checks pass, 1 any check or semantic operation fails,
2 on malformed input or a resource-bound abort. The CLI holds no
mathematical logic; every computation is a library call.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blowup import BlowupError, FLAVORS, build_blowup, membership
from .centralizer import CentralizerError, MODEL_NAMES, isogeny_invariants, model, model_kernel
from .fractions import parse_fraction
from .fusion import FusionRangeError, fusion_table
from .groebner import Ideal, ResourceLimitError
from .kring import KRing, KRingError
from .poisson import standard_chart
from .poly import PolyParseError, parse_poly
from .reports import Config
from .rootdata import sl2
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subparser's unset copy of a shared flag from clobbering
    # a value given before the subcommand
    S = argparse.SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=S, help="JSON config file")
    common.add_argument("--output", choices=("json", "csv", "text"), default=S, help="output format")
    common.add_argument("--seed", type=int, default=S, help="seed for randomized property checks")
    common.add_argument("--degree-bound", type=int, dest="degree_bound", default=S)
    common.add_argument("--term-cap", type=int, dest="term_cap", default=S)
    common.add_argument(
        "--timing", action="store_true", default=S, help="report real timings (nondeterministic)"
    )

    parser = argparse.ArgumentParser(
        prog="blowring",
        description="Exact verification of blow-up algebra, centralizer-model and convolution-ring identities.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite", parents=[common])
    v.add_argument("suite", choices=SUITES)
    v.add_argument(
        "--corrupt",
        help="test hook: perturb one relation coefficient (e.g. kring, homology, "
        "centralizer:S, blowup:GG); the suite must then fail",
    )

    c = sub.add_parser("compute", help="run one computation", parents=[common])
    c.add_argument(
        "task", choices=("kernel", "invariants", "multiply", "bracket", "membership", "table", "closure")
    )
    c.add_argument("args", nargs="*", help="positional element arguments")
    c.add_argument("--model", choices=MODEL_NAMES + ("S'",))
    c.add_argument("--flavor", choices=FLAVORS)
    c.add_argument("--presentation", choices=("abstract", "localized", "blowup"), default="abstract")
    c.add_argument("--which", default="iota", help="comma-separated involutions for invariants")
    c.add_argument("--kind", choices=("odin", "dva", "tri"))
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--kappa", type=int, default=1)
    return parser


def make_config(args) -> Config:
    config_path = getattr(args, "config", None)
    cfg = Config.from_file(config_path) if config_path else Config()
    for field in ("output", "seed", "degree_bound", "term_cap", "timing"):
        value = getattr(args, field, None)
        if value is not None:
            setattr(cfg, field, value)
    return Config(**vars(cfg))  # revalidate


def cmd_verify(args, cfg: Config) -> int:
    report = run_suite(args.suite, cfg, corrupt=args.corrupt)
    print(report.render(cfg.output))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_compute(args, cfg: Config) -> int:
    task = args.task
    if task == "kernel":
        return _compute_kernel(args, cfg)
    if task == "invariants":
        return _compute_invariants(args, cfg)
    if task == "multiply":
        return _compute_multiply(args, cfg)
    if task == "bracket":
        return _compute_bracket(args, cfg)
    if task == "membership":
        return _compute_membership(args, cfg)
    if task == "table":
        return _compute_table(args, cfg)
    if task == "closure":
        return _compute_closure(args, cfg)
    raise AssertionError(task)


def _require(condition, message):
    if not condition:
        raise UsageError(message)


class UsageError(ValueError):
    pass


def _compute_kernel(args, cfg) -> int:
    _require(args.model, "kernel requires --model")
    m = model(args.model)
    kernel = model_kernel(m)
    gb = kernel.groebner()
    if m.relation is not None:
        expected = Ideal(kernel.ring, [m.relation.with_vars(kernel.ring.vars)])
        if [str(g) for g in gb] == [str(g) for g in expected.groebner()]:
            _emit(cfg, m.relation_str, {"model": m.name, "kernel": [m.relation_str]})
            return EXIT_OK
        _emit(cfg, "; ".join(str(g) for g in gb), {"model": m.name, "kernel": [str(g) for g in gb]})
        return EXIT_FAIL
    body = "; ".join(str(g) for g in gb) or "0"
    _emit(cfg, body, {"model": m.name, "kernel": [str(g) for g in gb]})
    return EXIT_OK


def _compute_invariants(args, cfg) -> int:
    _require(args.model, "invariants requires --model")
    which = tuple(w for w in args.which.split(",") if w)
    gens = isogeny_invariants(model(args.model), which, degree_bound=cfg.degree_bound)
    _emit(cfg, ", ".join(str(g) for g in gens), {"model": args.model, "generators": [str(g) for g in gens]})
    return EXIT_OK


def _compute_multiply(args, cfg) -> int:
    _require(len(args.args) == 2, "multiply requires two element arguments")
    K = KRing()
    values = []
    for text in args.args:
        if args.presentation == "abstract":
            values.append(parse_poly(text, vars=("a", "b", "c")))
        elif args.presentation == "localized":
            values.append(K.localized_to_abstract(parse_fraction(text)))
        else:
            values.append(K.blowup_to_abstract(parse_poly(text)))
    product = K.ring.nf(values[0] * values[1]).with_vars(("a", "b", "c"))
    result = K.convert(product, "abstract", args.presentation)
    _emit(cfg, str(result), {"presentation": args.presentation, "product": str(result)})
    return EXIT_OK


def _compute_bracket(args, cfg) -> int:
    _require(args.flavor, "bracket requires --flavor")
    _require(len(args.args) == 2, "bracket requires two fraction arguments")
    B = build_blowup(sl2(), args.flavor, term_cap=cfg.term_cap)
    chart = standard_chart(B, args.kappa)
    f = parse_fraction(args.args[0])
    g = parse_fraction(args.args[1])
    br = chart.bracket(f, g)
    res = membership(br, B) if not br.is_zero() else None
    payload = {
        "flavor": args.flavor,
        "bracket": str(br),
        "member": True if res is None else res.member,
        "certificate": "0" if res is None else str(res.certificate),
    }
    _emit(cfg, f"{br}  [member={payload['member']}]", payload)
    return EXIT_OK


def _compute_closure(args, cfg) -> int:
    _require(args.flavor, "closure requires --flavor")
    from .poisson import bracket_closure_check

    B = build_blowup(sl2(), args.flavor, term_cap=cfg.term_cap)
    report = bracket_closure_check(B, kappa=args.kappa)
    data = report.to_dict()
    if cfg.output == "json":
        print(json.dumps(data, indent=2))
    else:
        for p in data["pairs"]:
            print(f"{{{p['f']}, {p['g']}}} = {p['bracket']}  member={p['member']}")
        print(f"passed={data['passed']}")
    return EXIT_OK if data["passed"] else EXIT_FAIL


def _compute_membership(args, cfg) -> int:
    _require(args.flavor, "membership requires --flavor")
    _require(len(args.args) == 1, "membership requires one fraction argument")
    B = build_blowup(sl2(), args.flavor, term_cap=cfg.term_cap)
    res = membership(parse_fraction(args.args[0]), B)
    payload = {
        "flavor": args.flavor,
        "member": res.member,
        "certificate": str(res.certificate) if res.certificate is not None else None,
    }
    _emit(cfg, f"member={res.member} certificate={payload['certificate']}", payload)
    return EXIT_OK if res.member else EXIT_FAIL


def _compute_table(args, cfg) -> int:
    _require(args.kind, "table requires --kind")
    params = {}
    if args.kind == "tri":
        _require(args.a is not None and args.b is not None and args.l is not None,
                 "tri requires --a --b --l")
        params = {"a": args.a, "b": args.b, "l": args.l}
    else:
        _require(args.n is not None and args.l is not None, f"{args.kind} requires --n --l")
        params = {"n": args.n, "l": args.l}
    exp = fusion_table(args.kind, **params)
    if cfg.output == "csv":
        rows = ["kind,params,coeff_q_power,n,m"]
        ptxt = ";".join(f"{k}={v}" for k, v in exp.params.items())
        for t in exp.terms:
            rows.append(f"{exp.kind},{ptxt},{t.q_power},{t.v.n},{t.v.m}")
        print("\n".join(rows))
        if exp.ambiguous:
            print(f"# ambiguous: {exp.note}", file=sys.stderr)
        return EXIT_OK
    payload = {
        "kind": exp.kind,
        "params": exp.params,
        "lhs": exp.lhs_str(),
        "terms": [{"q_power": t.q_power, "n": t.v.n, "m": t.v.m} for t in exp.terms],
        "ambiguous": exp.ambiguous,
        "note": exp.note,
    }
    _emit(cfg, str(exp), payload)
    return EXIT_OK


def _emit(cfg: Config, text: str, payload: dict):
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        # argparse cannot intermix options with trailing element positionals
        # inside a subparser; collect the leftovers ourselves
        args, extra = parser.parse_known_args(argv)
        if args.command == "compute":
            args.args = list(getattr(args, "args", ())) + extra
        elif extra:
            print(f"error: unrecognized arguments {extra}", file=sys.stderr)
            return EXIT_ERROR
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = make_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        if args.command == "verify":
            return cmd_verify(args, cfg)
        return cmd_compute(args, cfg)
    except (UsageError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (BlowupError, CentralizerError, KRingError, FusionRangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
