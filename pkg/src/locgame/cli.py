"""Command line interface: ``locgame <subcommand> ...``.

Exit status: 0 success, 1 a negative answer (invalid design, counterexample,
failed replay), 2 usage errors, 3 budget exhaustion.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .designs import incidence_graph, validate_bibd, validate_steiner
from .errors import LocGameError, NotApplicable
from .formats import (
    FORMAT_LINE,
    FormatError,
    format_design,
    format_graph,
    is_graph_text,
    parse_design,
    parse_graph,
)
from .game import BUDGET_EXHAUSTED, PROVEN, RandomAdversary, play, verify_strategy_exhaustive
from .generators import (
    affine_plane,
    derive_td_from_affine,
    derive_td_from_pp,
    find_groups,
    find_resolution,
    projective_plane,
    sqs_boolean,
    sts,
    transversal_design,
)
from .solver import (
    COPS_WIN,
    ROBBER_WINS,
    UNKNOWN,
    can_win,
    certificate_lines,
    parse_certificate,
    replay_certificate,
)
from .strategies import (
    affine_strategy,
    bounds_report,
    f_of_design,
    f_value,
    general_bibd_strategy,
    near_symmetric_strategy,
    sqs_strategy,
    steiner_matching_strategy,
    sts_half_strategy,
    sts_matching_strategy,
    symmetric_strategy,
    td_strategy,
    two_design_strategy,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _affine(design):
    ap = find_resolution(design)
    if ap is None:
        raise NotApplicable("no resolution into parallel classes")
    return affine_strategy(ap)


def _td(design):
    td = find_groups(design)
    if td is None:
        raise NotApplicable("not a transversal design")
    return td_strategy(td)


# name -> (tag, builder)
THEOREMS = {
    "two-design": ("Cor2.5", two_design_strategy),
    "general-bibd": ("Thm2.4", general_bibd_strategy),
    "symmetric": ("Thm3.2", symmetric_strategy),
    "near-symmetric": ("Thm3.4", near_symmetric_strategy),
    "affine": ("Thm3.6", _affine),
    "sts-half": ("Thm4.2", sts_half_strategy),
    "sts-matching": ("Thm4.3", sts_matching_strategy),
    "sqs": ("Thm4.5", sqs_strategy),
    "steiner-matching": ("Thm4.6", steiner_matching_strategy),
    "td": ("Thm5.1", _td),
}
_BY_TAG = {tag.lower(): name for name, (tag, _) in THEOREMS.items()}
_BY_TAG["thm2.2"] = "two-design"


def _theorem(name: str):
    key = name.lower()
    key = _BY_TAG.get(key, key)
    if key not in THEOREMS:
        raise UsageError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}")
    return key, THEOREMS[key]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("LOCGAME_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"LOCGAME_THREADS must be an integer, got {env!r}") from exc
    return 1


def _load_graph(text: str, name: str):
    if is_graph_text(text):
        return parse_graph(text, name=name)
    return incidence_graph(parse_design(text), name=name)


# ---------------------------------------------------------------- commands


def cmd_gen(args, out):
    fam, params = args.family, args.params

    def need(count):
        if len(params) != count:
            raise UsageError(f"gen {fam} takes {count} integer parameter(s)")

    if fam == "pp":
        need(1)
        design = projective_plane(params[0])
    elif fam == "ag":
        need(1)
        design = affine_plane(params[0]).design
    elif fam == "sts":
        need(1)
        design = sts(params[0])
    elif fam == "sqs":
        need(1)
        design = sqs_boolean(params[0])
    elif fam == "td":
        need(2)
        design = transversal_design(params[0], params[1]).design
    elif fam == "td-from-pp":
        need(1)
        design = derive_td_from_pp(projective_plane(params[0]), args.point).design
    elif fam == "td-from-ag":
        need(1)
        design = derive_td_from_affine(affine_plane(params[0]), args.parallel_class).design
    else:
        raise UsageError(f"unknown family {fam!r}")
    out.write(format_design(design))
    return EXIT_OK


def cmd_validate(args, out):
    design = parse_design(_read(args.design))
    try:
        params = validate_bibd(design)
    except LocGameError as exc:
        td = find_groups(design)
        if td is not None:
            out.write(f"TD({td.k},{td.n})\n")
            return EXIT_OK
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_NO
    out.write(f"{params}\n")
    for t in range(2, params.k):
        if params.k < params.v and validate_steiner(design, t):
            out.write(f"S({t},{params.k},{params.v})\n")
    return EXIT_OK


def cmd_bounds(args, out):
    design = parse_design(_read(args.design))
    report = bounds_report(design, node_budget=args.budget_states, threads=_threads(args))
    out.write(report.to_json() if args.format == "json" else report.to_text())
    if any(r.verdict == BUDGET_EXHAUSTED for r in report.rows):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_f_value(args, out):
    design = parse_design(_read(args.design))
    validate_bibd(design)
    out.write(FORMAT_LINE + "\n")
    for u in range(design.v):
        out.write(f"f({u}) {f_value(design, u)}\n")
    out.write(f"f(G) {f_of_design(design)}\n")
    return EXIT_OK


def cmd_solve(args, out):
    if args.k is None and args.k_max is None:
        raise UsageError("solve needs --k or --k-max")
    text = _read(args.design)
    g = _load_graph(text, name=Path(args.design).name if args.design != "-" else "stdin")
    ks = [args.k] if args.k is not None else list(range(1, args.k_max + 1))
    threads = _threads(args)
    out.write(FORMAT_LINE + "\n")
    status = EXIT_OK
    lower, upper = 1, None
    for k in ks:
        res = can_win(g, k, max_states=args.budget_states, max_rounds=args.budget_rounds, threads=threads)
        out.write(f"solve k={k} {res.summary()}\n")
        if res.certificate is not None and args.cert_dir:
            path = Path(args.cert_dir) / f"cert-k{k}.txt"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("\n".join(certificate_lines(res.certificate)) + "\n")
            out.write(f"certificate {path}\n")
        if res.status == UNKNOWN:
            status = EXIT_BUDGET
        elif res.status == ROBBER_WINS:
            lower = max(lower, k + 1)
        elif res.status == COPS_WIN:
            upper = k
            if args.k is None:
                break
    if args.k is None:
        if upper is not None and upper == lower:
            out.write(f"zeta {upper}\n")
        else:
            out.write(f"zeta-range {lower} {'-' if upper is None else upper}\n")
    return status


def cmd_verify(args, out):
    design = parse_design(_read(args.design))
    name, (tag, build) = _theorem(args.theorem)
    strat = build(design)
    if args.cops is not None and args.cops != strat.k:
        raise UsageError(f"{name} strategy uses {strat.k} cops, --cops asked for {args.cops}")
    verdict = verify_strategy_exhaustive(
        strat.graph, strat, round_budget=args.budget_rounds, node_budget=args.budget_states, threads=_threads(args)
    )
    out.write(f"{tag} k={strat.k} {verdict}\n")
    if verdict.status == PROVEN:
        sample = play(strat.graph, strat, RandomAdversary(args.seed), args.budget_rounds)
        out.write(f"sample seed={args.seed} {sample.outcome} rounds={sample.rounds}\n")
        return EXIT_OK
    return EXIT_BUDGET if verdict.status == BUDGET_EXHAUSTED else EXIT_NO


def cmd_replay(args, out):
    cert = parse_certificate(_read(args.certificate).splitlines())
    g = _load_graph(_read(args.graph), name=args.graph)
    if g.n != cert.n:
        out.write(f"FAIL certificate is for {cert.n} vertices, graph has {g.n}\n")
        return EXIT_NO
    ok, detail = replay_certificate(g, cert)
    out.write(f"{'PASS' if ok else 'FAIL'} {cert.kind} k={cert.k} {detail}\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_export_graph(args, out):
    out.write(format_graph(incidence_graph(parse_design(_read(args.design)))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized adversaries")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: LOCGAME_THREADS or 1)")
    common.add_argument("--budget-states", type=int, default=2_000_000, help="solver states / verification nodes")
    common.add_argument("--budget-rounds", type=int, default=None, help="round budget (default depends on graph)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="locgame", description="Localization game on incidence graphs of designs.")
    p.add_argument("--version", action="version", version=f"locgame {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a design file")
    g.add_argument("family", choices=("pp", "ag", "sts", "sqs", "td", "td-from-pp", "td-from-ag"))
    g.add_argument("params", type=int, nargs="+")
    g.add_argument("--point", type=int, default=0, help="deleted point for td-from-pp")
    g.add_argument("--class", dest="parallel_class", type=int, default=0, help="deleted class for td-from-ag")
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("validate", cmd_validate, "print design parameters"),
        ("bounds", cmd_bounds, "every applicable bound, with verdicts"),
        ("f-value", cmd_f_value, "f(u) for every point and f(G)"),
        ("export-graph", cmd_export_graph, "adjacency list of the incidence graph"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("design", nargs="?", default="-")
        s.set_defaults(func=func)

    s = sub.add_parser("solve", parents=[common], help="exact solver on a design or graph file")
    s.add_argument("design", nargs="?", default="-")
    s.add_argument("--k", type=int)
    s.add_argument("--k-max", type=int)
    s.add_argument("--cert-dir", help="write one certificate file per decided k here")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="verify a theorem strategy against every adversary")
    s.add_argument("design", nargs="?", default="-")
    s.add_argument("--theorem", required=True, help=f"one of {', '.join(THEOREMS)} or a tag like Thm3.2")
    s.add_argument("--cops", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("replay", parents=[common], help="check a solver certificate")
    s.add_argument("certificate")
    s.add_argument("graph", help="design or graph file the certificate belongs to")
    s.set_defaults(func=cmd_replay)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, FormatError, NotApplicable) as exc:
        sys.stderr.write(f"locgame: {exc}\n")
        return EXIT_USAGE
    except LocGameError as exc:
        sys.stderr.write(f"locgame: {type(exc).__name__}: {exc}\n")
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
