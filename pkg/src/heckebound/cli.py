"""Command line interface.

Generators and word positions are 1-based on the command line, matching
``s_1, s_2, ...``; words are comma-separated, e.g. ``1,2,1``.  Exit codes:
0 success, 2 invalid input, 3 invariant violation, 4 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, construction, hecke
from .errors import (BudgetExceeded, HeckeboundError, InvalidInputError, IndexOutOfRange,
                     IndicesNotIncreasing, InvariantViolation, SequenceInvalid)
from .systems import CATALOG, load_config, named_system, system_to_config

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4


def parse_word(text: str, rank: int) -> list[int]:
    text = text.strip()
    if text in ("", "e", "[]"):
        return []
    try:
        letters = [int(t) for t in text.replace(" ", "").split(",")]
    except ValueError:
        raise InvalidInputError(f"malformed word {text!r}; expected e.g. 1,2,1") from None
    for s in letters:
        if not 1 <= s <= rank:
            raise InvalidInputError(f"generator {s} out of range 1..{rank}")
    return [s - 1 for s in letters]


def _w(word) -> list[int]:
    return [s + 1 for s in word]


def _fmt_word(word) -> str:
    return "e" if not word else "".join(f"s{s + 1}" for s in word)


def _system(args):
    if args.config:
        return load_config(args.config)
    return named_system(args.system)


def _reduced(system, word, what):
    el = system.element(word)
    if el.length != len(word):
        raise InvalidInputError(f"{what} word {_w(word)} is not reduced")
    return el


# -- commands -------------------------------------------------------------------

def cmd_mult(system, args):
    x = system.element(parse_word(args.x, system.rank))
    y = system.element(parse_word(args.y, system.rank))
    h = hecke.structure_constants(x, y)
    deg = hecke.max_f_degree(x, y)
    n_l = bounds.n_weighted(system)
    pair = {
        "x": _w(x.word), "y": _w(y.word),
        "terms": [{"z": _w(z.word), "f": str(f), "coeffs": f.to_json()} for z, f in h.sorted_items()],
        "max_deg": deg.degree, "max_deg_witness": _w(deg.witness.word), "p_max": deg.p_max,
    }
    report = {"system": system_to_config(system), "n_weighted": n_l,
              "bound_passed": deg.degree <= n_l, "pairs": [pair]}
    lines = [f"T_{_fmt_word(x.word)} * T_{_fmt_word(y.word)}:"]
    for t in pair["terms"]:
        lines.append(f"  {_fmt_word([s - 1 for s in t['z']]):<24} {t['f']}")
    lines.append(f"max degree {deg.degree} (at {_fmt_word(deg.witness.word)}), longest deletion "
                 f"sequence {deg.p_max}")
    lines.append(f"N_L(W) = {n_l}: {'PASS' if report['bound_passed'] else 'FAIL'}")
    return report, lines


def cmd_expand(system, args):
    x = system.element(parse_word(args.x, system.rank))
    y_word = parse_word(args.y, system.rank)
    _reduced(system, y_word, "y")
    terms = hecke.enumerate_expansion(x, y_word, budget=args.budget)
    agg = hecke.aggregate_expansion(terms)
    direct = hecke.structure_constants(x, y_word)
    report = {
        "system": system_to_config(system),
        "x": _w(x.word), "y": _w(y_word),
        "terms": [{"indices": [i + 1 for i in t.indices], "z": _w(t.z.word), "xi": str(t.xi)}
                  for t in terms],
        "p_max": max(len(t.indices) for t in terms),
        "matches_structure_constants": agg == direct,
    }
    lines = [f"{len(terms)} admissible deletion sets for x = {_fmt_word(x.word)}, "
             f"y = {_fmt_word(y_word)}:"]
    for t in report["terms"]:
        lines.append(f"  I = {str(t['indices']):<16} z = {_fmt_word([s - 1 for s in t['z']]):<20} {t['xi']}")
    lines.append(f"longest sequence {report['p_max']}; agrees with direct product: "
                 f"{report['matches_structure_constants']}")
    return report, lines


def cmd_construct(system, args):
    x = system.element(parse_word(args.x, system.rank))
    y_word = parse_word(args.y, system.rank)
    _reduced(system, y_word, "y")
    idx_text = args.indices.strip()
    try:
        indices = [int(t) - 1 for t in idx_text.split(",")] if idx_text else []
    except ValueError:
        raise InvalidInputError(f"malformed indices {args.indices!r}") from None
    try:
        ctx = construction.build_context(x, y_word, indices)
    except SequenceInvalid as exc:
        one_based = [i + 1 for i in indices]
        reason = {IndicesNotIncreasing: "not strictly increasing",
                  IndexOutOfRange: f"outside 1..{len(y_word)}"}.get(type(exc), "descent condition fails")
        raise type(exc)(f"indices {one_based} for y = {_w(y_word)}: {reason}") from None
    steps = construction.construct_chain(ctx)
    report = {
        "system": system_to_config(system),
        "x": _w(x.word), "y": _w(y_word), "indices": [i + 1 for i in indices],
        "steps": [s.to_json() for s in steps],
        "all_checks_passed": all(all(v for v in s.checks.values()) for s in steps),
    }
    lines = [f"intersecting chain for x = {_fmt_word(x.word)}, y = {_fmt_word(y_word)}, "
             f"I = {[i + 1 for i in indices]}"]
    for s in steps:
        lines.append(f"  n={s.n}: |A|={len(s.A)} (cascade {[len(a) for a in s.cascade]}), "
                     f"|B|={len(s.B)}, |B_sigma|={len(s.b_sigma)}, Q = {s.Q}")
        lines.append("        checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                                  for k, v in s.checks.items()))
    return report, lines


def _pairs(system, cap, budget):
    elements = system.elements(cap, budget=budget)
    return [(x, y) for x in elements for y in elements]


def cmd_verify(system, args):
    n_l = bounds.n_weighted(system)
    pairs = _pairs(system, args.length_cap, args.budget)
    check = hecke.verify_bound(system, n_l, pairs)
    report = {"system": system_to_config(system), "length_cap": args.length_cap,
              **check.to_json(), "equality_attained": check.max_degree == n_l}
    if report["max_witness"]:
        report["max_witness"] = [_w(w) for w in report["max_witness"]]
    for v in report["violations"]:
        for k in ("x", "y", "z"):
            v[k] = _w(v[k])
    lines = [f"checked {check.pairs_checked} pairs with length <= {args.length_cap}",
             f"bound N_L(W) = {n_l}; max observed degree = {check.max_degree}",
             "PASS" if check.passed else f"FAIL ({len(check.violations)} violations)"]
    return report, lines


def cmd_bounds(system, args):
    rep = bounds.bound_report(system, args.depth, args.budget, args.col_depth)
    report = {"system": system_to_config(system), "depth": args.depth, **rep.to_json()}
    for p in report["parabolics"]:
        p["subset"] = _w(p["subset"])
        p["longest"] = _w(p["longest"])
    npu = rep.n_prime
    lines = [
        f"N_L(W) = {rep.n_weighted}, N(W) = {rep.n_unweighted}",
        f"Col: {len(rep.col)} values up to depth {rep.col.max_depth} "
        f"(last new at {rep.col.last_new_depth}, {'exact' if rep.col.complete else 'lower approximation'})",
        f"Ramsey bound R(|S|+2; |Col|) <= {rep.ramsey_upper}",
        f"N'(W) <= {npu.value} via {npu.method}{' (PROVISIONAL)' if npu.provisional else ''}; "
        f"N'_L(W) <= {npu.weighted}",
        f"N'(W) >= {rep.clique_lower} (clique at depth {args.depth}, "
        f"{'exhausted' if rep.clique.exhausted else 'budget hit'})",
    ]
    return report, lines


def cmd_clique(system, args):
    res = bounds.max_intersecting_clique(system, args.depth, args.budget)
    report = {"system": system_to_config(system), "depth": args.depth, **res.to_json()}
    lines = [f"maximum intersecting set among {res.vertices} hyperplanes (depth <= {args.depth}): "
             f"size {res.size}, {'exhausted' if res.exhausted else 'budget hit'} after {res.nodes} nodes"]
    lines += [f"  {P!r}" for P in res.witness]
    return report, lines


def cmd_enumerate(system, args):
    elements = system.elements(args.length_cap, budget=args.budget)
    levels = system.positive_roots_by_depth(args.depth, budget=args.budget)
    report = {
        "system": system_to_config(system),
        "length_cap": args.length_cap,
        "elements": [_w(w.word) for w in elements],
        "depth": args.depth,
        "roots": [[[c.to_json() for c in r] for r in lv] for lv in levels.levels],
        "roots_complete": levels.complete,
    }
    lines = [f"{len(elements)} elements of length <= {args.length_cap}",
             f"{len(levels.roots)} positive roots of depth <= {args.depth}"
             f"{' (all of them)' if levels.complete else ''}"]
    for d, lv in enumerate(levels.levels):
        lines.append(f"  depth {d}: {len(lv)}")
    return report, lines


COMMANDS = {
    "mult": cmd_mult,
    "expand": cmd_expand,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "clique": cmd_clique,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckebound", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--config", help="JSON system definition")
    src.add_argument("--system", help=f"catalog name: {', '.join(CATALOG)}")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--budget", type=int, default=None, help="resource budget")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("mult", "expand", "construct"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("x", help="word for x, e.g. 1,2 ('e' for identity)")
        p.add_argument("y", help="word for y")
        if name == "construct":
            p.add_argument("--indices", required=True, help="1-based positions in y, e.g. 1,3")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--length-cap", type=int, default=3)
    for name in ("bounds", "clique"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--depth", type=int, default=4)
        if name == "bounds":
            p.add_argument("--col-depth", type=int, default=None)
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("--length-cap", type=int, default=3)
    p.add_argument("--depth", type=int, default=3)
    return parser


def _error(code, exc, exit_code):
    print(json.dumps({"error": code, "message": str(exc), "exit_code": exit_code}), file=sys.stderr)
    return exit_code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for cap in ("length_cap", "depth", "col_depth", "budget"):
        value = getattr(args, cap, None)
        if value is not None and value < 0:
            return _error("invalid_input", f"--{cap.replace('_', '-')} must be >= 0", EXIT_INVALID)
    try:
        system = _system(args)
        report, lines = COMMANDS[args.command](system, args)
    except InvariantViolation as exc:
        return _error(exc.code, exc, EXIT_INVARIANT)
    except BudgetExceeded as exc:
        return _error(exc.code, exc, EXIT_BUDGET)
    except HeckeboundError as exc:
        return _error(exc.code, exc, EXIT_INVALID)
    except ValueError as exc:
        return _error("invalid_input", exc, EXIT_INVALID)
    text = json.dumps(report, indent=2) + "\n" if args.format == "json" else "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
