"""Command-line front end (installed as ``tgk``).

Sixteen subcommands cover the sequence, the tree bijection and stack
labelings, pattern queries, game polynomials and winners, pruning
lattices, the Tamari quotient, cell-level geometry, Monte-Carlo
validation, and the cross-identity verify suite.  Exit codes: 0 on
success, 1 when a verification reports failure, 2 on usage or parse
errors.  ``--json`` switches any invocation to a single JSON document.
The environment variable ``TGK_MAX_N`` overrides the safety cap on the
enumeration-heavy subcommands (tree census, fibers, congruence checks).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__, game, geometry, lattice, poly, seq, tamari, tree
from .checks import VerifyConfig, run_verify
from .perm import avoids, format_permutation, parse_permutation
from .report import render_lines, results_json
from .tree import (
    format_labeled_tree,
    format_plane_tree,
    parse_labeled_tree,
    parse_plane_tree,
)

Handled = tuple[int, dict, list[str]]


def _env_cap(default: int) -> int:
    raw = os.environ.get("TGK_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"TGK_MAX_N must be an integer, got {raw!r}") from None


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rational number {text!r}") from None


def _exact(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


# ---------------------------------------------------------------------------
# handlers


def _handle_seq(args) -> Handled:
    n = _positive("--n", args.n)
    cap = _env_cap(10)
    if args.all_methods:
        if n > cap:
            raise ValueError(
                f"census method is capped at n = {cap}; set TGK_MAX_N to raise it (factorial cost)"
            )
        table = seq.census_table(n, census_limit=cap)
        lines = []
        agree = True
        for i in range(1, n + 1):
            values = {m: table[m][i - 1] for m in seq.METHODS}
            if len(set(values.values())) == 1:
                lines.append(f"{i}\t{table['stirling'][i - 1]}\tOK")
            else:
                agree = False
                detail = ",".join(f"{m}={v}" for m, v in values.items())
                lines.append(f"{i}\t{detail}\tMISMATCH")
        payload = {"command": "seq", "n": n, "methods": table, "agree": agree}
        return (0 if agree else 1), payload, lines
    method = args.method
    if method == "stirling":
        values = [seq.census_by_stirling_sum(i) for i in range(1, n + 1)]
    elif method == "egf":
        values = seq.census_by_egf(n)
    elif method == "census":
        if n > cap:
            raise ValueError(
                f"census method is capped at n = {cap}; set TGK_MAX_N to raise it (factorial cost)"
            )
        values = [seq.census_by_tree_enumeration(i, limit=cap) for i in range(1, n + 1)]
    elif method == "split":
        values = seq.census_by_split_recurrence(n)
    else:
        values = seq.census_by_complement_recurrence(n)
    lines = [f"{i}\t{v}" for i, v in enumerate(values, start=1)]
    return 0, {"command": "seq", "n": n, "method": method, "values": values}, lines


def _handle_stirling(args) -> Handled:
    n = args.n
    if n < 0:
        raise ValueError(f"--n must be >= 0, got {n}")
    if args.k is not None:
        value = seq.stirling_first(n, args.k)
        return 0, {"command": "stirling", "n": n, "k": args.k, "value": value}, [str(value)]
    row = [seq.stirling_first(n, k) for k in range(n + 1)]
    lines = [f"{k}\t{v}" for k, v in enumerate(row)]
    return 0, {"command": "stirling", "n": n, "row": row}, lines


def _handle_gamma(args) -> Handled:
    p = parse_permutation(args.perm)
    lt = tree.first_inversion_tree(p)
    text = format_labeled_tree(lt)
    return 0, {"command": "gamma", "perm": format_permutation(p), "tree": text}, [text]


def _handle_gamma_inv(args) -> Handled:
    lt = parse_labeled_tree(args.tree)
    p = tree.perm_from_increasing_tree(lt)
    text = format_permutation(p)
    return 0, {"command": "gamma-inv", "tree": format_labeled_tree(lt), "perm": text}, [text]


def _handle_label(args) -> Handled:
    t = parse_plane_tree(args.tree)
    labeled = tree.eastpush_labeling(t) if args.mode == "eastpush" else tree.westpop_labeling(t)
    text = format_labeled_tree(labeled)
    payload = {
        "command": "label",
        "mode": args.mode,
        "tree": format_plane_tree(t),
        "labeled": text,
    }
    return 0, payload, [text]


def _handle_avoid(args) -> Handled:
    p = parse_permutation(args.perm)
    result = avoids(p, int(args.pattern))
    payload = {
        "command": "avoid",
        "perm": format_permutation(p),
        "pattern": int(args.pattern),
        "avoids": result,
    }
    return 0, payload, ["true" if result else "false"]


def _handle_phi(args) -> Handled:
    t = parse_plane_tree(args.tree)
    if args.via == "prunings":
        polynomial = poly.game_polynomial_from_prunings(t)
    else:
        polynomial = poly.game_polynomial(t)
    lines = [str(polynomial)]
    payload = {
        "command": "phi",
        "tree": format_plane_tree(t),
        "via": args.via,
        "coefficients": list(polynomial.coeffs),
    }
    if args.eval is not None:
        q = _fraction(args.eval)
        value = _exact(polynomial(q))
        lines.append(f"value at q={q}: {value}")
        payload["eval"] = {"q": str(q), "value": str(value)}
    return 0, payload, lines


def _handle_prunings(args) -> Handled:
    t = parse_plane_tree(args.tree)
    lat = lattice.PruningLattice(t)
    lines = [f"count\t{len(lat)}"]
    payload = {"command": "prunings", "tree": format_plane_tree(t), "count": len(lat)}
    if args.rgf:
        polynomial = lat.rank_polynomial()
        lines.append(f"rgf\t{polynomial}")
        payload["rgf"] = list(polynomial.coeffs)
    if args.list:
        entries = []
        for mask in lat.masks:
            pruned = format_plane_tree(lat.pruned_subtree(mask))
            lines.append(f"{lat.rank(mask)}\t{pruned}")
            entries.append({"rank": lat.rank(mask), "mask": hex(mask), "tree": pruned})
        payload["prunings"] = entries
    return 0, payload, lines


def _handle_winner(args) -> Handled:
    t = parse_plane_tree(args.tree)
    who = game.winner(t)
    move = game.optimal_move(t)
    lines = [who.value]
    subtree = None
    if move is not None:
        subtree = format_plane_tree(t[move - 1])
        lines.append(f"move {move} {subtree}")
    payload = {
        "command": "winner",
        "tree": format_plane_tree(t),
        "winner": who.value,
        "move": move,
        "subtree": subtree,
    }
    return 0, payload, lines


def _handle_tamari_fiber(args) -> Handled:
    t = parse_plane_tree(args.tree)
    fib = tamari.fiber(t, limit=_env_cap(8))
    lines = [
        f"top\t{format_permutation(fib.top)}",
        f"bottom\t{format_permutation(fib.bottom)}",
        f"size\t{len(fib.members)}",
    ]
    lines.extend(f"member\t{format_permutation(p)}" for p in fib.members)
    payload = {
        "command": "tamari-fiber",
        "tree": format_plane_tree(t),
        "top": format_permutation(fib.top),
        "bottom": format_permutation(fib.bottom),
        "members": [format_permutation(p) for p in fib.members],
    }
    return 0, payload, lines


def _tamari_pair(args) -> tuple[tamari.TamariElement, tamari.TamariElement]:
    a = tamari.TamariElement.from_tree(parse_plane_tree(args.a))
    b = tamari.TamariElement.from_tree(parse_plane_tree(args.b))
    return a, b


def _handle_tamari_join(args) -> Handled:
    a, b = _tamari_pair(args)
    result = tamari.tamari_join(a, b)
    text = format_plane_tree(result.tree)
    payload = {"command": "tamari-join", "a": args.a, "b": args.b, "tree": text, "fif": list(result.fif)}
    return 0, payload, [text]


def _handle_tamari_meet(args) -> Handled:
    a, b = _tamari_pair(args)
    result = tamari.tamari_meet(a, b)
    text = format_plane_tree(result.tree)
    payload = {"command": "tamari-meet", "a": args.a, "b": args.b, "tree": text, "fif": list(result.fif)}
    return 0, payload, [text]


def _handle_tamari_verify(args) -> Handled:
    n = _positive("--n", args.n)
    rep = tamari.verify_congruence(n, limit=_env_cap(8))
    payload = {"command": "tamari-verify", **rep.to_json()}
    return (0 if rep.ok else 1), payload, rep.to_lines()


def _handle_euler(args) -> Handled:
    t = parse_plane_tree(args.tree)
    chi_r = geometry.euler_characteristic_real(t)
    chi_c = geometry.euler_characteristic_complex(t)
    poincare = geometry.poincare_polynomial(t)
    lines = [f"chi_real\t{chi_r}", f"chi_complex\t{chi_c}", f"poincare\t{poincare}"]
    payload = {
        "command": "euler",
        "tree": format_plane_tree(t),
        "chi_real": chi_r,
        "chi_complex": chi_c,
        "poincare": list(poincare.coeffs),
    }
    if args.q:
        points = {}
        for q in args.q:
            value = geometry.point_count(t, q, strict=args.strict)
            points[str(q)] = value
            lines.append(f"points({q})\t{value}")
        payload["points"] = points
    return 0, payload, lines


def _handle_montecarlo(args) -> Handled:
    t = parse_plane_tree(args.tree)
    q = _fraction(args.q)
    trials = _positive("--trials", args.trials)
    empirical = poly.event_frequency(t, q, trials=trials, seed=args.seed)
    exact = float(poly.game_polynomial(t)(q))
    error = abs(empirical - exact)
    lines = [f"empirical\t{empirical:.6f}", f"exact\t{exact:.6f}", f"abs_error\t{error:.6f}"]
    payload = {
        "command": "montecarlo",
        "tree": format_plane_tree(t),
        "q": str(q),
        "trials": trials,
        "seed": args.seed,
        "empirical": empirical,
        "exact": exact,
        "abs_error": error,
    }
    return 0, payload, lines


def _handle_verify(args) -> Handled:
    cfg = VerifyConfig(
        n=_positive("--n", args.n),
        seed=args.seed,
        samples=_positive("--samples", args.samples),
        trials=_positive("--trials", args.trials),
        census_limit=_env_cap(10),
    )
    results = run_verify(cfg)
    ok = all(r.passed for r in results)
    lines = render_lines(results)
    lines.append(f"VERIFY: {'PASS' if ok else 'FAIL'}")
    payload = {"command": "verify", "ok": ok, "checks": results_json(results)}
    return (0 if ok else 1), payload, lines


HANDLERS = {
    "seq": _handle_seq,
    "stirling": _handle_stirling,
    "gamma": _handle_gamma,
    "gamma-inv": _handle_gamma_inv,
    "label": _handle_label,
    "avoid": _handle_avoid,
    "phi": _handle_phi,
    "prunings": _handle_prunings,
    "winner": _handle_winner,
    "tamari-fiber": _handle_tamari_fiber,
    "tamari-join": _handle_tamari_join,
    "tamari-meet": _handle_tamari_meet,
    "tamari-verify": _handle_tamari_verify,
    "euler": _handle_euler,
    "montecarlo": _handle_montecarlo,
    "verify": _handle_verify,
}


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document instead of text")

    parser = argparse.ArgumentParser(prog="tgk", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="the census sequence, five ways")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=seq.METHODS, default="stirling")
    p.add_argument("--all-methods", action="store_true")
    p.add_argument("--threads", type=int, default=None,
                   help="accepted for compatibility; evaluation is serial either way")

    p = sub.add_parser("stirling", parents=[common], help="unsigned Stirling numbers, first kind")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("gamma", parents=[common], help="permutation to increasing tree")
    p.add_argument("--perm", required=True)

    p = sub.add_parser("gamma-inv", parents=[common], help="increasing tree to permutation")
    p.add_argument("--tree", required=True)

    p = sub.add_parser("label", parents=[common], help="stack labelings of a plane tree")
    p.add_argument("--mode", choices=("eastpush", "westpop"), required=True)
    p.add_argument("--tree", required=True)

    p = sub.add_parser("avoid", parents=[common], help="pattern avoidance query")
    p.add_argument("--pattern", choices=("213", "312"), required=True)
    p.add_argument("--perm", required=True)

    p = sub.add_parser("phi", parents=[common], help="game polynomial of a plane tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--via", choices=("recursion", "prunings"), default="recursion")
    p.add_argument("--eval", default=None, metavar="Q", help="also evaluate at a rational q")

    p = sub.add_parser("prunings", parents=[common], help="the pruning lattice of a plane tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--rgf", action="store_true", help="include the rank generating function")
    p.add_argument("--list", action="store_true", help="list every pruning")

    p = sub.add_parser("winner", parents=[common], help="game winner and optimal move")
    p.add_argument("--tree", required=True)

    p = sub.add_parser("tamari-fiber", parents=[common], help="all permutations over a tree")
    p.add_argument("--tree", required=True)

    for name in ("tamari-join", "tamari-meet"):
        p = sub.add_parser(name, parents=[common], help=f"{name.split('-')[1]} of two trees")
        p.add_argument("--a", required=True, metavar="TREE")
        p.add_argument("--b", required=True, metavar="TREE")

    p = sub.add_parser("tamari-verify", parents=[common], help="congruence checks at size n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("euler", parents=[common], help="cell-level geometry of a tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--q", type=int, action="append", help="also count points at q (repeatable)")
    p.add_argument("--strict", action="store_true", help="reject q that is not a prime power")

    p = sub.add_parser("montecarlo", parents=[common], help="empirical check of phi at q in [-1,0]")
    p.add_argument("--tree", required=True)
    p.add_argument("--q", required=True, help="rational in [-1, 0]; write fractions as --q=-1/2")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", parents=[common], help="run the cross-identity suite")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--trials", type=int, default=20_000)
    p.add_argument("--threads", type=int, default=None,
                   help="accepted for compatibility; evaluation is serial either way")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "threads", None) is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        code, payload, lines = HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
