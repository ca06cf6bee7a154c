"""``supermod`` command-line interface.

Exit codes: 0 success, 1 precondition failure (e.g. a non-supermodular game
given to ``extreme``), 2 unreadable or malformed input, 3 criteria disagree.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import altcriteria, catalog, cimodels, coregeo, extremality, gamecore, io
from .errors import CriterionDisagreement, GameInputError, PreconditionError, SupermodError, UnknownFamily

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3
WARN_N = 8


def _load(path: str) -> gamecore.Game:
    m = io.load_game(path)
    if m.n > WARN_N:
        print(f"warning: {m.n} variables; enumerating {m.n}! orderings may be slow", file=sys.stderr)
    return m


def _emit(args, payload, text: Optional[str] = None) -> None:
    if args.format == "text" and text is not None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(io.dumps_json(payload))


def _vectors(x: coregeo.PayoffArray) -> list[list[str]]:
    return [[str(v) for v in row] for row in x.vectors]


def _criteria(m: gamecore.Game) -> dict:
    """Alternative criteria on a standardized supermodular game, with applicability flags."""
    s = gamecore.standardize(m)
    out = {}
    if s.is_zero():
        na = {"applicable": False, "verdict": None, "reason": "zero game"}
        return {"rw_nondegenerate": dict(na), "nguyen": dict(na), "convex_measure": dict(na)}
    out["rw_nondegenerate"] = {"applicable": True, "verdict": altcriteria.rw_nondegenerate(s)}
    try:
        routes = {r: altcriteria.nguyen_extreme(s, r) for r in ("core", "rank_ci", "rank_dual")}
    except PreconditionError as exc:
        out["nguyen"] = {"applicable": False, "verdict": None, "reason": str(exc)}
    else:
        if len(set(routes.values())) != 1:
            raise CriterionDisagreement(f"matroid criterion routes disagree: {routes}")
        out["nguyen"] = {"applicable": True, "verdict": routes["core"]}
    rep = altcriteria.convex_measure_parameters(s)
    if rep is None:
        out["convex_measure"] = {"applicable": False, "verdict": None, "reason": "not a convex measure game"}
    else:
        mu, alpha = rep
        tight = altcriteria.convex_measure_tight_sets(mu, alpha)
        entry = {
            "applicable": True,
            "verdict": altcriteria.convex_measure_extreme(mu, alpha),
            "alpha": str(alpha),
            "measure": [str(mu.values[1 << i]) for i in range(mu.n)],
        }
        if not tight:
            entry["informative"] = False
            entry["reason"] = "NotInformative: no set has measure alpha"
        out["convex_measure"] = entry
    return out


def _verdicts(m: gamecore.Game) -> dict:
    verdict = extremality.is_extreme(m)
    out = {"main": verdict.to_dict()}
    if verdict.status is extremality.Status.ZERO_GAME:
        out["oracle"] = None
        out["criteria"] = _criteria(m)
        return out
    oracle = extremality.facet_oracle_is_extreme(m)
    out["oracle"] = oracle
    if oracle != verdict.is_extreme:
        raise CriterionDisagreement(f"main criterion says {verdict.status}, facet oracle says {oracle}")
    crit = _criteria(m)
    for name, entry in crit.items():
        if entry["applicable"] and entry.get("informative", True) and entry["verdict"] != verdict.is_extreme:
            raise CriterionDisagreement(f"{name} says {entry['verdict']}, main criterion says {verdict.status}")
    out["criteria"] = crit
    return out


def analysis_report(m: gamecore.Game) -> dict:
    sup = gamecore.is_supermodular(m)
    report = {
        "game": io.game_to_dict(m),
        "supermodular": sup,
        "standardized": gamecore.is_standardized(m),
    }
    if sup:
        s = gamecore.standardize(m)
        x = coregeo.core_vertices(m)
        report["exact"] = True
        report["num_core_vertices"] = len(x)
        report["core_vertices"] = _vectors(x)
        report["core_structure"] = coregeo.core_structure(m, x).to_dict()
        report.update(_verdicts(m))
        report["ci_model_size"] = len(cimodels.ci_model(s))
    else:
        verts = coregeo.general_core_vertices(m)
        report["exact"] = bool(len(verts)) and coregeo.min_representation_holds(m, verts)
        report["num_core_vertices"] = len(verts)
        report["core_vertices"] = _vectors(verts)
        report["main"] = None
    return report


def _shown(entry: dict) -> str:
    if not entry["applicable"]:
        return "not applicable"
    if not entry.get("informative", True):
        return f"{entry['verdict']} (not informative)"
    return str(entry["verdict"])


def _report_text(r: dict) -> str:
    lines = [
        f"variables: {', '.join(r['game']['variables'])}",
        f"supermodular: {r['supermodular']}",
        f"standardized: {r['standardized']}",
        f"exact: {r['exact']}",
        f"core vertices: {r['num_core_vertices']}",
    ]
    lines += ["  [" + ", ".join(v) + "]" for v in r["core_vertices"]]
    if r.get("main"):
        main = r["main"]
        lines.append(f"verdict: {main['status']} (kernel dimension {main['kernel_dimension']})")
        lines.append(f"facet oracle: {r['oracle']}")
        for name, entry in r["criteria"].items():
            lines.append(f"{name}: {_shown(entry)}")
        lines.append(f"CI model size: {r['ci_model_size']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    r = analysis_report(_load(args.game))
    _emit(args, r, _report_text(r))
    return EXIT_OK


def cmd_core(args) -> int:
    m = _load(args.game)
    if args.full:
        x = coregeo.payoff_array(m)
    elif gamecore.is_supermodular(m):
        x = coregeo.core_vertices(m)
    else:
        x = coregeo.general_core_vertices(m)
    if args.csv:
        sys.stdout.write(x.to_csv())
        return EXIT_OK
    payload = {"variables": list(m.labels), "num_rows": len(x), "rows": _vectors(x)}
    if args.structure and len(x) and coregeo.min_representation_holds(m, x):
        payload["core_structure"] = coregeo.core_structure(m, x).to_dict()
    _emit(args, payload, x.to_csv())
    return EXIT_OK


def cmd_extreme(args) -> int:
    m = _load(args.game)
    v = extremality.is_extreme(m, full_array=args.full_array)
    _emit(args, v.to_dict(), f"{v.status} (kernel dimension {v.kernel_dimension})")
    return EXIT_OK


def cmd_criteria(args) -> int:
    m = _load(args.game)
    r = _verdicts(m)
    text = [f"main: {r['main']['status']}", f"facet oracle: {r['oracle']}"]
    for name, entry in r["criteria"].items():
        text.append(f"{name}: {_shown(entry)}")
    _emit(args, r, "\n".join(text))
    return EXIT_OK


def cmd_ci(args) -> int:
    m = _load(args.game)
    model = cimodels.ci_model(m)
    payload = {"size": len(model), "triplets": model.to_text().splitlines()}
    _emit(args, payload, model.to_text() or "(empty model)")
    return EXIT_OK


def cmd_generate(args) -> int:
    m = catalog.generate(args.family, args.params)
    text = io.dumps_game(m)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def oracle_compare(n: int, count: int, seed: int) -> dict:
    """Run every applicable criterion on seeded random supermodular games."""
    from .randomgames import candidate_pool, random_supermodular

    names = ("main", "oracle", "rw_nondegenerate", "nguyen", "convex_measure")
    applicable = {k: 0 for k in names}
    agree = {k: 0 for k in names}
    extreme = zero = 0
    failures = []
    if count:
        rng = random.Random(seed)
        pool = candidate_pool(n)
    for k in range(count):
        m = random_supermodular(n, rng, pool)
        v = extremality.is_extreme(m)
        if v.status is extremality.Status.ZERO_GAME:
            zero += 1
            continue
        s = gamecore.standardize(m)
        got = {"main": v.is_extreme, "oracle": extremality.facet_oracle_is_extreme(m),
               "rw_nondegenerate": altcriteria.rw_nondegenerate(s)}
        try:
            got["nguyen"] = altcriteria.nguyen_extreme(s)
        except PreconditionError:
            pass
        params = altcriteria.convex_measure_parameters(s)
        if params is not None and altcriteria.convex_measure_tight_sets(*params):
            got["convex_measure"] = altcriteria.convex_measure_extreme(*params)
        extreme += v.is_extreme
        for name, val in got.items():
            applicable[name] += 1
            if val == v.is_extreme:
                agree[name] += 1
            else:
                failures.append({"index": k, "criterion": name, "game": io.game_to_dict(m)})
    return {
        "n": n,
        "count": count,
        "seed": seed,
        "zero_games": zero,
        "extreme": extreme,
        "applicable": applicable,
        "agreement": agree,
        "disagreements": failures,
    }


def cmd_oracle_compare(args) -> int:
    if not 2 <= args.n <= 5:
        raise GameInputError("oracle-compare supports 2 <= n <= 5")
    if args.count < 0:
        raise GameInputError("count must be non-negative")
    r = oracle_compare(args.n, args.count, args.seed)
    text = [f"n={r['n']} count={r['count']} seed={r['seed']} zero={r['zero_games']} extreme={r['extreme']}"]
    for name in r["applicable"]:
        text.append(f"{name}: {r['agreement'][name]}/{r['applicable'][name]} agree")
    _emit(args, r, "\n".join(text))
    return EXIT_DISAGREE if r["disagreements"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="supermod", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full report for a game file")
    a.add_argument("game")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("core", parents=[common], help="core vertices or the full marginal-vector array")
    c.add_argument("game")
    c.add_argument("--full", action="store_true", help="all n! marginal vectors, repeats included")
    c.add_argument("--csv", action="store_true", help="write CSV regardless of --format")
    c.add_argument("--structure", action="store_true", help="include null sets and tightness classes")
    c.set_defaults(func=cmd_core)

    e = sub.add_parser("extreme", parents=[common], help="extremality verdict")
    e.add_argument("game")
    e.add_argument("--full-array", action="store_true", help="build the system on all n! rows")
    e.set_defaults(func=cmd_extreme)

    k = sub.add_parser("criteria", parents=[common], help="compare all extremality criteria")
    k.add_argument("game")
    k.set_defaults(func=cmd_criteria)

    ci = sub.add_parser("ci", parents=[common], help="conditional-independence model")
    ci.add_argument("game")
    ci.set_defaults(func=cmd_ci)

    g = sub.add_parser("generate", parents=[common], help="write a game from a named family")
    g.add_argument("family", choices=catalog.FAMILIES)
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    o = sub.add_parser("oracle-compare", parents=[common], help="cross-check criteria on random games")
    o.add_argument("--n", type=int, default=3)
    o.add_argument("--count", type=int, default=100)
    o.add_argument("--seed", type=int, default=1)
    o.set_defaults(func=cmd_oracle_compare)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CriterionDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (GameInputError, UnknownFamily) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SupermodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
