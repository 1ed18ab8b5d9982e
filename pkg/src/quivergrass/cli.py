"""Command line front end.

    quivergrass classify QUIVER
    quivergrass catalog QUIVER [--bound K] [--preinjective]
    quivergrass hom|ext QUIVER M N
    quivergrass tau QUIVER M [--inverse]
    quivergrass count QUIVER M --e 1,0 [--mode brute|poly|both] [--primes 2,3,5]
    quivergrass cluster QUIVER X S
    quivergrass cc QUIVER M

QUIVER is a JSON file, inline JSON or a name such as A3, D4, K2, A~2, E~8.
Modules are JSON files, inline JSON, or coordinates: ``preproj:k=2,i=1``
(tau^-k P_i), ``preinj:k=0,i=1`` (tau^k I_i), ``simple:i=1``.

Exit codes: 0 success, 1 identity violation, 2 precondition, 3 budget, 4 I/O.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .ar import ARCoordinate, injective, knit_preinjective, knit_preprojective, projective, tau, tau_minus
from .cluster import cc, verify_multiplication
from .enumeration import count_subreps
from .errors import IdentityViolation, PreconditionFailed, QuiverGrassError
from .grassmannian import Planner
from .linalg import GF, QQ
from .quiver import _graph, classify, validate_quiver
from .rep import ext1_dim, hom_dim, rep_from_json, simple
from .standard import by_name


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------

def _load_json(text):
    if text.lstrip().startswith(("{", "[")):
        return json.loads(text)
    with open(text) as fh:
        return json.load(fh)


def load_quiver(text):
    if text.lstrip().startswith("{") or text.endswith(".json") or os.path.exists(text):
        return validate_quiver(_load_json(text))
    try:
        return by_name(text)
    except (ValueError, KeyError, IndexError) as exc:
        raise PreconditionFailed(f"unknown quiver name {text!r}") from exc


def field_of(args):
    if args.field.lower() in ("q", "qq", "rationals"):
        return QQ
    return GF(args.prime)


def load_module(text, Q, F):
    """A representation from a file, inline JSON or an AR coordinate."""
    if text.startswith("simple:"):
        v = Q.vertex(text.split("=", 1)[1])
        return simple(Q, v, F)
    if text.startswith(("preproj:", "preinj:")):
        c = ARCoordinate.parse(text, Q)
        if c.kind == "preproj":
            M = projective(Q, c.vertex, F)
            for _ in range(c.k):
                M = tau_minus(M)
        else:
            M = injective(Q, c.vertex, F)
            for _ in range(c.k):
                M = tau(M)
        return M
    raw = _load_json(text)
    M = rep_from_json(raw, Q)
    if M.quiver != Q:
        raise PreconditionFailed("module lives on a different quiver")
    if "field" not in raw:
        M = M.reduce(F)
    return M


def _vec(text):
    return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def layout(Q, vec):
    """Dimension vector along the longest path of a tree, the rest after ';'."""
    mult, nbrs = _graph(Q)
    values = dict(zip(Q.vertices, vec))
    if len(mult) != Q.n - 1 or any(m > 1 for m in mult.values()):
        return "(" + ",".join(map(str, vec)) + ")"

    def farthest(start):
        dist, prev, stack = {start: 0}, {start: None}, [start]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w not in dist:
                    dist[w], prev[w] = dist[u] + 1, u
                    stack.append(w)
        end = max(Q.vertices, key=lambda v: (dist[v], -Q.index[v]))
        return end, prev

    a, _ = farthest(Q.vertices[0])
    b, prev = farthest(a)
    path = []
    while b is not None:
        path.append(b)
        b = prev[b]
    if Q.index[path[0]] > Q.index[path[-1]]:
        path.reverse()
    rest = [v for v in Q.vertices if v not in set(path)]
    main = ",".join(str(values[v]) for v in path)
    if rest:
        main += ";" + ",".join(str(values[v]) for v in rest)
    return "(" + main + ")"


def _rep_text(M):
    lines = [f"dims {layout(M.quiver, M.dims)}"]
    for a, m in zip(M.quiver.arrows, M.mats):
        lines.append(f"  {a.id}: {a.source}->{a.target} {m.to_lists()}")
    return "\n".join(lines)


def emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_classify(args):
    Q = load_quiver(args.quiver)
    c = classify(Q)
    payload = {"kind": c.kind, "family": c.family, "rank": c.rank,
               "delta": list(c.delta) if c.delta else None}
    text = str(c)
    if c.is_affine:
        text = f"Affine {c.name}, delta={layout(Q, c.delta)}"
    emit(args, payload, text)
    return 0


def cmd_catalog(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    entries = (knit_preinjective if args.preinjective else knit_preprojective)(Q, args.bound, F)
    payload = [e.to_json(Q) for e in entries]
    text = "\n".join(f"{p['coordinate']:<22} {layout(Q, p['dims'])}  rigid={p['rigid']}"
                     + (f" defect={p['defect']}" if p["defect"] is not None else "")
                     for p in payload)
    text += f"\n{len(payload)} entries"
    emit(args, payload, text)
    return 0


def cmd_homext(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    M, N = load_module(args.M, Q, F), load_module(args.N, Q, F)
    val = hom_dim(M, N) if args.command == "hom" else ext1_dim(M, N)
    emit(args, {args.command: val}, str(val))
    return 0


def cmd_tau(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    M = load_module(args.M, Q, F)
    T = tau_minus(M) if args.inverse else tau(M)
    emit(args, T.to_json(), _rep_text(T))
    return 0


def _module_at(args, Q, p):
    """The input module over F_p (built directly for coordinates, reduced otherwise)."""
    text = args.M
    if text.startswith(("simple:", "preproj:", "preinj:")):
        return load_module(text, Q, GF(p))
    return load_module(text, Q, QQ).reduce(GF(p))


def cmd_count(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    M = load_module(args.M, Q, F)
    e = Q.vec(_vec(args.e))
    primes = _vec(args.primes)
    payload = {"module": args.M if ":" in args.M and not args.M.lstrip().startswith("{") else M.to_json(),
               "e": {str(v): x for v, x in zip(Q.vertices, e)}}
    poly = None
    if args.mode in ("poly", "both"):
        poly, plan = Planner(seed=args.seed, budget=args.budget).count(M, e)
        payload["polynomial"] = poly.to_list()
        payload["plan"] = plan.to_json(depth=args.plan_depth)
    brute = {}
    if args.mode in ("brute", "both"):
        for p in primes:
            brute[str(p)] = count_subreps(_module_at(args, Q, p), e, budget=args.budget,
                                          workers=args.workers)
        payload["checks"] = {"bruteforce": brute}
    failed = []
    if poly is not None and brute:
        failed = [int(p) for p, n in brute.items() if poly(int(p)) != n]
        payload["checks"]["agree"] = not failed
    if poly is not None:
        text = str(poly)
        if brute:
            text += "; verified at " + ",".join(brute) if not failed else \
                "; MISMATCH at " + ",".join(map(str, failed))
    else:
        text = "; ".join(f"p={p}: {n}" for p, n in brute.items())
    emit(args, payload, text)
    return 1 if failed else 0


def cmd_cluster(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    X, S = load_module(args.X, Q, F), load_module(args.S, Q, F)
    r = verify_multiplication(X, S, Planner(seed=args.seed))
    payload = {"equal": r["equal"], "split": r["split"], "lhs": r["lhs"].to_json(),
               "rhs": r["rhs"].to_json(), "f_vector": list(r["f_vector"]),
               "dim_S^X": list(r["S_X"]), "dim_X_S": list(r["X_S"]), "middle": list(r["middle"])}
    labels = [str(v) for v in Q.vertices]
    verdict = "multiplication formula VERIFIED" if r["equal"] else "multiplication formula FAILED"
    text = "\n".join([f"CC(X)CC(S) = {r['lhs'].format(labels)}",
                      f"rhs        = {r['rhs'].format(labels)}",
                      f"dim S^X = {list(r['S_X'])}, f = {list(r['f_vector'])}", verdict])
    emit(args, payload, text)
    return 0 if r["equal"] else 1


def cmd_cc(args):
    Q = load_quiver(args.quiver)
    F = field_of(args)
    M = load_module(args.M, Q, F)
    ch = cc(M, Planner(seed=args.seed))
    emit(args, ch.to_json(), ch.format([str(v) for v in Q.vertices]))
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q (default) or Fp")
    common.add_argument("--prime", type=int, default=2, help="p when --field Fp")
    common.add_argument("--budget", type=int, default=None,
                        help="brute-force budget (default: QUIVERGRASS_BUDGET or 10^7)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="quivergrass", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("quiver")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", parents=[common])
    p.add_argument("quiver")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--preinjective", action="store_true")
    p.set_defaults(func=cmd_catalog)

    for name in ("hom", "ext"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("quiver")
        p.add_argument("M")
        p.add_argument("N")
        p.set_defaults(func=cmd_homext)

    p = sub.add_parser("tau", parents=[common])
    p.add_argument("quiver")
    p.add_argument("M")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("count", parents=[common])
    p.add_argument("quiver")
    p.add_argument("M")
    p.add_argument("--e", required=True, help="dimension vector, e.g. 1,0")
    p.add_argument("--mode", choices=("brute", "poly", "both"), default="both")
    p.add_argument("--primes", default="2,3,5")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--plan-depth", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cluster", parents=[common])
    p.add_argument("quiver")
    p.add_argument("X")
    p.add_argument("S")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("cc", parents=[common])
    p.add_argument("quiver")
    p.add_argument("M")
    p.set_defaults(func=cmd_cc)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IdentityViolation as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 1
    except QuiverGrassError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
