"""Command line front end.

    natops enumerate --type "1;1"          basis sizes of one type
    natops enumerate --n 1 --K 2 --L 3     basis sizes over a window
    natops diff --type "1;1"               differential of every basis tree
    natops homology --n 2 --L 3 --suboperad Brhat
    natops verify --suite p44
    natops export --object D --q 2 --N 4 --out d2.json

Exit codes: 0 ok, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as V
from .complexes.chain import ChainComplex
from .complexes.cosimplicial import build_D, build_Dhat, nerve_complex
from .interval import IntervalMorphism, hom
from .operad import trees as T
from .operad.brace import span_complex
from .operad.dg import DEFAULT, differential
from .operad.enumerate import count_basis, enumerate_basis, types_in_window
from .operad.trees import TreeType
from .operad.truncation import row_complex, truncated_complex

SUBOPERAD_CHOICES = ("B", "Bhat", "NormB", "T", "Brhat")
OBJECTS = ("D", "Dhat", "truncated", "tree", "hom")


class UsageError(Exception):
    pass


def parse_type(text: str) -> TreeType:
    """'l;k1,k2,...' with an empty list allowed, e.g. '1;' or '3;2,0'."""
    try:
        l, _, rest = text.partition(";")
        ks = tuple(int(x) for x in rest.split(",") if x.strip())
        return TreeType(int(l), ks)
    except ValueError as e:
        raise UsageError(f"bad type {text!r}: {e}") from None


def _bounds(args, *names):
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--{name} is required")
        if v < 0:
            raise UsageError(f"--{name} must be non-negative")


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _emit(args, payload, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


def cmd_enumerate(args) -> int:
    if args.type:
        types = [parse_type(args.type)]
    else:
        _bounds(args, "n", "K", "L")
        types = types_in_window(args.n, args.K, args.L)
    rows = [(str(tt), count_basis(tt)) for tt in types]
    _emit(args, {"counts": {t: c for t, c in rows}}, _table(("type", "trees"), rows))
    return 0


def _sum_json(chain) -> list[dict]:
    items = sorted(chain.items(), key=lambda tc: repr(tc[0]))
    return [{"coeff": c, "tree": T.to_json(t)} for t, c in items]


def cmd_diff(args) -> int:
    if args.tree:
        trees = [T.canonicalize(T.from_json(json.loads(args.tree)))]
    elif args.type:
        trees = enumerate_basis(parse_type(args.type))
    else:
        raise UsageError("diff needs --type or --tree")
    payload, lines = [], []
    for t in trees:
        d = dict(differential(t, DEFAULT).items())
        payload.append({"tree": T.to_json(t), "d": _sum_json(d)})
        terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{T.show(u)}"
                         for u, c in sorted(d.items(), key=lambda tc: repr(tc[0])))
        lines.append(f"d {T.show(t)} = {terms or '0'}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _homology_rows(cur: dict, prev: dict | None):
    rows = []
    for m in sorted(cur, reverse=True):
        h = cur[m]
        stable = prev is not None and prev.get(m) == h
        rows.append((m, h.betti, ",".join(map(str, h.torsion)) or "-", "yes" if stable else "no"))
    return rows


def cmd_homology(args) -> int:
    _bounds(args, "n", "L")
    which = args.suboperad
    if args.row is not None:
        if args.n != 1:
            raise UsageError("row mode needs --n 1")
        ks = (args.row,)
        cur = {m: row_complex(ks, args.L - 1).homology(m) for m in range(args.L - 1)}
        prev = {m: row_complex(ks, args.L - 2).homology(m) for m in range(max(args.L - 2, 0))} \
            if args.L >= 2 else None
    elif which == "Brhat":
        if args.n not in (2, 3):
            raise UsageError("Brhat homology is available for n = 2, 3")
        cur = span_complex(args.n, args.L).homology()
        prev = span_complex(args.n, args.L - 1).homology() if args.L >= 2 else None
    else:
        _bounds(args, "K")
        comp = truncated_complex(args.n, args.K, args.L, which, keep_dot=args.keep_dot)
        cur = comp.homology()
        prev = None
        if args.K >= 1 and args.L >= 1:
            prev = truncated_complex(args.n, args.K - 1, args.L - 1, which, keep_dot=args.keep_dot).homology()
    if not cur:
        raise UsageError("empty window")
    rows = _homology_rows(cur, prev)
    payload = {"n": args.n, "K": args.K, "L": args.L, "suboperad": which, "row": args.row,
               "homology": {str(r[0]): {"betti": r[1], "torsion": list(cur[r[0]].torsion),
                                        "stable": r[3] == "yes"} for r in rows}}
    _emit(args, payload, _table(("degree", "betti", "torsion", "stable"), rows))
    return 0


def cmd_verify(args) -> int:
    names = list(V.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in V.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(V.SUITES)}, all")
    reports = [V.report(n, V.run_suite(n, seed=args.seed), args.seed) for n in names]
    ok = all(r["passed"] for r in reports)
    lines = [f"seed {args.seed}"]
    for r in reports:
        for c in r["checks"]:
            lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {r['suite']}: {c['name']}")
    _emit(args, {"seed": args.seed, "passed": ok, "suites": reports}, "\n".join(lines))
    return 0 if ok else 1


def cmd_export(args) -> int:
    obj = args.object
    if obj in ("D", "Dhat"):
        _bounds(args, "q", "N")
        c = (build_D if obj == "D" else build_Dhat)(args.q, args.N)
        payload = nerve_complex(c).to_json()
    elif obj == "truncated":
        _bounds(args, "n", "K", "L")
        comp = truncated_complex(args.n, args.K, args.L, args.suboperad if args.suboperad != "Brhat" else "B")
        payload = comp.complex.to_json()
    elif obj == "tree":
        payload = T.to_json(V.WORKED_TREE)
    else:
        _bounds(args, "q", "N")
        payload = [g.to_json() for g in hom(args.q, args.N)]
    args.json = True
    _emit(args, payload, "")
    return 0


def load_export(obj: str, payload):
    """Inverse of the export command for each object kind."""
    if obj in ("D", "Dhat", "truncated"):
        return ChainComplex.from_json(payload)
    if obj == "tree":
        return T.from_json(payload)
    return [IntervalMorphism.from_json(g) for g in payload]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="natops", description="Natural operations on Hochschild cochains.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--K", type=int)
        sp.add_argument("--L", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--N", type=int)
        sp.add_argument("--suboperad", choices=SUBOPERAD_CHOICES, default="B")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")
        sp.add_argument("--json", action="store_true", help="JSON instead of a text table")
        return sp

    common(sub.add_parser("enumerate", help="basis sizes")).add_argument("--type")
    sp = common(sub.add_parser("diff", help="differential of basis trees"))
    sp.add_argument("--type")
    sp.add_argument("--tree", help="a tree in the JSON schema")
    sp = common(sub.add_parser("homology", help="homology of a truncation"))
    sp.add_argument("--row", type=int, help="single row k of B(1)")
    sp.add_argument("--keep-dot", action="store_true", help="keep the exceptional tree in arity 0")
    common(sub.add_parser("verify", help="run a verification suite")).add_argument("--suite", default="all")
    common(sub.add_parser("export", help="write JSON")).add_argument("--object", choices=OBJECTS, required=True)
    return p


COMMANDS = {"enumerate": cmd_enumerate, "diff": cmd_diff, "homology": cmd_homology,
            "verify": cmd_verify, "export": cmd_export}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"natops: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"natops: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
