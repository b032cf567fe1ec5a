"""Command-line interface.

Usage:
    mdtree triangle --n 3 --method stirling
    mdtree triangle --n 6 --method all --format csv
    mdtree verify --suite all --n-max 8 --alpha-max 3
    mdtree bijection --example
    mdtree bijection --f '[5,2,1,3,2]' --k 2 --A '[-2,-1,1]'
    mdtree export --n-max 25 --format csv --out triangle.csv
    mdtree tree --input tree.json

Exit codes: 0 success, 1 verification failure, 2 usage, 3 enumeration
limit, 4 domain error, 5 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field, fields
from typing import Sequence

from . import config, maps, trees, verify
from .counting import CLOSED_FORM_METHODS, Method, triangle_row
from .errors import InvalidInput, LimitExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT, EXIT_DOMAIN, EXIT_IO = range(6)

METHOD_CHOICES = [m.value for m in Method] + ["all"]
SUITE_CHOICES = list(verify.SUITES) + ["all"]
FORMATS = ("text", "csv", "json")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n_max: int = 8
    alpha_max: int = 3
    series_order: int = 12
    enumeration_cap: int = field(default_factory=config.enumeration_cap)
    oracle_max: int = 5
    output_format: str = "text"
    methods: list[str] = field(default_factory=lambda: ["stirling"])
    workers: int = 1

    def __post_init__(self):
        for name in ("n_max", "alpha_max", "series_order", "enumeration_cap"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be >= 0")
        if self.output_format not in FORMATS:
            raise UsageError(f"format must be one of {FORMATS}")


# config-file key -> RunConfig attribute; flags use the same names with dashes
_CONFIG_KEYS = {
    "n_max": "n_max",
    "alpha_max": "alpha_max",
    "order": "series_order",
    "series_order": "series_order",
    "enumeration_cap": "enumeration_cap",
    "oracle_max": "oracle_max",
    "format": "output_format",
    "method": "methods",
    "workers": "workers",
}


def load_config(path: str | None, overrides: dict) -> RunConfig:
    """Merge defaults, an optional JSON config file, and command-line flags (flags win)."""
    values: dict = {}
    if path:
        with open(path) as fh:
            raw = json.load(fh)
        for key, val in raw.items():
            attr = _CONFIG_KEYS.get(key.replace("-", "_"))
            if attr is None:
                raise UsageError(f"unknown config key {key!r}")
            values[attr] = val
    for key, val in overrides.items():
        if val is not None:
            values[_CONFIG_KEYS[key]] = val
    if isinstance(values.get("methods"), str):
        values["methods"] = [values["methods"]]
    known = {f.name for f in fields(RunConfig)}
    return RunConfig(**{k: v for k, v in values.items() if k in known})


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(x) for x in json.loads(text)]
    return [int(x) for x in text.split(",") if x.strip()]


def _read_json_arg(text: str):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    if os.path.isfile(text):
        with open(text) as fh:
            return json.load(fh)
    return json.loads(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- subcommands -------------------------------------------------------------

def cmd_triangle(args, cfg: RunConfig) -> int:
    n = args.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    if args.k is not None and not 0 <= args.k <= n:
        raise UsageError(f"--k must lie in [0, {n}]")
    names = cfg.methods
    if names == ["all"]:
        methods = list(CLOSED_FORM_METHODS)
        if n <= cfg.enumeration_cap:
            methods.insert(0, Method.ENUMERATE)
        else:
            print(f"note: n={n} above enumeration cap {cfg.enumeration_cap}; "
                  "skipping the enumerate method", file=sys.stderr)
    else:
        methods = [Method(m) for m in names]

    rows = [triangle_row(n, m, cap=cfg.enumeration_cap, workers=cfg.workers) for m in methods]
    status = EXIT_OK
    if len({r.values for r in rows}) > 1:
        status = EXIT_FAIL
        ref = rows[0]
        for r in rows[1:]:
            for k in range(n + 1):
                if r[k] != ref[k]:
                    print(f"DISAGREEMENT n={n} k={k}: {ref.method}={ref[k]} {r.method}={r[k]}",
                          file=sys.stderr)
                    break

    def pick(r):
        return [r[args.k]] if args.k is not None else list(r.values)

    fmt = cfg.output_format
    if fmt == "text":
        if len(rows) == 1:
            text = ",".join(str(v) for v in pick(rows[0])) + "\n"
        else:
            text = "".join(f"{r.method}: " + ",".join(str(v) for v in pick(r)) + "\n" for r in rows)
    elif fmt == "csv":
        body = []
        for r in rows:
            ks = [args.k] if args.k is not None else range(n + 1)
            body.extend((n, k, str(r[k]), r.method.value) for k in ks)
        text = _csv_text(("n", "k", "value", "method"), body)
    else:
        payload = [{"n": n, "method": r.method.value, "values": [str(v) for v in pick(r)]}
                   for r in rows]
        if args.k is not None:
            for p in payload:
                p["k"] = args.k
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n"
    _emit(text, args.out)
    return status


def cmd_verify(args, cfg: RunConfig) -> int:
    checks = verify.run_suite(args.suite, n_max=cfg.n_max, alpha_max=cfg.alpha_max,
                              order=cfg.series_order,
                              oracle_max=min(cfg.oracle_max, cfg.enumeration_cap),
                              workers=cfg.workers)
    records = [c.to_dict() for c in checks]
    failed = [c for c in checks if not c.passed]

    fmt = cfg.output_format
    if fmt == "json":
        text = json.dumps({"suite": args.suite, "total": len(checks), "failed": len(failed),
                           "checks": records}, indent=2) + "\n"
    elif fmt == "csv":
        text = _csv_text(("identity", "n", "k", "alpha", "lhs", "rhs", "pass"),
                         [(r["identity"], r["n"], r.get("k", ""), r.get("alpha", ""),
                           r["lhs"], r["rhs"], r["pass"]) for r in records])
    else:
        lines = []
        for c in checks:
            tag = "PASS" if c.passed else "FAIL"
            where = f"n={c.n}" + (f" k={c.k}" if c.k is not None else "") \
                + (f" alpha={c.alpha}" if c.alpha is not None else "")
            lines.append(f"{tag} {c.identity} {where} lhs={c.lhs} rhs={c.rhs}")
        lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)

    if failed:
        c = failed[0]
        print(f"counterexample: identity={c.identity} n={c.n} k={c.k} alpha={c.alpha} "
              f"lhs={c.lhs} rhs={c.rhs}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


EXAMPLE_F = (5, 2, 1, 3, 2)
EXAMPLE_K = 2
EXAMPLE_A = (-2, -1, 1)


def cmd_bijection(args, cfg: RunConfig) -> int:
    if args.example:
        f = maps.EndoFunction(EXAMPLE_F)
        k, A = EXAMPLE_K, list(EXAMPLE_A)
        alpha = len(A)
    else:
        if args.f is None or args.k is None:
            raise UsageError("bijection needs --f and --k (or --example)")
        try:
            f = maps.function_from_json(_read_json_arg(args.f), "endo")
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot parse --f: {exc}") from None
        k = args.k
        A = _parse_int_list(args.A) if args.A else []
        alpha = len(A) if args.alpha is None else args.alpha

    g = maps.phi(f, k)
    h = maps.psi(A, f, k, alpha)
    rk, rA, rf = maps.psi_inverse(h)
    ok = (rk, list(rA.elements), rf) == (k, sorted(A), f) and maps.phi_inverse(g, k) == f
    record = {
        "f": list(f.values),
        "k": k,
        "alpha": alpha,
        "A": sorted(A),
        "g": list(g.values),
        "h": list(h.values),
        "recovered": {"k": rk, "A": list(rA.elements), "f": list(rf.values)},
        "round_trip": ok,
    }
    _emit(json.dumps(record) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args, cfg: RunConfig) -> int:
    methods = cfg.methods
    if methods == ["all"] or len(methods) != 1:
        raise UsageError("export takes a single --method")
    method = Method(methods[0])
    fmt = cfg.output_format if cfg.output_format != "text" else "csv"
    rows = [triangle_row(n, method, cap=cfg.enumeration_cap, workers=cfg.workers)
            for n in range(cfg.n_max + 1)]
    if fmt == "csv":
        text = _csv_text(("n", "k", "value", "method"),
                         [(r.n, k, str(v), method.value) for r in rows for k, v in enumerate(r)])
    else:
        text = json.dumps({"method": method.value,
                           "rows": [{"n": r.n, "values": [str(v) for v in r]} for r in rows]},
                          indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_tree(args, cfg: RunConfig) -> int:
    try:
        t = trees.tree_from_json(_read_json_arg(args.input))
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse --input: {exc}") from None
    md = trees.maximal_decreasing_subtree(t)
    pieces = trees.decompose(t)
    record = {
        "tree": t.to_dict(),
        "md": sorted(md.vertices),
        "k": md.k,
        "local_minimum": trees.is_local_minimum(t),
        "pieces": [{"root": p.root, "labels": sorted(p.labels),
                    "parent": {str(v): p.parent[v] for v in sorted(p.parent)}} for p in pieces],
    }
    _emit(json.dumps(record) + "\n", args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mdtree",
        description="Rooted labeled trees counted by maximal decreasing subtree size.")
    parser.add_argument("--config", help="JSON config file (keys as flags; flags win)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, fmt=True):
        if fmt:
            p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--workers", type=int, default=None,
                       help="processes for exhaustive enumeration")

    p = sub.add_parser("triangle", help="one row |T(n,0)|, ..., |T(n,n)|")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=METHOD_CHOICES, default=None)
    common(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="run exact identity checks")
    p.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    p.add_argument("--n-max", type=int)
    p.add_argument("--alpha-max", type=int)
    p.add_argument("--order", type=int, help="series truncation order")
    p.add_argument("--oracle-max", type=int,
                   help="largest n compared against exhaustive enumeration")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="apply phi and psi to a function and invert")
    p.add_argument("--f", help="function as JSON list, JSON object or @file")
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--A", help="missing set, JSON list or comma separated")
    p.add_argument("--example", action="store_true", help="the n=5, k=2, alpha=3 example")
    common(p, fmt=False)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("export", help="write the triangle for n <= n-max")
    p.add_argument("--n-max", type=int)
    p.add_argument("--method", choices=[m.value for m in Method], default=None)
    common(p)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("tree", help="MD and decomposition of a tree given as JSON")
    p.add_argument("--input", required=True, help="tree JSON, inline or @file")
    common(p, fmt=False)
    p.set_defaults(func=cmd_tree)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {
        "n_max": getattr(args, "n_max", None),
        "alpha_max": getattr(args, "alpha_max", None),
        "order": getattr(args, "order", None),
        "oracle_max": getattr(args, "oracle_max", None),
        "format": getattr(args, "format", None),
        "method": getattr(args, "method", None),
        "workers": getattr(args, "workers", None),
    }
    try:
        cfg = load_config(args.config, overrides)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"mdtree: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"mdtree: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InvalidInput as exc:
        print(f"mdtree: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"mdtree: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
