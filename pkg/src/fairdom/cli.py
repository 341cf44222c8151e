"""Command-line front end.

Subcommands: count, enum, poly, fd, table, verify. Graph sources are family
DSL strings (``cycle:9``, ``kmn:2,3``, ``corona(path:3,complete:1)``) or an
edge-list file via ``--edges``. Every command supports plain, json and csv
output; json is emitted with sorted keys and a fixed layout so parsing and
re-dumping it reproduces the bytes.

Exit codes: 0 success, 1 domain/usage error, 2 capacity error, 3 unexpected
verification mismatch. Vertex labels in set listings are 1-based (matching
the usual [n] convention in the literature); ``--zero-based`` switches.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import closed_forms, verify
from .engine import DEFAULT_CAP, count_fd, enumerate_fd, fd_k_number, fd_number, fd_polynomial
from .errors import CapacityError
from .families import parse_family
from .graph import load_edge_list

CONFIG_ENV = "FAIRDOM_CONFIG"
DEFAULT_CONFIG = "fairdom.conf"
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAPACITY = 2
EXIT_VERIFY_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


# -- config and shared helpers -------------------------------------------------


def _load_config(path: str | None) -> dict[str, int]:
    explicit = path is not None or CONFIG_ENV in os.environ
    path = path or os.environ.get(CONFIG_ENV) or DEFAULT_CONFIG
    if not os.path.exists(path):
        if explicit:
            raise ValueError(f"config file not found: {path}")
        return {}
    out: dict[str, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in ("cap", "workers"):
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            try:
                out[key] = int(value.strip())
            except ValueError:
                raise ValueError(f"{path}:{lineno}: {key} must be an integer") from None
    return out


def _effective(args) -> tuple[int | None, int | None]:
    """(cap, workers) with flags winning over the config file."""
    config = _load_config(getattr(args, "config", None))
    cap = args.cap if args.cap is not None else config.get("cap")
    workers = args.workers if args.workers is not None else config.get("workers")
    return cap, workers


def _resolve_source(args):
    """Returns (spec-or-None, build_graph callable)."""
    source = getattr(args, "source", None)
    edges = getattr(args, "edges", None)
    if source and edges:
        raise _UsageError("give either a family spec or --edges, not both")
    if edges:
        return None, lambda: load_edge_list(edges)
    if not source:
        raise _UsageError("a graph source is required (family spec or --edges FILE)")
    spec = parse_family(source)
    return spec, spec.build


def _source_label(args) -> str:
    return getattr(args, "source", None) or getattr(args, "edges", None) or ""


def _labels(vs, zero_based: bool) -> list[int]:
    off = 0 if zero_based else 1
    return [v + off for v in vs]


def _set_str(vs, zero_based: bool) -> str:
    return "{" + ",".join(str(v) for v in _labels(vs, zero_based)) + "}"


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _parse_range(text: str) -> range:
    """'3..12' -> range(3, 13); '9' -> range(9, 10)."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


# -- subcommand handlers ---------------------------------------------------------


def _cmd_count(args) -> int:
    cap, workers = _effective(args)
    spec, build = _resolve_source(args)
    size = args.size
    sets = None
    if args.list:
        # listing always enumerates, so the count comes from the oracle
        method = "oracle"
        sets = enumerate_fd(build(), size, cap=cap, workers=workers)
        value = len(sets)
    elif args.method == "oracle":
        method = "oracle"
        value = count_fd(build(), size, cap=cap, workers=workers)
    elif args.method == "formula":
        if spec is None:
            raise ValueError("--method formula needs a family spec source")
        res = closed_forms.formula_count(spec, size)
        if not res.applicable:
            raise ValueError(
                f"no applicable closed form for {spec} at size {size}: {res.note}"
            )
        method = "formula"
        value = res.value
    else:  # auto
        res = closed_forms.formula_count(spec, size) if spec is not None else None
        if res is not None and res.applicable:
            method, value = "formula", res.value
        else:
            method = "oracle"
            value = count_fd(build(), size, cap=cap, workers=workers)

    if args.format == "json":
        obj = {"command": "count", "source": _source_label(args),
               "size": size, "method": method, "count": value}
        if sets is not None:
            obj["sets"] = [_labels(s, args.zero_based) for s in sets]
        sys.stdout.write(_dump_json(obj))
    elif args.format == "csv":
        if sets is not None:
            sys.stdout.write(_dump_csv(
                ["set_index", "vertices"],
                [[i, " ".join(map(str, _labels(s, args.zero_based)))]
                 for i, s in enumerate(sets)],
            ))
        else:
            sys.stdout.write(_dump_csv(["source", "size", "method", "count"],
                                       [[_source_label(args), size, method, value]]))
    else:
        print(value)
        if sets is not None:
            for s in sets:
                print(_set_str(s, args.zero_based))
    return EXIT_OK


def _cmd_enum(args) -> int:
    cap, workers = _effective(args)
    _, build = _resolve_source(args)
    sets = enumerate_fd(build(), args.size, cap=cap, workers=workers)
    if args.format == "json":
        sys.stdout.write(_dump_json({
            "command": "enum", "source": _source_label(args), "size": args.size,
            "sets": [_labels(s, args.zero_based) for s in sets],
        }))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(
            ["set_index", "vertices"],
            [[i, " ".join(map(str, _labels(s, args.zero_based)))]
             for i, s in enumerate(sets)],
        ))
    else:
        for s in sets:
            print(_set_str(s, args.zero_based))
    return EXIT_OK


def _cmd_poly(args) -> int:
    cap, workers = _effective(args)
    spec, build = _resolve_source(args)
    poly = None
    if spec is not None:
        closed = closed_forms.formula_poly(spec)
        effective_cap = cap if cap is not None else DEFAULT_CAP
        if closed is not None and spec.order > effective_cap:
            poly = closed
    if poly is None:
        poly = fd_polynomial(build(), cap=cap, workers=workers)
    if args.format == "json":
        sys.stdout.write(_dump_json({
            "command": "poly", "source": _source_label(args), "n": poly.n,
            "coefficients": {str(i): c for i, c in poly.terms()},
        }))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(["size", "count"], [[i, c] for i, c in poly.terms()]))
    else:
        for i, c in poly.terms():
            print(f"d_f({i})={c}")
    return EXIT_OK


def _cmd_fd(args) -> int:
    cap, workers = _effective(args)
    _, build = _resolve_source(args)
    g = build()
    if args.k is not None:
        value = fd_k_number(g, args.k, cap=cap, workers=workers)
        key = "fd_k"
    else:
        value = fd_number(g, cap=cap, workers=workers)
        key = "fd"
    if args.format == "json":
        obj = {"command": "fd", "source": _source_label(args), key: value}
        if args.k is not None:
            obj["k"] = args.k
        sys.stdout.write(_dump_json(obj))
    elif args.format == "csv":
        if args.k is not None:
            sys.stdout.write(_dump_csv(["source", "k", key], [[_source_label(args), args.k, value]]))
        else:
            sys.stdout.write(_dump_csv(["source", key], [[_source_label(args), value]]))
    else:
        print(value)
    return EXIT_OK


def _table_rows(family: str, max_n: int, cap, workers) -> tuple[list[int], dict[int, list[int]]]:
    from .families import cycle, path

    start = 3 if family == "cycle" else 1
    if max_n < start:
        raise ValueError(f"--max-n must be >= {start} for {family}")
    columns = list(range(1, max_n + 1))
    rows = {}
    for n in range(start, max_n + 1):
        g = cycle(n) if family == "cycle" else path(n)
        rows[n] = [count_fd(g, j, cap=cap, workers=workers) if j <= n else 0
                   for j in columns]
    return columns, rows


def _cmd_table(args) -> int:
    cap, workers = _effective(args)
    columns, rows = _table_rows(args.family, args.max_n, cap, workers)
    if args.format == "json":
        sys.stdout.write(_dump_json({
            "command": "table", "family": args.family, "max_n": args.max_n,
            "columns": columns,
            "rows": {str(n): vals for n, vals in rows.items()},
        }))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(
            ["n"] + [str(j) for j in columns],
            [[n] + vals for n, vals in sorted(rows.items())],
        ))
    else:
        width = max(
            [len(str(v)) for vals in rows.values() for v in vals]
            + [len(str(c)) for c in columns] + [3]
        )
        head = "n\\j " + " ".join(f"{j:>{width}}" for j in columns)
        print(head)
        for n, vals in sorted(rows.items()):
            print(f"{n:<4}" + " ".join(f"{v:>{width}}" for v in vals))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cap, workers = _effective(args)
    n_range = _parse_range(args.n) if args.n else None
    k_range = _parse_range(args.k) if args.k else None
    if args.family == "all":
        if n_range or k_range:
            raise ValueError("--n/--k ranges apply to a single family, not 'all'")
        rows = verify.verify_all(cap=cap, workers=workers)
    else:
        rows = verify.verify_family(args.family, n_range, k_range, cap=cap, workers=workers)
    expected = verify.load_expected_errata(args.expected)
    unexpected, missing = verify.compare_with_expected(rows, expected)
    ok = not unexpected and not missing

    if args.format == "json":
        sys.stdout.write(_dump_json({
            "command": "verify", "family": args.family,
            "rows": [r.line() for r in rows],
            "errata": [r.line() for r in verify.errata_rows(rows)],
            "unexpected": unexpected, "missing": missing,
            "matches_expected": ok,
        }))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(
            ["family", "check", "n", "k", "oracle", "claimed", "status"],
            [[r.family, r.check, r.n, "-" if r.k is None else r.k,
              "-" if r.oracle is None else r.oracle,
              "-" if r.claimed is None else r.claimed, r.status]
             for r in rows],
        ))
    else:
        sys.stdout.write(verify.errata_report(rows))
        if unexpected:
            print("unexpected discrepancies (not in the committed errata list):")
            for line in unexpected:
                print(f"  {line}")
        if missing:
            print("committed errata not reproduced:")
            for line in missing:
                print(f"  {line}")
        print(f"expected-errata match: {'yes' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_VERIFY_MISMATCH


# -- parser ----------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, source: bool = False) -> None:
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--config", help="key=value config file (keys: cap, workers)")
    p.add_argument("--cap", type=int, help="subset-enumeration cap override (<= 64)")
    p.add_argument("--workers", type=int, help="thread workers for counting")
    if source:
        p.add_argument("source", nargs="?",
                       help="family spec like cycle:9, kmn:2,3, corona(path:3,complete:1)")
        p.add_argument("--edges", help="edge-list file (header 'n <count>', 1-based edges)")
        p.add_argument("--zero-based", action="store_true",
                       help="print vertex labels 0-based instead of 1-based")


def _build_parser() -> _Parser:
    parser = _Parser(prog="fairdom",
                     description="Count, enumerate and verify fair dominating sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[], help="count fair dominating sets of one size")
    _add_common(p, source=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--method", choices=("auto", "oracle", "formula"), default="auto")
    p.add_argument("--list", action="store_true",
                   help="also list the sets (forces the oracle)")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enum", help="list fair dominating sets of one size")
    _add_common(p, source=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(handler=_cmd_enum)

    p = sub.add_parser("poly", help="full fair domination polynomial")
    _add_common(p, source=True)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("fd", help="fair domination number (or fd_k with --k)")
    _add_common(p, source=True)
    p.add_argument("--k", type=int, help="fairness constant for fd_k")
    p.set_defaults(handler=_cmd_fd)

    p = sub.add_parser("table", help="reproduce a published count table from the oracle")
    _add_common(p)
    p.add_argument("family", choices=("cycle", "path"))
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="cross-check formulas and tables against the oracle")
    _add_common(p)
    p.add_argument("family", choices=verify.FAMILIES + ("all",))
    p.add_argument("--n", help="n range like 3..12 (default: the committed sweep range)")
    p.add_argument("--k", help="k range like 1..6 (default: all sizes per n)")
    p.add_argument("--expected", help="override the committed expected-errata file")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
