"""Command-line front end.

Exit codes: 0 on success (and on verification match), 1 on verification
mismatch or output failure, 2 on usage errors (bad flags, bad literals,
refused long runs).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .complexity import klc_exhaustive, klc_fast, linear_complexity, profile
from .counting import CountingTable, full_table, n4_count, n5_count
from .errors import KelcError
from .oracle import (
    SpectrumHistogram,
    histogram_csv,
    histogram_json,
    spectrum,
    table_csv,
    table_json,
    verify_counts,
    weight_census,
)
from .seqcore import PeriodicSequence, make_sequence

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


@dataclass
class CliConfig:
    command: str
    n: int | None = None
    k: int | None = None
    L: int | None = None
    seq: str | None = None
    method: str = "fast"
    filter: str = "even"
    threads: int = 0
    format: str = "text"
    out: str | None = None
    seed: int | None = None
    weight: int | None = None
    allow_long: bool = False


def parse_sequence_literal(n: int, literal: str) -> PeriodicSequence:
    """Decode a literal; ``@path`` reads it from a file (trailing newline ok)."""
    if literal.startswith("@"):
        with open(literal[1:], "r", encoding="ascii") as fh:
            literal = fh.read().rstrip("\r\n")
    return make_sequence(n, literal)


def emit_table(table: CountingTable, format: str) -> str:
    """Render a counting table as csv, json, or an aligned two-column text."""
    if format == "csv":
        return table_csv(table)
    if format == "json":
        return table_json(table) + "\n"
    width_l = max(len(str((1 << table.n) - 1)), 1)
    width_c = max(len(str(v)) for v in table.rows.values())
    lines = [f"{'L':>{width_l}}  {'count':>{width_c}}"]
    for L in range(1 << table.n):
        lines.append(f"{L:>{width_l}}  {table.rows[L]:>{width_c}}")
    return "\n".join(lines) + "\n"


def _emit_histogram(hist: SpectrumHistogram, format: str) -> str:
    if format == "csv":
        return histogram_csv(hist)
    if format == "json":
        return histogram_json(hist) + "\n"
    top = 1 << hist.n
    width_l = max(len(str(top)), 1)
    width_c = max(len(str(v)) for v in hist.counts.values()) if hist.counts else 1
    lines = [f"{'L':>{width_l}}  {'count':>{width_c}}"]
    for L in range(top + 1):
        lines.append(f"{L:>{width_l}}  {hist.counts.get(L, 0):>{width_c}}")
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> int:
    try:
        if out is None:
            sys.stdout.write(text)
        else:
            with open(out, "w", encoding="ascii") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _progress(message: str) -> None:
    if sys.stderr.isatty():
        print(message, file=sys.stderr)


def _default_threads() -> int:
    env = os.environ.get("KELC_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kelc",
        description="linear complexity and k-error linear complexity of "
        "2^n-periodic binary sequences",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; the analysis commands are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True, help="period exponent")
        return p

    p = add("lc", "linear complexity of a sequence")
    p.add_argument("--seq", required=True, help="bit/hex literal or @file")

    p = add("klc", "k-error linear complexity of a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("fast", "exhaustive"), default="fast")

    p = add("profile", "k-error complexities for k = 0..K plus k_min")
    p.add_argument("--seq", required=True)
    p.add_argument("--k", type=int, required=True, help="largest k to profile")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = add("count", "closed-form count of sequences with k-error complexity L")
    p.add_argument("--k", type=int, required=True, choices=(4, 5))
    p.add_argument("--L", type=int, required=True)

    p = add("table", "closed-form counts for every L")
    p.add_argument("--k", type=int, required=True, choices=(4, 5))
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")

    p = add("spectrum", "enumerate a population and histogram its k-error "
                        "complexities")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--filter", choices=("all", "even", "odd"), default="even")
    p.add_argument("--method", choices=("fast", "exhaustive"), default="fast")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--allow-long", action="store_true",
                   help="permit the minutes-scale n=5 enumeration")

    p = add("verify", "check the closed-form table against enumeration")
    p.add_argument("--k", type=int, required=True, choices=(4, 5))
    p.add_argument("--method", choices=("fast", "exhaustive"), default="fast")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--allow-long", action="store_true")

    add("sum-check", "check that the counts sum to the even-weight population")

    p = add("census", "histogram plain linear complexity over one weight class")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="write to a file instead of stdout")

    return parser


def _require_short_run(cfg: CliConfig) -> None:
    if cfg.n == 5 and cfg.method == "fast" and not cfg.allow_long:
        space = 1 << (1 << 5)
        raise KelcError(
            f"n=5 enumeration scans {space} sequence words (minutes of CPU); "
            "pass --allow-long to run it"
        )


def _cmd_lc(cfg: CliConfig) -> int:
    print(linear_complexity(parse_sequence_literal(cfg.n, cfg.seq)))
    return EXIT_OK


def _cmd_klc(cfg: CliConfig) -> int:
    s = parse_sequence_literal(cfg.n, cfg.seq)
    fn = klc_fast if cfg.method == "fast" else klc_exhaustive
    print(fn(s, cfg.k))
    return EXIT_OK


def _cmd_profile(cfg: CliConfig) -> int:
    prof = profile(parse_sequence_literal(cfg.n, cfg.seq), cfg.k)
    if cfg.format == "json":
        import json

        print(json.dumps({"n": prof.n, "L": list(prof.L), "k_min": prof.k_min}))
    elif cfg.format == "csv":
        print("k,L")
        for k, v in enumerate(prof.L):
            print(f"{k},{v}")
    else:
        for k, v in enumerate(prof.L):
            print(f"L[{k}] = {v}")
        print(f"k_min = {prof.k_min}")
    return EXIT_OK


def _cmd_count(cfg: CliConfig) -> int:
    fn = n4_count if cfg.k == 4 else n5_count
    print(fn(cfg.n, cfg.L))
    return EXIT_OK


def _cmd_table(cfg: CliConfig) -> int:
    return _write(emit_table(full_table(cfg.n, cfg.k), cfg.format), cfg.out)


def _cmd_spectrum(cfg: CliConfig) -> int:
    _require_short_run(cfg)
    _progress(f"scanning period-{1 << cfg.n} sequences ({cfg.filter} filter)")
    hist = spectrum(cfg.n, cfg.k, cfg.filter, cfg.method, cfg.threads)
    return _write(_emit_histogram(hist, cfg.format), cfg.out)


def _cmd_verify(cfg: CliConfig) -> int:
    _require_short_run(cfg)
    _progress(f"verifying n={cfg.n}, k={cfg.k} by {cfg.method} enumeration")
    report = verify_counts(cfg.n, cfg.k, cfg.method, cfg.threads)
    if cfg.format == "json":
        import json

        text = json.dumps({
            "n": report.n,
            "k": report.k,
            "overall": report.overall,
            "rows": [
                {"L": L, "closed": str(c), "empirical": str(e), "match": m}
                for L, c, e, m in report.rows
            ],
        }) + "\n"
    elif cfg.format == "csv":
        lines = ["L,closed,empirical,match"]
        for L, c, e, m in report.rows:
            lines.append(f"{L},{c},{e},{int(m)}")
        text = "\n".join(lines) + "\n"
    else:
        lines = []
        for L, c, e, m in report.rows:
            mark = "ok" if m else "MISMATCH"
            lines.append(f"L={L}: closed={c} empirical={e} {mark}")
        lines.append("overall: " + ("match" if report.overall else "MISMATCH"))
        text = "\n".join(lines) + "\n"
    code = _write(text, cfg.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if report.overall else EXIT_MISMATCH


def _cmd_sum_check(cfg: CliConfig) -> int:
    total = sum(n4_count(cfg.n, L) for L in range(1 << cfg.n))
    expected = 1 << ((1 << cfg.n) - 1)
    print(f"sum = {total}")
    print(f"population = {expected}")
    return EXIT_OK if total == expected else EXIT_MISMATCH


def _cmd_census(cfg: CliConfig) -> int:
    hist = weight_census(cfg.n, cfg.weight)
    if cfg.format == "json":
        import json

        text = json.dumps({
            "n": cfg.n,
            "weight": cfg.weight,
            "counts": {str(L): str(c) for L, c in sorted(hist.items())},
        }) + "\n"
    elif cfg.format == "csv":
        lines = ["L,count"]
        for L, c in sorted(hist.items()):
            lines.append(f"{L},{c}")
        text = "\n".join(lines) + "\n"
    else:
        lines = [f"L={L}: {c}" for L, c in sorted(hist.items())]
        text = "\n".join(lines) + "\n"
    return _write(text, cfg.out)


_HANDLERS = {
    "lc": _cmd_lc,
    "klc": _cmd_klc,
    "profile": _cmd_profile,
    "count": _cmd_count,
    "table": _cmd_table,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "sum-check": _cmd_sum_check,
    "census": _cmd_census,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    threads = getattr(ns, "threads", None)
    cfg = CliConfig(
        command=ns.command,
        n=getattr(ns, "n", None),
        k=getattr(ns, "k", None),
        L=getattr(ns, "L", None),
        seq=getattr(ns, "seq", None),
        method=getattr(ns, "method", "fast"),
        filter=getattr(ns, "filter", "even"),
        threads=threads if threads is not None else _default_threads(),
        format=getattr(ns, "format", "text"),
        out=getattr(ns, "out", None),
        seed=ns.seed,
        weight=getattr(ns, "weight", None),
        allow_long=getattr(ns, "allow_long", False),
    )
    try:
        return _HANDLERS[cfg.command](cfg)
    except KelcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
