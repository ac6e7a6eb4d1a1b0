"""Command-line interface.

Exit codes: 0 ok, 1 usage/IO/parse error, 2 verification failure,
3 randomized attempts exhausted, 4 oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import warnings
from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Sequence

from .boxrep import BoxRepParseError, read_boxrep, serialize, verify
from .derand import build_derandomized
from .graph import (FAMILIES, Graph, GraphFamilySpec, GraphParseError, format_graph,
                    gen_gnm, generate, read_graph)
from .oracle import (OracleLimitError, OracleLimits, boxicity_exact, cond_prob_exact,
                     edge_prob_exact)
from .rand_build import (AttemptsExhausted, RandBuildConfig, build_randomized,
                         default_dimension)
from .rng import Rng
from .split import build_split, split_bound

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_EXHAUSTED, EXIT_LIMIT = 0, 1, 2, 3, 4

BENCH_COLUMNS = ("n", "m", "c", "seed", "sample", "delta", "dim", "bound",
                 "delta_lt_6c", "valid")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fmt_decimal(x: Fraction) -> str:
    return f"{float(x):g}"


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    spec = GraphFamilySpec(args.type, n=args.n, k=args.k, n1=args.n1, m=args.m,
                           p=args.p, seed=args.seed)
    try:
        g = generate(spec)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    comment = f"generated: {args.type} " + " ".join(
        f"{k}={v}" for k, v in (("n", args.n), ("k", args.k), ("n1", args.n1),
                                ("m", args.m), ("p", args.p), ("seed", args.seed))
        if v is not None)
    _write_text(args.out, format_graph(g, comment))
    info = sys.stdout if args.out not in (None, "-") else sys.stderr
    print(f"n = {g.n}", file=info)
    print(f"m = {g.m}", file=info)
    print(f"Delta = {g.max_degree}", file=info)
    print(f"d_av = {fmt_decimal(g.average_degree())}", file=info)
    return EXIT_OK


# ---------------------------------------------------------------------------
# build / verify
# ---------------------------------------------------------------------------

def _load_graph(path: str) -> Graph | None:
    try:
        return read_graph(path)
    except (OSError, GraphParseError) as exc:
        print(f"error reading graph {path}: {exc}", file=sys.stderr)
        return None


def cmd_build(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    if g is None:
        return EXIT_USAGE
    try:
        cfg = RandBuildConfig(seed=args.seed, t_override=args.t_override,
                              max_attempts=args.max_attempts)
    except ValueError as exc:
        print(f"build: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.method == "rand":
            rep = build_randomized(g, cfg)
            bound = default_dimension(g)
            bound_text = "ceil((Delta+2) ln n)"
        elif args.method == "derand":
            rep = build_derandomized(g)
            bound = default_dimension(g)
            bound_text = "ceil((Delta+2) ln n)"
        else:
            if g.m < 1:
                print("build: split method needs at least one edge", file=sys.stderr)
                return EXIT_USAGE
            rep = build_split(g, cfg, method=args.split_core)
            bound = split_bound(g)
            bound_text = "ceil(5 sqrt(m ln n))"
    except AttemptsExhausted as exc:
        print(f"build: randomized construction failed: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except AssertionError as exc:
        print(f"build: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = verify(g, rep)
    if not report.valid:
        print("build: representation failed verification", file=sys.stderr)
        print(report.summary(), file=sys.stderr)
        return EXIT_INVALID
    try:
        _write_text(args.out, serialize(rep))
    except OSError as exc:
        print(f"build: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    info = sys.stdout if args.out not in (None, "-") else sys.stderr
    print(f"dimension = {rep.dimension}", file=info)
    print(f"bound = {bound}  [{bound_text}]", file=info)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if g is None:
        return EXIT_USAGE
    try:
        rep = read_boxrep(args.rep)
    except (OSError, BoxRepParseError) as exc:
        print(f"error reading representation {args.rep}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if rep.n != g.n:
        print(f"verify: representation has {rep.n} vertices, graph has {g.n}", file=sys.stderr)
        return EXIT_INVALID
    report = verify(g, rep)
    print(report.summary(limit=args.limit))
    return EXIT_OK if report.valid else EXIT_INVALID


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

@dataclass
class BenchRow:
    n: int
    m: int
    c: Fraction
    seed: int
    sample: int
    delta: int
    dim: int | None
    bound: int
    delta_lt_6c: bool
    valid: bool

    def csv_fields(self) -> list[str]:
        out = []
        for value in astuple(self):
            if isinstance(value, bool):
                out.append("true" if value else "false")
            elif value is None:
                out.append("")
            elif isinstance(value, Fraction):
                out.append(fmt_decimal(value))
            else:
                out.append(str(value))
        return out


def bench_sample(n: int, m: int, seed: int, sample: int, method: str) -> BenchRow:
    """One G(n, m) draw from substream ``(seed, sample, 0)``, built and verified.

    Randomized builds use substream ``(seed, sample, 1)``.
    """
    g = gen_gnm(n, m, Rng(seed, sample, 0))
    c = Fraction(2 * m, n)
    build_rng = Rng(seed, sample, 1)
    dim, valid = None, False
    try:
        if method == "derand":
            rep = build_derandomized(g)
        elif method == "rand":
            rep = build_randomized(g, rng=build_rng)
        else:
            # G(n, m) samples are often disconnected; bench asserts no split bound
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RuntimeWarning)
                rep = build_split(g, method="derand")
        valid = verify(g, rep).valid
        dim = rep.dimension
    except (AttemptsExhausted, AssertionError, ValueError):
        pass
    return BenchRow(n, m, c, seed, sample, g.max_degree, dim, default_dimension(g),
                    g.max_degree < 6 * c, valid)


def run_bench(n: int, c: Fraction, samples: int, seed: int, method: str) -> list[BenchRow]:
    m = math.ceil(c * n / 2)
    return [bench_sample(n, m, seed, i, method) for i in range(samples)]


def format_bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    for row in rows:
        w.writerow(row.csv_fields())
    return buf.getvalue()


def bench_summary(rows: Sequence[BenchRow]) -> dict[str, Fraction]:
    """Fractions of samples with Δ < 6c and with dim <= (6c + 2) ln n."""
    if not rows:
        return {"delta_lt_6c": Fraction(0), "dim_within_6c_bound": Fraction(0)}
    k = len(rows)
    within = sum(1 for r in rows
                 if r.valid and r.dim <= (6 * float(r.c) + 2) * math.log(r.n))
    return {"delta_lt_6c": Fraction(sum(r.delta_lt_6c for r in rows), k),
            "dim_within_6c_bound": Fraction(within, k)}


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        c = Fraction(args.c)
    except ValueError:
        print(f"bench: invalid --c {args.c!r}", file=sys.stderr)
        return EXIT_USAGE
    n = args.n
    if n < 2 or c < 0 or args.samples < 0 or not 0 <= args.seed < 1 << 64:
        print("bench: need n >= 2, c >= 0, samples >= 0 and a 64-bit seed", file=sys.stderr)
        return EXIT_USAGE
    m = math.ceil(c * n / 2)
    if m > n * (n - 1) // 2:
        print(f"bench: m = {m} exceeds n(n-1)/2", file=sys.stderr)
        return EXIT_USAGE
    rows = run_bench(n, c, args.samples, args.seed, args.method)
    try:
        _write_text(args.csv, format_bench_csv(rows))
    except OSError as exc:
        print(f"bench: cannot write {args.csv}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    s = bench_summary(rows)
    info = sys.stdout if args.csv not in (None, "-") else sys.stderr
    print(f"samples = {len(rows)}  n = {n}  m = {m}  c = 2m/n = {fmt_decimal(Fraction(2 * m, n))}",
          file=info)
    print(f"fraction with Delta < 6c = {float(s['delta_lt_6c']):.4f}", file=info)
    print(f"fraction with dim <= (6c+2) ln n = {float(s['dim_within_6c_bound']):.4f}", file=info)
    if rows and not any(r.valid for r in rows):
        return EXIT_INVALID
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _parse_prefix(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()] if text.strip() else []


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    if g is None:
        return EXIT_USAGE
    limits = OracleLimits(max_n_perm=args.max_n_perm, max_non_edges=args.max_non_edges,
                          max_n_box=args.max_n_box)
    try:
        if args.query == "box":
            print(boxicity_exact(g, limits))
        elif args.query == "edgeprob":
            print(fmt_rational(edge_prob_exact(g, args.u, args.v, limits)))
        else:
            prefix = _parse_prefix(args.prefix)
            print(fmt_rational(cond_prob_exact(g, prefix, (args.u, args.v), limits)))
    except OracleLimitError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="boxicity", description="Low-dimensional box representations of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("--type", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--n1", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("build", help="build and verify a box representation")
    b.add_argument("--method", required=True, choices=("rand", "derand", "split"))
    b.add_argument("--in", dest="input", required=True)
    b.add_argument("--out", help="output path (default: stdout)")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--t-override", type=int)
    b.add_argument("--max-attempts", type=int)
    b.add_argument("--split-core", choices=("rand", "derand"), default="derand",
                   help="builder for the low-degree part with --method split")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a representation against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--rep", required=True)
    v.add_argument("--limit", type=int, default=20, help="offending pairs to list")
    v.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="G(n, m) benchmark, CSV output")
    be.add_argument("--n", type=int, required=True)
    be.add_argument("--c", required=True, help="average degree; m = ceil(c n / 2)")
    be.add_argument("--samples", type=int, default=100)
    be.add_argument("--seed", type=int, default=0)
    be.add_argument("--method", choices=("rand", "derand", "split"), default="derand")
    be.add_argument("--csv", default="-", help="output path (default: stdout)")
    be.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="brute-force answers for small graphs")
    o.add_argument("query", choices=("box", "edgeprob", "condprob"))
    o.add_argument("--in", dest="input", required=True)
    o.add_argument("--u", type=int)
    o.add_argument("--v", type=int)
    o.add_argument("--prefix", default="", help="placed vertices in order, e.g. 2,1")
    o.add_argument("--max-n-perm", type=int, default=OracleLimits.max_n_perm)
    o.add_argument("--max-non-edges", type=int, default=OracleLimits.max_non_edges)
    o.add_argument("--max-n-box", type=int, default=OracleLimits.max_n_box)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.query != "box" and (args.u is None or args.v is None):
        parser.error("edgeprob and condprob need --u and --v")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
