"""Command line: ``grassclique {analyze,census,count,graph,verify}``.

Exit codes: 0 all checks pass, 1 a theorem/oracle or formula mismatch was
found, 2 invalid input or the enumeration guard tripped.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .gf import FieldError, FieldSpec, get_field, parse_modulus
from .grassmann import GrassmannParams, GuardError, ParameterError, gaussian_binomial, q_number
from .matfq import MatrixError, rowspace
from .report import emit_report, parse_matrix, write_bytes
from .starlab import CliqueError, analyze, census, graph_stats

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2

log = logging.getLogger("grassclique")


@dataclass
class RunConfig:
    subcommand: str
    q: int | None = None
    modulus: tuple[int, ...] | None = None
    n: int | None = None
    k: int | None = None
    matrix: str | None = None
    matrix_file: Path | None = None
    jobs: int = 1
    out: Path | None = None
    force: bool = False
    fmt: str = "json"

    def field(self) -> FieldSpec:
        if self.q is None:
            raise FieldError("--q is required")
        return get_field(self.q, self.modulus)

    def params(self) -> GrassmannParams:
        if self.n is None or self.k is None:
            raise ParameterError("--n and --k are required")
        p = GrassmannParams(self.field(), self.n, self.k)
        p.require_graph_range()
        return p

    def matrix_text(self) -> str:
        if self.matrix_file is not None:
            try:
                return self.matrix_file.read_text()
            except OSError as exc:
                raise MatrixError(f"cannot read {self.matrix_file}: {exc.strerror}") from exc
        if self.matrix is None:
            raise MatrixError("give --matrix or --matrix-file")
        return self.matrix


def _emit(cfg: RunConfig, data: bytes) -> None:
    if cfg.out is None:
        sys.stdout.write(data.decode())
    else:
        write_bytes(cfg.out, data)


def cmd_count(cfg: RunConfig) -> int:
    f = cfg.field()
    if cfg.n is None or cfg.k is None:
        raise ParameterError("--n and --k are required")
    n, k, q = cfg.n, cfg.k, f.q
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got n={n}, k={k}")
    out = {
        "n": n,
        "k": k,
        "q": q,
        "grassmannian": gaussian_binomial(n, k, q),
        "star_size": q_number(n - k + 1, q),
        "top_size": q_number(k + 1, q),
    }
    _emit(cfg, (json.dumps(out) + "\n").encode())
    return EXIT_OK


def cmd_analyze(cfg: RunConfig, scope: str, oracle: bool) -> int:
    f = cfg.field()
    s = rowspace(parse_matrix(cfg.matrix_text(), f))
    if cfg.n is not None and cfg.n != s.n:
        raise ParameterError(f"--n {cfg.n} but the matrix has {s.n} columns")
    if cfg.k is not None and cfg.k != s.dim + 1:
        raise ParameterError(f"--k {cfg.k} but the matrix has rank {s.dim} (needs k-1)")
    rep = analyze(s, run_oracle=oracle, force=cfg.force, scope=scope)
    _emit(cfg, emit_report(rep))
    return EXIT_OK if rep.agree or not oracle else EXIT_MISMATCH


def cmd_census(cfg: RunConfig) -> int:
    c = census(cfg.params(), jobs=cfg.jobs, force=cfg.force)
    _emit(cfg, emit_report(c, cfg.fmt))
    summary = dict(c.summary(), wall_time=round(c.wall_time, 3))
    print(json.dumps(summary), file=sys.stderr)
    return EXIT_OK if c.mismatches == 0 and c.w_law_violations == 0 else EXIT_MISMATCH


def cmd_graph(cfg: RunConfig) -> int:
    stats = graph_stats(cfg.params(), force=cfg.force)
    _emit(cfg, (json.dumps(stats.to_dict()) + "\n").encode())
    return EXIT_OK


def cmd_verify(only: list[str] | None) -> int:
    from .verify import format_table, run_checks

    results = run_checks(only)
    print(format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grassclique", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def field_args(p: argparse.ArgumentParser, nk: bool = True) -> None:
        p.add_argument("--q", type=int, required=True, help="field order (prime power <= 32)")
        p.add_argument("--modulus", help="comma-separated coefficients, constant term first")
        if nk:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--out", type=Path, help="write output here instead of stdout")

    p = sub.add_parser("count", help="Grassmannian, star and top sizes")
    field_args(p)

    p = sub.add_parser("analyze", help="report on the star of one (k-1)-code")
    field_args(p, nk=False)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help='rows split by ";" or newline, e.g. "1 0 1; 0 1 1"')
    src.add_argument("--matrix-file", type=Path)
    p.add_argument("--scope", choices=("auto", "full", "local"), default="auto", help="oracle scan scope")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--force", action="store_true", help="ignore the enumeration size guard")

    p = sub.add_parser("census", help="classify every (k-1)-code and check with the oracle")
    field_args(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")

    p = sub.add_parser("graph", help="vertices, edges and components of the projective-code graph")
    field_args(p)
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("verify", help="run the golden and acceptance checks")
    p.add_argument("--only", nargs="+", metavar="ID", help="run only these check ids")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.subcommand == "verify":
        return cmd_verify(args.only)
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            q=args.q,
            modulus=parse_modulus(args.modulus) if args.modulus else None,
            n=args.n,
            k=args.k,
            matrix=getattr(args, "matrix", None),
            matrix_file=getattr(args, "matrix_file", None),
            jobs=getattr(args, "jobs", 1),
            out=args.out,
            force=getattr(args, "force", False),
            fmt=getattr(args, "fmt", "json"),
        )
        if cfg.subcommand == "count":
            return cmd_count(cfg)
        if cfg.subcommand == "analyze":
            return cmd_analyze(cfg, args.scope, not args.no_oracle)
        if cfg.subcommand == "census":
            return cmd_census(cfg)
        return cmd_graph(cfg)
    except (FieldError, MatrixError, ParameterError, CliqueError, GuardError) as exc:
        print(f"grassclique: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"grassclique: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
