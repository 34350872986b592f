"""Command-line front end: ``series``, ``e8``, ``degrees`` and ``verify``.

Exit codes: 0 success, 1 a verification failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from . import __version__, e8, golden, severi, suite
from .qseries import QSeries, e4_infinity, eisenstein, format_rational, theta

SERIES = {
    "E2": lambda N: eisenstein(2, N),
    "E4": lambda N: eisenstein(4, N),
    "E6": lambda N: eisenstein(6, N),
    "theta": theta,
    "E4inf": e4_infinity,
    "phi": severi.nl_series_phi,
    "psi_ex": severi.excess_correction,
    "psi_no": severi.nodal_correction,
    "psi_sec": severi.section_series,
    "deg_ord": lambda N: severi.degree_series(severi.ORDINARY, N),
    "deg_wei": lambda N: severi.degree_series(severi.WEIERSTRASS, N),
}

NAMED_VECTORS = {
    "zero": e8.E8Vector.zero(),
    "root": e8.E8Vector((2, 2, 0, 0, 0, 0, 0, 0)),
    "norm4": e8.E8Vector((4, 0, 0, 0, 0, 0, 0, 0)),
}

MIN_VERIFY_PRECISION = 8


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    precision: int = 200
    norm_cap: int = 60
    threads: str = "auto"
    output_format: str = "text"
    output_path: str | None = None


def _threads(value: str) -> str:
    if value == "auto":
        return value
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("threads must be a positive integer or 'auto'")
    if k < 1:
        raise argparse.ArgumentTypeError("threads must be positive")
    return value


def _vector(text: str) -> e8.E8Vector:
    if text in NAMED_VECTORS:
        return NAMED_VECTORS[text]
    try:
        parts = [int(x) for x in text.split(",")]
        return e8.E8Vector(tuple(parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected zero|root|norm4 or 8 comma-separated doubled coordinates ({exc})"
        )


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS lets the global flags appear before or after the verb
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--precision", type=int, help="series precision (default 200)")
    common.add_argument("--norm-cap", type=int, help="largest enumerated norm (default 60)")
    common.add_argument("--threads", type=_threads, help="k or auto")
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "text"))
    common.add_argument("--out", dest="output_path")

    p = argparse.ArgumentParser(prog="severi-lab", description=__doc__, parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument(
        "--seed-table",
        action="store_true",
        help="recompute the published reference values and print them",
    )
    sub = p.add_subparsers(dest="verb")

    s = sub.add_parser("series", parents=[common], help="emit a q-series")
    s.add_argument("name", choices=sorted(SERIES))

    e = sub.add_parser("e8", parents=[common], help="E8 lattice queries")
    esub = e.add_subparsers(dest="e8_cmd", required=True)
    c = esub.add_parser("count", parents=[common])
    c.add_argument("--norm", type=int, required=True)
    esub.add_parser("classes", parents=[common])
    o = esub.add_parser("orbit", parents=[common])
    o.add_argument("--seed", type=_vector, default=NAMED_VECTORS["root"])
    pr = esub.add_parser("pairs", parents=[common])
    pr.add_argument("--w", type=_vector, required=True)
    pr.add_argument("--m", type=int, required=True)
    st = esub.add_parser("stream", parents=[common])
    st.add_argument("--norm", type=int, required=True)

    d = sub.add_parser("degrees", parents=[common], help="degree table")
    d.add_argument("--g-max", type=int, default=10)

    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("checks", nargs="+", metavar="CHECK", help="all or " + ", ".join(suite.CHECK_NAMES))
    return p


def _config(args) -> CliConfig:
    given = {k: v for k, v in vars(args).items() if k in CliConfig.__dataclass_fields__}
    cfg = CliConfig(**given)
    if cfg.precision < 0:
        raise UsageError("--precision must be nonnegative")
    if cfg.norm_cap < 2 or cfg.norm_cap % 2:
        raise UsageError(f"--norm-cap must be a positive even integer, got {cfg.norm_cap}")
    return cfg


def _apply_threads(cfg: CliConfig) -> None:
    if cfg.threads == "auto":
        return
    import numba

    numba.set_num_threads(min(int(cfg.threads), numba.config.NUMBA_NUM_THREADS))


def _check_norm_cap(n: int, cfg: CliConfig) -> None:
    if n > cfg.norm_cap:
        raise UsageError(f"norm {n} exceeds the norm cap {cfg.norm_cap} (raise --norm-cap)")


# -- rendering -------------------------------------------------------------------


def _envelope(cfg: CliConfig, results) -> str:
    return json.dumps(
        {"tool_version": __version__, "config": asdict(cfg), "results": results},
        indent=2,
    ) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_series(name: str, f: QSeries, cfg: CliConfig) -> str:
    if cfg.output_format == "json":
        return _envelope(cfg, [{"name": name, **f.to_dict()}])
    if cfg.output_format == "csv":
        return _csv(["n", "coefficient"], [(n, format_rational(c)) for n, c in enumerate(f.coeffs)])
    return "".join(f"{n} {format_rational(c)}\n" for n, c in enumerate(f.coeffs))


def render_records(records: list[dict], cfg: CliConfig, text) -> str:
    if cfg.output_format == "json":
        return _envelope(cfg, records)
    if cfg.output_format == "csv":
        header = list(records[0]) if records else []
        return _csv(header, [[r[k] for k in header] for r in records])
    return text


def degree_csv_rows(rows: list[severi.DegreeRow]):
    m_max = max((max(r.nonsimple_telltales, default=0) for r in rows), default=0)
    header = ["g", "type", "degree", "simple"]
    header += [f"nonsimple_m{m}" for m in range(1, m_max + 1)]
    header += ["bound", "genus_bound"]
    out = []
    for r in rows:
        line = [r.g, r.type, r.conjectural_degree, r.simple_telltales]
        line += [r.nonsimple_telltales.get(m, "") for m in range(1, m_max + 1)]
        line += [r.rigorous_degree_bound, r.genus_bound]
        out.append(line)
    return header, out


def render_degrees(rows: list[severi.DegreeRow], cfg: CliConfig) -> str:
    if cfg.output_format == "json":
        return _envelope(cfg, [r.to_dict() for r in rows])
    header, out = degree_csv_rows(rows)
    if cfg.output_format == "csv":
        return _csv(header, out)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *out)]
    lines = [" ".join(str(x).rjust(w) for x, w in zip(line, widths)) for line in [header, *out]]
    return "\n".join(lines) + "\n"


def render_reports(reports, cfg: CliConfig) -> str:
    if cfg.output_format == "json":
        return _envelope(cfg, [r.to_dict() for r in reports])
    if cfg.output_format == "csv":
        rows = []
        for r in reports:
            d = r.to_dict()["first_discrepancy"] or {}
            rows.append([r.name, r.precision, r.status, d.get("index", ""), d.get("expected", ""), d.get("got", "")])
        return _csv(["name", "precision", "status", "index", "expected", "got"], rows)
    lines = []
    for r in reports:
        line = f"{r.status.upper():4} {r.name} (precision {r.precision})"
        if r.first_discrepancy is not None:
            i, exp, got = r.to_dict()["first_discrepancy"].values()
            line += f": first discrepancy at {i}: expected {exp}, got {got}"
        lines.append(line)
    return "\n".join(lines) + "\n"


# -- verbs ---------------------------------------------------------------------


def cmd_series(args, cfg: CliConfig) -> tuple[str, int]:
    f = SERIES[args.name](cfg.precision)
    return render_series(args.name, f, cfg), 0


def cmd_e8(args, cfg: CliConfig) -> tuple[str, int]:
    sub = args.e8_cmd
    if sub == "count":
        n = args.norm
        if n < 0 or n % 2:
            raise UsageError(f"E8 is even: --norm must be even, got {n}")
        _check_norm_cap(n, cfg)
        count = int(e8.norm_counts(max(n, 2))[n // 2])
        return render_records([{"norm": n, "count": count}], cfg, f"{count}\n"), 0
    if sub == "classes":
        c = e8.classify_classes()
        rec = {"zero": c.zero, "root": c.root, "norm4": c.norm4, "total": sum(c)}
        return render_records([rec], cfg, f"{c.zero}/{c.root}/{c.norm4}\n"), 0
    if sub == "orbit":
        seed = args.seed
        _check_norm_cap(seed.norm, cfg)
        size = len(e8.orbit(seed))
        rec = {"seed": list(seed.doubled), "norm": seed.norm, "orbit_size": size}
        return render_records([rec], cfg, f"{size}\n"), 0
    if sub == "pairs":
        if args.m < 1:
            raise UsageError("--m must be positive")
        _check_norm_cap(2 * args.m, cfg)
        count = e8.count_pair_decompositions(args.w, args.m)
        rec = {"w": list(args.w.doubled), "m": args.m, "pairs": count}
        return render_records([rec], cfg, f"{count}\n"), 0
    if sub == "stream":
        n = args.norm
        if n < 0 or n % 2:
            raise UsageError(f"E8 is even: --norm must be even, got {n}")
        _check_norm_cap(n, cfg)
        buf = io.StringIO()
        e8.stream_norm(n, buf)
        return buf.getvalue(), 0
    raise UsageError(f"unknown e8 command {sub!r}")


def cmd_degrees(args, cfg: CliConfig) -> tuple[str, int]:
    if args.g_max < 0:
        raise UsageError("--g-max must be nonnegative")
    if args.g_max + 2 > cfg.precision:
        raise UsageError(f"--precision {cfg.precision} is too small for --g-max {args.g_max}")
    return render_degrees(severi.degree_table(args.g_max), cfg), 0


def cmd_verify(args, cfg: CliConfig) -> tuple[str, int]:
    if cfg.precision < MIN_VERIFY_PRECISION:
        raise UsageError(f"verification needs --precision >= {MIN_VERIFY_PRECISION}")
    try:
        reports = suite.run_checks(args.checks, cfg.precision, cfg.norm_cap)
    except KeyError as exc:
        raise UsageError(f"unknown check: {exc.args[0]}")
    code = 0 if all(r.passed for r in reports) else 1
    return render_reports(reports, cfg), code


def cmd_seed_table(cfg: CliConfig) -> tuple[str, int]:
    rows = golden.seed_table()
    code = 0 if all(r["match"] for r in rows) else 1
    if cfg.output_format == "json":
        return _envelope(cfg, rows), code
    lines = [
        f"{'ok ' if r['match'] else 'BAD'} {r['key']}: {r['value']} ({r['source']})" for r in rows
    ]
    return "\n".join(lines) + "\n", code


VERBS = {"series": cmd_series, "e8": cmd_e8, "degrees": cmd_degrees, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        _apply_threads(cfg)
        if args.seed_table:
            text, code = cmd_seed_table(cfg)
        elif args.verb is None:
            parser.print_usage(sys.stderr)
            return 2
        else:
            text, code = VERBS[args.verb](args, cfg)
    except UsageError as exc:
        print(f"severi-lab: error: {exc}", file=sys.stderr)
        return 2
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
