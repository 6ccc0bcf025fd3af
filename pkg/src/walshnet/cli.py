"""Command-line front end: ``walshnet {wafom,verify,search,integrate}``.

Exit codes: 0 success, 2 usage error, 3 unreadable or malformed net file,
4 enumeration cap exceeded, 5 a net violates the WAFOM lower bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from scipy.stats import spearmanr

from . import __version__
from .bounds import REPORT_FIELDS, lower_bound_log2, verify_net
from .f2core import DEFAULT_ENUM_CAP, DEFAULT_SUBSPACE_CAP, EnumerationCapError, Subspace, enumerate_subspaces
from .netfile import NetFormatError, read_net, write_net
from .qmcnet import INTEGRAND_NAMES, derive_seeds, integrand, qmc_integrate, random_net, to_points
from .wafom import WafomMethod, wafom

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_VIOLATION = 5

CSV_VERSION = "1"

WAFOM_FIELDS = ("net", "s", "n", "m", "method", "wafom", "wafom_log2", "wafom_exact")
VERIFY_FIELDS = ("net",) + REPORT_FIELDS
SEARCH_FIELDS = ("net", "s", "n", "m", "count", "wafom", "wafom_log2", "wafom_exact", "log2_ratio", "lower_bound_log2")
INTEGRATE_FIELDS = ("net", "s", "n", "m", "function", "wafom_log2", "estimate", "exact_integral", "abs_error")

_METHODS = {"dual": WafomMethod.DUAL_ENUM, "points": WafomMethod.POINT_SUM, "exact": WafomMethod.EXACT}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    nets: list[str] = field(default_factory=list)
    gen: tuple[int, ...] | None = None
    seed: int = 0
    c_prime: float = 1.0
    methods: list[str] = field(default_factory=lambda: ["exact"])
    exhaustive: bool = False
    function: str = "product"
    out: str | None = None
    format: str = "csv"
    cap_dim: int = DEFAULT_ENUM_CAP
    best_net: str = "best.net"


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isinf(value):
            return "-inf" if value < 0 else "inf"
        return repr(value)
    return value


def _json_value(value):
    if isinstance(value, float) and math.isinf(value):
        return "-inf" if value < 0 else "inf"
    return value


def render(rows: list[dict], fields: Sequence[str], fmt: str) -> str:
    """CSV (versioned header comment) or JSON; both carry the same fields in the same order."""
    if fmt == "json":
        data = [{k: _json_value(row[k]) for k in fields} for row in rows]
        return json.dumps({"version": CSV_VERSION, "rows": data}, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# walshnet-csv v{CSV_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_fmt(row[k]) for k in fields])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    # write-then-rename so a failed run never leaves a partial file
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=".walshnet-")
    with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, target)


def iter_nets(config: RunConfig) -> Iterator[tuple[str, Subspace]]:
    """Nets named by --net, then those described by --gen (random or exhaustive)."""
    for path in config.nets:
        try:
            yield path, read_net(path)
        except OSError as exc:
            raise NetFormatError(f"{path}: {exc.strerror or exc}") from exc
    if config.gen is None:
        return
    if config.exhaustive:
        s, n, m = config.gen[:3]
        for k, p in enumerate(enumerate_subspaces(s, n, m, DEFAULT_SUBSPACE_CAP)):
            yield f"sub:{k}", p
        return
    if len(config.gen) != 4:
        raise UsageError("--gen needs s,n,m,count unless --exhaustive is given")
    s, n, m, count = config.gen
    for k, seed in enumerate(derive_seeds(config.seed, count)):
        yield f"gen:{k}", random_net(s, n, m, seed)


def _require_nets(config: RunConfig) -> None:
    if not config.nets and config.gen is None:
        raise UsageError("give at least one --net FILE or a --gen spec")


def cmd_wafom(config: RunConfig) -> tuple[int, list[dict]]:
    _require_nets(config)
    rows = []
    for name, p in iter_nets(config):
        for method in config.methods:
            value = wafom(p, _METHODS[method], config.cap_dim)
            rows.append({
                "net": name, "s": p.s, "n": p.n, "m": p.dim, "method": method,
                "wafom": value.float_value, "wafom_log2": value.log2_value,
                "wafom_exact": str(value.exact) if method == "exact" else "",
            })
    return EXIT_OK, rows


def cmd_verify(config: RunConfig) -> tuple[int, list[dict]]:
    _require_nets(config)
    rows = []
    violations = 0
    for name, p in iter_nets(config):
        report = verify_net(p, config.c_prime, config.cap_dim)
        violations += report.violation
        rows.append({"net": name, **report.as_dict()})
    checked = sum(r["threshold_ok"] for r in rows)
    print(f"verified {len(rows)} nets, {checked} meet the threshold, {violations} violations", file=sys.stderr)
    return (EXIT_VIOLATION if violations else EXIT_OK), rows


def cmd_search(config: RunConfig) -> tuple[int, list[dict]]:
    if config.gen is None or len(config.gen) != 4 or config.nets or config.exhaustive:
        raise UsageError("search needs --gen s,n,m,count (random nets only)")
    s, n, m, count = config.gen
    if count < 1 or m < 1:
        raise UsageError("search needs count >= 1 and m >= 1")
    best = None
    for name, p in iter_nets(config):
        value = wafom(p, WafomMethod.EXACT, config.cap_dim)
        if best is None or value.exact < best[2].exact:
            best = (name, p, value)
    name, p, value = best
    write_net(p, config.best_net)
    row = {
        "net": name, "s": s, "n": n, "m": m, "count": count,
        "wafom": value.float_value, "wafom_log2": value.log2_value, "wafom_exact": str(value.exact),
        "log2_ratio": value.log2_value / (-m * m / s),
        "lower_bound_log2": lower_bound_log2(config.c_prime, m, s),
    }
    return EXIT_OK, [row]


def cmd_integrate(config: RunConfig) -> tuple[int, list[dict]]:
    _require_nets(config)
    if config.function not in INTEGRAND_NAMES:
        raise UsageError(f"unknown function {config.function!r}; choose from {', '.join(INTEGRAND_NAMES)}")
    rows = []
    for name, p in iter_nets(config):
        f = integrand(config.function, p.s)
        estimate = qmc_integrate(to_points(p, config.cap_dim), f)
        value = wafom(p, WafomMethod.EXACT, config.cap_dim)
        rows.append({
            "net": name, "s": p.s, "n": p.n, "m": p.dim, "function": f.name,
            "wafom_log2": value.log2_value, "estimate": estimate,
            "exact_integral": f.exact_integral, "abs_error": abs(estimate - f.exact_integral),
        })
    wafoms = [r["wafom_log2"] for r in rows]
    errors = [r["abs_error"] for r in rows]
    if len(rows) >= 3 and len(set(wafoms)) > 1 and len(set(errors)) > 1:
        rho = spearmanr(wafoms, errors).statistic
        print(f"spearman(wafom, abs_error) = {rho:.6f}", file=sys.stderr)
    return EXIT_OK, rows


COMMANDS = {
    "wafom": (cmd_wafom, WAFOM_FIELDS),
    "verify": (cmd_verify, VERIFY_FIELDS),
    "search": (cmd_search, SEARCH_FIELDS),
    "integrate": (cmd_integrate, INTEGRATE_FIELDS),
}


def run(config: RunConfig) -> int:
    """Execute one command, write its table, and return the exit status."""
    func, fields = COMMANDS[config.command]
    try:
        status, rows = func(config)
    except UsageError as exc:
        print(f"walshnet {config.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NetFormatError as exc:
        print(f"walshnet {config.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationCapError as exc:
        print(f"walshnet {config.command}: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        # domain errors from the library, e.g. a generated net that is not proper
        print(f"walshnet {config.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(render(rows, fields, config.format), config.out)
    return status


def _gen_spec(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if len(parts) not in (3, 4) or any(v < 0 for v in parts) or min(parts[:2]) < 1:
        raise argparse.ArgumentTypeError("expected s,n,m[,count] with s, n >= 1")
    return parts


def _c_prime(text: str) -> float:
    value = float(text)
    if not value > 0.5:
        raise argparse.ArgumentTypeError(f"C' must exceed 1/2, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--net", action="append", default=[], metavar="FILE", help="net file (repeatable)")
    common.add_argument("--gen", type=_gen_spec, metavar="s,n,m,count", help="generate random nets")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cprime", type=_c_prime, default=1.0, help="constant C' > 1/2 of the lower bound")
    common.add_argument("--exhaustive", action="store_true", help="with --gen s,n,m: every m-dim subspace")
    common.add_argument("--out", metavar="FILE", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--cap-dim", type=_positive, default=DEFAULT_ENUM_CAP, help="max dimension to enumerate")

    parser = argparse.ArgumentParser(prog="walshnet", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("wafom", parents=[common], help="WAFOM of each net")
    p.add_argument("--method", action="append", choices=tuple(_METHODS), help="dual, points or exact (repeatable)")
    sub.add_parser("verify", parents=[common], help="check the WAFOM lower bound on each net")
    p = sub.add_parser("search", parents=[common], help="best of count random nets")
    p.add_argument("--best-net", default="best.net", metavar="FILE", help="where to write the best net")
    p = sub.add_parser("integrate", parents=[common], help="QMC integration error table")
    p.add_argument("--function", default="product", choices=INTEGRAND_NAMES)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        nets=args.net,
        gen=args.gen,
        seed=args.seed,
        c_prime=args.cprime,
        methods=getattr(args, "method", None) or ["exact"],
        exhaustive=args.exhaustive,
        function=getattr(args, "function", "product"),
        out=args.out,
        format=args.format,
        cap_dim=args.cap_dim,
        best_net=getattr(args, "best_net", "best.net"),
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
