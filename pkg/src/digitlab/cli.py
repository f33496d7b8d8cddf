"""Command-line interface: dataset ingestion and subcommand dispatch.

One binary, one subcommand per module family:

    digitlab analyze   <file> [--format csv --column amount ...]
    digitlab chain     --spec 'Uniform(0, Uniform(0, 1e5))' --n 100000
    digitlab scheme    simple --lb 1 --ub-min 1 --ub-max 9999
    digitlab analytic  kx --s 0 --g 3
    digitlab growth    anomalies --l 1 --t-max 50
    digitlab invariance --family exponential --params 0.3 --m 1

Exit codes: 0 success, 2 usage/parse error, 3 empty or unparseable data,
4 internal numerical failure.  --json writes the same numbers the table
shows; every JSON document embeds a reproducibility manifest.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time

import numpy as np

from . import __version__
from . import analytic, chains, conformity, growth, schemes
from .digits import benford_first
from .distributions import family_by_name
from .errors import DigitLabError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EMPTY = 3
EXIT_NUMERIC = 4


def _manifest(args: argparse.Namespace) -> dict:
    argv = getattr(args, "_argv", [])
    digest = hashlib.sha256(" ".join(argv).encode()).hexdigest()[:16]
    return {
        "command_line": argv,
        "seed": getattr(args, "seed", None),
        "config_digest": digest,
        "tool_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }


def _emit(args, payload: dict, table: str) -> None:
    if not getattr(args, "quiet", False):
        print(table)
    if getattr(args, "json", None):
        payload = dict(payload)
        payload["manifest"] = _manifest(args)
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _ld_table(probs: dict, extra: dict | None = None) -> str:
    lines = ["digit  probability  benford", "-----  -----------  -------"]
    for d in range(1, 10):
        lines.append(f"{d:>5}  {probs.get(d, 0.0):>11.5f}  {benford_first(d):>7.5f}")
    for key, val in (extra or {}).items():
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# ingestion


_FLOAT_CHARS = set("0123456789+-.eE")


def _parse_number(text: str):
    """Strict float parsing: scientific notation fine, separators rejected."""
    text = text.strip()
    if not text or not set(text) <= _FLOAT_CHARS:
        return None
    try:
        value = float(text)
    except ValueError:
        return None
    return value if np.isfinite(value) else None


def ingest(path: str, fmt: str, selector: str | None):
    """Read values per the ingest spec; returns (values, n_malformed)."""
    values: list[float] = []
    malformed = 0
    with open(path, "r", newline="") as fh:
        if fmt == "plain":
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                v = _parse_number(line)
                if v is None:
                    malformed += 1
                else:
                    values.append(v)
        elif fmt == "csv":
            reader = csv.reader(fh)
            rows = list(reader)
            if not rows:
                return np.array([]), 0
            header, body = rows[0], rows[1:]
            if selector is None:
                raise DigitLabError("CSV ingestion needs --column")
            if selector.isdigit():
                idx = int(selector)
            else:
                try:
                    idx = header.index(selector)
                except ValueError:
                    raise DigitLabError(f"column {selector!r} not in header {header}") from None
            for row in body:
                if idx >= len(row):
                    malformed += 1
                    continue
                v = _parse_number(row[idx])
                if v is None:
                    malformed += 1
                else:
                    values.append(v)
        elif fmt == "jsonl":
            if selector is None:
                raise DigitLabError("JSONL ingestion needs --field")
            parts = selector.split(".")
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    for p in parts:
                        obj = obj[p]
                    v = float(obj)
                except (ValueError, TypeError, KeyError, json.JSONDecodeError):
                    malformed += 1
                    continue
                if np.isfinite(v):
                    values.append(v)
                else:
                    malformed += 1
        else:
            raise DigitLabError(f"unknown format {fmt!r}")
    return np.array(values, dtype=np.float64), malformed


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    try:
        values, malformed = ingest(args.path, args.format, args.column or args.field)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.min_magnitude is not None:
        values = values[np.abs(values) >= args.min_magnitude]
    if not args.keep_sign:
        values = np.abs(values)
    if values.size == 0 or not np.any(values != 0):
        print("error: no parseable nonzero values", file=sys.stderr)
        return EXIT_EMPTY
    rep = conformity.report(values)
    lines = [
        f"n = {rep.n}   zeros skipped = {rep.skipped_zeros}   malformed = {malformed}",
        "",
        "digit  1st-order  share    2nd-order  3rd-order  benford-1st",
    ]
    n2 = max(1, sum(rep.observed_second.values()))
    n3 = max(1, sum(rep.observed_third.values()))
    for d in range(10):
        c1 = rep.observed_first.get(d, 0)
        share = c1 / rep.n if d > 0 else 0.0
        b = f"{benford_first(d):.4f}" if d > 0 else "     -"
        lines.append(
            f"{d:>5}  {c1:>9}  {share:.4f}   {rep.observed_second.get(d, 0) / n2:>9.4f}"
            f"  {rep.observed_third.get(d, 0) / n3:>9.4f}  {b}"
        )
    lines += [
        "",
        f"chi-square (1st order, 8 dof): {rep.chi_sqr_first:.2f}"
        f"   (0.01 critical value: {rep.chi_sqr_critical_001:.2f})",
        f"L-inf: {rep.l_inf:.5f}   L1: {rep.l1:.5f}",
        f"mantissa KS: {rep.mantissa_ks:.5f}   (0.01 critical: {rep.mantissa_ks_critical:.5f})",
    ]
    for a in rep.annotations:
        lines.append(f"note: {a}")
    _emit(args, rep.to_json_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_chain(args) -> int:
    try:
        if args.preset:
            kw = {}
            if args.depth is not None:
                kw["depth"] = args.depth
            if args.m is not None:
                kw["m"] = args.m
            if args.cycles is not None:
                kw["cycles"] = args.cycles
            spec = chains.preset(args.preset, **kw)
        else:
            spec = chains.parse_chain(args.spec)
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    policy = chains.ResamplePolicy(
        max_attempts=args.max_attempts, on_exhaustion=args.on_exhaustion
    )
    try:
        res = chains.simulate_chain(
            spec, args.n, seed=args.seed, policy=policy,
            keep_samples=args.samples is not None, workers=args.threads,
        )
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.samples is not None:
        np.savetxt(args.samples, res.samples)
    extra = {
        "spec": res.spec_text,
        "n accepted": res.n_accepted,
        "resampled": res.n_resampled,
        "skipped zeros": res.skipped_zeros,
        "policy dropped": res.policy_dropped,
        "chi-square": f"{res.chi_sqr:.2f}",
        "valid": res.valid,
    }
    _emit(args, res.to_json_dict(), _ld_table(res.ld.probs, extra))
    return EXIT_OK


def cmd_scheme(args) -> int:
    try:
        if args.kind == "simple":
            res = schemes.simple_scheme(args.lb, args.ub_min, args.ub_max)
        elif args.kind == "iterated":
            lo, hi = (int(x) for x in args.top.split(":"))
            res = schemes.iterated_scheme(
                args.lb, args.inner_min, (lo, hi), args.depth, mid_min=args.mid_min
            )
        else:  # twist
            res = schemes.benford_twist_scheme(args.rate, args.start, args.end, lb=args.lb)
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, res.to_json_dict(), _ld_table(res.ld.probs, {"scheme": res.meta.get("scheme")}))
    return EXIT_OK


def cmd_analytic(args) -> int:
    hist = None
    try:
        if args.case == "kx":
            dist = analytic.ld_kx(args.s, args.g)
        elif args.case == "power-law":
            dist = analytic.ld_power_law(args.m, args.lo, args.hi)
        elif args.case == "exponential":
            dist = analytic.ld_exponential(args.p)
        elif args.case == "ten-to-uniform":
            spec = analytic.UniformLog(args.r, args.s)
            dist = analytic.ld_ten_to_symmetric(spec)
            hist = analytic.mantissa_density(spec, args.bins)
        elif args.case == "ten-to-triangular":
            spec = analytic.TriangularLog(args.a, args.mode, args.b)
            dist = analytic.ld_ten_to_symmetric(spec)
            hist = analytic.mantissa_density(spec, args.bins)
        elif args.case == "ten-to-semicircle":
            spec = analytic.SemiCircularLog(args.center, args.radius)
            dist = analytic.ld_ten_to_symmetric(spec)
            hist = analytic.mantissa_density(spec, args.bins)
        elif args.case == "shifted-kx":
            dist = analytic.ld_of_density(
                lambda x: (1.0 / np.log(10.0)) / (x - 4.0) if 5.0 <= x <= 14.0 else 0.0,
                (5.0, 14.0),
            )
        elif args.case == "mixed-sign-kx":
            dist = analytic.ld_of_density(
                lambda x: (1.0 / np.log(10.0)) / (x + 4.0) if -3.0 <= x <= 6.0 else 0.0,
                (-3.0, 6.0),
            )
        elif args.case == "ratio-uniforms":
            dist = analytic.ratio_of_uniforms_ld()
        else:
            print(f"error: unknown case {args.case!r}", file=sys.stderr)
            return EXIT_USAGE
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if hist is not None and args.csv:
        _write_csv(args.csv, ["bin_lo", "bin_hi", "density"],
                   [(i / len(hist), (i + 1) / len(hist), h) for i, h in enumerate(hist)])
    payload = {
        "schema_version": 1,
        "case": args.case,
        "ld_probs": {str(d): dist.probs[d] for d in range(1, 10)},
    }
    _emit(args, payload, _ld_table(dist.probs, {"case": args.case}))
    return EXIT_OK


def cmd_growth(args) -> int:
    try:
        if args.sub == "series":
            series = growth.GrowthSeries(base=args.base, percent=args.rate, length=args.n)
            dist, chi = growth.series_ld(series)
            rec = growth.detect_anomalous(args.rate, args.t_max)
            extra = {"rate %": args.rate, "chi-square": f"{chi:.2f}",
                     "anomaly": f"L={rec.L} T={rec.T}" if rec else "none"}
            payload = {"schema_version": 1, "rate_percent": args.rate, "chi_sqr": chi,
                       "anomaly": {"L": rec.L, "T": rec.T} if rec else None,
                       "ld_probs": {str(d): dist.probs[d] for d in range(1, 10)}}
            _emit(args, payload, _ld_table(dist.probs, extra))
        elif args.sub == "anomalies":
            recs = growth.enumerate_anomalous([args.l], (1, args.t_max))
            rows = [(r.L, r.T, float(r.fraction), round(r.percent, 4)) for r in recs]
            table = "L  T  fraction  percent\n" + "\n".join(
                f"{L}  {T}  {f:.4f}  {p}" for L, T, f, p in rows)
            if args.csv:
                _write_csv(args.csv, ["L", "T", "fraction", "percent"], rows)
            _emit(args, {"schema_version": 1, "anomalies": rows}, table)
        elif args.sub == "scan":
            cells = growth.rate_scan(args.lo, args.hi, args.step, args.n, args.base, args.t_max)
            csv_text = growth.scan_to_csv(cells)
            if args.csv:
                with open(args.csv, "w") as fh:
                    fh.write(csv_text)
            spikes = sum(1 for c in cells if c.chi_sqr > 50)
            flagged = sum(1 for c in cells if c.anomaly is not None)
            table = f"scanned {len(cells)} rates; chi>50 spikes: {spikes}; flagged rational: {flagged}"
            _emit(args, {"schema_version": 1, "rates": len(cells),
                         "spikes": spikes, "flagged": flagged}, table)
        else:  # factors
            facs = growth.cumulative_factors(args.rate, args.count)
            rows = [(j + 1, f"{v:.2f}") for j, v in enumerate(facs)]
            if args.csv:
                _write_csv(args.csv, ["index", "factor"], rows)
            table = "\n".join(f"{j:>3}  {v}" for j, v in rows)
            _emit(args, {"schema_version": 1, "factors": [float(v) for v in facs]}, table)
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_invariance(args) -> int:
    try:
        cls = family_by_name(args.family)
        model = cls(*args.params)
        subset = None
        if args.scale_only:
            subset = [model.pot_scale_params[0] if model.pot_scale_params else model.param_names[0]]
        if args.mode == "analytic":
            diff = chains.power_of_ten_invariance_check(model, args.m, mode="analytic", subset=subset)
        else:
            diff = chains.power_of_ten_invariance_check(
                model, args.m, mode="montecarlo", subset=subset, n=args.n, seed=args.seed)
    except DigitLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    table = (f"family {args.family} params {args.params} scaled by 10^{args.m} "
             f"({args.mode}): max per-digit LD difference = {diff:.3e}")
    _emit(args, {"schema_version": 1, "family": args.family, "params": list(args.params),
                 "m": args.m, "mode": args.mode, "max_ld_difference": diff}, table)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="digitlab", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"digitlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--json", metavar="PATH", default=None)
        sp.add_argument("--csv", metavar="PATH", default=None)
        sp.add_argument("--quiet", action="store_true")
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("analyze", help="conformity report for a dataset file")
    sp.add_argument("path")
    sp.add_argument("--format", choices=("plain", "csv", "jsonl"), default="plain")
    sp.add_argument("--column", default=None, help="CSV column name or index")
    sp.add_argument("--field", default=None, help="JSONL field path (dotted)")
    sp.add_argument("--min-magnitude", type=float, default=None)
    sp.add_argument("--keep-sign", action="store_true",
                    help="skip the default absolute-value filter")
    common(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("chain", help="simulate a chain of distributions")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec", default=None)
    g.add_argument("--preset", default=None,
                   choices=("flehinger", "benford_twist", "mini_hill", "rayleigh_cycles", "table8_chain"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--depth", type=int, default=None, help="flehinger depth")
    sp.add_argument("--m", type=float, default=None, help="flehinger terminal constant")
    sp.add_argument("--cycles", type=int, default=None, help="rayleigh_cycles count")
    sp.add_argument("--max-attempts", type=int, default=100)
    sp.add_argument("--on-exhaustion", choices=("skip", "error"), default="skip")
    sp.add_argument("--samples", metavar="PATH", default=None,
                    help="write accepted samples to a file")
    common(sp)
    sp.set_defaults(fn=cmd_chain)

    sp = sub.add_parser("scheme", help="deterministic averaging schemes")
    sp.add_argument("kind", choices=("simple", "iterated", "twist"))
    sp.add_argument("--lb", type=int, default=1)
    sp.add_argument("--ub-min", type=int, default=1)
    sp.add_argument("--ub-max", type=int, default=9999)
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--inner-min", type=int, default=1)
    sp.add_argument("--mid-min", type=int, default=None)
    sp.add_argument("--top", default="1:9999", help="top range as lo:hi")
    sp.add_argument("--rate", type=float, default=2.0, help="twist growth percent")
    sp.add_argument("--start", type=int, default=99)
    sp.add_argument("--end", type=int, default=999)
    common(sp)
    sp.set_defaults(fn=cmd_scheme)

    sp = sub.add_parser("analytic", help="exact LD of analytic densities")
    sp.add_argument("case", choices=("kx", "power-law", "exponential", "ten-to-uniform",
                                     "ten-to-triangular", "ten-to-semicircle", "shifted-kx",
                                     "mixed-sign-kx", "ratio-uniforms"))
    sp.add_argument("--s", type=float, default=0.0)
    sp.add_argument("--g", type=float, default=3.0)
    sp.add_argument("--m", type=float, default=1.0)
    sp.add_argument("--lo", type=float, default=1.0)
    sp.add_argument("--hi", type=float, default=1000.0)
    sp.add_argument("--p", type=float, default=1.0)
    sp.add_argument("--r", type=float, default=0.0)
    sp.add_argument("--a", type=float, default=0.0)
    sp.add_argument("--b", type=float, default=3.0)
    sp.add_argument("--mode", dest="mode", type=float, default=1.5,
                    help="triangular apex position")
    sp.add_argument("--center", type=float, default=11.0)
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--bins", type=int, default=100)
    common(sp)
    sp.set_defaults(fn=cmd_analytic)

    sp = sub.add_parser("growth", help="exponential growth series tools")
    sp.add_argument("sub", choices=("series", "anomalies", "scan", "factors"))
    sp.add_argument("--rate", type=float, default=10.0)
    sp.add_argument("--base", type=float, default=3.0)
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--t-max", type=int, default=100)
    sp.add_argument("--lo", type=float, default=1.0)
    sp.add_argument("--hi", type=float, default=600.0)
    sp.add_argument("--step", type=float, default=0.01)
    sp.add_argument("--count", type=int, default=31)
    common(sp)
    sp.set_defaults(fn=cmd_growth)

    sp = sub.add_parser("invariance", help="power-of-ten LD invariance check")
    sp.add_argument("--family", required=True)
    sp.add_argument("--params", type=float, nargs="+", required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--mode", choices=("analytic", "montecarlo"), default="analytic")
    sp.add_argument("--scale-only", action="store_true",
                    help="scale only the first form parameter")
    sp.add_argument("--n", type=int, default=10**6)
    common(sp)
    sp.set_defaults(fn=cmd_invariance)

    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return int(exc.code) if exc.code else EXIT_OK
    args._argv = ["digitlab", *argv]
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
