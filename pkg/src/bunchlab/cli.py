"""Command-line front end.

    bunchlab <mode> [--config FILE] [--out FILE] [--format json|csv]
                    [--seed N] [--unit SCALE]

Modes: ``enhance``, ``scan``, ``table``, ``verify``, ``amplifier``. Results are
JSON documents carrying ``"schema": 1``; scans (and optionally tables) can be
written as CSV. Exit status: 0 on success, 1 when a verification check
fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .amplifier import AmplifierGain, emission_probability, output_amplitudes
from .config import SCHEMA_VERSION, ConfigError, ExperimentConfig, load, validate
from .exceptions import BunchlabError
from .interference import (InputConfiguration, coincidence_probability,
                           delay_scan)
from .scenarios import parse_label, scenario_to_packets, table_rows
from .verification import run_all

CONVENTION = ("p_quantum and p_classical include the (N+M)! factor of the "
              "unordered multi-detector time integral; enhancement is their ratio")
SCAN_COLUMNS = ("delay_s", "p_quantum", "p_classical", "enhancement", "normalized")
TABLE_COLUMNS = ("label", "factor", "published", "published_label")


def _document(mode, result, **extra):
    doc = {"schema": SCHEMA_VERSION, "mode": mode}
    doc.update(extra)
    doc["result"] = result
    return doc


def _dump_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _dump_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _configuration(cfg: ExperimentConfig) -> InputConfiguration:
    if cfg.scenario_label is not None:
        scenario = parse_label(cfg.scenario_label)
        return scenario_to_packets(scenario, transmissivity=cfg.transmissivity)
    return InputConfiguration(cfg.packets_a, cfg.packets_b, cfg.transmissivity)


def run_enhance(cfg: ExperimentConfig, args):
    config = _configuration(cfg)
    result = coincidence_probability(config).as_dict()
    result.update(n=config.n_a, m=config.n_b, transmissivity=config.transmissivity)
    return _dump_json(_document("enhance", result, convention=CONVENTION)), 0


def run_scan(cfg: ExperimentConfig, args):
    config = _configuration(cfg)
    delays = np.linspace(cfg.scan["start"], cfg.scan["stop"], cfg.scan["steps"])
    scan = delay_scan(config, delays)
    rows = [(float(tau) * args.unit, r.p_quantum, r.p_classical, r.enhancement, float(norm))
            for tau, r, norm in zip(scan.delays, scan.results, scan.normalized)]
    if args.format == "json":
        result = {"columns": list(SCAN_COLUMNS), "rows": [list(r) for r in rows],
                  "baseline": scan.baseline, "extension": scan.extension}
        return _dump_json(_document("scan", result, convention=CONVENTION)), 0
    return _dump_csv(SCAN_COLUMNS, rows), 0


def run_table(cfg: ExperimentConfig, args):
    n, m = cfg.table["n"], cfg.table["m"]
    rows = table_rows(n, m)
    if args.format == "csv":
        return _dump_csv(TABLE_COLUMNS, [[r[c] for c in TABLE_COLUMNS] for r in rows]), 0
    return _dump_json(_document("table", rows, n=n, m=m)), 0


def run_verify(cfg: ExperimentConfig, args):
    seed = cfg.seed if cfg.seed is not None else 0
    checks = run_all(seed)
    status = 0 if all(c.passed for c in checks) else 1
    if args.format == "json":
        doc = _document("verify", [c.as_dict() for c in checks], seed=seed,
                        passed=status == 0)
        return _dump_json(doc), status
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  "
             f"(cases={c.cases}, max_error={c.max_error:.3e}, tol={c.tolerance:.0e})"
             for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed (seed={seed})")
    return "\n".join(lines) + "\n", status


def run_amplifier(cfg: ExperimentConfig, args):
    amp = cfg.amplifier
    gain = AmplifierGain.from_coupling(amp["small_g"])
    k = amp["n_unmatched"]
    rows = []
    for m in range(amp["n_matched"] + 1):
        p = emission_probability(gain, m, k)
        rows.append({
            "n_matched": m,
            "n_unmatched": k,
            "emission_probability": p,
            "enhancement": p / emission_probability(gain, 0, k),
            "amplitudes": [{"state": list(state), "re": a.real, "im": a.imag}
                           for state, a in output_amplitudes(gain, m, k)],
        })
    g = complex(amp["small_g"])
    return _dump_json(_document("amplifier", rows, small_g=[g.real, g.imag])), 0


RUNNERS = {
    "enhance": run_enhance,
    "scan": run_scan,
    "table": run_table,
    "verify": run_verify,
    "amplifier": run_amplifier,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bunchlab",
        description="Generalized photon bunching at a lossless beam splitter.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("mode", choices=sorted(RUNNERS))
    parser.add_argument("numbers", nargs="*", type=int, metavar="N",
                        help="table only: photon numbers n m")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--out", help="write the result here instead of stdout")
    parser.add_argument("--format", choices=("json", "csv"),
                        help="output format (default: csv for scan, a text report "
                             "for verify, json otherwise)")
    parser.add_argument("--seed", type=int, help="seed for verify")
    parser.add_argument("--unit", type=float, default=1.0,
                        help="internal time unit in seconds; config times are divided by it")
    parser.add_argument("--label", help="enhance only: scenario label such as 2a1b+ab")
    parser.add_argument("--transmissivity", type=float,
                        help="enhance with --label: beam-splitter transmissivity")
    return parser


def _config_from_args(args) -> ExperimentConfig:
    if args.config:
        doc_cfg = load(args.config, unit=args.unit)
        if doc_cfg.mode != args.mode:
            raise ConfigError([("mode", f"config is for {doc_cfg.mode!r}, "
                                        f"command line asked for {args.mode!r}")])
        if args.seed is not None and args.mode == "verify":
            doc_cfg = ExperimentConfig(mode="verify", seed=args.seed)
        return doc_cfg
    doc = {"schema": SCHEMA_VERSION, "mode": args.mode}
    if args.mode == "table":
        if len(args.numbers) != 2:
            raise ConfigError([("numbers", "table needs two photon numbers: n m")])
        doc["table"] = {"n": args.numbers[0], "m": args.numbers[1]}
    elif args.mode == "verify":
        if args.seed is not None:
            doc["seed"] = args.seed
    elif args.mode == "enhance" and args.label:
        doc["scenario_label"] = args.label
        if args.transmissivity is not None:
            doc["transmissivity"] = args.transmissivity
    elif args.mode == "amplifier":
        doc["amplifier"] = {"small_g": 0.1, "n_matched": 5, "n_unmatched": 0}
    else:
        raise ConfigError([("--config", f"mode {args.mode!r} needs a configuration file")])
    return validate(doc, unit=args.unit)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None and args.mode != "verify":
        args.format = "csv" if args.mode == "scan" else "json"
    if args.numbers and args.mode != "table":
        parser.error("positional numbers are only accepted by 'table'")
    try:
        cfg = _config_from_args(args)
        text, status = RUNNERS[args.mode](cfg, args)
    except ConfigError as exc:
        for path, msg in exc.errors:
            print(f"bunchlab: error: {path}: {msg}", file=sys.stderr)
        return 2
    except BunchlabError as exc:
        print(f"bunchlab: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
