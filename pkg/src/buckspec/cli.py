"""Command-line front end: kappa sweeps, regime tables, profiles, self-check.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import dispersion, eigenmodes, nodal, special, verify
from .dispersion import ModeIndex

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

PARALLEL_MIN_TASKS = 400


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepConfig:
    kappa_min: float
    kappa_max: float
    points: int
    branches: tuple[tuple[int, int], ...]
    dim: int = 2
    fmt: str = "csv"
    out: str = "-"
    log_grid: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kappa_min) and math.isfinite(self.kappa_max)):
            raise UsageError("kappa bounds must be finite")
        if self.kappa_min < 0.0 or not self.kappa_min < self.kappa_max:
            raise UsageError(f"need 0 <= kappa-min < kappa-max, got {self.kappa_min}, {self.kappa_max}")
        if self.points < 2:
            raise UsageError(f"points must be >= 2, got {self.points}")
        if self.log_grid and self.kappa_min <= 0.0:
            raise UsageError("--log-grid needs kappa-min > 0")
        if self.dim < 2:
            raise UsageError(f"dim must be >= 2, got {self.dim}")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"format must be csv or json, got {self.fmt}")
        if not self.branches:
            raise UsageError("at least one branch is required")
        for k, ell in self.branches:
            if k < 0 or ell == 0:
                raise UsageError(f"invalid branch {k}:{ell} (need k >= 0 and ell != 0)")

    def grid(self) -> np.ndarray:
        if self.log_grid:
            return np.geomspace(self.kappa_min, self.kappa_max, self.points)
        return np.linspace(self.kappa_min, self.kappa_max, self.points)


@dataclass(frozen=True)
class CurveRecord:
    kappa: float
    alpha: tuple[float, ...]
    lam: tuple[float, ...]


def sig9(x: float) -> str:
    # + 0.0 folds -0.0 into 0.0
    return format(float(x) + 0.0, ".9g")


def round9(x: float) -> float:
    return float(sig9(x))


def parse_branches(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            k, ell = item.split(":")
            out.append((int(k), int(ell)))
        except ValueError:
            raise UsageError(f"bad branch {item!r}; expected k:l") from None
    return tuple(out)


def branch_label(k: int, ell: int) -> str:
    return f"{k}_{ell}"


def thread_count() -> int:
    raw = os.environ.get("BUCKSPEC_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"BUCKSPEC_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise UsageError("BUCKSPEC_THREADS must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def _sweep_point(args: tuple[float, tuple[tuple[int, int], ...], int]) -> CurveRecord:
    kappa, branches, dim = args
    alphas, lams = [], []
    for k, ell in branches:
        root = dispersion.alpha_root(ModeIndex(k, ell, dim), kappa)
        alphas.append(root.alpha)
        lams.append(dispersion.eigenvalue(ModeIndex(k, abs(ell), dim), kappa))
    return CurveRecord(float(kappa), tuple(alphas), tuple(lams))


def compute_sweep(cfg: SweepConfig) -> list[CurveRecord]:
    tasks = [(float(x), cfg.branches, cfg.dim) for x in cfg.grid()]
    workers = thread_count()
    if workers > 1 and len(tasks) * len(cfg.branches) >= PARALLEL_MIN_TASKS:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            # map keeps input order, so the merge is deterministic
            return list(ex.map(_sweep_point, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    return [_sweep_point(t) for t in tasks]


def render_sweep(cfg: SweepConfig, records: list[CurveRecord]) -> str:
    labels = [branch_label(k, l) for k, l in cfg.branches]
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kappa"] + [f"alpha_{b}" for b in labels] + [f"lambda_{b}" for b in labels])
        for rec in records:
            w.writerow([sig9(rec.kappa)] + [sig9(a) for a in rec.alpha] + [sig9(v) for v in rec.lam])
        return buf.getvalue()
    doc = {
        "dim": cfg.dim,
        "branches": [[k, l] for k, l in cfg.branches],
        "records": [
            {
                "kappa": round9(rec.kappa),
                "alpha": {b: round9(a) for b, a in zip(labels, rec.alpha)},
                "lambda": {b: round9(v) for b, v in zip(labels, rec.lam)},
            }
            for rec in records
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def cmd_sweep_alpha(cfg: SweepConfig) -> str:
    return render_sweep(cfg, compute_sweep(cfg))


def regime_table(kappa_max: float, dim: int = 2) -> list[dict]:
    """Alternating intervals and crossing points of the first-eigenvalue regime on [0, kappa_max]."""
    if not kappa_max > 0.0:
        raise UsageError(f"kappa-max must be > 0, got {kappa_max}")
    bounds = nodal.regime_boundaries(kappa_max, dim)
    edges = [(0.0, "0")] + [(b.kappa, b.label) for b in bounds] + [(float(kappa_max), "kappa_max")]
    rows: list[dict] = []
    for i in range(len(edges) - 1):
        (lo, lo_lab), (hi, hi_lab) = edges[i], edges[i + 1]
        if hi <= lo:
            continue
        rep = nodal.classify_regime(0.5 * (lo + hi), dim)
        rows.append(_regime_row("interval", lo, hi, lo_lab, hi_lab, rep))
        if i + 1 < len(edges) - 1:
            crep = nodal.classify_regime(hi, dim)
            rows.append(_regime_row("crossing", hi, hi, hi_lab, hi_lab, crep))
    return rows


def _regime_row(kind, lo, hi, lo_lab, hi_lab, rep) -> dict:
    return {
        "kind": kind,
        "lo": round9(lo),
        "hi": round9(hi),
        "lo_label": lo_lab,
        "hi_label": hi_lab,
        "regime": rep.regime.value,
        "multiplicity": rep.multiplicity,
        "nodal_regions": rep.nodal_regions,
        "attaining": [[m.k, m.ell] for m in rep.attaining],
        "eigenspace": rep.eigenspace,
    }


def cmd_regime_table(kappa_max: float, dim: int = 2) -> str:
    return json.dumps(regime_table(kappa_max, dim), sort_keys=True, indent=2) + "\n"


def table_boundaries(rows: list[dict]) -> list[float]:
    return [r["lo"] for r in rows if r["kind"] == "crossing"]


def profile_data(k: int, ell: int, kappa: float, samples: int, dim: int = 2):
    if samples < 2:
        raise UsageError("samples must be >= 2")
    if k < 0 or ell < 1:
        raise UsageError(f"invalid mode {k}:{ell} (need k >= 0, ell >= 1)")
    if not kappa >= 0.0:
        raise UsageError(f"kappa must be >= 0, got {kappa}")
    em = eigenmodes.build_mode(ModeIndex(k, ell, dim), kappa)
    rs = np.linspace(0.0, 1.0, samples)
    rows = [(float(r), eigenmodes.radial_eval(em, r), eigenmodes.radial_derivative(em, r)) for r in rs]
    report = nodal.count_zeros(eigenmodes.radial_profile(em, samples))
    sidecar = {
        "k": k,
        "ell": ell,
        "dim": dim,
        "kappa": kappa,
        "alpha": em.alpha,
        "lambda": em.lam,
        "c": em.c,
        "d": em.d,
        "normalization": em.normalization,
        "zeros": list(report.zero_locations),
        "count": report.count,
        "predicted_count": report.predicted_count,
        "nonsimple": list(report.nonsimple),
    }
    return rows, sidecar


def cmd_profile(k: int, ell: int, kappa: float, samples: int, dim: int = 2) -> tuple[str, str]:
    rows, sidecar = profile_data(k, ell, kappa, samples, dim)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "R", "R_prime"])
    for r, v, d in rows:
        w.writerow([sig9(r), sig9(v), sig9(d)])
    return buf.getvalue(), json.dumps(sidecar, sort_keys=True, indent=2) + "\n"


def cmd_verify(level: str = "fast", stream=None) -> int:
    stream = stream or sys.stdout
    results = verify.run_suite(level, log=lambda line: print(line, file=stream, flush=True))
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=stream)
    return EXIT_OK if not failed else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

DEFAULTS = {
    "kappa_min": 0.01,
    "kappa_max": 100.0,
    "points": 101,
    "branches": "0:1,1:1",
    "dim": 2,
    "format": "csv",
    "out": "-",
    "log_grid": False,
    "k": 0,
    "ell": 1,
    "kappa": 1.0,
    "samples": 101,
    "level": "fast",
}

CASTS = {
    "kappa_min": float, "kappa_max": float, "points": int, "branches": str, "dim": int,
    "format": str, "out": str, "k": int, "ell": int, "kappa": float, "samples": int, "level": str,
}


def _to_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"not a boolean: {text!r}")


def load_config(path: str) -> dict:
    """Flat key=value file; '#' starts a comment; keys may use '-' or '_'."""
    out: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for num, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key == "log_grid":
            out[key] = _to_bool(val)
        elif key in CASTS:
            try:
                out[key] = CASTS[key](val)
            except ValueError:
                raise UsageError(f"{path}:{num}: bad value for {key}: {val!r}") from None
        else:
            raise UsageError(f"{path}:{num}: unknown key {key!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="buckspec", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *, out=True):
        p.add_argument("--config", help="flat key=value file; command-line flags take precedence")
        p.add_argument("--dim", type=int, default=None, help="ambient dimension N (default 2)")
        if out:
            p.add_argument("--out", default=None, help="output path, '-' for stdout")

    p = sub.add_parser("sweep-alpha", help="alpha_{k,l}(kappa) curves on a kappa grid")
    common(p)
    p.add_argument("--kappa-min", type=float, default=None)
    p.add_argument("--kappa-max", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--branches", default=None, help="comma list of k:l, e.g. 0:1,1:1,0:-1")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--log-grid", action="store_true", default=None, help="geometric kappa spacing")

    p = sub.add_parser("regime-table", help="first-eigenvalue regimes up to kappa-max (JSON)")
    common(p)
    p.add_argument("--kappa-max", type=float, default=None)

    p = sub.add_parser("profile", help="radial eigenfunction R, R' as CSV plus a zeros sidecar")
    common(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("verify", help="run the built-in identity and invariant checks")
    p.add_argument("--level", choices=("fast", "full"), default=None)
    p.add_argument("--config", help=argparse.SUPPRESS)
    return ap


def resolve(ns: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if getattr(ns, "config", None):
        opts.update(load_config(ns.config))
    for key, val in vars(ns).items():
        if key in ("command", "config") or val is None:
            continue
        opts[key] = val
    return opts


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        opts = resolve(ns)
        if ns.command == "sweep-alpha":
            cfg = SweepConfig(
                opts["kappa_min"], opts["kappa_max"], opts["points"], parse_branches(opts["branches"]),
                opts["dim"], opts["format"], opts["out"], bool(opts["log_grid"]),
            )
            _write(cfg.out, cmd_sweep_alpha(cfg))
        elif ns.command == "regime-table":
            _write(opts["out"], cmd_regime_table(opts["kappa_max"], opts["dim"]))
        elif ns.command == "profile":
            text, sidecar = cmd_profile(opts["k"], opts["ell"], opts["kappa"], opts["samples"], opts["dim"])
            _write(opts["out"], text)
            side_path = "-" if opts["out"] == "-" else opts["out"] + ".zeros.json"
            if side_path == "-":
                sys.stderr.write(sidecar)
            else:
                _write(side_path, sidecar)
        elif ns.command == "verify":
            return cmd_verify(opts["level"])
    except UsageError as exc:
        print(f"buckspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, special.BesselDomainError) as exc:
        if isinstance(exc, (special.BesselRangeError, dispersion.DegenerateKappaError)):
            print(f"buckspec: numeric failure: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        print(f"buckspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, OverflowError) as exc:
        print(f"buckspec: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"buckspec: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
