"""Batch front end: run an experiment suite and write a JSON report.

Usage::

    lpmeasures kernels --blocks 10 --csv out/
    lpmeasures transfer-verify --group Z8 --dim 3 --trials 100 --seed 7
    lpmeasures counterexample gaussian --csv out/
    lpmeasures all --json report.json

Options may also come from a flat ``key=value`` file given with
``--config``; command-line flags win. The exit code is 0 when every
assertion passes, 1 when one fails and 2 for configuration errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
import scipy.integrate

from . import analytic, cocountable, kernels, littlewood_paley as lp, transference as tr
from .grid import AliasingError, Grid, make_h1_test
from .group_core import FiniteAbelianGroup, GroupFunction

SUITES = ("kernels", "lp-verify", "transfer-verify", "analytic-demo", "counterexample")

DEFAULTS = {
    "seed": 0,
    "delta": None,
    "window": None,
    "blocks": None,
    "neg_blocks": None,
    "trials": None,
    "tol": None,
    "csv": None,
    "json": None,
    "group": "Z8",
    "dim": 3,
    "which": "all",
}

# per-suite fallbacks for the options left at None above
SUITE_DEFAULTS = {
    "kernels": {"blocks": 10, "neg_blocks": 6, "trials": 50, "tol": 1e-12},
    "lp-verify": {"blocks": 8, "delta": 2.0**-8, "window": 128.0, "trials": 200, "tol": 1e-3},
    "transfer-verify": {"trials": 100, "tol": 1e-9},
    "analytic-demo": {"blocks": 4, "delta": 2.0**-6, "window": 512.0, "tol": 1e-3},
    "counterexample": {"delta": 0.01, "window": 40.0, "trials": 50, "tol": 1e-3},
}


class ConfigError(ValueError):
    """Bad option values, unknown config keys, unwritable outputs."""


@dataclass
class Assertion:
    id: str
    description: str
    value: float
    bound: float
    passed: bool

    def to_dict(self) -> dict:
        return {"id": self.id, "description": self.description, "value": _num(self.value),
                "bound": _num(self.bound), "pass": bool(self.passed)}


def _num(v):
    v = float(v)
    return v if math.isfinite(v) else str(v)


def _le(aid: str, description: str, value: float, bound: float) -> Assertion:
    return Assertion(aid, description, float(value), float(bound), bool(value <= bound))


def _ge(aid: str, description: str, value: float, bound: float) -> Assertion:
    return Assertion(aid, description, float(value), float(bound), bool(value >= bound))


# ---------------------------------------------------------------------------
# configuration


def read_config(path) -> dict:
    """Parse a flat ``key=value`` file; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


_TYPES = {"seed": int, "delta": float, "window": float, "blocks": int, "neg_blocks": int, "trials": int,
          "tol": float, "dim": int}


def resolve_config(suite: str, cli: dict, file_values: dict) -> dict:
    cfg = dict(DEFAULTS)
    for source in (file_values, {k: v for k, v in cli.items() if v is not None}):
        for k, v in source.items():
            if k in _TYPES and isinstance(v, str):
                try:
                    v = _TYPES[k](v)
                except ValueError:
                    raise ConfigError(f"{k} must be a {_TYPES[k].__name__}, got {v!r}") from None
            cfg[k] = v
    for k, v in SUITE_DEFAULTS.get(suite, {}).items():
        if cfg.get(k) is None:
            cfg[k] = v
    for k in ("delta", "window", "tol"):
        if cfg.get(k) is not None and not cfg[k] > 0:
            raise ConfigError(f"{k} must be positive, got {cfg[k]}")
    for k in ("blocks", "neg_blocks"):
        if cfg.get(k) is not None and cfg[k] < 0:
            raise ConfigError(f"{k} must be nonnegative")
    if cfg.get("trials") is not None and cfg["trials"] < 1:
        raise ConfigError("trials must be at least 1")
    if cfg["dim"] < 1:
        raise ConfigError("dim must be at least 1")
    return cfg


def _grid(cfg) -> Grid:
    n = int(round(2 * cfg["window"] / cfg["delta"]))
    if n < 16:
        raise ConfigError(f"grid with delta={cfg['delta']} and window={cfg['window']} has only {n} points")
    return Grid.centered(cfg["delta"], n)


def _csv_dir(cfg) -> Path | None:
    if cfg.get("csv") is None:
        return None
    d = Path(cfg["csv"])
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create CSV directory {d}: {exc}") from None
    if not os.access(d, os.W_OK):
        raise ConfigError(f"CSV directory {d} is not writable")
    return d


# ---------------------------------------------------------------------------
# suites


def suite_kernels(cfg) -> list[Assertion]:
    N, M, trials = cfg["blocks"], cfg["neg_blocks"], cfg["trials"]
    rng = np.random.default_rng(cfg["seed"])
    out = []

    # partition identities, exact at dyadic points
    P = kernels.partition_profile(None, N)
    Q = kernels.two_sided_profile(None, M, N)
    scale = 2**20
    pts = [Fraction(int(k), scale) for k in rng.integers(-2 * 2**N * scale, 2 * 2**N * scale, 2000)]
    worst_p = max(abs(P(s) - (1 if s >= Fraction(-1, 2) else 0)) for s in pts
                  if s >= Fraction(-1, 2) and s <= 2**N or s <= -1)
    worst_q = max((abs(Q(s) - 1) for s in pts if Fraction(1, 2**M) <= s <= 2**N), default=Fraction(0))
    out.append(_le("partition.low", f"h^ + sum_0^{N} m_n^ is 1 on [-1/2, 2^{N}] and 0 below -1", float(worst_p), 0.0))
    out.append(_le("partition.two_sided", f"sum_-{M}^{N} m_n^ is 1 on [2^-{M}, 2^{N}]", float(worst_q), 0.0))

    # closed forms against quadrature of the inverse transform
    worst = 0.0
    for x in np.linspace(-7.3, 9.1, 12):
        for n in (0, 2):
            p = kernels.mn_profile(n)
            lo, hi = map(float, p.support)
            knots = [float(s) for s, _ in p.breakpoints]
            re = scipy.integrate.quad(lambda s: p.evaluate(s) * math.cos(s * x), lo, hi, points=knots, limit=200)[0]
            im = scipy.integrate.quad(lambda s: p.evaluate(s) * math.sin(s * x), lo, hi, points=knots, limit=200)[0]
            ref = complex(re, im) / (2 * math.pi)
            worst = max(worst, abs(kernels.mn_time(n, x) - ref) / max(abs(ref), 1e-3))
    out.append(_le("closed_form.mn", "m_n(x) matches quadrature of its transform (relative)", worst, 1e-6))

    # multiplier bound
    sup = Fraction(0)
    for _ in range(trials):
        signs = rng.choice((-1, 1), size=M + N + 1).tolist()
        sup = max(sup, kernels.two_sided_profile(signs, M, N).sup_abs())
        sup = max(sup, kernels.partition_profile(signs[M:], N).sup_abs())
    out.append(_le("multiplier.sup", f"max |sum eps_n m_n^| over {trials} sign patterns", float(sup), 1.0))

    d = _csv_dir(cfg)
    if d is not None:
        for n in range(N + 1):
            kernels.mn_profile(n).to_csv(d / f"m_{n}.csv")
        kernels.h_profile().to_csv(d / "h.csv")
        kernels.vdp_profile(N).to_csv(d / f"vdp_{N}.csv")
        P.to_csv(d / f"partition_{N}.csv", dense=257)
    return out


def suite_lp_verify(cfg) -> list[Assertion]:
    N, trials, tol = cfg["blocks"], cfg["trials"], cfg["tol"]
    grid = _grid(cfg)
    if N < 1:
        raise ConfigError("lp-verify needs at least two blocks (blocks >= 1)")
    try:
        lp._require_nyquist(grid, N)
    except AliasingError as exc:
        raise ConfigError(str(exc)) from None
    band = (1.0, 2.0 ** (N - 1))
    vdp = recon = 0.0
    ratios = []
    for k in range(4):
        f = make_h1_test(cfg["seed"] + k, band, grid)
        vdp = max(vdp, lp.reconstruct_vdp_identity(f, N).residual)
        rep = lp.unconditional_ratio(f, N, trials, cfg["seed"] + k)
        recon = max(recon, rep.reconstruction_residual)
        ratios.append(rep.max_ratio)
    return [
        _le("lp.vdp_identity", "||V*f - (h*f + sum m_n*f)|| / ||f||", vdp, 1e-9),
        _le("lp.reconstruction", "||f - (h*f + sum m_n*f)|| / ||f||", recon, tol),
        Assertion("lp.max_ratio", f"max over {trials} sign patterns of ||h*f + sum eps_n m_n*f|| / ||f||",
                  max(ratios), math.inf, True),
    ]


def suite_transfer(cfg) -> list[Assertion]:
    try:
        G = FiniteAbelianGroup.parse(cfg["group"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    d, trials, seed = cfg["dim"], cfg["trials"], cfg["seed"]
    fails = spec_mismatch = 0
    worst_ratio = worst_alg = 0.0
    for k in range(trials):
        rng = np.random.default_rng([seed, k])
        T = tr.random_representation(G, d, rng, "similar" if k % 2 else "monomial")
        mu = rng.normal(size=d) + 1j * rng.normal(size=d)
        spec = tr.spec_fourier(mu, T)
        extra = rng.choice(G.order, size=int(rng.integers(0, 4)), replace=False)
        S = tr.SpectrumSet.of(G, set(spec.indices) | set(extra.tolist()))
        nu = GroupFunction(G, rng.normal(size=G.order) + 1j * rng.normal(size=G.order))
        nu = nu * (1 / tr.subspace_contraction_upper(nu, S))
        rep = tr.verify_main_theorem(T, S, nu, mu, seed=k, estimate=tr.subspace_contraction_estimate(nu, S, seed=k))
        fails += not rep.passed
        worst_ratio = max(worst_ratio, rep.ratio / rep.bound)
        spec_mismatch += not spec.same_set(tr.spec_ideal(mu, T))
        sigma = GroupFunction(G, rng.normal(size=G.order))
        alg = tr.check_algebra(sigma, nu, mu, T)
        worst_alg = max(worst_alg, alg.commutation, alg.associativity)
    return [
        _le("transfer.bound", f"instances violating ||nu *_T mu|| <= c^3 C ||mu|| out of {trials}", fails, 0),
        _le("transfer.worst_ratio", "max ratio / bound", worst_ratio, 1 + cfg["tol"]),
        _le("transfer.spectra", "instances where the two spectrum oracles disagree", spec_mismatch, 0),
        _le("transfer.algebra", "max commutation / associativity residual", worst_alg, 1e-10),
    ]


def suite_analytic(cfg) -> list[Assertion]:
    N, tol = cfg["blocks"], cfg["tol"]
    grid = _grid(cfg)
    try:
        lp._require_nyquist(grid, N)
    except AliasingError as exc:
        raise ConfigError(str(exc)) from None
    band = (1.0, 2.0 ** max(N - 1, 1))
    f = make_h1_test(cfg["seed"], band, grid)
    mu = analytic.LineMeasure.from_density(f)
    pieces = analytic.lp_decompose_measure(mu, N)
    deltas = [grid.delta * 2**j for j in (3, 2, 1, 0)]
    factors = analytic.modulus_decrease_factors(analytic.orbit_continuity_modulus(mu, deltas))
    bump = analytic.GridSignal.from_function(grid, lambda x: np.exp(-x * x))
    comm = analytic.commuting_operator_check(analytic.convolution_operator(bump), mu)
    second = analytic.LineMeasure.from_density(make_h1_test(cfg["seed"] + 1, band, grid))
    sigma = analytic.FiberedMeasure((analytic.LineMeasure.from_density(analytic.GridSignal(grid, np.ones(grid.n))),
                                     analytic.LineMeasure.zero(grid)))
    parts = analytic.analytic_lebesgue_parts(analytic.FiberedMeasure((mu, second)), sigma)
    d = _csv_dir(cfg)
    if d is not None:
        A = analytic.default_test_sets(grid)[2]
        analytic.trajectory_to_csv(analytic.set_trajectory(mu, A), grid.delta, d / "analytic_trajectory.csv")
    return [
        _le("analytic.reconstruction", "||sum of pieces - mu|| / ||mu||", pieces.reconstruction_error, tol),
        _le("analytic.piece_atoms", "total atom mass in the decomposition pieces", pieces.piece_atom_mass, 0.0),
        _ge("analytic.modulus", "smallest modulus decrease factor per shift halving", min(factors), 1.5),
        Assertion("analytic.commuting", "convolution image passes the analyticity check",
                  comm.output.worst or 0.0, comm.output.tol, comm.passed),
        Assertion("analytic.lebesgue_parts", "both Lebesgue parts of a split-support instance are analytic",
                  max(parts.absolutely_continuous_part.worst or 0.0, parts.singular_part.worst or 0.0),
                  parts.singular_part.tol, parts.passed),
    ]


def suite_counterexample(cfg) -> list[Assertion]:
    which = cfg["which"]
    out = []
    d = _csv_dir(cfg)
    if which in ("gaussian", "all"):
        g, defect = cocountable.gaussian_counterexample_trajectory(_grid(cfg))
        out.append(_ge("counterexample.gaussian", "analytic defect of t -> int_-1^1 exp(-(x-t)^2) dx",
                       defect, cfg["tol"]))
        if d is not None:
            analytic.trajectory_to_csv(g.samples, g.grid.delta, d / "gaussian_trajectory.csv")
    if which in ("cocountable", "all"):
        rng = np.random.default_rng(cfg["seed"])
        sets = _random_symbolic_sets(rng, cfg["trials"])
        times = sorted({0.0, *(float(x) for x in rng.integers(-6, 7, 20) / 2)})
        mu = cocountable.example_measure()
        for alpha in (0.0, 1.3):
            rep = cocountable.cocountable_demo(mu, sets, times, alpha)
            out.append(Assertion(f"counterexample.cocountable.alpha={alpha:g}",
                                 "||nu - delta_0|| = 2 and every trajectory vanishes off its exceptional set",
                                 rep.norm, 2.0, rep.passed and rep.norm == 2.0))
    if which not in ("gaussian", "cocountable", "all"):
        raise ConfigError(f"unknown counterexample {which!r}")
    return out


def _random_symbolic_sets(rng: np.random.Generator, count: int) -> list:
    sets = [cocountable.Countable([0]), cocountable.CoCountable([])]
    while len(sets) < count:
        pts = (rng.integers(-6, 7, int(rng.integers(0, 5))) / 2).tolist()
        sets.append(cocountable.Countable(pts) if rng.random() < 0.5 else cocountable.CoCountable(pts))
    return sets[:count]


RUNNERS = {
    "kernels": suite_kernels,
    "lp-verify": suite_lp_verify,
    "transfer-verify": suite_transfer,
    "analytic-demo": suite_analytic,
    "counterexample": suite_counterexample,
}


# ---------------------------------------------------------------------------
# entry point


def _config_for_json(cfg: dict) -> dict:
    return {k: v for k, v in sorted(cfg.items()) if k not in ("json",)}


def run(suite: str, cfg: dict) -> dict:
    """Run one suite (or all of them) and return the report dictionary."""
    names = SUITES if suite == "all" else (suite,)
    assertions = []
    configs = {}
    for name in names:
        sub = resolve_config(name, {k: v for k, v in cfg.items() if v is not None}, {}) if suite == "all" else cfg
        configs[name] = _config_for_json(sub)
        assertions.extend(RUNNERS[name](sub))
    return {
        "suite": suite,
        "seed": cfg["seed"],
        "config": configs if suite == "all" else configs[suite],
        "assertions": [a.to_dict() for a in assertions],
        "pass": all(a.passed for a in assertions),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file; flags override it")
    common.add_argument("--seed", type=int)
    common.add_argument("--delta", type=float, help="grid spacing")
    common.add_argument("--window", type=float, help="grid half-width")
    common.add_argument("--blocks", "--N", dest="blocks", type=int, help="top dyadic block N")
    common.add_argument("--neg-blocks", "--M", dest="neg_blocks", type=int, help="number of negative blocks M")
    common.add_argument("--trials", type=int)
    common.add_argument("--tol", type=float)
    common.add_argument("--csv", metavar="DIR", help="directory for CSV dumps")
    common.add_argument("--json", metavar="PATH", help="report path (default: stdout)")

    parser = argparse.ArgumentParser(prog="lpmeasures", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="suite", required=True)
    for name in ("kernels", "lp-verify", "analytic-demo", "all"):
        sub.add_parser(name, parents=[common])
    p = sub.add_parser("transfer-verify", parents=[common])
    p.add_argument("--group", help="group name such as Z8 or Z2xZ4")
    p.add_argument("--dim", type=int, help="dimension of the atom space")
    p = sub.add_parser("counterexample", parents=[common])
    p.add_argument("which", nargs="?", choices=("gaussian", "cocountable", "all"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cli = {k: v for k, v in vars(args).items() if k not in ("suite", "config")}
    try:
        file_values = read_config(args.config) if args.config else {}
        cfg = resolve_config(args.suite, cli, file_values)
        report = run(args.suite, cfg)
        text = json.dumps(report, sort_keys=True, indent=2)
        if cfg.get("json"):
            try:
                Path(cfg["json"]).write_text(text + "\n")
            except OSError as exc:
                raise ConfigError(f"cannot write report to {cfg['json']}: {exc}") from None
        else:
            sys.stdout.write(text + "\n")
    except ConfigError as exc:
        print(f"lpmeasures: configuration error: {exc}", file=sys.stderr)
        return 2
    for a in report["assertions"]:
        if not a["pass"]:
            print(f"FAILED {a['id']}: {a['value']} vs bound {a['bound']}", file=sys.stderr)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
