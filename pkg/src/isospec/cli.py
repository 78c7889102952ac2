"""Command-line interface.

Subcommands
-----------
tabulate   sample ``V^-`` and any set of deformed potentials on a grid
spectrum   compare oracle eigenvalues of one potential against closed forms
verify     run the full isospectrality suite for one family (exit code 0/1/3)
figures    emit the showcase figure data files (12 CSV tables)
scatter    tabulate the four related scattering amplitudes (gpt only)

All tabular output starts with a ``# isospec <version>`` line followed by
``#``-prefixed configuration echo lines, then a delimited header row and data
rows formatted with ``%.12g``.  Output is deterministic: same invocation,
byte-identical bytes.  (The environment variable ``ISOSPEC_SEED`` is reserved
for future stochastic features; nothing reads it today.)

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 oracle
non-convergence.
"""
from __future__ import annotations

import argparse
import contextlib
import math
import os
import sys

import numpy as np

from . import __version__
from .models import (FAMILIES, GPT, RADOSC, SCARF1, ModelSpec,
                     bound_state_cap, default_spec, energy, v_minus, v_plus)
from .numerics import DEFAULT_CLIP, DEFAULT_CUTOFF, SampledFunction
from .oracle import (DEFAULT_WINDOW_CAP, spectral_window,
                     spectrum_with_richardson)
from .scattering import amplitude_set
from .susy import (ABRAHAM_MOSES, GENERIC, PURSEY, UNDEFORMED,
                   DeformationParam, build_family, deformed_ground_state,
                   deformed_potential, parse_lambda)

FIGURE_GRID_N = 4801
#: Per-family deformation parameters for the showcase figure panels.
FIGURE_LAMBDAS = {
    RADOSC: {"a": (0.0, 0.05, 0.1, 1.0, math.inf),
             "b": (-math.inf, -3.0, -1.1, -1.001, -1.0),
             "d": (0.05, 0.1, 1.0, math.inf)},
    SCARF1: {"a": (0.0, 0.05, 0.1, 0.5, math.inf),
             "b": (-math.inf, -1.1, -1.01, -1.001, -1.0),
             "d": (0.05, 0.1, 0.5, math.inf)},
    GPT: {"a": (0.0, 0.01, 0.025, 0.1, math.inf),
          "b": (-math.inf, -1.05, -1.005, -1.0005, -1.0),
          "d": (0.01, 0.025, 0.1, math.inf)},
}
FIGURE_INDEX = {RADOSC: 1, SCARF1: 2, GPT: 3}
#: Figure panels show x up to this bound on unbounded domains.
FIGURE_XMAX = {RADOSC: 6.0, SCARF1: None, GPT: 6.0}
LARGE_LAMBDA = 1.0e6


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


@contextlib.contextmanager
def _out_stream(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _write_table(stream, command: str, config: dict, columns, rows, delim: str):
    stream.write(f"# isospec {__version__}\n")
    stream.write(f"# command: {command}\n")
    for key, val in config.items():
        stream.write(f"# {key}: {val}\n")
    stream.write(delim.join(columns) + "\n")
    for row in rows:
        stream.write(delim.join(_fmt(v) for v in row) + "\n")


def _delim(args) -> str:
    return "\t" if args.format == "tsv" else ","


def _model_from_args(args) -> ModelSpec:
    overrides = {}
    if args.m is not None:
        overrides["m"] = args.m
    if args.family == RADOSC:
        if args.omega is not None:
            overrides["omega"] = args.omega
        if args.ell is not None:
            overrides["ell"] = args.ell
    else:
        if args.A is not None:
            overrides["A"] = args.A
        if args.B is not None:
            overrides["B"] = args.B
    return default_spec(args.family, **overrides)


def _resolved_cutoff(model: ModelSpec, args) -> float | None:
    if model.family == SCARF1:
        return None
    if args.cutoff is not None:
        return args.cutoff
    return DEFAULT_CUTOFF[model.grid_kind]


def _model_config(model: ModelSpec, args) -> dict:
    cfg = {"family": model.family, "m": model.m}
    if model.family == RADOSC:
        cfg["omega"] = _fmt(model.omega)
        cfg["ell"] = model.ell
    else:
        cfg["A"] = _fmt(model.A)
        cfg["B"] = _fmt(model.B)
    clip = args.clip if args.clip is not None else DEFAULT_CLIP
    cutoff = _resolved_cutoff(model, args)
    cfg["grid_kind"] = model.grid_kind
    cfg["grid_n"] = args.grid_n
    cfg["clip"] = _fmt(clip)
    cfg["cutoff"] = "none" if cutoff is None else _fmt(cutoff)
    return cfg


def _parse_lambda_list(text: str) -> list[DeformationParam]:
    if text.strip() == "":
        return []
    return [parse_lambda(tok) for tok in text.split(",")]


def _lambda_label(param: DeformationParam) -> str:
    if param.kind == UNDEFORMED:
        return "inf" if param.value > 0 else "-inf"
    return format(param.value, "g")


def _lambda_column(param: DeformationParam, prefix: str = "vhat") -> str:
    if param.kind == PURSEY:
        return "vpursey"
    if param.kind == ABRAHAM_MOSES:
        return "vam"
    return f"{prefix}_{_lambda_label(param)}"


def _family_grid(model: ModelSpec, args, n: int):
    kwargs = {"n": n}
    if args.clip is not None:
        kwargs["clip"] = args.clip
    if args.cutoff is not None and model.family != SCARF1:
        kwargs["cutoff"] = args.cutoff
    return build_family(model, **kwargs)


def _expected_levels(model: ModelSpec, param: DeformationParam | None,
                     count: int) -> list[float]:
    """Closed-form energies of the (possibly deformed) potential, low to high.

    Generic and undeformed parameters keep all levels of ``V^-``; pursey and
    abraham-moses drop the zero-energy one.
    """
    cap = bound_state_cap(model)
    if param is not None and param.kind in (PURSEY, ABRAHAM_MOSES):
        start = 1
    else:
        start = 0
    top = count + start - 1
    if cap is not None:
        top = min(top, cap)
    return [energy(model, j) for j in range(start, top + 1)]


# ---------------------------------------------------------------------------
# tabulate
# ---------------------------------------------------------------------------

def cmd_tabulate(args) -> int:
    model = _model_from_args(args)
    params = _parse_lambda_list(args.lam)
    fam = _family_grid(model, args, args.grid_n)
    columns = ["x", "vminus"]
    data = [fam.grid.nodes, v_minus(model, fam.grid.nodes)]
    for p in params:
        columns.append(_lambda_column(p))
        data.append(deformed_potential(fam, p).values)
    if args.vplus:
        columns.append("vplus")
        data.append(v_plus(model, fam.grid.nodes))
    cfg = _model_config(model, args)
    cfg["lambda"] = ",".join(_lambda_label(p) for p in params) if params else "none"
    rows = np.column_stack(data)
    with _out_stream(args.out) as stream:
        _write_table(stream, "tabulate", cfg, columns, rows, _delim(args))
    return 0


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

def _sampled_potential(model: ModelSpec, param: DeformationParam | None,
                       args, n_fine: int, perturb: float = 0.0) -> SampledFunction:
    if param is None:
        fam = _family_grid(model, args, n_fine)
        v = SampledFunction(fam.grid, v_minus(model, fam.grid.nodes))
    else:
        fam = _family_grid(model, args, n_fine)
        v = deformed_potential(fam, param)
    if perturb:
        v = SampledFunction(v.grid, v.values + perturb)
    return v


def cmd_spectrum(args) -> int:
    model = _model_from_args(args)
    param = parse_lambda(args.lam) if args.lam is not None else None
    n_fine = 2 * args.grid_n - 1
    expected = _expected_levels(model, param, args.levels)
    if not expected:
        print("# no bound levels below the continuum threshold for this "
              "potential; nothing to compare", file=sys.stderr)
        return 0
    v = _sampled_potential(model, param, args, n_fine)
    report = spectrum_with_richardson(v, len(expected), tol=args.tol)
    rows = []
    worst = 0.0
    for j, e_ref in enumerate(expected):
        est = report.richardson_estimate[j]
        diff = abs(est - e_ref)
        worst = max(worst, diff)
        rows.append((j, e_ref, est, diff, bool(report.converged[j])))
    cfg = _model_config(model, args)
    cfg["lambda"] = _lambda_label(param) if param is not None else "none"
    cfg["levels"] = len(expected)
    cfg["tol"] = _fmt(args.tol)
    columns = ["level", "analytic", "oracle", "absdiff", "converged"]
    with _out_stream(args.out) as stream:
        _write_table(stream, "spectrum", cfg, columns, rows, _delim(args))
    if not all(report.converged):
        return 3
    return 0 if worst < args.tol else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_one(model: ModelSpec, param: DeformationParam | None, args,
                label: str, perturb: float) -> tuple[str, bool, bool]:
    """Run one spectral comparison; returns (line, ok, converged)."""
    expected = _expected_levels(model, param, args.levels)
    if not expected:
        return (f"skip  {label}: no bound levels below the continuum threshold",
                True, True)
    n_fine = 2 * args.grid_n - 1
    v = _sampled_potential(model, param, args, n_fine, perturb)
    report = spectrum_with_richardson(v, len(expected), tol=args.tol)
    diffs = np.abs(report.richardson_estimate - np.asarray(expected))
    conv = bool(np.all(report.converged))
    ok = bool(np.all(diffs < args.tol)) and conv
    word = "ok   " if ok else ("noconv" if not conv else "FAIL ")
    line = (f"{word} {label}: {len(expected)} level(s), "
            f"max|diff| = {np.max(diffs):.3e} (tol {args.tol:g})")
    return line, ok, conv


def _verify_vplus(model: ModelSpec, args, perturb: float) -> tuple[str, bool, bool]:
    """Spectrum of V^+ against the excited closed-form levels."""
    cap = bound_state_cap(model)
    count = args.levels if cap is None else min(args.levels, cap)
    expected = [energy(model, j) for j in range(1, count + 1)]
    if not expected:
        return ("skip  vplus: no bound levels below the continuum threshold",
                True, True)
    n_fine = 2 * args.grid_n - 1
    fam = _family_grid(model, args, n_fine)
    v = SampledFunction(fam.grid, v_plus(model, fam.grid.nodes) + perturb)
    report = spectrum_with_richardson(v, len(expected), tol=args.tol)
    diffs = np.abs(report.richardson_estimate - np.asarray(expected))
    conv = bool(np.all(report.converged))
    ok = bool(np.all(diffs < args.tol)) and conv
    word = "ok   " if ok else ("noconv" if not conv else "FAIL ")
    return (f"{word} vplus: {len(expected)} level(s), "
            f"max|diff| = {np.max(diffs):.3e} (tol {args.tol:g})"), ok, conv


def _verify_large_lambda(model: ModelSpec, args, perturb: float) -> tuple[str, bool]:
    """sup |V_hat(1e6) - V^-| over the spectral window must be < 1e-3."""
    fam = _family_grid(model, args, args.grid_n)
    base = SampledFunction(fam.grid, v_minus(model, fam.grid.nodes))
    vhat = deformed_potential(fam, DeformationParam(LARGE_LAMBDA))
    window = spectral_window(base, DEFAULT_WINDOW_CAP)
    nodes = window.grid.nodes
    mask = (fam.grid.nodes >= nodes[0]) & (fam.grid.nodes <= nodes[-1])
    sup = float(np.max(np.abs(vhat.values[mask] - base.values[mask]))) + abs(perturb)
    ok = sup < 1.0e-3
    word = "ok   " if ok else "FAIL "
    return (f"{word} large-lambda: sup|vhat({LARGE_LAMBDA:g}) - vminus| "
            f"= {sup:.3e} on window (tol 1e-03)"), ok


def cmd_verify(args) -> int:
    model = _model_from_args(args)
    params = _parse_lambda_list(args.lam)
    perturb = args.perturb
    lines = []
    all_ok = True
    all_conv = True

    line, ok, conv = _verify_one(model, None, args, "vminus", perturb)
    lines.append(line)
    all_ok &= ok
    all_conv &= conv
    for p in params:
        label = f"vhat lambda={_lambda_label(p)}"
        line, ok, conv = _verify_one(model, p, args, label, perturb)
        lines.append(line)
        all_ok &= ok
        all_conv &= conv
    for p, label in ((DeformationParam(0.0), "vpursey"),
                     (DeformationParam(-1.0), "vam")):
        line, ok, conv = _verify_one(model, p, args, label, perturb)
        lines.append(line)
        all_ok &= ok
        all_conv &= conv
    line, ok, conv = _verify_vplus(model, args, perturb)
    lines.append(line)
    all_ok &= ok
    all_conv &= conv
    line, ok = _verify_large_lambda(model, args, perturb)
    lines.append(line)
    all_ok &= ok

    print(f"isospec {__version__} verification: family={model.family} "
          f"m={model.m} levels={args.levels} tol={args.tol:g}")
    for line in lines:
        print(line)
    if not all_conv:
        print("result: NOT CONVERGED")
        return 3
    if not all_ok:
        print("result: FAIL")
        return 1
    print("result: ok")
    return 0


# ---------------------------------------------------------------------------
# figures
# ---------------------------------------------------------------------------

def build_figure_tables(grid_n: int = FIGURE_GRID_N) -> dict:
    """All showcase figure tables: ``{name: (config, columns, row_array)}``.

    Twelve tables ``fig1a .. fig3d``: per family, panels (a) nonnegative
    deformations, (b) nonpositive deformations, (c) the shared partner and
    the two level-deletion limits, (d) deformed ground states for the
    positive deformations of panel (a).
    """
    tables = {}
    for family, idx in FIGURE_INDEX.items():
        model = default_spec(family)
        fam = build_family(model, n=grid_n)
        nodes = fam.grid.nodes
        xmax = FIGURE_XMAX[family]
        mask = slice(None) if xmax is None else nodes <= xmax
        x = nodes[mask]
        base_cfg = {"family": family, "grid_n": grid_n}

        for panel in ("a", "b"):
            lambdas = FIGURE_LAMBDAS[family][panel]
            columns = ["x"]
            data = [x]
            for lam in lambdas:
                p = DeformationParam(lam)
                columns.append(_lambda_column(p))
                data.append(deformed_potential(fam, p).values[mask])
            cfg = dict(base_cfg)
            cfg["lambda"] = ",".join(_lambda_label(DeformationParam(v))
                                     for v in lambdas)
            tables[f"fig{idx}{panel}"] = (cfg, columns, np.column_stack(data))

        columns = ["x", "vplus", "vpursey", "vam"]
        data = [x, v_plus(model, nodes)[mask],
                deformed_potential(fam, DeformationParam(0.0)).values[mask],
                deformed_potential(fam, DeformationParam(-1.0)).values[mask]]
        tables[f"fig{idx}c"] = (dict(base_cfg), columns, np.column_stack(data))

        prefix = "psihat0_over_r" if family == RADOSC else "psihat0"
        columns = ["x"]
        data = [x]
        for lam in FIGURE_LAMBDAS[family]["d"]:
            p = DeformationParam(lam)
            state = deformed_ground_state(fam, p).values[mask]
            if family == RADOSC:
                state = state / x
            columns.append(_lambda_column(p, prefix=prefix))
            data.append(state)
        cfg = dict(base_cfg)
        cfg["lambda"] = ",".join(_lambda_label(DeformationParam(v))
                                 for v in FIGURE_LAMBDAS[family]["d"])
        tables[f"fig{idx}d"] = (cfg, columns, np.column_stack(data))
    return tables


def cmd_figures(args) -> int:
    tables = build_figure_tables(args.grid_n)
    os.makedirs(args.out, exist_ok=True)
    ext = "tsv" if args.format == "tsv" else "csv"
    for name in sorted(tables):
        cfg, columns, rows = tables[name]
        path = os.path.join(args.out, f"{name}.{ext}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            _write_table(fh, "figures", cfg, columns, rows, _delim(args))
        print(f"wrote {path} ({rows.shape[0]} rows)")
    return 0


# ---------------------------------------------------------------------------
# scatter
# ---------------------------------------------------------------------------

def cmd_scatter(args) -> int:
    model = _model_from_args(args)
    if model.family != GPT:
        print("error: scattering amplitudes exist only for --family gpt",
              file=sys.stderr)
        return 2
    if args.kstep <= 0 or args.kmax < args.kmin or args.kmin <= 0:
        print("error: need 0 < kmin <= kmax and kstep > 0", file=sys.stderr)
        return 2
    count = int(round((args.kmax - args.kmin) / args.kstep)) + 1
    columns = ["kprime"]
    for tag in ("sminus", "splus", "spursey", "sam"):
        columns += [f"re_{tag}", f"im_{tag}", f"abs_{tag}", f"arg_{tag}"]
    rows = []
    for i in range(count):
        kp = args.kmin + i * args.kstep
        if kp > args.kmax + 1e-12:
            break
        amp = amplitude_set(model, kp)
        row = [kp]
        for s in (amp.s_minus, amp.s_plus, amp.s_pursey, amp.s_am):
            row += [s.real, s.imag, abs(s), math.atan2(s.imag, s.real)]
        rows.append(row)
    cfg = {"family": model.family, "m": model.m,
           "A": _fmt(model.A), "B": _fmt(model.B),
           "kmin": _fmt(args.kmin), "kmax": _fmt(args.kmax),
           "kstep": _fmt(args.kstep)}
    with _out_stream(args.out) as stream:
        _write_table(stream, "scatter", cfg, columns, rows, _delim(args))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_model_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--family", required=True, choices=FAMILIES,
                        help="model family")
    parser.add_argument("--omega", type=float, default=None,
                        help="radosc frequency (default 2)")
    parser.add_argument("--ell", type=int, default=None,
                        help="radosc angular momentum (default 1)")
    parser.add_argument("--A", type=float, default=None,
                        help="scarf1/gpt parameter A (defaults 3 / 1)")
    parser.add_argument("--B", type=float, default=None,
                        help="scarf1/gpt parameter B (defaults 1 / 3)")
    parser.add_argument("--m", type=int, default=None,
                        help="rational extension order (default 1)")
    parser.add_argument("--grid-n", type=int, default=4001, dest="grid_n",
                        help="grid node count (spectra refine to 2n-1)")
    parser.add_argument("--clip", type=float, default=None,
                        help=f"wall clip distance (default {DEFAULT_CLIP:g})")
    parser.add_argument("--cutoff", type=float, default=None,
                        help="half-line truncation (defaults 12 radial / 25 hyperbolic)")


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--out", default="-",
                        help="output path ('-' for stdout)")
    parser.add_argument("--format", choices=("csv", "tsv"), default="csv",
                        help="delimiter convention")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isospec",
        description="strictly isospectral deformations of rationally "
                    "extended solvable potentials")
    parser.add_argument("--version", action="version",
                        version=f"isospec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tabulate", help="sample potentials on a grid")
    _add_model_flags(p)
    p.add_argument("--lambda", dest="lam", default="",
                   help="comma list of deformation parameters "
                        "(accepts 'inf' and '-inf'; empty for none)")
    p.add_argument("--vplus", action="store_true",
                   help="append the shared SUSY partner column")
    _add_output_flags(p)
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("spectrum", help="oracle spectrum vs closed forms")
    _add_model_flags(p)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="single deformation parameter (default: undeformed V^-)")
    p.add_argument("--levels", type=int, default=5,
                   help="number of levels to compare (capped by the model)")
    p.add_argument("--tol", type=float, default=1e-4,
                   help="per-level disagreement tolerance")
    _add_output_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="full isospectrality verification suite")
    _add_model_flags(p)
    p.add_argument("--lambda", dest="lam", default="0.05,0.1,1,10,-1.1,-3",
                   help="comma list of generic deformation parameters to check")
    p.add_argument("--levels", type=int, default=5,
                   help="number of levels per potential (capped by the model)")
    p.add_argument("--tol", type=float, default=1e-4,
                   help="per-level disagreement tolerance")
    p.add_argument("--perturb", type=float, default=0.0,
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="emit the showcase figure tables")
    p.add_argument("--grid-n", type=int, default=FIGURE_GRID_N, dest="grid_n",
                   help="node count of the sampling grids")
    p.add_argument("--out", default="figures",
                   help="output directory")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv",
                   help="delimiter convention")
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("scatter", help="related scattering amplitudes (gpt)")
    _add_model_flags(p)
    p.add_argument("--kmin", type=float, default=0.1, help="lowest channel momentum")
    p.add_argument("--kmax", type=float, default=5.0, help="highest channel momentum")
    p.add_argument("--kstep", type=float, default=0.01, help="momentum step")
    _add_output_flags(p)
    p.set_defaults(func=cmd_scatter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
