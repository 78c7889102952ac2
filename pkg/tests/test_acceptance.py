"""End-to-end acceptance checks.

Each test covers one numbered claim about the deformation machinery and
emits exactly one ``criterion NN PASS/FAIL`` line on the real stdout so the
run log shows the scorecard even under output capture.  Tolerances are part
of the claims; nothing here is tuned to the implementation.
"""
import contextlib
import math
import sys
import time

import numpy as np
import pytest

from isospec.cli import LARGE_LAMBDA, build_figure_tables
from isospec.models import (GPT_X1, RADOSC_X1, SCARF1_X1, SHOWCASE,
                            closed_form_I1, eigenfunction_minus,
                            eigenfunction_minus_prime, energy, v_minus,
                            v_plus, w, w_prime)
from isospec.numerics import (SampledFunction, cumulative_integral,
                              inner_product, l2_norm, make_grid, sample)
from isospec.oracle import (eigen_residual, spectral_window,
                            spectrum_with_richardson, verify_isospectral)
from isospec.scattering import s_am, s_minus, s_plus, s_pursey
from isospec.susy import (DeformationParam, build_family,
                          deformed_excited_state, deformed_ground_state,
                          deformed_potential)

GENERIC_LAMBDAS = (0.05, 0.1, 1.0, 10.0, -1.1, -3.0)
BASE_LEVELS = {
    "radosc": [0.0, 4.0, 8.0, 12.0, 16.0],
    "scarf1": [0.0, 7.0, 16.0, 27.0, 40.0],
    "gpt": [0.0],
}


#: One verdict line per criterion; conftest replays these after the run.
SCORECARD: list[str] = []


def _emit(num: int, ok: bool, desc: str):
    line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {desc}"
    SCORECARD.append(line)
    sys.__stdout__.write("\n" + line + "\n")
    sys.__stdout__.flush()


@contextlib.contextmanager
def criterion(num: int, desc: str):
    try:
        yield
    except BaseException:
        _emit(num, False, desc)
        raise
    _emit(num, True, desc)


@pytest.fixture(scope="module")
def fams8k():
    return {s.family: build_family(s, n=8001) for s in SHOWCASE}


@pytest.fixture(scope="module")
def fams40k():
    return {s.family: build_family(s, n=40001) for s in SHOWCASE}


def _baseline_check(spec, fam, levels):
    start = time.perf_counter()
    v = SampledFunction(fam.grid, v_minus(spec, fam.grid.nodes))
    ok, diffs, report = verify_isospectral(v, levels, tol=1e-5, eigentol=1e-5)
    elapsed = time.perf_counter() - start
    assert np.all(report.converged), "oracle did not converge"
    assert np.max(diffs) < 1e-5, (
        f"max |oracle - closed form| = {np.max(diffs):.3e}")
    assert elapsed < 10.0, f"runtime {elapsed:.1f}s exceeds 10s"


def test_criterion_01_radial_oscillator_baseline(fams8k):
    with criterion(1, "radosc closed-form spectrum confirmed to 1e-5 in <10s"):
        _baseline_check(RADOSC_X1, fams8k["radosc"], BASE_LEVELS["radosc"])


def test_criterion_02_scarf_baseline(fams8k):
    with criterion(2, "scarf1 closed-form spectrum confirmed to 1e-5 in <10s"):
        _baseline_check(SCARF1_X1, fams8k["scarf1"], BASE_LEVELS["scarf1"])


def test_criterion_03_gpt_baseline(fams8k):
    with criterion(3, "gpt bound levels below threshold confirmed to 1e-5"):
        _baseline_check(GPT_X1, fams8k["gpt"], BASE_LEVELS["gpt"])


def test_criterion_04_generic_deformations_isospectral(fams8k):
    desc = ("generic deformations keep the full spectrum to 1e-4 and "
            "fade out as lambda -> inf")
    with criterion(4, desc):
        for spec in SHOWCASE:
            fam = fams8k[spec.family]
            levels = BASE_LEVELS[spec.family]
            for lam in GENERIC_LAMBDAS:
                vhat = deformed_potential(fam, DeformationParam(lam))
                ok, diffs, report = verify_isospectral(
                    vhat, levels, tol=1e-4, eigentol=1e-4)
                assert np.all(report.converged), (
                    f"{spec.family} lambda={lam}: oracle did not converge")
                assert np.max(diffs) < 1e-4, (
                    f"{spec.family} lambda={lam}: "
                    f"max |oracle - closed form| = {np.max(diffs):.3e}")
            base = SampledFunction(fam.grid, v_minus(spec, fam.grid.nodes))
            vhat = deformed_potential(fam, DeformationParam(LARGE_LAMBDA))
            win = spectral_window(base)
            mask = ((fam.grid.nodes >= win.grid.nodes[0])
                    & (fam.grid.nodes <= win.grid.nodes[-1]))
            sup = float(np.max(np.abs(vhat.values[mask] - base.values[mask])))
            assert sup < 1e-3, (
                f"{spec.family}: sup |vhat(1e6) - vminus| = {sup:.3e}")


def test_criterion_05_level_deletion_limits(fams8k):
    desc = ("pursey and abraham-moses limits delete exactly the ground level "
            "and share the partner spectrum to 1e-4")
    with criterion(5, desc):
        for spec in (RADOSC_X1, SCARF1_X1):
            fam = fams8k[spec.family]
            excited = [energy(spec, j) for j in range(1, 5)]
            vp = SampledFunction(fam.grid, v_plus(spec, fam.grid.nodes))
            plus_report = spectrum_with_richardson(vp, len(excited), tol=1e-4)
            assert np.all(plus_report.converged)
            for lam, label in ((0.0, "pursey"), (-1.0, "abraham-moses")):
                vhat = deformed_potential(fam, DeformationParam(lam))
                ok, diffs, report = verify_isospectral(
                    vhat, excited, tol=1e-4, eigentol=1e-4)
                assert np.all(report.converged), (
                    f"{spec.family} {label}: oracle did not converge")
                assert np.max(diffs) < 1e-4, (
                    f"{spec.family} {label}: max |oracle - excited closed "
                    f"form| = {np.max(diffs):.3e}")
                cross = np.max(np.abs(report.richardson_estimate
                                      - plus_report.richardson_estimate))
                assert cross < 1e-4, (
                    f"{spec.family} {label}: disagrees with the partner "
                    f"oracle spectrum by {cross:.3e}")
        # gpt has a single bound level; after deletion only truncation
        # artifacts remain, recognizable by their 1/L**2 scaling with the
        # half-line truncation length
        lows = {}
        for cutoff in (25.0, 35.0):
            fam = build_family(GPT_X1, cutoff=cutoff, n=8001)
            for lam in (0.0, -1.0):
                vhat = deformed_potential(fam, DeformationParam(lam))
                report = spectrum_with_richardson(vhat, 1, tol=1e-4)
                lows[(cutoff, lam)] = float(report.richardson_estimate[0])
        for lam in (0.0, -1.0):
            e25 = lows[(25.0, lam)]
            e35 = lows[(35.0, lam)]
            assert e25 > 1.0 and e35 > 1.0, (
                f"gpt lambda={lam}: a level survived below the continuum "
                f"threshold ({e25:.4f}, {e35:.4f})")
            ratio = (e25 - 1.0) / (e35 - 1.0)
            assert ratio > 1.5, (
                f"gpt lambda={lam}: lowest level does not scale like a box "
                f"artifact (ratio {ratio:.2f})")


def test_criterion_06_normalization_integral_closed_form():
    desc = ("running normalization integral matches its closed form to 1e-8 "
            "at every node and tends to 1")
    with criterion(6, desc):
        for spec in SHOWCASE:
            grid = make_grid(spec.grid_kind, n=2_000_001)
            dens = sample(grid, lambda x: eigenfunction_minus(spec, 0, x) ** 2)
            cum = cumulative_integral(dens).values
            closed = closed_form_I1(spec, grid.nodes)
            err = np.max(np.abs(cum - closed))
            assert err < 1e-8, (
                f"{spec.family}: max |quadrature - closed form| = {err:.3e}")
            assert abs(cum[-1] - 1.0) < 1e-8, (
                f"{spec.family}: I1 at the far wall is {cum[-1]:.10f}")


# node counts sit near the optimum where three-point truncation error and
# the 1/h**2 roundoff amplification of the residual balance
IDENTITY_GRIDS = {
    "radosc": dict(clip=0.2, cutoff=10.0, n=40001),
    "scarf1": dict(clip=0.05, n=40001),
    "gpt": dict(clip=0.2, cutoff=15.0, n=40001),
}


def test_criterion_07_internal_identities():
    desc = ("superpotential algebra, log-derivative identity and Schrodinger "
            "residuals hold on interior grids")
    with criterion(7, desc):
        for spec in SHOWCASE:
            grid = make_grid(spec.grid_kind, **IDENTITY_GRIDS[spec.family])
            x = grid.nodes
            wx = w(spec, x)
            alg = np.max(np.abs(wx ** 2 - w_prime(spec, x) - v_minus(spec, x)))
            assert alg < 1e-8, (
                f"{spec.family}: superpotential algebra W**2 - W' = V^- "
                f"violated by {alg:.3e}")
            psi0 = eigenfunction_minus(spec, 0, x)
            logdiff = np.max(np.abs(
                wx + eigenfunction_minus_prime(spec, 0, x) / psi0))
            assert logdiff < 1e-6, (
                f"{spec.family}: log-derivative identity W = -psi0'/psi0 "
                f"violated by {logdiff:.3e}")
            v = SampledFunction(grid, v_minus(spec, x))
            cap = 0 if spec.family == "gpt" else 3
            for n in range(cap + 1):
                psi = SampledFunction(grid, eigenfunction_minus(spec, n, x))
                res = eigen_residual(v, psi, energy(spec, n))
                assert res < 1e-5, (
                    f"{spec.family}: Schrodinger residual of level {n} at its "
                    f"closed-form energy is {res:.3e}")


def test_criterion_08_deformed_states_orthonormal(fams40k):
    desc = ("deformed ground states are exactly normalized and the deformed "
            "tower stays orthogonal")
    with criterion(8, desc):
        for spec in SHOWCASE:
            fam = fams40k[spec.family]
            for lam in GENERIC_LAMBDAS:
                param = DeformationParam(lam)
                ground = deformed_ground_state(fam, param)
                err = abs(l2_norm(ground) - 1.0)
                assert err < 1e-6, (
                    f"{spec.family} lambda={lam}: ground norm off by {err:.3e}")
                if spec.family == "gpt":
                    continue  # single bound level: no tower to compare
                states = [ground] + [deformed_excited_state(fam, param, n)
                                     for n in (1, 2, 3)]
                for i in range(4):
                    for j in range(i + 1, 4):
                        ov = abs(inner_product(states[i], states[j]))
                        assert ov < 1e-5, (
                            f"{spec.family} lambda={lam}: |<{i},{j}>| = "
                            f"{ov:.3e}")


def test_criterion_09_scattering_relations():
    desc = ("amplitudes stay unimodular; pursey keeps and abraham-moses "
            "rotates the phase as prescribed")
    with criterion(9, desc):
        A = GPT_X1.A
        for kp in np.arange(0.1, 5.0 + 1e-12, 0.01):
            base = s_minus(GPT_X1, kp)
            assert abs(abs(base) - 1.0) < 1e-10, (
                f"|s_minus({kp:.2f})| deviates from 1")
            assert s_pursey(GPT_X1, kp) == base
            factor = (A + 1j * kp) / (A - 1j * kp)
            assert abs(s_am(GPT_X1, kp) / base - factor ** 2) < 1e-10, (
                f"abraham-moses phase ratio wrong at k' = {kp:.2f}")
            assert abs(s_plus(GPT_X1, kp) / base - factor) < 1e-10, (
                f"partner phase ratio wrong at k' = {kp:.2f}")


def _col(lam, prefix="vhat"):
    if lam == 0.0:
        return "vpursey"
    if lam == -1.0:
        return "vam"
    if math.isinf(lam):
        return f"{prefix}_inf" if lam > 0 else f"{prefix}_-inf"
    return f"{prefix}_{format(lam, 'g')}"


def _trace(columns, rows, name):
    return rows[:, columns.index(name)]


def test_criterion_10_figure_data_shapes():
    desc = ("emitted figure tables reproduce the documented well migration "
            "and state sharpening")
    with criterion(10, desc):
        tables = build_figure_tables()
        assert sorted(tables) == [f"fig{i}{p}" for i in (1, 2, 3)
                                  for p in "abcd"]
        for idx, spec in zip((1, 2, 3), SHOWCASE):
            cfg_a, cols_a, rows_a = tables[f"fig{idx}a"]
            x = _trace(cols_a, rows_a, "x")
            lams_a = [float(t) for t in cfg_a["lambda"].split(",")]
            generic_desc = sorted([l for l in lams_a if l > 0.0], reverse=True)
            locs = []
            for lam in generic_desc:
                tr = _trace(cols_a, rows_a, _col(lam))
                locs.append(x[np.argmin(tr)])
                if math.isfinite(lam):
                    assert np.min(tr) < 0.0, (
                        f"fig{idx}a lambda={lam:g}: deformation well did not "
                        f"undershoot zero")
            assert np.all(np.diff(locs) < 0.0), (
                f"fig{idx}a: well minimum does not migrate toward the edge "
                f"as lambda decreases ({locs})")
            assert np.min(_trace(cols_a, rows_a, "vpursey")) > 0.0, (
                f"fig{idx}a: pursey limit still shows a negative well")

            cfg_b, cols_b, rows_b = tables[f"fig{idx}b"]
            xb = _trace(cols_b, rows_b, "x")
            lams_b = [float(t) for t in cfg_b["lambda"].split(",")
                      if t != "-inf"]
            # ordered -inf, -3, -1.1, -1.001 ... : approaching the
            # abraham-moses limit pushes the well outward
            chain = [-math.inf] + sorted(l for l in lams_b if l < -1.0)
            locs = []
            for lam in chain:
                tr = _trace(cols_b, rows_b, _col(lam))
                locs.append(xb[np.argmin(tr)])
            assert np.all(np.diff(locs) > 0.0), (
                f"fig{idx}b: well minimum does not migrate outward as lambda "
                f"approaches -1 ({locs})")
            assert np.min(_trace(cols_b, rows_b, "vam")) > 0.0, (
                f"fig{idx}b: abraham-moses limit still shows a negative well")

            _, cols_c, rows_c = tables[f"fig{idx}c"]
            assert cols_c == ["x", "vplus", "vpursey", "vam"]
            assert np.min(_trace(cols_c, rows_c, "vpursey")) > 0.0
            assert np.min(_trace(cols_c, rows_c, "vam")) > 0.0

            cfg_d, cols_d, rows_d = tables[f"fig{idx}d"]
            xd = _trace(cols_d, rows_d, "x")
            prefix = "psihat0_over_r" if spec.family == "radosc" else "psihat0"
            lams_d = sorted((float(t) for t in cfg_d["lambda"].split(",")
                             if t != "inf"), reverse=True)
            lams_d = [math.inf] + lams_d
            peaks, heights = [], []
            for lam in lams_d:
                tr = _trace(cols_d, rows_d, _col(lam, prefix=prefix))
                assert np.min(tr) > -1e-12, (
                    f"fig{idx}d lambda={lam:g}: state goes negative")
                peaks.append(xd[np.argmax(tr)])
                heights.append(np.max(tr))
            assert np.all(np.diff(peaks) < 0.0), (
                f"fig{idx}d: state peak does not move inward as lambda "
                f"decreases ({peaks})")
            assert np.all(np.diff(heights) > 0.0), (
                f"fig{idx}d: state peak does not sharpen as lambda "
                f"decreases ({heights})")
