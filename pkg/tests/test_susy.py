"""Deformation engine: parameter classes, norm integrals, deformed data."""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from isospec.models import (GPT_X1, RADOSC_X1, SHOWCASE, closed_form_I1,
                            eigenfunction_minus, v_minus, v_plus)
from isospec.numerics import (HALF_LINE_RADIAL, derivative, l2_norm,
                              make_grid, sample)
from isospec.susy import (ABRAHAM_MOSES, GENERIC, PURSEY, UNDEFORMED,
                          DeformationParam, _norm_integrals, am_potential,
                          build_family, classify, deformation_phi,
                          deformed_excited_state, deformed_ground_state,
                          deformed_potential, denominator, parse_lambda,
                          partner_potentials, pursey_potential,
                          superpotential_from_ground, v_plus_shared)

FAMILY_IDS = [s.family for s in SHOWCASE]

#: interior slices that stay clear of both walls for each family
WINDOW = {
    "radosc": (0.3, 8.0),
    "scarf1": (-math.pi / 2 + 0.05, math.pi / 2 - 0.05),
    "gpt": (0.3, 12.0),
}


def window_slice(grid, family):
    lo, hi = WINDOW[family]
    return slice(np.searchsorted(grid.nodes, lo), np.searchsorted(grid.nodes, hi))


# ---------------------------------------------------------------------------
# parameter classification
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("value,kind", [
    (0.05, GENERIC), (1.0, GENERIC), (1e6, GENERIC), (-1.1, GENERIC),
    (-3.0, GENERIC), (0.0, PURSEY), (-1.0, ABRAHAM_MOSES),
    (math.inf, UNDEFORMED), (-math.inf, UNDEFORMED),
])
def test_classify(value, kind):
    assert classify(value) == kind
    assert DeformationParam(value).kind == kind


@pytest.mark.parametrize("value", [-0.5, -0.999, -1e-12, float("nan")])
def test_classify_rejects(value):
    with pytest.raises(ValueError):
        classify(value)


def test_param_kind_mismatch_rejected():
    with pytest.raises(ValueError):
        DeformationParam(0.5, kind=PURSEY)


def test_parse_lambda():
    assert parse_lambda("0.05").kind == GENERIC
    assert parse_lambda("0").kind == PURSEY
    assert parse_lambda("-1").kind == ABRAHAM_MOSES
    assert parse_lambda("inf").kind == UNDEFORMED
    assert parse_lambda("-inf").kind == UNDEFORMED
    assert parse_lambda(" 1e6 ").value == 1e6
    with pytest.raises(ValueError):
        parse_lambda("galaxy")
    with pytest.raises(ValueError):
        parse_lambda("-0.5")


# ---------------------------------------------------------------------------
# norm integrals
# ---------------------------------------------------------------------------

def test_norm_integrals_power_density_exact_at_wall():
    # for a pure power density the wall panels must reproduce t**5/5 exactly
    g = make_grid(HALF_LINE_RADIAL, clip=1e-6, cutoff=1.0, n=1001)
    f = g.nodes ** 4
    cum, tail = _norm_integrals(RADOSC_X1, g, f)
    exact = g.nodes ** 5 / 5.0
    np.testing.assert_allclose(cum[:5], exact[:5], rtol=1e-10)
    np.testing.assert_allclose(cum, exact, rtol=5e-5)
    np.testing.assert_allclose(cum + tail, cum[-1] + tail[-1], rtol=1e-12)


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
def test_family_integrals_match_closed_form(spec):
    fam = build_family(spec, n=4001)
    closed = closed_form_I1(spec, fam.grid.nodes)
    assert np.max(np.abs(fam.cumulative - closed)) < 1e-5
    assert np.max(np.abs(fam.tail - (1.0 - closed))) < 1e-5
    assert np.all(np.diff(fam.cumulative) >= 0.0)
    assert np.all(np.diff(fam.tail) <= 0.0)
    assert fam.cumulative[-1] + fam.tail[-1] == pytest.approx(1.0, abs=2e-5)


def test_family_integral_against_adaptive_quadrature():
    spec = RADOSC_X1
    fam = build_family(spec, n=4001)
    dens = lambda r: eigenfunction_minus(spec, 0, np.array([r]))[0] ** 2
    for k in (35, 170, 500, 1000):
        ref, _ = quad(dens, fam.grid.a, fam.grid.nodes[k], limit=200)
        assert fam.cumulative[k] == pytest.approx(ref, abs=1e-5)


# ---------------------------------------------------------------------------
# denominator branches
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
def test_denominator_branches(spec, families):
    fam = families[spec.family]
    np.testing.assert_array_equal(denominator(fam, DeformationParam(2.0)),
                                  fam.cumulative + 2.0)
    np.testing.assert_array_equal(denominator(fam, DeformationParam(0.0)),
                                  fam.cumulative)
    np.testing.assert_array_equal(denominator(fam, DeformationParam(-1.0)),
                                  -fam.tail)
    np.testing.assert_array_equal(denominator(fam, DeformationParam(-2.5)),
                                  -1.5 - fam.tail)
    with pytest.raises(ValueError):
        denominator(fam, DeformationParam(math.inf))


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
@pytest.mark.parametrize("lam", [0.05, 1.0, 10.0, -1.1, -3.0, 0.0, -1.0])
def test_denominator_never_vanishes(spec, families, lam):
    fam = families[spec.family]
    d = denominator(fam, DeformationParam(lam))
    assert np.all(np.abs(d) > 0.0)
    # one definite sign each: positive for lambda >= 0, negative for <= -1
    assert np.all(d > 0.0) if lam >= 0 else np.all(d < 0.0)


# ---------------------------------------------------------------------------
# deformed potentials
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("lam", [1.0, -3.0, 0.0, -1.0])
def test_deformed_potential_is_log_second_derivative(lam):
    # the defining property: V_hat = V^- - 2 (ln |D|)''
    fam = build_family(RADOSC_X1, n=32001)
    vhat = deformed_potential(fam, DeformationParam(lam))
    logd = sample(fam.grid, lambda _: np.log(np.abs(denominator(fam, DeformationParam(lam)))))
    correction = derivative(derivative(logd))
    sl = window_slice(fam.grid, "radosc")
    lhs = vhat.values[sl]
    rhs = v_minus(RADOSC_X1, fam.grid.nodes[sl]) - 2.0 * correction.values[sl]
    assert np.max(np.abs(lhs - rhs)) < 5e-4


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
def test_undeformed_limit_returns_base_potential(spec, families):
    fam = families[spec.family]
    vhat = deformed_potential(fam, DeformationParam(math.inf))
    np.testing.assert_array_equal(vhat.values, v_minus(spec, fam.grid.nodes))
    assert np.all(deformation_phi(fam, DeformationParam(math.inf)) == 0.0)


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
def test_large_lambda_approaches_base(spec, families):
    fam = families[spec.family]
    vhat = deformed_potential(fam, DeformationParam(1e6))
    sl = window_slice(fam.grid, spec.family)
    base = v_minus(spec, fam.grid.nodes[sl])
    assert np.max(np.abs(vhat.values[sl] - base)) < 1e-3


#: sub-windows where both running integrals dwarf a 1e-12 parameter offset,
#: so the lambda -> 0+ / -1- limits are uniform there
CONTINUITY_WINDOW = {
    "radosc": (0.3, 4.0),
    "scarf1": (-1.2, 1.2),
    "gpt": (0.3, 6.0),
}


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
def test_boundary_values_are_branch_continuous(spec, families):
    # approaching lambda -> 0+ and -> -1- reproduces the dedicated branches
    # wherever the denominator dominates the offset
    fam = families[spec.family]
    lo, hi = CONTINUITY_WINDOW[spec.family]
    sl = slice(np.searchsorted(fam.grid.nodes, lo),
               np.searchsorted(fam.grid.nodes, hi))
    near_pursey = deformed_potential(fam, DeformationParam(1e-12)).values[sl]
    assert np.max(np.abs(near_pursey - pursey_potential(fam).values[sl])) < 1e-3
    near_am = deformed_potential(fam, DeformationParam(-1.0 - 1e-12)).values[sl]
    assert np.max(np.abs(near_am - am_potential(fam).values[sl])) < 1e-3


# ---------------------------------------------------------------------------
# deformed states
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
@pytest.mark.parametrize("lam", [0.05, 0.1, 1.0, 10.0, -1.1, -3.0])
def test_deformed_ground_state_exactly_normalized(spec, lam, families):
    # the sqrt(lambda (1 + lambda)) prefactor must make the state unit-norm
    # with no numerical rescaling
    fam = families[spec.family]
    psi = deformed_ground_state(fam, DeformationParam(lam))
    assert l2_norm(psi) == pytest.approx(1.0, abs=5e-5)


@pytest.mark.parametrize("kind_value", [0.0, -1.0])
def test_boundary_deformations_have_no_ground_state(kind_value, families):
    fam = families["radosc"]
    with pytest.raises(ValueError):
        deformed_ground_state(fam, DeformationParam(kind_value))


def test_undeformed_states_pass_through(families):
    fam = families["radosc"]
    psi = deformed_ground_state(fam, DeformationParam(math.inf))
    np.testing.assert_array_equal(psi.values, fam.psi0)
    psi2 = deformed_excited_state(fam, DeformationParam(math.inf), 2)
    np.testing.assert_array_equal(
        psi2.values, eigenfunction_minus(RADOSC_X1, 2, fam.grid.nodes))


@pytest.mark.parametrize("lam", [1.0, 0.0, -1.0, -3.0])
def test_deformed_tower_orthonormal(lam, families):
    fam = families["radosc"]
    param = DeformationParam(lam)
    states = [deformed_excited_state(fam, param, n) for n in (1, 2, 3)]
    if param.kind == GENERIC:
        states.insert(0, deformed_ground_state(fam, param))
    for i, si in enumerate(states):
        assert l2_norm(si) == pytest.approx(1.0, abs=2e-5), f"state {i}"
        for sj in states[i + 1:]:
            overlap = np.trapezoid(si.values * sj.values, dx=fam.grid.h)
            assert abs(overlap) < 1e-5


def test_excited_state_index_must_be_positive(families):
    with pytest.raises(ValueError):
        deformed_excited_state(families["radosc"], DeformationParam(1.0), 0)


# ---------------------------------------------------------------------------
# deformed superpotential and the shared partner
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
@pytest.mark.parametrize("lam", [0.5, 0.0, -1.0, -2.0])
def test_whole_family_shares_one_partner(spec, lam, families):
    fam = families[spec.family]
    sup = superpotential_from_ground(fam, DeformationParam(lam))
    plus = sup.w ** 2 + sup.wprime
    vplus = v_plus(spec, fam.grid.nodes)
    scale = np.maximum(1.0, np.abs(vplus))
    assert np.max(np.abs(plus - vplus) / scale) < 1e-10
    np.testing.assert_array_equal(v_plus_shared(fam).values, vplus)


@pytest.mark.parametrize("spec", SHOWCASE, ids=FAMILY_IDS)
@pytest.mark.parametrize("lam", [0.5, 0.0, -1.0, -2.0])
def test_partner_pair_consistency(spec, lam, families):
    fam = families[spec.family]
    param = DeformationParam(lam)
    sup = superpotential_from_ground(fam, param)
    lower, upper = partner_potentials(fam, param)
    np.testing.assert_allclose(lower.values, sup.w ** 2 - sup.wprime, rtol=1e-12)
    np.testing.assert_allclose(upper.values, sup.w ** 2 + sup.wprime, rtol=1e-12)
    vhat = deformed_potential(fam, param)
    scale = np.maximum(1.0, np.abs(vhat.values))
    assert np.max(np.abs(lower.values - vhat.values) / scale) < 1e-10


def test_deformed_asymptotics(families):
    sup = superpotential_from_ground(families["gpt"], DeformationParam(2.0))
    assert sup.w_plus_inf == 1.0
    sup_p = superpotential_from_ground(families["gpt"], DeformationParam(0.0))
    assert sup_p.w_minus_inf == math.inf
    sup_am = superpotential_from_ground(families["gpt"], DeformationParam(-1.0))
    assert sup_am.w_plus_inf == -1.0


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

@given(lam=st.one_of(st.floats(0.05, 1e4), st.floats(-1e4, -1.05)))
def test_generic_lambda_properties(lam, families):
    fam = families["scarf1"]
    param = DeformationParam(lam)
    assert param.kind == GENERIC
    d = denominator(fam, param)
    assert np.all(np.abs(d) > 0.0)
    vhat = deformed_potential(fam, param)
    assert np.all(np.isfinite(vhat.values))
    psi = deformed_ground_state(fam, param)
    assert l2_norm(psi) == pytest.approx(1.0, abs=1e-4)
