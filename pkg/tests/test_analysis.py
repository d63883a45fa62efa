import json
import math

import pytest

from polyherglotz import (
    CauchyTypeFunction,
    HerglotzFunction,
    HerglotzTriple,
    InvalidArgumentError,
    LebesgueScaled,
    LimitConfig,
    MU2,
    TestFunctionBoundError,
    catalogue,
    characterize,
    full_symmetry_sum,
    nondependence_test,
    phi_cauchy,
    phi_gaussian,
    point,
    positivity_check,
    reconstruct_from_upper,
    restrict_to_upper,
    richardson_tableau,
    stieltjes_cauchy_type,
    stieltjes_classic,
    stoltz_limit,
    symmetry_check,
    symmetry_residual,
)
from polyherglotz.analysis import _spot_check_bound
from conftest import random_cut_point

PI = math.pi


def test_richardson_tableau_geometric():
    # sequence 1 + (1/2)^k converges to 1; second-order tableau nails it
    vals = [1 + 0.5**k for k in range(6)]
    cols = richardson_tableau(vals, 2.0, 2)
    assert abs(cols[1][-1] - 1.0) < 1e-12


def test_limit_config_validation():
    with pytest.raises(InvalidArgumentError):
        LimitConfig(stoltz_angle=0.0)
    with pytest.raises(InvalidArgumentError):
        LimitConfig(radius_sequence=(4.0, 2.0))
    with pytest.raises(InvalidArgumentError):
        LimitConfig(y_sequence=(0.1, 0.2))


# --- symmetry --------------------------------------------------------------

def test_symmetry_residual_f7_zero(rng):
    f7 = catalogue("f7")
    worst = max(
        symmetry_residual(f7, random_cut_point(rng, 2)) for _ in range(200)
    )
    assert worst < 1e-12


def test_symmetry_residual_f5_known_failure():
    # all three reflected points carry value 0, so the sum misses the i
    f5 = catalogue("f5")
    assert abs(symmetry_residual(f5, point(1j, 2j)) - 1.0) < 1e-15
    assert abs(full_symmetry_sum(f5, point(1j, 2j))) == 0.0


def test_symmetry_check_matrix():
    expected = {
        "f0": "fail", "f1": "fail", "f2": "pass", "f3": "fail",
        "f4": "pass", "f5": "fail", "f6": "pass", "f7": "pass",
    }
    for fid, want in expected.items():
        report = symmetry_check(catalogue(fid))
        assert report.verdict == want, fid
        if want == "fail":
            assert report.witnesses


def test_symmetry_check_report_shape():
    r = symmetry_check(catalogue("f5"))
    d = r.to_dict()
    assert set(d) == {"verdict", "max_residual", "tolerance", "witnesses", "config"}
    w = d["witnesses"][0]
    assert set(w) == {"point", "residual"}
    json.dumps(d)  # serializable


# --- non-dependence ---------------------------------------------------------

def test_nondependence_matrix():
    expected = {
        "f0": "fail", "f1": "fail", "f2": "fail", "f3": "pass",
        "f4": "fail", "f5": "pass", "f6": "pass", "f7": "pass",
    }
    for fid, want in expected.items():
        assert nondependence_test(catalogue(fid)).verdict == want, fid


def test_nondependence_vacuous_n1():
    g = CauchyTypeFunction(LebesgueScaled(1.0, 1))
    r = nondependence_test(g)
    assert r.verdict == "pass"
    assert r.max_residual == 0.0


# --- positivity --------------------------------------------------------------

def test_positivity_matrix():
    expected = {
        "f0": "fail", "f1": "pass", "f2": "fail", "f3": "fail",
        "f4": "pass", "f5": "pass", "f6": "fail", "f7": "pass",
    }
    for fid, want in expected.items():
        r = positivity_check(catalogue(fid))
        assert r.verdict == want, fid
        if want == "fail":
            assert r.witnesses[0][0].is_upper()


# --- reconstruction ----------------------------------------------------------

def test_reconstruct_f7(rng):
    f7 = catalogue("f7")
    f7u = restrict_to_upper(f7)
    for _ in range(100):
        z = random_cut_point(rng, 2)
        if z.is_upper():
            continue
        assert abs(reconstruct_from_upper(f7u, z) - f7(z)) < 1e-13


def test_reconstruct_lambda2_quadrature(rng):
    g = CauchyTypeFunction(LebesgueScaled(1.0, 2))
    gu = restrict_to_upper(g)
    for _ in range(20):
        z = random_cut_point(rng, 2)
        if z.is_upper():
            continue
        assert abs(reconstruct_from_upper(gu, z) - g(z)) < 1e-7


def test_reconstruct_rejects_upper_points():
    with pytest.raises(InvalidArgumentError):
        reconstruct_from_upper(catalogue("f7"), point(1j, 1j))


# --- growth limits -----------------------------------------------------------

def test_stoltz_recovers_b():
    h = HerglotzFunction(HerglotzTriple(0.0, (0.0, 2.0), LebesgueScaled(1.0, 2)))
    base = point(0.5 + 1.1j, 0.5 + 1.1j)
    for j, want in ((1, 0.0), (2, 2.0)):
        for direction in ("upper", "lower"):
            s = stoltz_limit(h, j, base, direction=direction)
            assert s.converged
            assert abs(s.estimate - want) < 1e-3
            assert s.base_spread < 1e-6


def test_stoltz_zero_for_catalogue(rng):
    base = point(0.5 + 1.1j, 0.5 + 1.1j)
    s = stoltz_limit(catalogue("f2"), 1, base)
    assert s.converged and abs(s.estimate) < 1e-6


def test_stoltz_validation():
    base = point(1j, 1j)
    with pytest.raises(InvalidArgumentError):
        stoltz_limit(catalogue("f7"), 3, base)
    with pytest.raises(InvalidArgumentError):
        stoltz_limit(catalogue("f7"), 1, base, direction="sideways")


# --- characterization ---------------------------------------------------------

def test_characterize_f7_passes():
    r = characterize(catalogue("f7"))
    assert r.verdict == "pass"
    assert r.d == (0.0, 0.0)


def test_characterize_f2_fails():
    assert characterize(catalogue("f2")).verdict == "fail"


def test_characterize_with_linear_growth():
    h = HerglotzFunction(HerglotzTriple(0.0, (0.0, 2.0), LebesgueScaled(1.0, 2)))
    r = characterize(h)
    assert r.verdict == "pass"
    assert abs(r.d[0]) < 1e-5 and abs(r.d[1] - 2.0) < 1e-5


def test_characterize_matrix_agreement():
    # a function is a symmetric extension iff it clears all three conditions
    for fid in ("f0", "f1", "f3", "f4", "f5", "f6"):
        assert characterize(catalogue(fid)).verdict == "fail", fid


# --- test functions and inversion ---------------------------------------------

def test_phi_builtins_satisfy_bound():
    _spot_check_bound(phi_cauchy(2))
    _spot_check_bound(phi_gaussian(2))
    _spot_check_bound(phi_gaussian(1, sigma=3.0))


def test_phi_bound_violation_detected():
    from polyherglotz.analysis import TestFunction

    bad = TestFunction("bad", 1, 0.5, lambda x: 1.0 / (1.0 + x[0] ** 2))
    with pytest.raises(TestFunctionBoundError):
        _spot_check_bound(bad)


def test_stieltjes_classic_1d_atomic_style():
    # h(z) = i matches Lebesgue measure: integral of phi recovers pi
    g = CauchyTypeFunction(LebesgueScaled(1.0, 1))
    res = stieltjes_classic(g, phi_cauchy(1))
    assert res.converged
    assert abs(res.estimate - PI) < 1e-4


def test_stieltjes_alternating_1d():
    g = CauchyTypeFunction(LebesgueScaled(1.0, 1))
    res = stieltjes_cauchy_type(g, phi_cauchy(1))
    assert res.converged
    assert abs(res.estimate - PI) < 1e-4


def test_stieltjes_lambda2_alternating():
    g = CauchyTypeFunction(LebesgueScaled(1.0, 2))
    res = stieltjes_cauchy_type(g, phi_cauchy(2))
    assert res.converged
    assert abs(res.estimate - PI * PI) < 1e-3
    assert len(res.rows) == 10


def test_stieltjes_dimension_mismatch():
    g = CauchyTypeFunction(LebesgueScaled(1.0, 2))
    with pytest.raises(InvalidArgumentError):
        stieltjes_classic(g, phi_cauchy(1))


def test_inversion_result_serializable():
    g = CauchyTypeFunction(LebesgueScaled(1.0, 1))
    res = stieltjes_cauchy_type(g, phi_cauchy(1))
    json.dumps(res.to_dict())
