import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from buckspec.dispersion import ModeIndex, alpha_root
from buckspec.eigenmodes import (
    boundary_residual,
    build_mode,
    eval_eigenfunction,
    mode_coefficients,
    pde_residual,
    radial_derivative,
    radial_eval,
    radial_profile,
    radial_second_derivative,
    sqrt_branch_admits_mode,
    sqrt_branch_matrix,
)
from buckspec.special import bessel_zero


def series_j(nu: int, x: float, terms: int = 60) -> float:
    s = 0.0
    for m in range(terms):
        s += (-1) ** m * (x / 2) ** (2 * m + nu) / (math.factorial(m) * math.gamma(m + nu + 1))
    return s


def test_coefficients_solve_first_row():
    m = ModeIndex(0, 1)
    root = alpha_root(m, 1.0)
    c, d = mode_coefficients(m, 1.0, root)
    a, b = root.alpha, root.beta
    assert abs(c * sp.jv(0, a) + d * sp.jv(0, b)) < 1e-10


def test_coefficients_positive_first_branch():
    c, d = mode_coefficients(ModeIndex(1, 1), 20.0, alpha_root(ModeIndex(1, 1), 20.0))
    assert c > 0 and d > 0


def test_coefficients_match_cofactor():
    m = ModeIndex(0, 1)
    root = alpha_root(m, 4.0)
    a, b = root.alpha, root.beta
    mat = np.array([[sp.jv(0, a), sp.jv(0, b)], [a * sp.jvp(0, a), b * sp.jvp(0, b)]])
    null = np.array([mat[0, 1], -mat[0, 0]])
    c, d = mode_coefficients(m, 4.0, root)
    cross = c * null[1] - d * null[0]
    assert abs(cross) < 1e-10 * np.linalg.norm(null)


def test_radial_examples():
    em = build_mode(ModeIndex(1, 1), 20.0)
    assert radial_eval(em, 0.0) == 0.0
    assert abs(radial_eval(build_mode(ModeIndex(0, 1), 1.0), 1.0)) < 1e-9
    em = build_mode(ModeIndex(0, 1), 5.0)
    ref = em.c * series_j(0, 0.5 * em.alpha) + em.d * series_j(0, 0.5 * em.beta)
    assert radial_eval(em, 0.5) == pytest.approx(ref, abs=1e-13)
    with pytest.raises(ValueError):
        radial_eval(em, 1.5)


def test_derivatives_against_finite_differences():
    for k, ell, kappa, dim in ((0, 1, 5.0, 2), (2, 2, 40.0, 2), (1, 1, 20.0, 3), (0, 3, 80.0, 4)):
        em = build_mode(ModeIndex(k, ell, dim), kappa)
        for r in (0.2, 0.5, 0.8):
            h = 1e-5
            fd1 = (radial_eval(em, r + h) - radial_eval(em, r - h)) / (2 * h)
            fd2 = (radial_eval(em, r + h) - 2 * radial_eval(em, r) + radial_eval(em, r - h)) / h**2
            assert radial_derivative(em, r) == pytest.approx(fd1, abs=1e-7)
            assert radial_second_derivative(em, r) == pytest.approx(fd2, abs=1e-3)


def test_eigenfunction_angular_dependence():
    em0 = build_mode(ModeIndex(0, 1), 5.0)
    vals = {eval_eigenfunction(em0, 0.4, t, (0.3, 0.7)) for t in (0.0, 1.0, 2.5)}
    assert len(vals) == 1
    em1 = build_mode(ModeIndex(1, 1), 20.0)
    for r in (0.1, 0.5, 0.9):
        assert abs(eval_eigenfunction(em1, r, math.pi / 2, (1.0, 0.0))) < 1e-15
    assert eval_eigenfunction(em1, 0.5, 0.0, (1.0, 0.0)) == radial_eval(em1, 0.5)


def test_eigenfunction_three_dimensions():
    em = build_mode(ModeIndex(1, 1, 3), 10.0)
    x = (0.0, 0.6, 0.8)
    assert eval_eigenfunction(em, 0.5, angular=(0, 1, 0), direction=x) == pytest.approx(0.6 * radial_eval(em, 0.5))
    with pytest.raises(ValueError):
        eval_eigenfunction(em, 0.5)
    with pytest.raises(NotImplementedError):
        eval_eigenfunction(build_mode(ModeIndex(2, 1, 3), 10.0), 0.5)


def test_boundary_residuals_small():
    for kappa in (0.0, 1.0, 13.0, 55.5, 139.0):
        for k in range(4):
            for ell in (1, 2, 3):
                r0, r1 = boundary_residual(build_mode(ModeIndex(k, ell), kappa))
                assert r0 < 1e-9 and r1 < 1e-9


def test_perturbed_root_detected():
    m = ModeIndex(0, 1)
    a = alpha_root(m, 5.0).alpha
    assert boundary_residual(build_mode(m, 5.0, alpha=a + 1e-3))[1] > 1e-5


def test_kappa_zero_basis():
    for k in range(3):
        j = bessel_zero(k + 1, 1)
        em = build_mode(ModeIndex(k, 1), 0.0)
        assert max(boundary_residual(em)) < 1e-9
        # reproduces -J_k(j) r^k + J_k(j r) up to scale
        rs = np.linspace(0, 1, 101)
        ref = np.array([-sp.jv(k, j) * r**k + sp.jv(k, j * r) for r in rs])
        got = np.array([radial_eval(em, r) for r in rs])
        ref /= np.max(np.abs(ref)) * np.sign(ref[np.argmax(np.abs(ref))])
        got /= np.max(np.abs(got)) * np.sign(got[np.argmax(np.abs(got))])
        assert np.max(np.abs(ref - got)) < 1e-12


def test_small_kappa_matches_basis():
    for k in range(3):
        a = build_mode(ModeIndex(k, 1), 0.0)
        b = build_mode(ModeIndex(k, 1), 1e-6)
        rs = np.linspace(0, 1, 101)
        diff = max(abs(radial_eval(a, r) - radial_eval(b, r)) for r in rs)
        assert diff < 1e-3


def test_pde_residual():
    rng = random.Random(17)
    for _ in range(10):
        kappa = rng.uniform(0.1, 140)
        for k in range(4):
            for ell in (1, 2, 3):
                assert pde_residual(build_mode(ModeIndex(k, ell), kappa)) < 1e-4


def test_pde_residual_higher_dimensions():
    for dim in (3, 4):
        for k in range(3):
            assert pde_residual(build_mode(ModeIndex(k, 1, dim), 30.0)) < 1e-4


def test_normalization_and_sign():
    for kappa in (1.0, 30.0, 90.0):
        for k in range(3):
            em = build_mode(ModeIndex(k, 1), kappa)
            prof = radial_profile(em, 401)
            # the sampled peak sits just below the true maximum of 1
            peak = np.max(np.abs(prof.values))
            assert 1.0 - 1e-5 < peak <= 1.0 + 1e-12
            # positive on a right-neighbourhood of the origin
            assert radial_eval(em, 1e-3) > 0


def test_first_radial_mode_decreasing():
    for kappa in (1.0, 5.0, 13.0):
        prof = radial_profile(build_mode(ModeIndex(0, 1), kappa), 201)
        assert radial_eval(prof.mode, 0.0) == pytest.approx(1.0)
        assert np.all(np.diff(prof.values) < 0)
        assert np.all(prof.values[:-1] > 0)


def test_first_branch_positive_before_first_product():
    for k in (1, 2, 3):
        top = bessel_zero(k, 1) * bessel_zero(k, 2)
        for kappa in (1.0, 0.5 * top, 0.99 * top):
            prof = radial_profile(build_mode(ModeIndex(k, 1), kappa), 201)
            assert np.all(prof.values[1:-1] > 0)


def test_profile_grid():
    em = build_mode(ModeIndex(0, 1), 1.0)
    prof = radial_profile(em, 101)
    assert prof.grid[0] == 0.0 and prof.grid[-1] == 1.0
    assert np.all(np.diff(prof.grid) > 0)
    assert len(prof.grid) >= math.ceil(64 * em.alpha / math.pi)
    assert np.all(prof.values[1:-1] > 0)
    with pytest.raises(ValueError):
        prof.values[0] = 2.0
    em50 = build_mode(ModeIndex(0, 1), 50.0)
    p50 = radial_profile(em50, 201)
    assert len(p50.grid) >= math.ceil(64 * em50.alpha / math.pi)


def test_sqrt_branch_never_admits_mode():
    for k in range(4):
        for kappa in np.linspace(0.1, 140, 200):
            m = ModeIndex(k, 1)
            assert not sqrt_branch_admits_mode(m, kappa)
            assert abs(np.linalg.det(sqrt_branch_matrix(m, kappa))) > 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(1, 3), st.floats(0.05, 140.0))
def test_clamped_property(k, ell, kappa):
    em = build_mode(ModeIndex(k, ell), kappa)
    r0, r1 = boundary_residual(em)
    assert r0 < 1e-9 and r1 < 1e-9
