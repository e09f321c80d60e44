"""Self-check suite run by ``buckspec verify``.

Each check re-derives a known identity or structural property and compares
it with what the library computes.  Library functions are always reached
through their module (``dispersion.f_det`` rather than a bound import) so
that a patched or broken build is what gets tested.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from . import dispersion, eigenmodes, nodal, special
from .dispersion import ModeIndex


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[bool], tuple[bool, str]]
    full_only: bool = False


# printed coordinates of tabulated zeros (nu, ell, value)
ANCHOR_ZEROS = [
    (0, 1, 2.4048), (0, 2, 5.52008), (0, 3, 8.65372), (0, 4, 11.79153),
    (1, 1, 3.8317), (1, 2, 7.0155), (1, 3, 10.1734), (1, 4, 13.32369),
    (2, 1, 5.1356), (2, 2, 8.4172), (2, 3, 11.619841),
]


def _rng(seed: int) -> random.Random:
    return random.Random(seed)


def _kappa_grid(full: bool, lo: float = 0.01, hi: float = 140.0) -> np.ndarray:
    n = 1000 if full else 120
    return np.linspace(lo, hi, n + 1)[1:]


def _fmt(x: float) -> str:
    return f"{x:.3g}"


# --- special functions -------------------------------------------------------

def chk_zero_anchors(full: bool):
    worst = max(abs(special.bessel_zero(nu, l) - v) for nu, l, v in ANCHOR_ZEROS)
    return worst < 5e-4, f"max deviation from printed zeros {_fmt(worst)}"


def chk_recurrence(full: bool):
    rng = _rng(1)
    worst = 0.0
    for _ in range(1000 if full else 200):
        nu = rng.uniform(1.0, 10.0)
        z = rng.uniform(1e-3, 50.0)
        lhs = nu * special.bessel_j(nu, z)
        rhs = 0.5 * z * (special.bessel_j(nu - 1, z) + special.bessel_j(nu + 1, z))
        worst = max(worst, abs(lhs - rhs))
    return worst < 1e-10, f"max |nu J - z/2 (J_- + J_+)| = {_fmt(worst)}"


def chk_derivative_forms(full: bool):
    rng = _rng(2)
    worst_id = worst_fd = 0.0
    for _ in range(1000 if full else 200):
        nu = rng.uniform(1.0, 10.0)
        z = rng.uniform(0.5, 50.0)
        d4 = special.bessel_j_prime(nu, z)
        d3 = special.bessel_j(nu - 1, z) - nu / z * special.bessel_j(nu, z)
        h = 1e-5
        fd = (special.bessel_j(nu, z + h) - special.bessel_j(nu, z - h)) / (2 * h)
        worst_id = max(worst_id, abs(d4 - d3))
        worst_fd = max(worst_fd, abs(d4 - fd))
    ok = worst_id < 1e-10 and worst_fd < 1e-8
    return ok, f"two derivative forms differ by {_fmt(worst_id)}, finite difference by {_fmt(worst_fd)}"


def chk_j0_prime(full: bool):
    worst = max(
        abs(special.bessel_j_prime(0, z) + special.bessel_j(1, z)) for z in np.linspace(0.1, 50.0, 200)
    )
    return worst < 1e-12, f"max |J0' + J1| = {_fmt(worst)}"


def chk_bessel_ode(full: bool):
    rng = _rng(3)
    worst = 0.0
    for _ in range(1000 if full else 200):
        nu = rng.uniform(0.0, 10.0)
        z = rng.uniform(0.5, 50.0)
        j = special.bessel_j(nu, z)
        res = z * z * special.bessel_j_prime2(nu, z) + z * special.bessel_j_prime(nu, z) + (z * z - nu * nu) * j
        worst = max(worst, abs(res))
    return worst < 1e-8, f"max Bessel equation residual {_fmt(worst)}"


def chk_large_argument(full: bool):
    # the first neglected term is bounded by |4 nu^2 - 1| / 8 * sqrt(2/pi) z^-1.5
    worst = 0.0
    for nu in (0.0, 0.5, 1.0, 2.5, 5.0):
        bound = (abs(4 * nu * nu - 1) / 8 + 0.1) * math.sqrt(2 / math.pi)
        for z in (200.0, 300.0, 400.0, 500.0):
            lead = math.sqrt(2.0 / (math.pi * z)) * math.cos(z - 0.5 * nu * math.pi - 0.25 * math.pi)
            worst = max(worst, abs(special.bessel_j(nu, z) - lead) * z**1.5 / bound)
    return worst <= 1.0, f"max deviation from leading asymptotic, relative to next-term bound: {_fmt(worst)}"


def chk_small_argument(full: bool):
    worst = 0.0
    for nu in (0.0, 0.5, 1.0, 3.0, 7.5):
        for z in (1e-6, 1e-4, 1e-3):
            lead = (0.5 * z) ** nu / math.gamma(nu + 1.0)
            worst = max(worst, abs(special.bessel_j(nu, z) / lead - 1.0))
    return worst < 1e-5, f"max relative deviation from (z/2)^nu / Gamma(nu+1): {_fmt(worst)}"


def chk_interlacing(full: bool):
    for nu in [0, 1, 2, 3, 4, 5, 6, 0.5, 1.5, 2.5]:
        a = special.zero_table(nu, 31).zeros
        b = special.zero_table(nu + 1, 30).zeros
        if not all(a[i] < b[i] < a[i + 1] for i in range(30)):
            return False, f"zeros of J_{nu} and J_{nu + 1} fail to interlace"
    return True, "orders nu, nu+1 interlace for 30 zeros"


def chk_interlacing_k_k2(full: bool):
    for k in range(5):
        a = special.zero_table(k, 21).zeros
        b = special.zero_table(k + 2, 20).zeros
        if not all(a[i] < b[i] < a[i + 1] for i in range(20)):
            return False, f"zeros of J_{k} and J_{k + 2} fail to interlace"
    return True, "orders k, k+2 interlace for 20 zeros, k <= 4"


def chk_simple_zeros(full: bool):
    worst = min(
        abs(special.bessel_j_prime(nu, z))
        for nu in (0, 1, 2, 3, 0.5, 1.5)
        for z in special.zero_table(nu, 30).zeros
    )
    return worst > 1e-6, f"min |J'| at zeros {_fmt(worst)}"


# --- dispersion -------------------------------------------------------------

def chk_h_tilde_derivative(full: bool):
    worst = 0.0
    for k in range(4):
        m = ModeIndex(k)
        for z in np.linspace(0.5, 30.0, 60):
            h = 1e-5
            fd = (dispersion.h_tilde(m, z + h) - dispersion.h_tilde(m, z - h)) / (2 * h)
            worst = max(worst, abs(fd - 2 * z * special.bessel_j(k, z) ** 2))
    return worst < 1e-7, f"max |dH~/dz - 2 z J^2| = {_fmt(worst)}"


def chk_h_aux_decreasing(full: bool):
    for k in range(4):
        m = ModeIndex(k)
        zs = special.zero_table(k, 6).zeros
        for a, b in zip(zs, zs[1:]):
            xs = np.linspace(a, b, 202)[1:-1]
            vals = [dispersion.h_aux(m, x) for x in xs]
            if not all(u > v for u, v in zip(vals, vals[1:])):
                return False, f"z J'/J not decreasing on ({a:.4f}, {b:.4f}), k={k}"
            if not (vals[0] > 0 > vals[-1]):
                return False, f"z J'/J has wrong end behaviour on ({a:.4f}, {b:.4f}), k={k}"
    return True, "z J'/J decreases from +inf to -inf between consecutive zeros"


def chk_d_negative(full: bool):
    rng = _rng(4)
    worst = -math.inf
    for _ in range(1000):
        k = rng.randrange(0, 6)
        a = rng.uniform(1e-3, 60.0)
        worst = max(worst, dispersion.d_det(ModeIndex(k), a))
    return worst < 0.0, f"max of the sqrt(kappa)-branch determinant over 1000 samples: {_fmt(worst)}"


def chk_antisymmetry(full: bool):
    rng = _rng(5)
    worst = 0.0
    for _ in range(500 if full else 100):
        m = ModeIndex(rng.randrange(0, 5), 1, rng.choice([2, 3]))
        kappa = rng.uniform(0.1, 140.0)
        a = rng.uniform(0.3, 30.0)
        if kappa / a > 900.0:
            continue
        f1 = dispersion.f_det(m, kappa, a)
        f2 = dispersion.f_det(m, kappa, kappa / a)
        worst = max(worst, abs(f1 + f2) / max(1.0, abs(f1)))
    return worst < 1e-10, f"max |F(kappa/a) + F(a)| = {_fmt(worst)}"


def chk_form_equivalence(full: bool):
    rng = _rng(6)
    worst = 0.0
    for _ in range(500 if full else 100):
        k = rng.randrange(0, 5)
        dim = rng.choice([2, 3])
        m = ModeIndex(k, 1, dim)
        kappa = rng.uniform(0.1, 140.0)
        a = rng.uniform(0.5, 30.0)
        f = dispersion.f_det(m, kappa, a)
        g = dispersion.f_det_alt(m, kappa, a)
        nxt = dispersion.f_det(ModeIndex(k + 1, 1, dim), kappa, a)
        g1 = dispersion.f_det_next(m, kappa, a)
        scale = 1.0 + abs(a) + kappa / a
        worst = max(worst, abs(f - g) / scale, abs(nxt - g1) / scale)
    return worst < 1e-12, f"max scaled difference between determinant forms {_fmt(worst)}"


def chk_k_plus_2(full: bool):
    rng = _rng(7)
    worst = 0.0
    for _ in range(300 if full else 80):
        k = rng.randrange(0, 5)
        kappa = rng.uniform(0.1, 140.0)
        a = rng.uniform(0.5, 30.0)
        lhs = dispersion.f_det(ModeIndex(k + 2), kappa, a) - dispersion.f_det(ModeIndex(k), kappa, a)
        rhs = dispersion.f_det_step2(ModeIndex(k), kappa, a)
        worst = max(worst, abs(lhs - rhs))
    return worst < 1e-10, f"max |F_(k+2) - F_k - closed form| = {_fmt(worst)}"


def chk_crossing_values(full: bool):
    worst = near = 0.0
    for k in (0, 1):
        for ell in (1, 2):
            for n in (1, 2):
                for fam in (float(k), k + 1.0):
                    kap = special.bessel_zero(fam, n) * special.bessel_zero(fam, ell + n)
                    target = special.bessel_zero(fam, ell + n)
                    for kk in (k, k + 1):
                        worst = max(worst, abs(dispersion.alpha_root(ModeIndex(kk, ell), kap).alpha - target))
                        # just outside the crossing window the solver must land next to it
                        off = dispersion.alpha_root(ModeIndex(kk, ell), kap * (1 + 1e-8)).alpha
                        near = max(near, abs(off - target))
    ok = worst < 1e-8 and near < 1e-6
    return ok, f"max |alpha(product) - zero| = {_fmt(worst)}, just off the product {_fmt(near)}"


def chk_small_kappa(full: bool):
    worst = 0.0
    for k in range(3):
        for ell in (1, 2, 3):
            a = dispersion.alpha_root(ModeIndex(k, ell), 1e-6).alpha
            worst = max(worst, abs(a - special.bessel_zero(k + 1, ell)))
    return worst < 1e-3, f"max |alpha(1e-6) - j_(k+1,l)| = {_fmt(worst)}"


def chk_large_kappa(full: bool):
    worst = min(
        dispersion.alpha_root(ModeIndex(k, ell), 1e4).alpha for k in range(3) for ell in (1, 2, 3)
    )
    return worst > 50.0, f"min alpha at kappa = 1e4: {_fmt(worst)}"


def chk_monotone(full: bool):
    grid = _kappa_grid(full)
    for k in range(3):
        for ell in (1, 2, 3):
            m = ModeIndex(k, ell)
            a = np.array([dispersion.alpha_root(m, x).alpha for x in grid])
            if not np.all(np.diff(a) > 0):
                return False, f"alpha_{k},{ell} not increasing"
            g = a * a / grid
            if not np.all(np.diff(g) < 0):
                return False, f"alpha_{k},{ell}^2/kappa not decreasing"
    return True, f"9 branches increasing and alpha^2/kappa decreasing on {len(grid)} points"


def chk_order_k_k2(full: bool):
    grid = _kappa_grid(full)
    tol_near = 1e-3
    for k in range(3):
        prods = [special.bessel_zero(k + 1, n) * special.bessel_zero(k + 1, n + 1) for n in range(1, 8)]
        for x in grid:
            a = dispersion.alpha_root(ModeIndex(k), x).alpha
            b = dispersion.alpha_root(ModeIndex(k + 2), x).alpha
            if a > b + 1e-12:
                return False, f"alpha_{k},1 > alpha_{k + 2},1 at kappa={x}"
            if abs(a - b) < 1e-9 and min(abs(x - p) for p in prods) > tol_near:
                return False, f"alpha_{k},1 = alpha_{k + 2},1 away from products at kappa={x}"
    return True, "alpha_k,1 <= alpha_k+2,1 with equality only at products"


def chk_first_eigenvalue(full: bool):
    rng = _rng(8)
    for _ in range(200 if full else 40):
        x = rng.uniform(0.0, 140.0)
        lam, att = dispersion.first_eigenvalue(x)
        amin = min(dispersion.alpha_root(ModeIndex(k), x).alpha for k in range(7))
        if lam < 2 * x - 1e-9:
            return False, f"lambda_1 < 2 kappa at {x}"
        if abs(lam - (amin**2 + (x / amin) ** 2)) > 1e-9 * lam:
            return False, f"lambda_1 is not the minimum over k <= 6 at {x}"
    return True, "lambda_1 >= 2 kappa and equals the minimum over k <= 6"


def chk_crossing_slopes(full: bool):
    worst = 0.0
    for k in range(3 if full else 2):
        for n in (1, 2):
            s0, s1 = dispersion.crossing_slopes(k, n)
            if not s0 > s1:
                return False, f"slope ordering fails for k={k}, n={n}"
            kap = special.bessel_zero(k, n) * special.bessel_zero(k, n + 1)
            h = 1e-5
            for kk, s in ((k, s0), (k + 1, s1)):
                fd = (
                    dispersion.alpha_root(ModeIndex(kk), kap + h).alpha
                    - dispersion.alpha_root(ModeIndex(kk), kap - h).alpha
                ) / (2 * h)
                worst = max(worst, abs(fd - s))
    return worst < 1e-4, f"max |finite difference - crossing slope| = {_fmt(worst)}"


def _sign_roots(mode: ModeIndex, kap: float, xs: np.ndarray) -> list[float]:
    f = lambda x: dispersion.f_det(mode, kap, x)
    vals = np.array([f(x) for x in xs])
    idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    return [brentq(f, xs[i], xs[i + 1], xtol=1e-14) for i in idx]


def chk_no_common_root(full: bool):
    rng = _rng(9)
    trials = 100 if full else 10
    for _ in range(trials):
        # shared roots only occur at products j_{k+1,n} j_{k+1,m}, a null set for random kappa
        k = rng.randrange(0, 3)
        kap = rng.uniform(1.0, 140.0)
        xs = np.linspace(math.sqrt(kap) + 1e-6, 60.0, 2000)
        r0 = _sign_roots(ModeIndex(k), kap, xs)
        r1 = _sign_roots(ModeIndex(k + 1), kap, xs)
        for r in r0:
            if r1 and min(abs(x - r) for x in r1) < 1e-9:
                return False, f"F_{k} and F_{k + 1} share a root near {r} at kappa={kap}"
    return True, f"no shared roots in {trials} random kappa"


# --- eigenmodes --------------------------------------------------------------

def chk_mode_quality(full: bool):
    rng = _rng(10)
    worst_b = worst_pde = 0.0
    count = 20 if full else 4
    for k in range(4):
        for ell in (1, 2, 3):
            for _ in range(count):
                x = rng.uniform(0.0, 140.0)
                em = eigenmodes.build_mode(ModeIndex(k, ell), x)
                worst_b = max(worst_b, *eigenmodes.boundary_residual(em))
                worst_pde = max(worst_pde, eigenmodes.pde_residual(em))
    ok = worst_b < 1e-9 and worst_pde < 1e-4
    return ok, f"boundary residual {_fmt(worst_b)}, fourth-order residual {_fmt(worst_pde)} (max|R| = 1)"


def chk_perturbed_root(full: bool):
    m = ModeIndex(0, 1)
    a = dispersion.alpha_root(m, 1.0).alpha
    em = eigenmodes.build_mode(m, 1.0, alpha=a + 1e-3)
    rd = eigenmodes.boundary_residual(em)[1]
    return rd > 1e-5, f"R'(1) with alpha off by 1e-3: {_fmt(rd)}"


def chk_kappa0_basis(full: bool):
    worst = 0.0
    rs = np.linspace(0.0, 1.0, 101)
    for k in range(3):
        e0 = eigenmodes.build_mode(ModeIndex(k), 0.0)
        e1 = eigenmodes.build_mode(ModeIndex(k), 1e-6)
        b = max(eigenmodes.boundary_residual(e0))
        dev = max(abs(eigenmodes.radial_eval(e0, r) - eigenmodes.radial_eval(e1, r)) for r in rs)
        worst = max(worst, dev, b)
    return worst < 1e-3, f"kappa = 0 basis vs kappa = 1e-6 mode: max deviation {_fmt(worst)}"


def chk_radial_first_mode(full: bool):
    for x in (1.0, 5.0, 13.0):
        prof = eigenmodes.radial_profile(eigenmodes.build_mode(ModeIndex(0), x), 201)
        if not (np.all(prof.values[:-1] > 0) and np.all(np.diff(prof.values) < 0)):
            return False, f"R_0,1 not positive and decreasing at kappa={x}"
    return True, "R_0,1 positive and decreasing for kappa in {1, 5, 13}"


def chk_rk1_positive(full: bool):
    for k in (1, 2, 3):
        p = special.bessel_zero(k, 1) * special.bessel_zero(k, 2)
        for x in (0.25 * p, 0.5 * p, 0.99 * p):
            prof = eigenmodes.radial_profile(eigenmodes.build_mode(ModeIndex(k), x), 201)
            if not np.all(prof.values[1:-1] > 0):
                return False, f"R_{k},1 not positive at kappa={x:.4f}"
    return True, "R_k,1 positive on (0,1) below j_k,1 j_k,2"


def chk_sqrt_branch_empty(full: bool):
    for k in range(4):
        for x in np.linspace(0.1, 140.0, 50):
            if eigenmodes.sqrt_branch_admits_mode(ModeIndex(k), x):
                return False, f"double-root family admits a mode at k={k}, kappa={x}"
    return True, "the alpha = sqrt(kappa) family never satisfies both boundary conditions"


# --- nodal -------------------------------------------------------------------

def _products(nus, upto: float) -> list[float]:
    out = []
    for nu in nus:
        n = 1
        while True:
            p = special.bessel_zero(nu, n) * special.bessel_zero(nu, n + 1)
            if p > upto:
                break
            out.append(p)
            n += 1
    return out


def chk_zero_prediction(full: bool):
    rng = _rng(11)
    prods = _products((0, 1), 200.0)
    done = 0
    while done < (200 if full else 30):
        k = rng.choice([0, 1])
        x = rng.uniform(0.1, 140.0)
        if min(abs(x - p) for p in prods) < 1e-3:
            continue
        rep = nodal.count_zeros(eigenmodes.radial_profile(eigenmodes.build_mode(ModeIndex(k), x)))
        if rep.count != nodal.predicted_interior_zeros(k, x):
            return False, f"k={k}, kappa={x}: counted {rep.count}, predicted {rep.predicted_count}"
        done += 1
    return True, f"zero counts match the product-interval prediction at {done} kappa"


def chk_sign_alternation(full: bool):
    for k, x in ((0, 60.0), (1, 50.0), (0, 120.0), (1, 130.0), (0, 5.0)):
        if not nodal.verify_sign_alternation(k, x):
            return False, f"sign alternation fails for k={k}, kappa={x}"
        n = nodal.predicted_interior_zeros(k, x) + 1
        if nodal.last_arch_sign(k, x) != (-1.0) ** (n + 1):
            return False, f"last-arch sign wrong for k={k}, kappa={x}"
    return True, "R_k,1 alternates at j_i/alpha and ends with sign (-1)^(n+1)"


def chk_regime_table(full: bool):
    expected = sorted(_products((0, 1), 140.0))
    got = [b.kappa for b in nodal.regime_boundaries(140.0)]
    ok = len(got) == 6 and np.allclose(got, expected, rtol=0, atol=1e-12)
    return ok, f"{len(got)} regime boundaries below 140"


def chk_regime_consistency(full: bool):
    rng = _rng(12)
    for _ in range(100 if full else 25):
        x = rng.uniform(0.0, 140.0)
        rep = nodal.classify_regime(x, check=False)
        _, att = dispersion.first_eigenvalue(x)
        if tuple(att) != rep.attaining:
            return False, f"kappa={x}: regime says {rep.attaining}, minimum says {att}"
        if rep.multiplicity is not None and rep.nodal_regions is not None:
            if nodal.nodal_regions_from_profile(x) != rep.nodal_regions:
                return False, f"kappa={x}: nodal regions disagree with the zero count"
    return True, "regime table agrees with the branch minimum and with zero counts"


def chk_crossing_multiplicity(full: bool):
    for n in (1, 2):
        for nu, mult in ((0, 3), (1, 5)):
            x = special.bessel_zero(nu, n) * special.bessel_zero(nu, n + 1)
            rep = nodal.classify_regime(x)
            if rep.multiplicity != mult:
                return False, f"multiplicity {rep.multiplicity} at j({nu},{n})*j({nu},{n + 1})"
    return True, "multiplicity 3 at j0 products and 5 at j1 products"


def chk_three_dim(full: bool):
    lo, hi = math.pi, 1.5 * math.pi
    # J_{3/2} vanishes where tan x = x
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if math.tan(mid) - mid > 0:
            hi = mid
        else:
            lo = mid
    j = 0.5 * (lo + hi)
    lam = dispersion.eigenvalue(ModeIndex(0, 1, 3), 0.0)
    first = nodal.regime_boundaries(30.0, 3)[0].kappa
    ok = abs(math.sqrt(lam) - j) < 1e-9 and abs(first - 2 * math.pi**2) < 1e-6
    return ok, f"N=3: sqrt(lambda_1(0)) - j = {_fmt(math.sqrt(lam) - j)}, first boundary - 2 pi^2 = {_fmt(first - 2 * math.pi**2)}"


CHECKS: list[Check] = [
    Check("Bessel zeros match printed coordinates", chk_zero_anchors),
    Check("three-term recurrence", chk_recurrence),
    Check("derivative identities and finite differences", chk_derivative_forms),
    Check("J0' = -J1", chk_j0_prime),
    Check("Bessel differential equation", chk_bessel_ode),
    Check("large-argument asymptotics", chk_large_argument),
    Check("small-argument behaviour", chk_small_argument),
    Check("interlacing of consecutive orders", chk_interlacing),
    Check("interlacing of orders k and k+2", chk_interlacing_k_k2),
    Check("zeros are simple", chk_simple_zeros),
    Check("H~' = 2 z J^2", chk_h_tilde_derivative),
    Check("z J'/J decreasing between zeros", chk_h_aux_decreasing),
    Check("double-root determinant negative", chk_d_negative),
    Check("determinant antisymmetry", chk_antisymmetry),
    Check("equivalent determinant forms", chk_form_equivalence),
    Check("F_(k+2) - F_k closed form", chk_k_plus_2),
    Check("branch values at crossing products", chk_crossing_values),
    Check("kappa -> 0 limit", chk_small_kappa),
    Check("kappa -> infinity growth", chk_large_kappa),
    Check("branch monotonicity and alpha^2/kappa decrease", chk_monotone),
    Check("ordering alpha_k,1 <= alpha_k+2,1", chk_order_k_k2),
    Check("first eigenvalue is the branch minimum", chk_first_eigenvalue),
    Check("slopes at crossings", chk_crossing_slopes),
    Check("no common root of F_k and F_k+1", chk_no_common_root),
    Check("clamped boundary and fourth-order residual", chk_mode_quality),
    Check("perturbed root is detected", chk_perturbed_root),
    Check("kappa = 0 eigenfunction basis", chk_kappa0_basis),
    Check("first radial mode positive and decreasing", chk_radial_first_mode),
    Check("R_k,1 positive below first product", chk_rk1_positive),
    Check("double-root family carries no mode", chk_sqrt_branch_empty),
    Check("interior zero counts", chk_zero_prediction),
    Check("sign alternation and last arch", chk_sign_alternation),
    Check("regime boundaries below 140", chk_regime_table),
    Check("regime table consistency", chk_regime_consistency),
    Check("multiplicity at crossings", chk_crossing_multiplicity),
    Check("three-dimensional extension", chk_three_dim),
]


def run_suite(level: str = "fast", log=None) -> list[CheckResult]:
    """Run every check (``full`` enlarges the sample sizes)."""
    if level not in ("fast", "full"):
        raise ValueError(f"level must be 'fast' or 'full', got {level!r}")
    full = level == "full"
    out: list[CheckResult] = []
    for chk in CHECKS:
        if chk.full_only and not full:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = chk.func(full)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        res = CheckResult(chk.name, bool(ok), detail, time.perf_counter() - t0)
        out.append(res)
        if log is not None:
            log(format_result(res))
    return out


def format_result(res: CheckResult) -> str:
    return f"[{'PASS' if res.passed else 'FAIL'}] {res.name}: {res.detail} ({res.seconds:.2f}s)"
