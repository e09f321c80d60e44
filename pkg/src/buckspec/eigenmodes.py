"""Radial eigenfunctions of the clamped buckling problem.

In dimension N with p = (N - 2)/2 the radial part is

    R(r) = c r^-p J_nu(alpha r) + d r^-p J_nu(beta r),   beta = kappa/alpha,

and at kappa = 0 the second component is replaced by the polynomial r^k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import dispersion, special
from .dispersion import AlphaRoot, ModeIndex

NORMALIZATION = "max_abs_one"


class DegenerateSystemError(ArithmeticError):
    """Both boundary rows vanish; cannot happen for a genuine root."""


@dataclass(frozen=True)
class EigenMode:
    mode: ModeIndex
    kappa: float
    alpha: float
    lam: float
    c: float
    d: float
    normalization: str = NORMALIZATION

    @property
    def beta(self) -> float:
        return self.kappa / self.alpha

    @property
    def p(self) -> float:
        return 0.5 * (self.mode.dim - 2)


def _component(nu: float, p: float, gamma: float, r: float) -> float:
    """r^-p J_nu(gamma r)."""
    if gamma == 0.0:
        return 0.0
    return gamma**p * special.bessel_j_scaled(nu, p, gamma * r)


def _component_prime(nu: float, p: float, k: int, gamma: float, r: float) -> float:
    """d/dr of r^-p J_nu(gamma r), using d/dx[x^-p J_nu] = x^-p(-J_{nu+1} + (k/x) J_nu)."""
    if gamma == 0.0:
        return 0.0
    x = gamma * r
    val = -special.bessel_j_scaled(nu + 1.0, p, x)
    if k:
        val += k * special.bessel_j_scaled(nu, p + 1.0, x)
    return gamma ** (p + 1.0) * val


def _boundary_rows(m: ModeIndex, kappa: float, alpha: float):
    nu = m.nu
    beta = kappa / alpha
    ja, ja1 = special.bessel_pair(nu, alpha)
    jb, jb1 = special.bessel_pair(nu, beta)
    # alpha J'(alpha), beta J'(beta); the -p J terms cancel against row 1
    da = -alpha * ja1 + nu * ja
    db = -beta * jb1 + nu * jb
    return (ja, jb), (da, db)


def _raw_coefficients(m: ModeIndex, kappa: float, alpha: float) -> tuple[float, float]:
    (ja, jb), (da, db) = _boundary_rows(m, kappa, alpha)
    n1 = math.hypot(ja, jb)
    n2 = math.hypot(da, db)
    if n1 == 0.0 and n2 == 0.0:
        raise DegenerateSystemError(f"both boundary rows vanish for {m} at kappa={kappa}, alpha={alpha}")
    # row 1 makes R(1) = 0 exactly, which leaves a bad root visible in R'(1)
    if n1 >= 1e-2 * n2:
        return jb, -ja
    return db, -da


def _radial(m: ModeIndex, kappa: float, alpha: float, c: float, d: float, r: float) -> float:
    p = 0.5 * (m.dim - 2)
    if kappa == 0.0:
        return c * r**m.k + d * _component(m.nu, p, alpha, r)
    return c * _component(m.nu, p, alpha, r) + d * _component(m.nu, p, kappa / alpha, r)


def _radial_prime(m: ModeIndex, kappa: float, alpha: float, c: float, d: float, r: float) -> float:
    p = 0.5 * (m.dim - 2)
    k = m.k
    da = _component_prime(m.nu, p, k, alpha, r)
    if kappa == 0.0:
        poly = 0.0 if k == 0 else (k * r ** (k - 1) if r > 0.0 or k == 1 else 0.0)
        return c * poly + d * da
    return c * da + d * _component_prime(m.nu, p, k, kappa / alpha, r)


def _fine_grid(alpha: float, beta: float = 0.0, minimum: int = 64) -> np.ndarray:
    n = max(minimum, math.ceil(64.0 * max(alpha, beta) / math.pi)) + 1
    return np.linspace(0.0, 1.0, n)


def _max_abs(f, grid: np.ndarray) -> float:
    vals = np.fromiter((abs(f(r)) for r in grid), float, len(grid))
    i = int(np.argmax(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    best = vals[i]
    if hi > lo:
        res = minimize_scalar(lambda r: -abs(f(r)), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12})
        best = max(best, -res.fun)
    return float(best)


def _leading_sign(m: ModeIndex, kappa: float, alpha: float, c: float, d: float) -> float:
    """Sign of R on a right neighbourhood of r = 0."""
    nu = m.nu
    if kappa == 0.0:
        # c r^k + d (alpha/2)^nu r^k / Gamma(nu+1) + ...
        lead = c + d * math.exp(nu * math.log(0.5 * alpha) - math.lgamma(nu + 1.0))
        scale = abs(c) + abs(d) * math.exp(nu * math.log(0.5 * alpha) - math.lgamma(nu + 1.0))
    else:
        beta = kappa / alpha
        lead = c * alpha**nu + d * beta**nu
        scale = abs(c) * alpha**nu + abs(d) * beta**nu
    if abs(lead) > 1e-10 * scale:
        return math.copysign(1.0, lead)
    # higher-order cancellation at the origin: use the first sizeable sample
    for r in np.linspace(1e-3, 1.0, 2001)[:-1]:
        v = _radial(m, kappa, alpha, c, d, float(r))
        if abs(v) > 1e-8 * scale:
            return math.copysign(1.0, v)
    return 1.0


def mode_coefficients(mode, kappa: float, alpha_root: AlphaRoot | float) -> tuple[float, float]:
    """(c, d) solving the boundary system, R positive near 0, max |R| = 1 on [0,1]."""
    m = dispersion._as_mode(mode)
    alpha = alpha_root.alpha if isinstance(alpha_root, AlphaRoot) else float(alpha_root)
    kappa = float(kappa)
    if m.ell < 1:
        raise ValueError(f"mode_coefficients needs ell >= 1, got {m.ell}")
    if kappa == 0.0:
        c, d = -special.bessel_j(m.nu, alpha), 1.0
    else:
        if not kappa > 0.0:
            raise special.BesselDomainError(f"kappa must be >= 0, got {kappa}")
        c, d = _raw_coefficients(m, kappa, alpha)
    s = _leading_sign(m, kappa, alpha, c, d)
    c, d = s * c, s * d
    beta = kappa / alpha if kappa > 0.0 else 0.0
    peak = _max_abs(lambda r: _radial(m, kappa, alpha, c, d, r), _fine_grid(alpha, beta, 256))
    return c / peak, d / peak


def build_mode(mode, kappa: float, alpha: float | None = None) -> EigenMode:
    """Eigenmode of branch `mode` (ell >= 1) at kappa.

    `alpha` overrides the solved root; used to probe how the boundary
    residual reacts to an inexact root.
    """
    m = dispersion._as_mode(mode)
    if m.ell < 1:
        raise ValueError(f"eigenfunctions are indexed by ell >= 1, got {m.ell}")
    kappa = float(kappa)
    if alpha is None:
        alpha = dispersion.alpha_root(m, kappa).alpha
    alpha = float(alpha)
    c, d = mode_coefficients(m, kappa, alpha)
    lam = alpha * alpha if kappa == 0.0 else alpha**2 + (kappa / alpha) ** 2
    return EigenMode(m, kappa, alpha, lam, c, d)


def radial_eval(em: EigenMode, r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    return _radial(em.mode, em.kappa, em.alpha, em.c, em.d, r)


def radial_derivative(em: EigenMode, r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    return _radial_prime(em.mode, em.kappa, em.alpha, em.c, em.d, r)


def radial_second_derivative(em: EigenMode, r: float) -> float:
    """R''(r) for r > 0 from the radial Bessel equation of each component."""
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r}")
    m = em.mode
    p = em.p
    a = m.dim - 1.0
    L = m.k * (m.k + m.dim - 2.0)

    def second(gamma: float) -> float:
        # g'' = -(N-1)/r g' + (L/r^2 - gamma^2) g for g = r^-p J_nu(gamma r)
        g = _component(m.nu, p, gamma, r)
        dg = _component_prime(m.nu, p, m.k, gamma, r)
        return -a / r * dg + (L / r**2 - gamma**2) * g

    if em.kappa == 0.0:
        poly = m.k * (m.k - 1) * r ** (m.k - 2) if m.k >= 2 else 0.0
        return em.c * poly + em.d * second(em.alpha)
    return em.c * second(em.alpha) + em.d * second(em.beta)


def eval_eigenfunction(
    em: EigenMode,
    r: float,
    theta: float = 0.0,
    angular: tuple[float, ...] = (1.0, 0.0),
    direction: tuple[float, ...] | None = None,
) -> float:
    """Full eigenfunction value.

    N = 2: R(r) (c1 cos k theta + c2 sin k theta), with theta ignored for k = 0.
    N >= 3: k = 0 gives R(r); k = 1 gives R(r) (a . x) where `angular` is the
    coefficient vector a and `direction` the unit vector x.
    """
    rad = radial_eval(em, r)
    k = em.mode.k
    if k == 0:
        return rad
    if em.mode.dim == 2:
        c1, c2 = angular
        return rad * (c1 * math.cos(k * theta) + c2 * math.sin(k * theta))
    if k == 1:
        if direction is None or len(direction) != em.mode.dim or len(angular) != em.mode.dim:
            raise ValueError("degree-1 modes for N >= 3 need N-component `angular` and `direction`")
        return rad * float(np.dot(angular, direction))
    raise NotImplementedError(f"spherical harmonics of degree {k} in dimension {em.mode.dim} are not supported")


def boundary_residual(em: EigenMode) -> tuple[float, float]:
    """(|R(1)|, |R'(1)|)."""
    return abs(radial_eval(em, 1.0)), abs(radial_derivative(em, 1.0))


@dataclass(frozen=True)
class RadialProfile:
    mode: EigenMode
    grid: np.ndarray
    values: np.ndarray
    derivative_values: np.ndarray

    def __post_init__(self) -> None:
        for a in (self.grid, self.values, self.derivative_values):
            a.setflags(write=False)


def radial_profile(em: EigenMode, samples: int = 101) -> RadialProfile:
    """R and R' on `samples` uniform radii merged with a grid of >= 64 points per half period."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    beta = em.beta if em.kappa > 0.0 else 0.0
    grid = np.union1d(np.linspace(0.0, 1.0, samples), _fine_grid(em.alpha, beta))
    # drop near-duplicates from the merge, keeping the endpoints exact
    keep = np.concatenate(([True], np.diff(grid) > 1e-13))
    grid = grid[keep]
    grid[0], grid[-1] = 0.0, 1.0
    vals = np.fromiter((radial_eval(em, r) for r in grid), float, len(grid))
    ders = np.fromiter((radial_derivative(em, r) for r in grid), float, len(grid))
    return RadialProfile(em, grid, vals, ders)


# ---------------------------------------------------------------------------
# finite-difference check of the fourth-order equation
# ---------------------------------------------------------------------------

def fd_weights(z: float, x: np.ndarray, m: int) -> np.ndarray:
    """Fornberg weights: column q holds the weights of the q-th derivative at z."""
    n = len(x)
    c = np.zeros((n, m + 1))
    c1 = 1.0
    c4 = x[0] - z
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - z
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for q in range(mn, 0, -1):
                    c[i, q] = c1 * (q * c[i - 1, q - 1] - c5 * c[i - 1, q]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for q in range(mn, 0, -1):
                c[j, q] = (c4 * c[j, q] - q * c[j, q - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c


def pde_residual(em: EigenMode, radii=None, half_width: int = 8) -> float:
    """max |Delta^2 R + (alpha^2 + beta^2) Delta R + alpha^2 beta^2 R| over `radii`.

    The radial Laplacian carries the angular term k(k+N-2)/r^2; derivatives
    come from a (2*half_width+1)-point finite-difference stencil.
    """
    if radii is None:
        radii = np.linspace(0.1, 0.9, 20)
    m = em.mode
    a = m.dim - 1.0
    L = m.k * (m.k + m.dim - 2.0)
    beta = em.beta if em.kappa > 0.0 else 0.0
    s = em.alpha**2 + beta**2
    q = (em.alpha * beta) ** 2
    h = min(0.02, 0.2 / max(em.alpha, 1.0))
    offsets = h * np.arange(-half_width, half_width + 1)
    worst = 0.0
    for r in radii:
        xs = r + offsets
        shift = 0.01 - xs[0]
        if shift > 0.0:
            xs = xs + shift
        # R is analytic past r = 1, so evaluate the formula there directly
        f = np.array([_radial(m, em.kappa, em.alpha, em.c, em.d, float(x)) for x in xs])
        w = fd_weights(r, xs, 4)
        f0, f1, f2, f3, f4 = (w[:, i] @ f for i in range(5))
        lap = f2 + a * f1 / r - L * f0 / r**2
        g1 = f3 + a * f2 / r - a * f1 / r**2 - L * f1 / r**2 + 2 * L * f0 / r**3
        g2 = (
            f4 + a * f3 / r - (2 * a + L) * f2 / r**2
            + (2 * a + 4 * L) * f1 / r**3 - 6 * L * f0 / r**4
        )
        bilap = g2 + a * g1 / r - L * lap / r**2
        worst = max(worst, abs(bilap + s * lap + q * f0))
    return worst


# ---------------------------------------------------------------------------
# the alpha = sqrt(kappa) family
# ---------------------------------------------------------------------------

def sqrt_branch_radial(mode, kappa: float, c: float, d: float, r: float) -> float:
    """c J_nu(sqrt(kappa) r) + d r J'_nu(sqrt(kappa) r), the double-root solution (N = 2)."""
    m = dispersion._as_mode(mode)
    s = math.sqrt(kappa)
    x = s * r
    j = special.bessel_j(m.nu, x)
    dj = special.bessel_j_prime(m.nu, x) if x > 0.0 else (0.5 if m.nu == 1.0 else 0.0)
    return c * j + d * r * dj


def sqrt_branch_matrix(mode, kappa: float) -> np.ndarray:
    """Boundary matrix of the double-root family; its determinant is d_det(sqrt(kappa))."""
    m = dispersion._as_mode(mode)
    s = math.sqrt(kappa)
    j = special.bessel_j(m.nu, s)
    dj = special.bessel_j_prime(m.nu, s)
    d2j = special.bessel_j_prime2(m.nu, s)
    return np.array([[j, dj], [s * dj, dj + s * d2j]])


def sqrt_branch_admits_mode(mode, kappa: float) -> bool:
    """True iff the double-root family has a nonzero clamped solution; never happens for kappa > 0."""
    return dispersion.d_det(mode, math.sqrt(kappa)) == 0.0
