"""Characteristic equation of the clamped ball and its root curves.

For angular degree k in dimension N the radial part is built from J_nu with
nu = k + (N - 2)/2.  A pair (alpha, beta = kappa/alpha) gives an eigenvalue
lambda = alpha**2 + beta**2 exactly when

    F_k(alpha) = beta J(alpha) J'(beta) - alpha J(beta) J'(alpha) = 0.

F_k(kappa/alpha) = -F_k(alpha), so the roots come in pairs around sqrt(kappa).
Positive branches alpha_{k,l} (l >= 1) sit above sqrt(kappa), their mirrors
alpha_{k,-l} = kappa/alpha_{k,l} below it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.optimize import brentq

from . import special
from .special import bessel_pair, zero_table

CROSS_RTOL = 1e-9
ATTAIN_RTOL = 1e-11


class DegenerateKappaError(ValueError):
    """kappa sits on a crossing product; the bracket has collapsed."""


class NonConvergenceError(ArithmeticError):
    """The root solver failed inside a bracket that theory says is valid."""


class PoleError(ZeroDivisionError):
    """h_aux evaluated at a zero of J_nu."""


def crossing_window(kappa: float) -> float:
    return CROSS_RTOL * (1.0 + abs(kappa))


@dataclass(frozen=True, order=True)
class ModeIndex:
    k: int
    ell: int = 1
    dim: int = 2

    def __post_init__(self) -> None:
        for name in ("k", "ell", "dim"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise ValueError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.k < 0:
            raise ValueError(f"angular degree k must be >= 0, got {self.k}")
        if self.dim < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dim}")

    @property
    def nu(self) -> float:
        return self.k + 0.5 * (self.dim - 2)

    def with_ell(self, ell: int) -> "ModeIndex":
        return ModeIndex(self.k, ell, self.dim)

    def __str__(self) -> str:
        return f"({self.k},{self.ell})" if self.dim == 2 else f"({self.k},{self.ell};N={self.dim})"


@dataclass(frozen=True)
class AlphaRoot:
    mode: ModeIndex
    kappa: float
    alpha: float
    bracket: tuple[float, float]
    residual: float
    degenerate: bool = False
    # for degenerate roots: the product formula that was hit, e.g. "j(0,1)*j(0,2)"
    crossing: str | None = None

    @property
    def beta(self) -> float:
        return self.kappa / self.alpha if self.alpha > 0.0 else math.inf

    @property
    def eigenvalue(self) -> float:
        if self.kappa == 0.0:
            return self.alpha * self.alpha
        return self.alpha**2 + (self.kappa / self.alpha) ** 2


@dataclass(frozen=True)
class CrossingPoint:
    kappa: float
    nu: float
    n: int
    ell: int
    label: str

    @property
    def alpha(self) -> float:
        """Common value of the two branches there."""
        return special.bessel_zero(self.nu, self.ell + self.n)


@dataclass(frozen=True)
class CrossingSet:
    k: int
    ell: int
    dim: int
    points: tuple[CrossingPoint, ...] = field(default_factory=tuple)

    @property
    def kappas(self) -> tuple[float, ...]:
        return tuple(p.kappa for p in self.points)


def _as_mode(mode) -> ModeIndex:
    if isinstance(mode, ModeIndex):
        return mode
    return ModeIndex(*mode)


def _fmt_nu(nu: float) -> str:
    return format(nu, "g")


def product_label(nu: float, a: int, b: int) -> str:
    return f"j({_fmt_nu(nu)},{a})*j({_fmt_nu(nu)},{b})"


def _check_pos(kappa: float, alpha: float) -> None:
    if not (kappa > 0.0 and alpha > 0.0 and math.isfinite(kappa) and math.isfinite(alpha)):
        raise special.BesselDomainError(f"need kappa > 0 and alpha > 0, got {kappa}, {alpha}")


# ---------------------------------------------------------------------------
# the determinant and its auxiliary functions
# ---------------------------------------------------------------------------

def f_det(mode, kappa: float, alpha: float) -> float:
    """F_k(alpha) in its defining derivative form."""
    m = _as_mode(mode)
    _check_pos(kappa, alpha)
    nu = m.nu
    beta = kappa / alpha
    ja, ja1 = bessel_pair(nu, alpha)
    jb, jb1 = bessel_pair(nu, beta)
    dja = -ja1 + nu / alpha * ja
    djb = -jb1 + nu / beta * jb
    return beta * ja * djb - alpha * jb * dja


def f_det_alt(mode, kappa: float, alpha: float) -> float:
    """F_k(alpha) written with J_{nu+1} instead of derivatives."""
    m = _as_mode(mode)
    _check_pos(kappa, alpha)
    nu = m.nu
    beta = kappa / alpha
    ja, ja1 = bessel_pair(nu, alpha)
    jb, jb1 = bessel_pair(nu, beta)
    return alpha * jb * ja1 - beta * ja * jb1


def f_det_next(mode, kappa: float, alpha: float) -> float:
    """F_{k+1}(alpha) computed from order-nu_k functions only."""
    m = _as_mode(mode)
    _check_pos(kappa, alpha)
    nu = m.nu
    beta = kappa / alpha
    ja, ja1 = bessel_pair(nu, alpha)
    jb, jb1 = bessel_pair(nu, beta)
    return beta * jb * ja1 - alpha * ja * jb1


def f_det_step2(mode, kappa: float, alpha: float) -> float:
    """Closed form of F_{k+2}(alpha) - F_k(alpha)."""
    m = _as_mode(mode)
    _check_pos(kappa, alpha)
    nu = m.nu
    beta = kappa / alpha
    ja1 = bessel_pair(nu, alpha)[1]
    jb1 = bessel_pair(nu, beta)[1]
    return 2.0 * (nu + 1.0) * (kappa**2 - alpha**4) / (alpha**2 * kappa) * ja1 * jb1


def h_tilde(mode, z: float) -> float:
    """(z^2 - nu^2) J_nu(z)^2 + z^2 J'_nu(z)^2; positive and increasing on z > 0."""
    m = _as_mode(mode)
    z = float(z)
    if z < 0.0:
        raise special.BesselDomainError(f"z must be >= 0, got {z}")
    if z == 0.0:
        return 0.0
    nu = m.nu
    j, j1 = bessel_pair(nu, z)
    zdj = -z * j1 + nu * j
    return (z * z - nu * nu) * j * j + zdj * zdj


def h_aux(mode, z: float) -> float:
    """z J'_nu(z) / J_nu(z) = nu - z J_{nu+1}(z) / J_nu(z); decreasing between zeros of J_nu."""
    m = _as_mode(mode)
    z = float(z)
    if not z > 0.0:
        raise special.BesselDomainError(f"z must be > 0, got {z}")
    nu = m.nu
    j, j1 = bessel_pair(nu, z)
    dj = -j1 + nu / z * j
    if j == 0.0 or abs(j) <= 1e-12 * abs(dj):
        raise PoleError(f"h_aux at a zero of J_{nu}: z = {z}")
    return nu - z * j1 / j


def d_det(mode, alpha: float) -> float:
    """Determinant of the alpha = sqrt(kappa) branch; equals -h_tilde(alpha)/alpha < 0."""
    m = _as_mode(mode)
    alpha = float(alpha)
    if not alpha > 0.0:
        raise special.BesselDomainError(f"alpha must be > 0, got {alpha}")
    nu = m.nu
    j, j1 = bessel_pair(nu, alpha)
    dj = -j1 + nu / alpha * j
    d2j = special.bessel_j_prime2(nu, alpha)
    # boundary rows of c J(alpha r) + d r J'(alpha r) at r = 1
    return j * (dj + alpha * d2j) - alpha * dj * dj


def f_tilde(mode, kappa: float, alpha: float) -> float:
    """F_k / (J(alpha) J(beta)) = h_aux(beta) - h_aux(alpha); increasing in alpha between poles."""
    m = _as_mode(mode)
    _check_pos(kappa, alpha)
    nu = m.nu
    beta = kappa / alpha
    ja, ja1 = bessel_pair(nu, alpha)
    jb, jb1 = bessel_pair(nu, beta)
    return alpha * ja1 / ja - beta * jb1 / jb


# ---------------------------------------------------------------------------
# crossing products and brackets
# ---------------------------------------------------------------------------

def _table_covering(nu: float, ell: int, kappa: float):
    """Zero table long enough that the last product j_m j_{m+ell} exceeds kappa."""
    count = max(8, ell + 4)
    while True:
        tab = zero_table(nu, count)
        m = count - ell
        if m >= 1 and tab[m] * tab[m + ell] > kappa:
            return tab
        if count >= special.ELL_MAX:
            raise special.BesselRangeError(f"kappa = {kappa} needs more than {special.ELL_MAX} zeros of J_{nu}")
        count = min(2 * count, special.ELL_MAX)


def _locate(nu: float, ell: int, kappa: float) -> tuple[int, object]:
    """n >= 0 with j_n j_{ell+n} <= kappa < j_{n+1} j_{ell+n+1} (j_0 = 0)."""
    tab = _table_covering(nu, ell, kappa)
    lo, hi = 0, tab.count - ell  # product at hi exceeds kappa
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tab[mid] * tab[mid + ell] <= kappa:
            lo = mid
        else:
            hi = mid
    return lo, tab


def _near_product(nu: float, ell: int, kappa: float) -> CrossingPoint | None:
    if nu < 0.0:
        return None
    n, tab = _locate(nu, ell, kappa)
    tol = crossing_window(kappa)
    for m in (n, n + 1):
        if m >= 1:
            p = tab[m] * tab[m + ell]
            if abs(kappa - p) <= tol:
                return CrossingPoint(p, nu, m, ell, product_label(nu, m, m + ell))
    return None


def bracket_alpha(mode, kappa: float) -> tuple[float, float]:
    """Open interval (j_{nu,l+n}, j_{nu,l+n+1}) that contains alpha_{k,l}(kappa)."""
    m = _as_mode(mode)
    if m.ell < 1:
        raise ValueError(f"bracket_alpha needs ell >= 1, got {m.ell}")
    if not kappa > 0.0:
        raise special.BesselDomainError(f"kappa must be > 0, got {kappa}")
    hit = _near_product(m.nu, m.ell, kappa)
    if hit is not None:
        raise DegenerateKappaError(f"kappa = {kappa} is the crossing product {hit.label} = {hit.kappa}")
    n, tab = _locate(m.nu, m.ell, kappa)
    return tab[m.ell + n], tab[m.ell + n + 1]


def _solve_bracket(m: ModeIndex, kappa: float) -> tuple[float, tuple[float, float]]:
    nu = m.nu
    n, tab = _locate(nu, m.ell, kappa)
    j_lo, j_hi = tab[m.ell + n], tab[m.ell + n + 1]
    # beta = kappa/alpha must also sit in (j_n, j_{n+1})
    lo = max(j_lo, kappa / tab[n + 1])
    hi = j_hi if n == 0 else min(j_hi, kappa / tab[n])
    eps_lo = 1e-12 * (1.0 + lo)
    eps_hi = 1e-12 * (1.0 + hi)
    a, b = lo + eps_lo, hi - eps_hi
    if a < b:
        fa = f_tilde(m, kappa, a)
        fb = f_tilde(m, kappa, b)
        if fa < 0.0 < fb:
            root = brentq(lambda x: f_tilde(m, kappa, x), a, b, xtol=1e-14, rtol=1e-15, maxiter=200)
            return root, (j_lo, j_hi)
    return _scan_fallback(m, kappa, j_lo, j_hi), (j_lo, j_hi)


def _scan_fallback(m: ModeIndex, kappa: float, lo: float, hi: float, points: int = 4000) -> float:
    """Direct sign scan of f_det; accepts only a single sign change."""
    h = (hi - lo) / points
    xs = [lo + h * (i + 0.5) for i in range(points)]
    vals = [f_det(m, kappa, x) for x in xs]
    changes = [i for i in range(points - 1) if (vals[i] > 0.0) != (vals[i + 1] > 0.0)]
    if len(changes) != 1:
        raise NonConvergenceError(
            f"{len(changes)} sign changes of F for mode {m} at kappa = {kappa} in ({lo}, {hi})"
        )
    i = changes[0]
    return brentq(lambda x: f_det(m, kappa, x), xs[i], xs[i + 1], xtol=1e-14, rtol=1e-15)


def _degenerate_hit(m: ModeIndex, kappa: float) -> CrossingPoint | None:
    """Crossing with branch k+1 (orders nu, nu+1) or with branch k-1 (order nu-1)."""
    for nu in (m.nu, m.nu + 1.0, m.nu - 1.0 if m.k >= 1 else -1.0):
        hit = _near_product(nu, m.ell, kappa)
        if hit is not None:
            return hit
    return None


def alpha_root(mode, kappa: float) -> AlphaRoot:
    """The branch alpha_{k,l}(kappa) for any integer l and kappa >= 0."""
    m = _as_mode(mode)
    kappa = float(kappa)
    if not (kappa >= 0.0 and math.isfinite(kappa)):
        raise special.BesselDomainError(f"kappa must be finite and >= 0, got {kappa}")
    if m.ell == 0:
        s = math.sqrt(kappa)
        return AlphaRoot(m, kappa, s, (s, s), 0.0)
    if m.ell < 0:
        pos = alpha_root(m.with_ell(-m.ell), kappa)
        if kappa == 0.0:
            return AlphaRoot(m, kappa, 0.0, (0.0, 0.0), 0.0, pos.degenerate, pos.crossing)
        lo, hi = pos.bracket
        return AlphaRoot(
            m, kappa, kappa / pos.alpha, (kappa / hi, kappa / lo), pos.residual, pos.degenerate, pos.crossing
        )
    if kappa == 0.0:
        a = special.bessel_zero(m.nu + 1.0, m.ell)
        return AlphaRoot(m, 0.0, a, (special.bessel_zero(m.nu, m.ell), special.bessel_zero(m.nu, m.ell + 1)), 0.0)

    hit = _degenerate_hit(m, kappa)
    if hit is not None:
        a = hit.alpha
        return AlphaRoot(m, kappa, a, (a, a), abs(f_det(m, kappa, a)), True, hit.label)
    a, br = _solve_bracket(m, kappa)
    return AlphaRoot(m, kappa, a, br, abs(f_det(m, kappa, a)))


def eigenvalue(mode, kappa: float) -> float:
    """lambda_{k,l} = alpha^2 + kappa^2/alpha^2 (a function of |l|)."""
    m = _as_mode(mode)
    if m.ell == 0:
        raise ValueError("the alpha = sqrt(kappa) branch carries no eigenvalue")
    return alpha_root(m.with_ell(abs(m.ell)), kappa).eigenvalue


def crossing_kappas(k: int, ell: int, n_max: int, dim: int = 2) -> CrossingSet:
    """Values of kappa where alpha_{k,l} and alpha_{k+1,l} coincide, for n = 1..n_max."""
    m = ModeIndex(k, ell, dim)
    if ell < 1 or n_max < 1:
        raise ValueError("ell and n_max must be >= 1")
    pts = []
    for nu in (m.nu, m.nu + 1.0):
        tab = zero_table(nu, n_max + ell)
        for n in range(1, n_max + 1):
            pts.append(CrossingPoint(tab[n] * tab[n + ell], nu, n, ell, product_label(nu, n, n + ell)))
    pts.sort(key=lambda p: p.kappa)
    return CrossingSet(k, ell, dim, tuple(pts))


def crossing_slopes(k: int, n: int, dim: int = 2) -> tuple[float, float]:
    """d alpha/d kappa of branches (k,1) and (k+1,1) at kappa = j_{nu,n} j_{nu,n+1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nu = ModeIndex(k, 1, dim).nu
    a = special.bessel_zero(nu, n)
    b = special.bessel_zero(nu, n + 1)
    return 1.0 / (2.0 * a), a / (a * a + b * b)


def first_eigenvalue(kappa: float, dim: int = 2) -> tuple[float, list[ModeIndex]]:
    """lambda_1(kappa) and every branch (k,1) attaining it."""
    kappa = float(kappa)
    roots = [alpha_root(ModeIndex(k, 1, dim), kappa) for k in range(4)]
    best = min(r.alpha for r in roots[:2])
    tol = ATTAIN_RTOL * (1.0 + best)
    attaining = [r.mode for r in roots if abs(r.alpha - best) <= tol]
    lam = best * best if kappa == 0.0 else best**2 + (kappa / best) ** 2
    return lam, attaining
