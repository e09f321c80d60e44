"""Zero counting for radial profiles and classification of the first eigenvalue.

The first eigenvalue switches between the radial branch (0,1) and the
degree-one branch (1,1) at the products

    P0_m = j_{nu0,m} j_{nu0,m+1},   P1_m = j_{nu1,m} j_{nu1,m+1},

with nu0 = (N-2)/2 and nu1 = N/2.  These alternate, P0_1 < P1_1 < P0_2 < ...,
and split kappa >= 0 into

    [0, P0_1)            radial, one nodal region
    (P0_m, P1_m)         degree one, 2m nodal regions
    (P1_m, P0_{m+1})     radial, m+1 nodal regions
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import dispersion, eigenmodes, special
from .dispersion import DegenerateKappaError, ModeIndex
from .eigenmodes import EigenMode, RadialProfile

REFINE_TOL = 1e-12
SIMPLE_TOL = 1e-8


class UnsupportedBranchError(ValueError):
    """No zero-count prediction exists for branches with ell > 1."""


class BoundaryKappaError(DegenerateKappaError):
    """kappa lies on an endpoint of a product interval."""


class RegimeMismatchError(AssertionError):
    """Interval logic and the direct minimum over branches disagree."""


class Regime(str, enum.Enum):
    RADIAL_SIMPLE = "RadialSimple"
    DEGREE1 = "Degree1"
    CROSSING_RADIAL_DEGREE1 = "CrossingRadialDegree1"
    CROSSING_TRIPLE = "CrossingTriple"
    UNCLASSIFIED = "Unclassified"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NodalReport:
    mode: EigenMode
    zero_locations: tuple[float, ...]
    count: int
    predicted_count: int | None
    match: bool | None
    # zeros whose |R'| fell below SIMPLE_TOL; kept in zero_locations as well
    nonsimple: tuple[float, ...] = ()


@dataclass(frozen=True)
class RegimeReport:
    kappa: float
    regime: Regime
    attaining: tuple[ModeIndex, ...]
    multiplicity: int | None
    nodal_regions: int | None
    interval: tuple[float, float]
    interval_labels: tuple[str, str]
    n: int | None
    eigenspace: str


def _bisect(em: EigenMode, a: float, b: float, fa: float) -> float:
    while b - a > REFINE_TOL:
        mid = 0.5 * (a + b)
        fm = eigenmodes.radial_eval(em, mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def count_zeros(profile: RadialProfile) -> NodalReport:
    """Sign changes of R on the interior of the profile grid, refined by bisection."""
    em = profile.mode
    r = profile.grid
    v = profile.values
    zeros: list[float] = []
    for i in range(1, len(r) - 2):
        if v[i] == 0.0:
            zeros.append(float(r[i]))
        elif v[i] * v[i + 1] < 0.0:
            zeros.append(_bisect(em, float(r[i]), float(r[i + 1]), float(v[i])))
    if len(r) > 2 and v[-2] == 0.0:
        zeros.append(float(r[-2]))
    elif len(r) > 2:
        z = _edge_zero(em, float(r[-2]), float(v[-2]))
        if z is not None:
            zeros.append(z)
    nonsimple = tuple(z for z in zeros if abs(eigenmodes.radial_derivative(em, z)) <= SIMPLE_TOL)
    m = em.mode
    predicted: int | None = None
    if m.ell == 1 and em.kappa > 0.0:
        try:
            predicted = predicted_interior_zeros(m.k, em.kappa, m.dim)
        except BoundaryKappaError:
            predicted = None
    elif m.ell == 1:
        predicted = 0
    match = None if predicted is None else (len(zeros) == predicted)
    return NodalReport(em, tuple(zeros), len(zeros), predicted, match, nonsimple)


def _edge_zero(em: EigenMode, r_last: float, v_last: float) -> float | None:
    """Zero in (r_last, 1), where samples of R ~ R''(1)(1-r)^2/2 drown in roundoff.

    R(1) = R'(1) = 0, so the last cell holds a zero exactly when R(r_last)
    and R''(1) differ in sign.
    """
    curv = eigenmodes.radial_second_derivative(em, 1.0)
    if curv == 0.0 or (curv > 0.0) == (v_last > 0.0):
        return None
    h = 1.0 - r_last
    delta = 0.5 * h
    while delta > 1e-12:
        vb = eigenmodes.radial_eval(em, 1.0 - delta)
        if vb != 0.0 and (vb > 0.0) != (v_last > 0.0):
            return _bisect(em, r_last, 1.0 - delta, v_last)
        delta *= 0.5
    return 1.0 - 2.0 * delta


def _product_index(nu: float, kappa: float) -> int:
    """n >= 1 with j_{n-1} j_n < kappa < j_n j_{n+1} (j_0 = 0)."""
    hit = dispersion._near_product(nu, 1, kappa)
    if hit is not None:
        raise BoundaryKappaError(f"kappa = {kappa} is the product {hit.label}")
    n, _ = dispersion._locate(nu, 1, kappa)
    return n + 1


def predicted_interior_zeros(k: int, kappa: float, dim: int = 2, ell: int = 1) -> int:
    """Number of zeros of R_{k,1} in (0,1): n - 1 where kappa in (j_{n-1} j_n, j_n j_{n+1})."""
    if ell != 1:
        raise UnsupportedBranchError(f"no zero-count prediction for ell = {ell}")
    if not kappa > 0.0:
        raise ValueError(f"kappa must be > 0, got {kappa}")
    return _product_index(ModeIndex(k, 1, dim).nu, kappa) - 1


def sign_checkpoints(k: int, kappa: float, dim: int = 2) -> list[float]:
    """Radii j_{nu,i}/alpha, i = 1..n, at which R_{k,1} alternates in sign."""
    m = ModeIndex(k, 1, dim)
    n = _product_index(m.nu, kappa)
    alpha = dispersion.alpha_root(m, kappa).alpha
    return [special.bessel_zero(m.nu, i) / alpha for i in range(1, n + 1)]


def verify_sign_alternation(k: int, kappa: float, dim: int = 2) -> bool:
    """R_{k,1}(j_i/alpha) R_{k,1}(j_{i+1}/alpha) < 0 for i = 1..n-1."""
    pts = sign_checkpoints(k, kappa, dim)
    if len(pts) < 2:
        return True
    em = eigenmodes.build_mode(ModeIndex(k, 1, dim), kappa)
    vals = [eigenmodes.radial_eval(em, r) for r in pts]
    return all(a * b < 0.0 for a, b in zip(vals, vals[1:]))


def last_arch_sign(k: int, kappa: float, dim: int = 2) -> float:
    """Sign of R_{k,1} at the midpoint of (j_n/alpha, 1)."""
    pts = sign_checkpoints(k, kappa, dim)
    em = eigenmodes.build_mode(ModeIndex(k, 1, dim), kappa)
    return math.copysign(1.0, eigenmodes.radial_eval(em, 0.5 * (pts[-1] + 1.0)))


# ---------------------------------------------------------------------------
# regimes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Boundary:
    kappa: float
    family: int  # 0: radial/degree-1 switch, 1: degree-1/radial switch
    m: int
    label: str


def regime_boundaries(kappa_max: float, dim: int = 2) -> list[Boundary]:
    """All P0_m, P1_m up to kappa_max, sorted."""
    nu0 = 0.5 * (dim - 2)
    out: list[Boundary] = []
    for fam, nu in ((0, nu0), (1, nu0 + 1.0)):
        m = 1
        while True:
            p = special.bessel_zero(nu, m) * special.bessel_zero(nu, m + 1)
            if p > kappa_max:
                break
            out.append(Boundary(p, fam, m, dispersion.product_label(nu, m, m + 1)))
            m += 1
    out.sort(key=lambda b: b.kappa)
    return out


def _describe(regime: Regime, dim: int) -> str:
    if regime is Regime.RADIAL_SIMPLE:
        return "c1 R_{0,1}(r)"
    if regime is Regime.DEGREE1:
        if dim == 2:
            return "R_{1,1}(r) (c1 cos(theta) + c2 sin(theta))"
        return "R_{1,1}(r) (a . x/|x|), a in R^N"
    if regime is Regime.CROSSING_RADIAL_DEGREE1:
        return "c1 R_{0,1}(r) + R_{1,1}(r) (c2 cos(theta) + c3 sin(theta))"
    if regime is Regime.CROSSING_TRIPLE:
        return (
            "c1 R_{0,1}(r) + R_{1,1}(r) (c2 cos(theta) + c3 sin(theta))"
            " + R_{2,1}(r) (c4 cos(2 theta) + c5 sin(2 theta))"
        )
    return "crossing point; eigenspace not classified for N >= 3"


def classify_regime(kappa: float, dim: int = 2, check: bool = True) -> RegimeReport:
    """Attaining branch, multiplicity and nodal-region count of lambda_1(kappa)."""
    kappa = float(kappa)
    if not (kappa >= 0.0 and math.isfinite(kappa)):
        raise ValueError(f"kappa must be finite and >= 0, got {kappa}")
    nu0 = 0.5 * (dim - 2)
    nu1 = nu0 + 1.0
    window = dispersion.crossing_window(kappa)

    def prod(nu: float, m: int) -> float:
        return special.bessel_zero(nu, m) * special.bessel_zero(nu, m + 1)

    def lab(nu: float, m: int) -> str:
        return dispersion.product_label(nu, m, m + 1)

    # first m with kappa < P1_m + window; then kappa sits at or below P1_m
    m = 1
    while prod(nu1, m) + window < kappa:
        m += 1
    p0, p1 = prod(nu0, m), prod(nu1, m)
    p1_prev = prod(nu1, m - 1) if m > 1 else 0.0

    multiplicity: int | None
    nodal: int | None
    if abs(kappa - p1) <= window:
        crossing = True
        regime = Regime.CROSSING_TRIPLE
        interval, labels = (p1, p1), (lab(nu1, m), lab(nu1, m))
        expected = [ModeIndex(0, 1, dim), ModeIndex(1, 1, dim), ModeIndex(2, 1, dim)]
        multiplicity, nodal, n = 5, None, None
    elif abs(kappa - p0) <= window:
        crossing = True
        regime = Regime.CROSSING_RADIAL_DEGREE1
        interval, labels = (p0, p0), (lab(nu0, m), lab(nu0, m))
        expected = [ModeIndex(0, 1, dim), ModeIndex(1, 1, dim)]
        multiplicity, nodal, n = 3, None, None
    elif kappa > p0:
        crossing = False
        regime = Regime.DEGREE1
        interval, labels = (p0, p1), (lab(nu0, m), lab(nu1, m))
        expected = [ModeIndex(1, 1, dim)]
        n = m - 1
        multiplicity, nodal = (2 if dim == 2 else dim), 2 * (n + 1)
    else:
        crossing = False
        regime = Regime.RADIAL_SIMPLE
        lo_label = lab(nu1, m - 1) if m > 1 else "0"
        interval, labels = (p1_prev, p0), (lo_label, lab(nu0, m))
        expected = [ModeIndex(0, 1, dim)]
        n = m - 1
        multiplicity, nodal = 1, n + 1

    if crossing and dim != 2:
        regime = Regime.UNCLASSIFIED
        multiplicity = None

    attaining = expected
    if check:
        _, found = dispersion.first_eigenvalue(kappa, dim)
        if found != expected:
            raise RegimeMismatchError(f"kappa = {kappa}: interval logic gives {expected}, direct minimum {found}")
        attaining = found
    return RegimeReport(
        kappa, regime, tuple(attaining), multiplicity, nodal, interval, labels, n, _describe(regime, dim)
    )


def nodal_regions_from_profile(kappa: float, dim: int = 2) -> int:
    """Nodal regions of the first eigenfunction from an actual zero count (non-crossing kappa)."""
    rep = classify_regime(kappa, dim)
    mode = rep.attaining[0]
    em = eigenmodes.build_mode(mode, kappa)
    zeros = count_zeros(eigenmodes.radial_profile(em)).count
    return (zeros + 1) * (1 if mode.k == 0 else 2)


__all__ = [
    "Boundary",
    "BoundaryKappaError",
    "NodalReport",
    "Regime",
    "RegimeMismatchError",
    "RegimeReport",
    "UnsupportedBranchError",
    "classify_regime",
    "count_zeros",
    "last_arch_sign",
    "nodal_regions_from_profile",
    "predicted_interior_zeros",
    "regime_boundaries",
    "sign_checkpoints",
    "verify_sign_alternation",
]
