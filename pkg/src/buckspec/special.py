"""Bessel functions of the first kind for real order, and their zeros.

Three evaluation regimes are used, chosen per call:

* ascending power series for small arguments,
* Hankel's asymptotic expansion for large arguments (only when its terms
  actually fall below double-precision resolution),
* Miller's backward recurrence, normalised with the Neumann sum
  ``(x/2)**mu = sum_k (mu + 2k) Gamma(mu + k) / k! * J_{mu+2k}(x)``,
  everywhere else.

The functions here take plain Python floats; the hot loops of the root
solvers call them tens of thousands of times, and scalar ``math`` beats
numpy dispatch at that granularity.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

NU_MAX = 60.0
X_MAX = 1000.0
ELL_MAX = 200

_SERIES_TOL = 1e-17
_RESCALE = 1e250


class BesselDomainError(ValueError):
    """Argument outside the mathematical domain (negative x or order)."""


class BesselRangeError(ValueError):
    """Argument inside the domain but outside the supported, tested range."""


def _check(nu: float, x: float) -> None:
    if not (math.isfinite(nu) and math.isfinite(x)):
        raise BesselDomainError(f"non-finite argument nu={nu!r}, x={x!r}")
    if nu < 0.0:
        raise BesselDomainError(f"order must be >= 0, got {nu}")
    if x < 0.0:
        raise BesselDomainError(f"argument must be >= 0, got {x}")
    if nu > NU_MAX + 1.0:
        # +1: the pair routines also evaluate order nu + 1
        raise BesselRangeError(f"order {nu} outside supported range [0, {NU_MAX}]")
    if x > X_MAX:
        raise BesselRangeError(f"argument {x} outside supported range [0, {X_MAX}]")


# ---------------------------------------------------------------------------
# evaluation regimes
# ---------------------------------------------------------------------------

def _series(nu: float, x: float) -> float:
    q = -0.25 * x * x
    term = 1.0
    total = 1.0
    m = 0
    while True:
        m += 1
        term *= q / (m * (m + nu))
        total += term
        if abs(term) <= _SERIES_TOL * abs(total) and m > 1:
            break
    log_pref = nu * math.log(0.5 * x) - math.lgamma(nu + 1.0)
    if log_pref > 709.0:
        raise OverflowError(f"series prefactor overflows for nu={nu}, x={x}")
    return math.exp(log_pref) * total


def _hankel(nu: float, x: float) -> float | None:
    """Large-argument expansion; ``None`` when it fails to converge."""
    mu4 = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    t = 1.0
    prev = math.inf
    k = 0
    while True:
        k += 1
        t *= (mu4 - (2 * k - 1) ** 2) / (k * 8.0 * x)
        at = abs(t)
        if at == 0.0:
            break
        if at > prev:
            return None
        prev = at
        # alternating signs: a1 -> +Q, a2 -> -P, a3 -> -Q, a4 -> +P, ...
        sign = 1.0 if (k % 4) in (0, 1) else -1.0
        if k % 2:
            q += sign * t
        else:
            p += sign * t
        if at < _SERIES_TOL:
            break
        if k > 200:
            return None
    phase = (0.5 * nu + 0.25) * math.pi
    c = math.cos(x) * math.cos(phase) + math.sin(x) * math.sin(phase)
    s = math.sin(x) * math.cos(phase) - math.cos(x) * math.sin(phase)
    return math.sqrt(2.0 / (math.pi * x)) * (p * c - q * s)


def _miller(nu: float, x: float) -> tuple[float, float]:
    """J_nu(x), J_{nu+1}(x) by backward recurrence from a high order."""
    n = int(math.floor(nu))
    mu = nu - n
    top = int(max(n + 2, x) + 30.0 + 3.0 * math.sqrt(x))
    top += top & 1
    # h[k] = Gamma(mu + k) / k!, k >= 1; weight of f_{2k} is (mu + 2k) h[k]
    h = [0.0] * (top // 2 + 1)
    g1 = math.gamma(mu + 1.0)
    if top // 2 >= 1:
        h[1] = g1
    for k in range(2, top // 2 + 1):
        # h[k] = Gamma(mu+k)/k! from Gamma(mu+k-1)/(k-1)!
        h[k] = h[k - 1] * (mu + k - 1) / k

    f_next = 0.0
    f = 1e-280
    norm = 0.0
    val_n = val_n1 = 0.0
    have_n1 = False
    two_over_x = 2.0 / x
    for j in range(top, 0, -1):
        if not j & 1:
            norm += (mu + j) * h[j // 2] * f
        if j == n + 1:
            val_n1 = f
            have_n1 = True
        elif j == n:
            val_n = f
        f_prev = two_over_x * (mu + j) * f - f_next
        f_next, f = f, f_prev
        if abs(f) > _RESCALE:
            f /= _RESCALE
            f_next /= _RESCALE
            norm /= _RESCALE
            val_n /= _RESCALE
            if have_n1:
                val_n1 /= _RESCALE
    norm += g1 * f
    if n == 0:
        val_n = f
    scale = math.exp(mu * math.log(0.5 * x)) / norm
    return val_n * scale, val_n1 * scale


def _use_series(nu: float, x: float) -> bool:
    return x * x <= 4.0 * (nu + 1.0) + 12.0


def _j(nu: float, x: float) -> float:
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    if _use_series(nu, x):
        return _series(nu, x)
    if x >= 30.0:
        val = _hankel(nu, x)
        if val is not None:
            return val
    return _miller(nu, x)[0]


def bessel_pair(nu: float, x: float) -> tuple[float, float]:
    """Return ``(J_nu(x), J_{nu+1}(x))``.

    Cheaper than two :func:`bessel_j` calls in the recurrence regime, which
    produces both orders from one sweep.
    """
    nu = float(nu)
    x = float(x)
    _check(nu, x)
    if x == 0.0:
        return (1.0 if nu == 0.0 else 0.0), 0.0
    if _use_series(nu, x):
        return _series(nu, x), _series(nu + 1.0, x)
    if x >= 30.0:
        a = _hankel(nu, x)
        b = _hankel(nu + 1.0, x)
        if a is not None and b is not None:
            return a, b
    return _miller(nu, x)


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for real order ``0 <= nu <= 60`` and ``0 <= x <= 1000``.

    Absolute error is about 1e-15 on the unit envelope for ``x <= 50``
    and below 1e-13 up to the range limit.
    """
    nu = float(nu)
    x = float(x)
    _check(nu, x)
    return _j(nu, x)


def bessel_j_prime(nu: float, x: float) -> float:
    """J'_nu(x) through ``J'_nu = -J_{nu+1} + (nu/x) J_nu``."""
    nu = float(nu)
    x = float(x)
    _check(nu, x)
    if x == 0.0:
        if nu == 0.0 or nu > 1.0:
            return 0.0
        if nu == 1.0:
            return 0.5
        raise BesselDomainError(f"J'_{nu} is unbounded at x = 0")
    j0, j1 = bessel_pair(nu, x)
    return -j1 + nu / x * j0


def bessel_j_prime2(nu: float, x: float) -> float:
    """Second derivative, from differentiating ``J'_nu = -J_{nu+1} + (nu/x) J_nu``.

    Uses ``J'_{nu+1} = J_nu - (nu+1)/x J_{nu+1}`` for the inner derivative,
    so the Bessel ODE is not used and stays available as a check.
    """
    nu = float(nu)
    x = float(x)
    _check(nu, x)
    if x == 0.0:
        raise BesselDomainError("second derivative evaluated at x = 0")
    j0, j1 = bessel_pair(nu, x)
    d0 = -j1 + nu / x * j0
    d1 = j0 - (nu + 1.0) / x * j1
    return -d1 - nu / (x * x) * j0 + nu / x * d0


def bessel_j_scaled(nu: float, p: float, x: float) -> float:
    """``x**(-p) * J_nu(x)`` with the removable singularity at 0 resolved.

    Requires ``nu >= p``. At ``x == 0`` returns the exact limit
    ``2**-nu / Gamma(nu + 1)`` when ``nu == p`` and 0 otherwise.
    """
    nu = float(nu)
    x = float(x)
    if nu < p - 1e-12:
        raise BesselDomainError(f"x**-{p} J_{nu}(x) is singular at 0")
    _check(nu, x)
    if x == 0.0:
        if abs(nu - p) < 1e-12:
            return math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
        return 0.0
    if p == 0.0:
        return _j(nu, x)
    if _use_series(nu, x):
        # (x/2)**nu * x**-p = 2**-p * (x/2)**(nu - p)
        return _series(nu, x) / math.pow(x, p)
    return _j(nu, x) / math.pow(x, p)


# ---------------------------------------------------------------------------
# zeros
# ---------------------------------------------------------------------------

def mcmahon(nu: float, ell: int) -> float:
    """McMahon's large-``ell`` expansion for the ``ell``-th zero of J_nu."""
    mu = 4.0 * nu * nu
    b8 = 8.0 * (ell + 0.5 * nu - 0.25) * math.pi
    beta = b8 / 8.0
    return (
        beta
        - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8**3)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8**5)
    )


def _refine_zero(nu: float, lo: float, hi: float, guess: float) -> float:
    """Newton on J_nu with bisection fallback; [lo, hi] brackets one zero."""
    f_lo = _j(nu, lo)
    x = guess if lo < guess < hi else 0.5 * (lo + hi)
    for _ in range(200):
        jv, jv1 = bessel_pair(nu, x)
        if jv == 0.0:
            return x
        if (jv > 0.0) == (f_lo > 0.0):
            lo, f_lo = x, jv
        else:
            hi = x
        deriv = -jv1 + nu / x * jv
        step = jv / deriv if deriv != 0.0 else math.inf
        if abs(step) < 1e-13 * (1.0 + abs(x)):
            return x - step
        x_new = x - step
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if hi - lo < 4e-16 * hi:
            return x_new
        x = x_new
    raise ArithmeticError(f"zero refinement for J_{nu} did not converge in [{lo}, {hi}]")


class _ZeroCache:
    """Per-order list of zeros, extended on demand; write-once entries."""

    def __init__(self) -> None:
        self._zeros: dict[float, list[float]] = {}
        self._lock = threading.Lock()

    def get(self, nu: float, count: int) -> tuple[float, ...]:
        known = self._zeros.get(nu)
        if known is not None and len(known) >= count:
            return tuple(known[:count])
        with self._lock:
            known = self._zeros.setdefault(nu, [])
            while len(known) < count:
                known.append(self._next_zero(nu, known))
            return tuple(known[:count])

    @staticmethod
    def _next_zero(nu: float, known: list[float]) -> float:
        ell = len(known) + 1
        if known:
            # consecutive zeros are more than 2.9 apart for every nu >= 0
            a = known[-1] + 1.0
        else:
            # j_{nu,1} > sqrt(nu (nu + 2))
            a = max(math.sqrt(nu * (nu + 2.0)), 1e-3)
        fa = _j(nu, a)
        while True:
            b = a + 1.0
            if b > X_MAX:
                raise BesselRangeError(f"zero {ell} of J_{nu} lies beyond x = {X_MAX}")
            fb = _j(nu, b)
            if fb == 0.0:
                return b
            if (fa > 0.0) != (fb > 0.0):
                return _refine_zero(nu, a, b, mcmahon(nu, ell))
            a, fa = b, fb


_CACHE = _ZeroCache()


@dataclass(frozen=True)
class ZeroTable:
    nu: float
    zeros: tuple[float, ...]

    @property
    def count(self) -> int:
        return len(self.zeros)

    def __getitem__(self, ell: int) -> float:
        """1-based access matching the usual j_{nu,ell} indexing; 0 maps to 0.0."""
        if ell == 0:
            return 0.0
        if ell < 0:
            raise IndexError(ell)
        return self.zeros[ell - 1]


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < 0.0:
        raise BesselDomainError(f"order must be finite and >= 0, got {nu}")
    if nu > NU_MAX:
        raise BesselRangeError(f"order {nu} outside supported range [0, {NU_MAX}]")
    return nu


def bessel_zero(nu: float, ell: int) -> float:
    """The ``ell``-th positive zero j_{nu,ell} of J_nu (``ell >= 1``)."""
    nu = _check_order(nu)
    if int(ell) != ell or ell < 1:
        raise ValueError(f"zero index must be a positive integer, got {ell}")
    if ell > ELL_MAX:
        raise BesselRangeError(f"zero index {ell} above supported maximum {ELL_MAX}")
    return _CACHE.get(nu, int(ell))[-1]


def zero_table(nu: float, count: int) -> ZeroTable:
    nu = _check_order(nu)
    if int(count) != count or count < 1:
        raise ValueError(f"count must be a positive integer, got {count}")
    if count > ELL_MAX:
        raise BesselRangeError(f"count {count} above supported maximum {ELL_MAX}")
    return ZeroTable(nu, _CACHE.get(nu, int(count)))
