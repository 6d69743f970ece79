"""Scalar special functions and named constants.

Complete elliptic integrals via the arithmetic-geometric mean, the
symmetric Gauss hypergeometric series F(a, 1-a; 1; x), the digamma
function, and the handful of constants the bound formulas need.
Everything here is pure, scalar, double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

_EPS = 2.220446049250313e-16

# Stored to full double precision; the test suite recomputes each one
# from an independent route (quadrature, series acceleration, gamma).
EULER_GAMMA = 0.5772156649015329          # -psi(1)
LANDAU_C = 4.376879230452953              # Gamma(1/4)^4 / (4 pi^2)
ZETA3 = 1.2020569031595942                # zeta(3)
APERY_A = 16.82879664423432               # 14 * zeta(3)


class DomainError(ValueError):
    """Argument outside a function's mathematical domain."""


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitRadius:
    """A modulus r strictly inside (0, 1), with its complement r' = sqrt(1-r^2)."""

    r: float

    def __post_init__(self):
        if not (0.0 < self.r < 1.0) or not math.isfinite(self.r):
            raise DomainError(f"modulus must lie strictly in (0, 1), got {self.r!r}")

    @property
    def r_comp(self) -> float:
        return math.sqrt(1.0 - self.r * self.r)


@dataclass(frozen=True)
class DistortionCoeff:
    """Maximal dilatation K > 0 of a quasiconformal map."""

    k: float

    def __post_init__(self):
        if not (self.k > 0.0) or not math.isfinite(self.k):
            raise DomainError(f"dilatation must be positive, got {self.k!r}")


@dataclass(frozen=True)
class GeneralizedParam:
    """Parameter a in (0, 1/2] of the generalized modulus; a = 1/2 is classical."""

    a: float

    def __post_init__(self):
        if not (0.0 < self.a <= 0.5):
            raise DomainError(f"parameter must lie in (0, 1/2], got {self.a!r}")


@dataclass(frozen=True)
class PlanePoint:
    """A point of the plane; thin wrapper used where a typed pair reads better."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError("plane point coordinates must be finite")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    @staticmethod
    def from_complex(z: complex) -> "PlanePoint":
        return PlanePoint(z.real, z.imag)


def _check_param_a(a: float) -> float:
    if not (0.0 < a <= 0.5):
        raise DomainError(f"parameter a must lie in (0, 1/2], got {a!r}")
    return a


# ---------------------------------------------------------------------------
# AGM and complete elliptic integrals
# ---------------------------------------------------------------------------

def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"agm requires positive arguments, got ({a!r}, {b!r})")
    while abs(a - b) > 4.0 * _EPS * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_k(r: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention.

    kappa(r) = integral_0^{pi/2} dt / sqrt(1 - r^2 sin^2 t) = pi / (2 agm(1, r')).
    """
    if not (0.0 <= r < 1.0):
        raise DomainError("domain error: r must lie in [0,1)")
    return math.pi / (2.0 * agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))


def elliptic_e(r: float) -> float:
    """Complete elliptic integral of the second kind (modulus convention).

    Computed from the AGM c_n-sum: E = K * (1 - sum_n 2^{n-1} c_n^2).
    """
    if not (0.0 <= r <= 1.0):
        raise DomainError("domain error: r must lie in [0,1]")
    if r == 0.0:
        return math.pi / 2.0
    if r == 1.0:
        return 1.0
    a, b = 1.0, math.sqrt(1.0 - r * r)
    c = r
    csum = 0.5 * c * c
    pow2 = 0.5
    while abs(a - b) > 4.0 * _EPS * a:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        csum += pow2 * c * c
    return (math.pi / (2.0 * (0.5 * (a + b)))) * (1.0 - csum)


# ---------------------------------------------------------------------------
# Symmetric hypergeometric series F(a, 1-a; 1; x)
# ---------------------------------------------------------------------------

def _2f1_sym_series(a: float, x: float) -> float:
    # Direct term recurrence; adequate away from the x -> 1 singularity.
    term = 1.0
    total = 1.0
    n = 0
    while True:
        term *= (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0)) * x
        total += term
        n += 1
        if term < 1e-16 * total:
            return total
        if n > 20_000_000:  # pragma: no cover - unreachable for x <= 0.95
            raise RuntimeError("hypergeometric series failed to converge")


def _2f1_sym_near_one(a: float, y: float) -> float:
    # Logarithmic connection expansion around x = 1 (c = a + b = 1 case),
    # taking the complement y = 1 - x directly so callers that know y
    # exactly avoid the 1 - x cancellation:
    # F(a,1-a;1;1-y) = (sin(pi a)/pi) * sum p_n [2 psi(n+1) - psi(a+n)
    #                   - psi(1-a+n) - ln y] y^n
    # with p_n = (a)_n (1-a)_n / (n!)^2.  Converges geometrically in y.
    lny = math.log(y)
    p = 1.0
    d1 = -EULER_GAMMA        # psi(n+1) at n = 0
    d2 = digamma(a)
    d3 = digamma(1.0 - a)
    total = 0.0
    ypow = 1.0
    n = 0
    while True:
        term = p * (2.0 * d1 - d2 - d3 - lny) * ypow
        total += term
        if n > 2 and abs(term) < 1e-17 * abs(total):
            break
        p *= (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0))
        d1 += 1.0 / (n + 1.0)
        d2 += 1.0 / (a + n)
        d3 += 1.0 / (1.0 - a + n)
        ypow *= y
        n += 1
        if n > 500:  # pragma: no cover
            raise RuntimeError("near-one expansion failed to converge")
    return math.sin(math.pi * a) / math.pi * total


@lru_cache(maxsize=65536)
def _2f1_sym_cached(a: float, x: float) -> float:
    if x == 0.0:
        return 1.0
    if x <= 0.95:
        return _2f1_sym_series(a, x)
    if a == 0.5:
        # F(1/2,1/2;1;x) = (2/pi) kappa(sqrt(x)) = 1/agm(1, sqrt(1-x))
        return 1.0 / agm(1.0, math.sqrt(1.0 - x))
    return _2f1_sym_near_one(a, 1.0 - x)


@lru_cache(maxsize=65536)
def _2f1_sym_comp(a: float, y: float) -> float:
    """F(a, 1-a; 1; 1-y) evaluated from the exact complement y in (0, 1]."""
    if y >= 0.05:
        return _2f1_sym_cached(a, 1.0 - y)
    if a == 0.5:
        return 1.0 / agm(1.0, math.sqrt(y))
    return _2f1_sym_near_one(a, y)


def gauss_2f1_sym(a: float, x: float) -> float:
    """Gauss hypergeometric F(a, 1-a; 1; x) for a in (0, 1/2], x in [0, 1)."""
    _check_param_a(a)
    if not (0.0 <= x < 1.0):
        raise DomainError("domain error: x must lie in [0,1)")
    return _2f1_sym_cached(a, x)


def elliptic_ka(a: float, r: float) -> float:
    """Generalized complete elliptic integral kappa_a(r) = (pi/2) F(a,1-a;1;r^2)."""
    _check_param_a(a)
    if not (0.0 <= r < 1.0):
        raise DomainError("domain error: r must lie in [0,1)")
    return math.pi / 2.0 * gauss_2f1_sym(a, r * r)


# ---------------------------------------------------------------------------
# Digamma and constants
# ---------------------------------------------------------------------------

# Asymptotic coefficients of psi(x) ~ ln x - 1/(2x) - sum c_k / x^{2k}
_PSI_ASYMP = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
)


def digamma(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0, accurate to ~1e-13 absolute."""
    if not (x > 0.0):
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    acc = 0.0
    while x < 8.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    s = 0.0
    p = inv2
    for c in _PSI_ASYMP:
        s += c * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x - s


def euler_gamma() -> float:
    """The Euler-Mascheroni constant gamma = -psi(1)."""
    return EULER_GAMMA


def ramanujan_R(a: float) -> float:
    """R(a) = -2*gamma - psi(a) - psi(1-a); R(1/2) = ln 16."""
    _check_param_a(a)
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(1.0 - a)


def landau_constant() -> float:
    """The sharp Schottky constant C = Gamma(1/4)^4 / (4 pi^2)."""
    return LANDAU_C


def apery_zeta3() -> float:
    """zeta(3); the companion constant 14*zeta(3) is APERY_A."""
    return ZETA3
