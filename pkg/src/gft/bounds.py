"""Closed-form bounds: the twice-punctured-disk metric objects, classical
and Bloch-route Schottky bounds, the elliptic-integral bound eta_K,
quasiconformal Schwarz bounds, and the Mori-type Holder quantities.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .special import LANDAU_C, DomainError
from .modulus import _TAIL_TOL, _check_unit, grotzsch_u, landen_next, product_P
from .distortion import phi_k

#: Classical lower bound for Bloch's constant, sqrt(3)/4.
BLOCH_B1 = math.sqrt(3.0) / 4.0

#: Largest distance from the rectangle [0, ln(sqrt2+1)] x [0, 2pi] to the
#: omitted-value lattice {+-ln(sqrt n + sqrt(n-1)) + 2 m pi i}; grid search
#: at resolution 1e-3 (see derive_lattice_gap).
LATTICE_GAP_D = 3.1719038494546727


def derive_lattice_gap(resolution: float = 1e-3) -> float:
    """Recompute LATTICE_GAP_D by grid search at the given resolution."""
    import numpy as np

    width = math.log(math.sqrt(2.0) + 1.0)
    xs = [math.log(math.sqrt(n) + math.sqrt(n - 1)) for n in range(1, 80)]
    pts = [(sx * v, 2.0 * math.pi * m)
           for v in xs for sx in (1.0, -1.0) for m in (-1, 0, 1, 2)]
    lat = np.array([p for p in pts
                    if -6.0 < p[0] < width + 6.0 and -6.0 < p[1] < 2.0 * math.pi + 6.0])
    gx = np.arange(0.0, width + resolution / 2.0, resolution)
    gy = np.arange(0.0, 2.0 * math.pi + resolution / 2.0, resolution)
    best = -1.0
    for x in gx:
        d2 = np.full(gy.shape, np.inf)
        for lx, ly in lat:
            np.minimum(d2, (x - lx) ** 2 + (gy - ly) ** 2, out=d2)
        best = max(best, float(d2.max()))
    return math.sqrt(best)


@dataclass(frozen=True)
class BoundConfig:
    """Constants feeding the Bloch-route growth bound."""

    bloch_lower: float = BLOCH_B1
    lattice_gap_d: float = LATTICE_GAP_D
    theta: float = 0.0

    def __post_init__(self):
        if not (self.bloch_lower > 0.0 and self.lattice_gap_d > 0.0):
            raise DomainError("bloch_lower and lattice_gap_d must be positive")
        if not (0.0 <= self.theta < 1.0):
            raise DomainError("theta must lie in [0,1)")


# ---------------------------------------------------------------------------
# Branch policy: principal logarithm, square roots with Re >= 0
# ---------------------------------------------------------------------------

def _sqrt_re_nonneg(w: complex) -> complex:
    s = cmath.sqrt(w)  # principal branch already has Re >= 0
    if s.real < 0.0:  # pragma: no cover - defensive
        s = -s
    return s


def _on_cut(z: complex) -> bool:
    return z.imag == 0.0 and z.real >= 1.0


# ---------------------------------------------------------------------------
# Metric objects on the twice-punctured disk
# ---------------------------------------------------------------------------

def rho_lower(z_abs: float) -> float:
    """Lower bound 1/(|z| (C - ln|z|)) for the punctured-disk Poincare metric."""
    if not (0.0 < z_abs < 1.0):
        raise DomainError(f"domain error: |z| must lie in (0,1), got {z_abs!r}")
    return 1.0 / (z_abs * (LANDAU_C - math.log(z_abs)))


def zeta_map(z: complex) -> complex:
    """Conformal map (sqrt(1-z) - 1)/(sqrt(1-z) + 1) into the unit disk,
    fixing 0 and symmetric about the real axis."""
    z = complex(z)
    if _on_cut(z):
        raise DomainError("domain error: z lies on the branch cut [1, inf)")
    w = _sqrt_re_nonneg(1.0 - z)
    return (w - 1.0) / (w + 1.0)


def sigma_metric(z: complex) -> float:
    """Density |zeta'(z)/zeta(z)| / (4 - ln|zeta(z)|) of the comparison metric."""
    z = complex(z)
    if z == 0 or _on_cut(z):
        raise DomainError("domain error: z must avoid 0 and the cut [1, inf)")
    w = _sqrt_re_nonneg(1.0 - z)
    zeta = (w - 1.0) / (w + 1.0)
    dzeta = -1.0 / (w * (w + 1.0) ** 2)
    return abs(dzeta / zeta) / (4.0 - math.log(abs(zeta)))


# ---------------------------------------------------------------------------
# Schottky bounds
# ---------------------------------------------------------------------------

def schottky_classical(ln_f0: float, z_abs: float) -> float:
    """Sharp classical upper bound for ln|f(z)|:
    [C + max(ln|f(0)|, 0)] (1+|z|)/(1-|z|) - C."""
    if not (0.0 <= z_abs < 1.0):
        raise DomainError("domain error: |z| must lie in [0,1)")
    return (LANDAU_C + max(ln_f0, 0.0)) * (1.0 + z_abs) / (1.0 - z_abs) - LANDAU_C


def schottky_F(w: complex) -> complex:
    """F(w) = (1/2) ln[1 + 2 sqrt(q (1-q))], q = ln(w)/(2 pi i), for w not 0 or 1."""
    w = complex(w)
    if w == 0 or w == 1:
        raise DomainError("domain error: w must avoid the omitted values 0 and 1")
    q = cmath.log(w) / (2.0j * math.pi)
    return 0.5 * cmath.log(1.0 + 2.0 * _sqrt_re_nonneg(q * (1.0 - q)))


def schottky_sf(f_abs_F: float) -> float:
    """S_f = exp(pi e^{2|F|}); returns inf on overflow."""
    if not (f_abs_F >= 0.0):
        raise DomainError("domain error: |F| must be nonnegative")
    try:
        return math.exp(math.pi * math.exp(2.0 * f_abs_F))
    except OverflowError:
        return math.inf


def f_growth_bound(f0_abs_F: float, cfg: BoundConfig | None = None) -> float:
    """Bloch-route growth bound |F(z)| <= |F(0)| + (d/B1) ln(1/(1-theta))."""
    if cfg is None:
        cfg = BoundConfig()
    return f0_abs_F + cfg.lattice_gap_d / cfg.bloch_lower * math.log(1.0 / (1.0 - cfg.theta))


def schottky_f0_window(alpha: float, beta: float) -> float:
    """|ln|f(0)|| window ln(beta) - ln(alpha) after normalizing to alpha < 1 < beta:
    alpha >= 1 is replaced by 1/(alpha+1), beta <= 1 by beta + 1."""
    if not (alpha > 0.0 and beta > 0.0):
        raise DomainError("domain error: alpha and beta must be positive")
    if alpha >= 1.0:
        alpha = 1.0 / (alpha + 1.0)
    if beta <= 1.0:
        beta = beta + 1.0
    return math.log(beta) - math.log(alpha)


# ---------------------------------------------------------------------------
# Elliptic-integral bound eta_K and its product form
# ---------------------------------------------------------------------------

def eta_k(k: float, r: float) -> float:
    """eta_K(r) = [P(s)/P(s')]^2 exp(2K u(r') - 2u(r)/K), s = phi_K(r')."""
    _check_unit(r)
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    s = phi_k(k, rc).value
    sc = math.sqrt((1.0 - s) * (1.0 + s))
    expo = 2.0 * k * grotzsch_u(rc) - 2.0 * grotzsch_u(r) / k
    return (product_P(s) / product_P(sc)) ** 2 * math.exp(expo)


def theorem3_sfk(k: float, r: float) -> float:
    """The literal product form
    exp(2K u(r') - 2u(r)/K) prod [(1+phi_{1/K}(r_n'))/(1+phi_K(r_n))]^{2^{1-n}},
    with both Landen sequences ascending from r and r' respectively."""
    _check_unit(r)
    if not (k > 0.0):
        raise DomainError("domain error: K must be positive")
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    logp = 2.0 * k * grotzsch_u(rc) - 2.0 * grotzsch_u(r) / k
    t, tc = r, rc
    w = 2.0  # 2^{1-n}
    for _ in range(200):
        num = phi_k(1.0 / k, tc).value
        den = phi_k(k, t).value
        # both factors approach 2: the remaining exponent mass bounds the tail
        width = 2.0 * w * math.log(2.0 / (1.0 + min(num, den)))
        if width < _TAIL_TOL:
            break
        logp += w * (math.log1p(num) - math.log1p(den))
        cap = 1.0 - 1e-16  # recurrence saturates at 1.0 in doubles
        t, tc = min(landen_next(t), cap), min(landen_next(tc), cap)
        w *= 0.5
    return math.exp(logp)


# ---------------------------------------------------------------------------
# Quasiconformal Schwarz bounds
# ---------------------------------------------------------------------------

def qc_schwarz_bounds(k: float, z_abs: float) -> tuple[float, float]:
    """Two-sided Schwarz bound (|z|^K P(|z|)^{1-K}, |z|^{1/K} P(|z|)^{1-1/K})
    for |f(z) - f(0)| under a K-quasiconformal self-map, K >= 1."""
    if not (k >= 1.0):
        raise DomainError("domain error: K must be >= 1")
    _check_unit(z_abs)
    if k == 1.0:
        return z_abs, z_abs
    p = product_P(z_abs)
    return z_abs ** k * p ** (1.0 - k), z_abs ** (1.0 / k) * p ** (1.0 - 1.0 / k)


def qc_schwarz_bounds_product_literal(k: float, z_abs: float) -> tuple[float, float]:
    """The same bound with the product exponent 2^{1-n} as printed, which is
    P(|z|)^{2(1-K)} / P(|z|)^{2(1-1/K)}; kept separate so the ratio to the
    P-form can be reported rather than asserted."""
    if not (k >= 1.0):
        raise DomainError("domain error: K must be >= 1")
    _check_unit(z_abs)
    p = product_P(z_abs)
    return (z_abs ** k * p ** (2.0 * (1.0 - k)),
            z_abs ** (1.0 / k) * p ** (2.0 * (1.0 - 1.0 / k)))


# ---------------------------------------------------------------------------
# Mori-type quantities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriplePoints:
    """Three pairwise-distinct points of the plane."""

    z0: complex
    z1: complex
    z2: complex

    def __post_init__(self):
        if self.z0 == self.z1 or self.z0 == self.z2 or self.z1 == self.z2:
            raise DomainError("triple points must be pairwise distinct")


def triple_angle(points: TriplePoints, images: TriplePoints) -> tuple[float, float]:
    """Angles alpha = arcsin(|z2-z1|/(|z2-z0|+|z1-z0|)) for the source triple
    and beta for the image triple; both lie in (0, pi/2]."""

    def ang(t: TriplePoints) -> float:
        ratio = abs(t.z2 - t.z1) / (abs(t.z2 - t.z0) + abs(t.z1 - t.z0))
        return math.asin(min(1.0, ratio))  # triangle inequality keeps ratio <= 1

    return ang(points), ang(images)


def _check_alpha(alpha: float) -> float:
    if not (0.0 < alpha <= math.pi / 2.0):
        raise DomainError(f"domain error: alpha must lie in (0, pi/2], got {alpha!r}")
    return alpha


def mori_h(k: float, alpha: float) -> float:
    """H(K, alpha) = sin(alpha)^{-1/K}."""
    if not (k > 0.0):
        raise DomainError("domain error: K must be positive")
    _check_alpha(alpha)
    return math.sin(alpha) ** (-1.0 / k)


def mori_sin_bound(k: float, alpha: float) -> float:
    """Raw angular bound 2^{1-1/K} sin^{1/K}(alpha); may exceed 1 (see the
    clamped accessor)."""
    if not (k >= 1.0):
        raise DomainError("domain error: K must be >= 1")
    _check_alpha(alpha)
    return 2.0 ** (1.0 - 1.0 / k) * math.sin(alpha) ** (1.0 / k)


def mori_sin_bound_clamped(k: float, alpha: float) -> float:
    """mori_sin_bound clamped to 1, usable as a sine."""
    return min(1.0, mori_sin_bound(k, alpha))


def mori_holder_bound(k: float, dz_abs: float, variant: str = "sixteen") -> float:
    """Holder bound c^{1-1/K} |z2-z1|^{1/K} with c = 16 or 64."""
    if not (k >= 1.0):
        raise DomainError("domain error: K must be >= 1")
    if not (dz_abs >= 0.0):
        raise DomainError("domain error: |z2-z1| must be nonnegative")
    if variant == "sixteen":
        c = 16.0
    elif variant == "sixtyfour":
        c = 64.0
    else:
        raise DomainError(f"unknown variant {variant!r}")
    return c ** (1.0 - 1.0 / k) * dz_abs ** (1.0 / k)
