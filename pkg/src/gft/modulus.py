"""Grotzsch ring modulus, its generalization, inverses, Landen sequences,
the infinite product P(r), and the auxiliary functions/constants used by
the two-sided modulus bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .special import (
    DomainError,
    GeneralizedParam,
    UnitRadius,
    _2f1_sym_comp,
    _check_param_a,
    agm,
    gauss_2f1_sym,
    ramanujan_R,
)

_LN4 = math.log(4.0)
_R_MAX = 1.0 - 1e-15        # saturation point of double-precision moduli
_U_TOL = 1e-12              # inversion residual target, measured in u-space
_TAIL_TOL = 1e-14           # infinite-product tail width cutoff


def _check_unit(r: float, name: str = "r") -> float:
    if not (0.0 < r < 1.0):
        raise DomainError(f"domain error: {name} must lie in (0,1), got {r!r}")
    return r


# ---------------------------------------------------------------------------
# Forward moduli
# ---------------------------------------------------------------------------

def grotzsch_u(r: float) -> float:
    """Conformal modulus u(r) of the unit disk slit along [0, r].

    u(r) = pi*kappa(r')/(2*kappa(r)) = (pi/2) * agm(1, r') / agm(1, r).
    """
    _check_unit(r)
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    return math.pi / 2.0 * agm(1.0, rc) / agm(1.0, r)


def grotzsch_ua(a: float, r: float) -> float:
    """Generalized modulus u_a(r); u_{1/2} coincides with grotzsch_u."""
    _check_param_a(a)
    _check_unit(r)
    if a == 0.5:
        return grotzsch_u(r)
    if r < 1e-7:
        # u_a(r) = R(a)/2 - ln r + O(r^2 ln r); the correction is below 1e-12
        return ramanujan_R(a) / 2.0 - math.log(r)
    x = r * r
    # the numerator F(a,1-a;1;1-x) is fed the exact complement x, avoiding
    # the 1 - r^2 cancellation as r -> 0
    return (math.pi / (2.0 * math.sin(math.pi * a))
            * _2f1_sym_comp(a, x) / gauss_2f1_sym(a, x))


def _sym_value(a: float) -> float:
    # u_a at the symmetric point r = 1/sqrt(2); also sqrt of u_a(r)*u_a(r').
    return math.pi / (2.0 * math.sin(math.pi * a))


# ---------------------------------------------------------------------------
# Inverses
# ---------------------------------------------------------------------------

def _invert_ua_direct(a: float, y: float) -> float:
    """Solve u_a(r) = y for y >= u_a(1/sqrt2), i.e. a root in (0, 1/sqrt2]."""
    f = (lambda r: grotzsch_u(r)) if a == 0.5 else (lambda r: grotzsch_ua(a, r))
    # Seed bracket from the small-r asymptote u_a(r) ~ ln(M/r), M = exp(R(a)/2).
    m = math.exp(ramanujan_R(a) / 2.0)
    hi = min(_R_MAX, m * math.exp(-y))
    lo = hi * math.exp(-1.0)
    while f(lo) < y:  # u_a decreasing: need u_a(lo) >= y
        lo *= 0.125
        if lo < 1e-300:
            raise DomainError(f"inversion bracket collapsed for y={y!r}")
    while f(hi) > y:
        hi = 0.5 * (1.0 + hi)
        if hi >= _R_MAX:
            hi = _R_MAX
            break
    flo, fhi = f(lo), f(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = f(mid)
        if abs(fmid - y) <= _U_TOL:
            return mid
        if fmid > y:
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    # Derivative-free secant polish on the final bracket.
    if fhi != flo:
        r = lo + (y - flo) * (hi - lo) / (fhi - flo)
        if lo < r < hi:
            return r
    return 0.5 * (lo + hi)


def _invert_ua(a: float, y: float) -> tuple[float, float]:
    """Return (r, residual) with u_a(r) = y; residual measured in u-space.

    For y below the symmetric value the complementary identity
    u_a(r) u_a(r') = [pi/(2 sin pi a)]^2 is used, which keeps the root-find
    well conditioned as r -> 1.  Roots closer to 1 than double precision can
    represent saturate at 1 - 1e-15.
    """
    if not (y > 0.0) or not math.isfinite(y):
        raise DomainError(f"modulus inverse requires y > 0, got {y!r}")
    s = _sym_value(a)
    if y >= s:
        r = _invert_ua_direct(a, y)
        ua = grotzsch_u(r) if a == 0.5 else grotzsch_ua(a, r)
        return r, abs(ua - y)
    # complementary solve: u_a(r') = s^2 / y, root r' in (0, 1/sqrt2)
    yc = s * s / y
    m = math.exp(ramanujan_R(a) / 2.0)
    if yc > math.log(m * 1e8):
        # r' below ~1e-8: r rounds to 1 in double precision; saturate.
        ua = grotzsch_u(_R_MAX) if a == 0.5 else grotzsch_ua(a, _R_MAX)
        return _R_MAX, abs(ua - y)
    rc = _invert_ua_direct(a, yc)
    uac = grotzsch_u(rc) if a == 0.5 else grotzsch_ua(a, rc)
    # |d y| = (y^2 / s^2) |d u_a(r')| maps the residual back to y-units
    resid = abs(uac - yc) * y * y / (s * s)
    r = math.sqrt(max(0.0, 1.0 - rc * rc))
    if r >= 1.0:
        r = _R_MAX
    return r, resid


def grotzsch_u_inv(y: float) -> float:
    """The unique r in (0,1) with u(r) = y."""
    return _invert_ua(0.5, y)[0]


def grotzsch_ua_inv(a: float, y: float) -> float:
    """The unique r in (0,1) with u_a(r) = y."""
    _check_param_a(a)
    return _invert_ua(a, y)[0]


# ---------------------------------------------------------------------------
# Landen sequences and the product P(r)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LandenSequence:
    """Ascending Landen moduli r_0..r_n, r_n = 2 sqrt(r_{n-1}) / (1 + r_{n-1})."""

    terms: tuple[float, ...]
    origin: UnitRadius


def landen_next(r: float) -> float:
    return 2.0 * math.sqrt(r) / (1.0 + r)


def landen_ascend(r: float, n: int) -> LandenSequence:
    """The ascending Landen sequence of length n+1 starting at r."""
    if n < 0:
        raise DomainError("sequence length must be nonnegative")
    origin = UnitRadius(r)
    terms = [r]
    for _ in range(n):
        terms.append(landen_next(terms[-1]))
    return LandenSequence(terms=tuple(terms), origin=origin)


def product_P(r: float) -> float:
    """P(r) = prod_{n>=0} (1 + r_n)^{2^-n} over the ascending Landen sequence.

    Truncated at the first N where the tail sandwich
    (1+r_N)^{2^{1-N}} <= tail <= 2^{2^{1-N}} has log-width below 1e-14;
    the midpoint of the sandwich is added in log-space.
    """
    _check_unit(r)
    logp = 0.0
    t = r
    w = 1.0  # 2^-n
    for _ in range(200):
        width = 2.0 * w * math.log(2.0 / (1.0 + t))
        if width < _TAIL_TOL:
            logp += 2.0 * w * 0.5 * (math.log1p(t) + math.log(2.0))
            return math.exp(logp)
        logp += w * math.log1p(t)
        t = landen_next(t)
        w *= 0.5
    return math.exp(logp)  # pragma: no cover - tail converges in ~50 steps


# ---------------------------------------------------------------------------
# Auxiliary functions and constants of the modulus bounds
# ---------------------------------------------------------------------------

def fn_A(r: float) -> float:
    """A(r) = r'^2 arctan(r) / r, continuously extended to A(0)=1, A(1)=0."""
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"domain error: r must lie in [0,1], got {r!r}")
    if r <= 1e-12:
        return 1.0 - r * r  # arctan(r)/r -> 1
    return (1.0 - r * r) * math.atan(r) / r


def fn_B(r: float) -> float:
    """B(r) = r'^2 ln(4/r'), continuously extended to B(0)=ln4, B(1)=0."""
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"domain error: r must lie in [0,1], got {r!r}")
    rc2 = (1.0 - r) * (1.0 + r)
    if rc2 <= 0.0:
        return 0.0
    return rc2 * (_LN4 - 0.5 * math.log(rc2))


@dataclass(frozen=True)
class Lemma2Constants:
    """The six derived constants of the two-sided modulus bounds.

    Degenerate at a = 1/2, where c1 = c3 = 0 and c6 = c3/c1 is undefined
    (reported as nan with the flag set) so parameter sweeps can include
    the classical endpoint.
    """

    a: float
    c1: float
    c2: float
    c3: float
    c4: float
    c5: float
    c6: float
    degenerate: bool


def lemma2_constants(a: float) -> Lemma2Constants:
    _check_param_a(a)
    if a == 0.5:
        return Lemma2Constants(a=a, c1=0.0, c2=0.0, c3=0.0, c4=1.0, c5=1.0,
                               c6=math.nan, degenerate=True)
    c1 = (ramanujan_R(a) - math.log(16.0)) / 2.0
    c2 = c1 / _LN4
    c3 = (1.0 - 2.0 * a) ** 2 / ((1.0 - a) * math.pi)
    return Lemma2Constants(a=a, c1=c1, c2=c2, c3=c3,
                           c4=math.exp(c1), c5=math.exp(c2), c6=c3 / c1,
                           degenerate=False)
