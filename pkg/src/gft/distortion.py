"""Hersch-Pfluger distortion function phi_K, its generalization, the
infinite-product representation, partial derivatives, and the auxiliary
monotone function f_K.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .special import DomainError, _check_param_a, gauss_2f1_sym
from .modulus import (
    _TAIL_TOL,
    _check_unit,
    _invert_ua,
    grotzsch_u,
    grotzsch_ua,
    landen_next,
    product_P,
)


@dataclass(frozen=True)
class PhiResult:
    """A distortion value together with the achieved inversion residual
    |u_a(value) - u_a(r)/K| (u-space units)."""

    value: float
    residual: float


def _check_k(k: float) -> float:
    if not (k > 0.0) or not math.isfinite(k):
        raise DomainError(f"dilatation must be positive, got {k!r}")
    return k


def phi_k(k: float, r: float) -> PhiResult:
    """phi_K(r) = u^{-1}(u(r)/K): the radius a K-quasiconformal self-map of
    the disk can carry |z| = r to."""
    _check_k(k)
    _check_unit(r)
    if k == 1.0:
        return PhiResult(value=r, residual=0.0)
    y = grotzsch_u(r) / k
    value, residual = _invert_ua(0.5, y)
    return PhiResult(value=value, residual=residual)


def phi_ka(a: float, k: float, r: float) -> PhiResult:
    """Generalized distortion u_a^{-1}(u_a(r)/K); a = 1/2 recovers phi_k."""
    _check_param_a(a)
    _check_k(k)
    _check_unit(r)
    if k == 1.0:
        return PhiResult(value=r, residual=0.0)
    y = grotzsch_ua(a, r) / k
    value, residual = _invert_ua(a, y)
    return PhiResult(value=value, residual=residual)


def phi_k_product(k: float, r: float) -> float:
    """The product representation [r/P(r)]^{1/K} prod (1+phi_{1/K}(r_n))^{2^-n}.

    Evaluated literally with the same tail-sandwich truncation as product_P;
    at K = 1 it collapses to r exactly (the product cancels the prefactor).
    """
    _check_k(k)
    _check_unit(r)
    if k == 1.0:
        return r
    kinv = 1.0 / k
    logp = (math.log(r) - math.log(product_P(r))) * kinv
    t = r
    w = 1.0  # 2^-n
    for _ in range(200):
        s = phi_k(kinv, t).value
        width = 2.0 * w * math.log(2.0 / (1.0 + s))
        if width < _TAIL_TOL:
            logp += 2.0 * w * 0.5 * (math.log1p(s) + math.log(2.0))
            return math.exp(logp)
        logp += w * math.log1p(s)
        t = min(landen_next(t), 1.0 - 1e-16)  # recurrence saturates at 1.0 in doubles
        w *= 0.5
    return math.exp(logp)  # pragma: no cover


def phi_partial_r(a: float, k: float, r: float) -> float:
    """d phi_K(a, r) / d r = (s/(K r)) [s' F(a,1-a;1;s^2) / (r' F(a,1-a;1;r^2))]^2
    with s = phi_K(a, r)."""
    s = phi_ka(a, k, r).value
    sc2 = (1.0 - s) * (1.0 + s)
    rc2 = (1.0 - r) * (1.0 + r)
    num = math.sqrt(sc2) * gauss_2f1_sym(a, s * s)
    den = math.sqrt(rc2) * gauss_2f1_sym(a, r * r)
    return s / (k * r) * (num / den) ** 2


def phi_partial_k(a: float, k: float, r: float) -> float:
    """d phi_K(a, r) / d K = pi/(2 K sin(pi a)) * s s'^2 F(a,1-a;1;s^2) F(a,1-a;1;s'^2)
    with s = phi_K(a, r)."""
    s = phi_ka(a, k, r).value
    sc2 = (1.0 - s) * (1.0 + s)
    return (math.pi / (2.0 * k * math.sin(math.pi * a))
            * s * sc2 * gauss_2f1_sym(a, s * s) * gauss_2f1_sym(a, sc2))


def lemma3_fk(a: float, k: float, r: float, literal: bool = False) -> float:
    """Auxiliary function phi_K(a, r) * r^{-1/K} (monotone decreasing for K > 1).

    With ``literal`` set, returns phi_K(a, r) * r^{+1/K} instead, the form as
    printed; that form is increasing on (0,1) for K > 1 (endpoint limits 0 and
    1), so the sign-corrected exponent is the default.
    """
    s = phi_ka(a, k, r).value
    expo = 1.0 / k if literal else -1.0 / k
    return s * r ** expo
