"""Inequality sweep engine.

Every inequality the bound derivations assert is registered here as a
margin function (positive margin = satisfied).  Targets are classified
``asserted`` (independently established facts: violations fail the suite)
or ``report_only`` (forms whose literal statement is suspect: margins are
measured and reported, never asserted).
"""
from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import bounds, distortion, modulus, special
from .special import APERY_A


class UsageError(ValueError):
    """Invalid sweep configuration or unknown target/suite."""


# ---------------------------------------------------------------------------
# Specs and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    """Grid/sample/tolerance/seed configuration for one verification run."""

    target: str
    r_grid: tuple[float, float, int] = (0.01, 0.99, 99)
    k_values: tuple[float, ...] = (1.0, 1.5, 2.0, 4.0)
    a_values: tuple[float, ...] = (0.1, 0.25, 0.5)
    tol: float | None = None          # None: use the target's default
    seed: int = 20240811
    samples: int = 10_000

    def __post_init__(self):
        lo, hi, steps = self.r_grid
        if not (0.0 < lo < hi < 1.0):
            raise UsageError(f"r grid must satisfy 0 < min < max < 1, got {self.r_grid}")
        if steps < 2:
            raise UsageError(f"r grid needs at least 2 steps, got {steps}")
        if self.tol is not None and self.tol < 0.0:
            raise UsageError("tol must be nonnegative")
        if self.samples < 1:
            raise UsageError("samples must be >= 1")


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one sweep: margin statistics plus any violations."""

    target: str
    classification: str               # asserted | report_only
    evaluations: int
    min_margin: float
    argmin: dict
    violations: tuple[tuple[dict, float], ...]
    status: str                       # pass | fail | report_only
    wall_time_ms: int

    def to_dict(self) -> dict:
        return {
            "schema": "v1",
            "target": self.target,
            "classification": self.classification,
            "evaluations": self.evaluations,
            "min_margin": self.min_margin,
            "argmin": self.argmin,
            "violations": [{"params": p, "margin": m} for p, m in self.violations],
            "status": self.status,
            "wall_time_ms": self.wall_time_ms,
        }


# ---------------------------------------------------------------------------
# Deterministic sampling (counter-style: each index is hashed independently,
# so evaluation order never matters)
# ---------------------------------------------------------------------------

def _rng_at(seed: int, stream: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{stream}:{i}")


def _disk_point(rng: random.Random) -> complex:
    return math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())


def _omega1_point(seed: int, i: int) -> complex:
    # point of {|z| < 1, |z| < |z-1|}, bounded away from the puncture at 0
    rng = _rng_at(seed, "eq5", i)
    while True:
        z = _disk_point(rng)
        if 0.01 < abs(z) < abs(z - 1.0):
            return z


def _disk_pair(seed: int, variant: str, i: int) -> tuple[complex, complex]:
    rng = _rng_at(seed, f"mori_{variant}", i)
    while True:
        z1, z2 = _disk_point(rng), _disk_point(rng)
        if z1 != z2:
            return z1, z2


def _radial_stretch(z: complex, k: float) -> complex:
    m = abs(z)
    if m == 0.0:
        return 0.0
    return z * m ** (1.0 / k - 1.0)


# ---------------------------------------------------------------------------
# Margin functions.  Each takes a params dict and returns a signed margin.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=100_000)
def _phi(k: float, r: float) -> float:
    return distortion.phi_k(k, r).value


@lru_cache(maxsize=100_000)
def _fk(a: float, k: float, r: float, literal: bool) -> float:
    return distortion.lemma3_fk(a, k, r, literal=literal)


def _m_eq5_chain(p: dict) -> float:
    z = complex(p["z_re"], p["z_im"])
    zeta = bounds.zeta_map(z)
    e5 = 1.0 / (abs(z) * abs(cmath.sqrt(z - 1.0)) * (4.0 - math.log(abs(zeta))))
    return e5 - bounds.rho_lower(abs(z))


def _g5(a: float, r: float) -> float:
    return modulus.grotzsch_ua(a, r) - modulus.grotzsch_u(r)


def _m_lemma2_item1(p: dict) -> float:
    a, r = p["a"], p["r"]
    cs = modulus.lemma2_constants(a)
    g5 = _g5(a, r)
    return min(g5 - cs.c2 * modulus.fn_B(r), cs.c1 - g5)


def _m_lemma2_item2(p: dict) -> float:
    a, r = p["a"], p["r"]
    cs = modulus.lemma2_constants(a)
    g5 = _g5(a, r)
    A = modulus.fn_A(r)
    return min(g5 - cs.c1 * A, cs.c2 * (1.0 - cs.c6 * (1.0 - A)) - g5)


def _m_lemma2_item3(p: dict) -> float:
    a, r = p["a"], p["r"]
    cs = modulus.lemma2_constants(a)
    A = modulus.fn_A(r)
    B = modulus.fn_B(r)
    pr = modulus.product_P(r)
    mid = math.exp(modulus.grotzsch_ua(a, r)) / r
    lo = pr * max(cs.c4 ** A, cs.c5 ** B)
    hi = cs.c4 * pr * math.exp(-cs.c6 * (1.0 - A))
    return min(mid - lo, hi - mid)


def _m_eq42(p: dict, base_is_c1: bool) -> float:
    a, r = p["a"], p["r"]
    cs = modulus.lemma2_constants(a)
    big_c = 0.25 * math.exp(special.ramanujan_R(a) / 2.0)
    base = cs.c1 if base_is_c1 else math.exp((a - 0.5) ** 2)
    pr = modulus.product_P(r)
    mid = math.exp(modulus.grotzsch_ua(a, r)) / r
    lo = big_c ** (1.0 - r * r) * pr
    hi = big_c * base ** (-r * r) * pr
    return min(mid - lo, hi - mid)


def _m_eq48(p: dict) -> float:
    a = p["a"]
    c1 = modulus.lemma2_constants(a).c1
    w = (1.0 - 2.0 * a) ** 2
    lo = w * max(APERY_A / 4.0, 1.0 / a)
    hi = APERY_A * w / (8.0 * a)
    return min(2.0 * c1 - lo, hi - 2.0 * c1)


def _m_lemma3(p: dict, literal: bool) -> float:
    a, k = p["a"], p["k"]
    return _fk(a, k, p["r"], literal) - _fk(a, k, p["r_next"], literal)


def _m_eq49(p: dict) -> float:
    k, r = p["k"], p["r"]
    phi = _phi(k, r)
    return -abs(distortion.phi_k_product(k, r) - phi) / phi


def _half_angle(p: dict) -> tuple[float, float, float]:
    alpha = p["alpha"]
    return p["k"], math.sin(alpha / 2.0), math.cos(alpha / 2.0)


def _m_eq54(p: dict) -> float:
    k, s, c = _half_angle(p)
    lhs = 2.0 * _phi(k, s) * _phi(1.0 / k, c) / (_phi(1.0 / k, s) ** 2 + _phi(k, c) ** 2)
    rhs = 2.0 * _phi(k, s) * _phi(1.0 / k, s)
    return rhs - lhs


def _m_eq55(p: dict) -> float:
    k, s, c = _half_angle(p)
    return (_phi(1.0 / k, s) + _phi(k, c)) ** 2 - (1.0 + 2.0 * _phi(k, s) * _phi(1.0 / k, s))


def _m_eq59(p: dict) -> float:
    k, s, c = _half_angle(p)
    return 1.0 - _phi(k, s) * _phi(1.0 / k, s) / (s ** (1.0 / k) * c ** (1.0 / k))


def _m_eq60(p: dict) -> float:
    k, r = p["k"], p["r"]
    return 4.0 ** (1.0 - 1.0 / k) * r ** (1.0 / k) - _phi(k, r)


def _m_eq61(p: dict) -> float:
    k, s, c = _half_angle(p)
    return c ** k - _phi(1.0 / k, s)


def _m_eq62(p: dict) -> float:
    k, s, c = _half_angle(p)
    return c ** (k - 1.0 / k) - _phi(1.0 / k, s) / c ** (1.0 / k)


def _m_eq64(p: dict) -> float:
    k, r = p["k"], p["r"]
    return 8.0 ** (1.0 - 1.0 / k) - 2.0 ** (1.0 - 1.0 / k) * _phi(k, r) / r ** (1.0 / k)


def _m_phi_identity(p: dict, literal: bool) -> float:
    k, r = p["k"], p["r"]
    arg = r if literal else math.sqrt((1.0 - r) * (1.0 + r))
    return -abs(_phi(k, r) ** 2 + _phi(1.0 / k, arg) ** 2 - 1.0)


def _m_thm4_k1(p: dict) -> float:
    r = p["r"]
    lo, hi = bounds.qc_schwarz_bounds(1.0, r)
    return -max(abs(lo - r), abs(hi - r))


def _m_mori_radial(p: dict, variant: str) -> float:
    k = p["k"]
    z1, z2 = _disk_pair(p["seed"], variant, p["i"])
    stretched = abs(_radial_stretch(z2, k) - _radial_stretch(z1, k))
    return bounds.mori_holder_bound(k, abs(z2 - z1), variant) - stretched


def _m_planted_false(p: dict) -> float:
    # Intentionally false claim phi_2(r) <= r; guards against a vacuous harness.
    r = p["r"]
    return r - _phi(2.0, r)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Target:
    name: str
    classification: str                       # asserted | report_only
    margin: Callable[[dict], float]
    axes: tuple[str, ...]                     # subset of (a, k, r, alpha)
    default_tol: float = 1e-9
    pairwise_r: bool = False                  # margin uses (r, r_next)
    randomized: bool = False                  # margin uses (seed, i)
    k_filter: Callable[[float], bool] | None = None
    a_filter: Callable[[float], bool] | None = None
    sanity: bool = False                      # harness self-check, outside "all"


def _not_degenerate(a: float) -> bool:
    return a != 0.5


_TARGETS = [
    Target("eq5_chain", "report_only", _m_eq5_chain, (), randomized=True),
    Target("lemma2_item1", "report_only", _m_lemma2_item1, ("a", "r")),
    Target("lemma2_item2", "report_only", _m_lemma2_item2, ("a", "r"),
           a_filter=_not_degenerate),
    Target("lemma2_item3", "report_only", _m_lemma2_item3, ("a", "r"),
           a_filter=_not_degenerate),
    Target("eq42_sandwich_literal", "report_only",
           lambda p: _m_eq42(p, base_is_c1=True), ("a", "r"),
           a_filter=_not_degenerate),
    Target("eq42_sandwich_cprime", "report_only",
           lambda p: _m_eq42(p, base_is_c1=False), ("a", "r"),
           a_filter=_not_degenerate),
    Target("eq48_c1_bracket", "report_only", _m_eq48, ("a",)),
    Target("lemma3_literal", "report_only",
           lambda p: _m_lemma3(p, literal=True), ("a", "k", "r"),
           pairwise_r=True, k_filter=lambda k: k > 1.0),
    Target("lemma3_corrected", "asserted",
           lambda p: _m_lemma3(p, literal=False), ("a", "k", "r"),
           pairwise_r=True, k_filter=lambda k: k > 1.0),
    Target("eq49_product_equality", "report_only", _m_eq49, ("k", "r")),
    Target("eq54_sinbeta", "report_only", _m_eq54, ("k", "alpha"),
           k_filter=lambda k: k >= 1.0),
    Target("eq55_sum_square", "report_only", _m_eq55, ("k", "alpha"),
           k_filter=lambda k: k >= 1.0),
    Target("eq59_h_product", "report_only", _m_eq59, ("k", "alpha"),
           k_filter=lambda k: k >= 1.0),
    Target("eq60_phi_4bound", "asserted", _m_eq60, ("k", "r"),
           default_tol=1e-12, k_filter=lambda k: k >= 1.0),
    Target("eq61_phi_cos", "report_only", _m_eq61, ("k", "alpha"),
           k_filter=lambda k: k >= 1.0),
    Target("eq62_ratio_infinitesimal", "report_only", _m_eq62, ("k", "alpha"),
           k_filter=lambda k: k >= 1.0),
    Target("eq64_extremal_8", "report_only", _m_eq64, ("k", "r"),
           k_filter=lambda k: k >= 1.0),
    Target("paper_phi_identity_literal", "report_only",
           lambda p: _m_phi_identity(p, literal=True), ("k", "r")),
    Target("std_phi_identity", "asserted",
           lambda p: _m_phi_identity(p, literal=False), ("k", "r")),
    Target("thm4_k1_equality", "asserted", _m_thm4_k1, ("r",), default_tol=1e-15),
    Target("mori_radial_16", "asserted",
           lambda p: _m_mori_radial(p, "sixteen"), ("k",),
           randomized=True, k_filter=lambda k: k >= 1.0),
    Target("mori_radial_64", "asserted",
           lambda p: _m_mori_radial(p, "sixtyfour"), ("k",),
           randomized=True, k_filter=lambda k: k >= 1.0),
    Target("planted_false", "asserted", _m_planted_false, ("r",), sanity=True),
]

_REGISTRY = {t.name: t for t in _TARGETS}


def registry() -> list[str]:
    """The closed list of registered inequality identifiers."""
    return [t.name for t in _TARGETS]


def target_info(name: str) -> Target:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UsageError(f"unknown target {name!r}") from None


# ---------------------------------------------------------------------------
# Sweep engine
# ---------------------------------------------------------------------------

def _linspace(lo: float, hi: float, steps: int) -> list[float]:
    h = (hi - lo) / (steps - 1)
    return [lo + i * h for i in range(steps)]


def _param_list(target: Target, spec: SweepSpec) -> list[dict]:
    """Cartesian parameter grid in lexicographic (a, k, r/alpha, i) order."""
    a_vals = [a for a in spec.a_values if target.a_filter is None or target.a_filter(a)]
    k_vals = [k for k in spec.k_values if target.k_filter is None or target.k_filter(k)]
    rs = _linspace(*spec.r_grid)

    def axis(name: str) -> list[dict]:
        if name == "a":
            return [{"a": a} for a in sorted(a_vals)]
        if name == "k":
            return [{"k": k} for k in sorted(k_vals)]
        if name == "r":
            if target.pairwise_r:
                return [{"r": rs[i], "r_next": rs[i + 1]} for i in range(len(rs) - 1)]
            return [{"r": r} for r in rs]
        if name == "alpha":
            # the r grid mapped onto (0, pi/2]
            return [{"alpha": r * math.pi / 2.0} for r in rs]
        raise AssertionError(name)

    params: list[dict] = [{}]
    for name in sorted(target.axes):
        params = [dict(p, **q) for p in params for q in axis(name)]
    if target.randomized:
        out = []
        for p in params:
            for i in range(spec.samples):
                q = dict(p)
                q["i"] = i
                q["seed"] = spec.seed
                if target.name == "eq5_chain":
                    z = _omega1_point(spec.seed, i)
                    q["z_re"], q["z_im"] = z.real, z.imag
                out.append(q)
        params = out
    return params


def margin_at(target_name: str, params: dict) -> float:
    """Re-evaluate a target's margin at a report's argmin parameters."""
    return target_info(target_name).margin(params)


def sweep(spec: SweepSpec) -> InequalityReport:
    """Evaluate one target's margin over its full parameter grid."""
    target = target_info(spec.target)
    tol = target.default_tol if spec.tol is None else spec.tol
    t0 = time.perf_counter()
    params = _param_list(target, spec)
    min_margin = math.inf
    argmin: dict = {}
    violations: list[tuple[dict, float]] = []
    for p in params:
        m = target.margin(p)
        if m < min_margin:
            min_margin = m
            argmin = p
        if m < -tol:
            violations.append((p, m))
    wall = int((time.perf_counter() - t0) * 1000.0)
    if target.classification == "asserted":
        status = "fail" if violations else "pass"
    else:
        status = "report_only"
    return InequalityReport(
        target=target.name,
        classification=target.classification,
        evaluations=len(params),
        min_margin=min_margin,
        argmin=argmin,
        violations=tuple(violations),
        status=status,
        wall_time_ms=wall,
    )


def mori_radial_experiment(k: float, samples: int = 10_000, seed: int = 20240811,
                           variant: str = "sixteen") -> InequalityReport:
    """Holder-bound check of the canonical K-quasiconformal radial stretch
    z -> z |z|^{1/K - 1} on seeded uniform disk pairs."""
    if not (k >= 1.0):
        raise UsageError("K must be >= 1")
    if variant not in ("sixteen", "sixtyfour"):
        raise UsageError(f"unknown variant {variant!r}")
    spec = SweepSpec(target=f"mori_radial_{16 if variant == 'sixteen' else 64}",
                     k_values=(k,), samples=samples, seed=seed)
    return sweep(spec)


SUITES: dict[str, tuple[str, ...]] = {
    "identities": ("std_phi_identity", "thm4_k1_equality", "eq60_phi_4bound",
                   "lemma3_corrected"),
    "schottky": ("eq5_chain",),
    "lemma2": ("lemma2_item1", "lemma2_item2", "lemma2_item3",
               "eq42_sandwich_literal", "eq42_sandwich_cprime", "eq48_c1_bracket"),
    "lemma3": ("lemma3_literal", "lemma3_corrected", "eq49_product_equality"),
    "mori": ("eq54_sinbeta", "eq55_sum_square", "eq59_h_product", "eq60_phi_4bound",
             "eq61_phi_cos", "eq62_ratio_infinitesimal", "eq64_extremal_8",
             "paper_phi_identity_literal", "std_phi_identity",
             "mori_radial_16", "mori_radial_64"),
    "sanity": ("planted_false",),
}
SUITES["all"] = tuple(t.name for t in _TARGETS if not t.sanity)


def run_suite(name: str, **overrides) -> list[InequalityReport]:
    """Run a named suite; overrides are SweepSpec fields applied to every target."""
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    # eq5_chain and the mori experiments are per-sample: keep "all" fast by default
    reports = []
    for target in SUITES[name]:
        reports.append(sweep(SweepSpec(target=target, **overrides)))
    return reports


def suite_failed(reports: list[InequalityReport]) -> bool:
    return any(r.status == "fail" for r in reports)
