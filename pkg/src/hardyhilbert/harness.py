"""Randomized property suite over the whole workbench.

Every case draws its own generator from (seed, property id, case index),
so the same configuration reproduces the same report bit for bit no
matter how cases are scheduled.  Failures are recorded as data (inputs
kept in re-runnable form), never raised.

Engine calls go through the module objects (seqspace.xnorm, ...), which
keeps the properties honest under instrumentation and lets a test inject
a corrupted operation to confirm the suite notices.
"""

from __future__ import annotations

import json
import platform
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bmoa, hardyspace, inequalities, seqspace
from ._version import __version__
from .bmoa import _box_integral_slab

DEFAULT_CASES = {
    "bridge_identity": 150,
    "norm_scaling": 100,
    "slow_decay_certificate": 40,
    "pairing_phase_identity": 60,
    "hardy_degree_bound": 25,
    "factorization_contract": 25,
    "witness_closure": 10,
    "carleson_bounded": 3,
}

DEFAULT_TOLERANCES = {
    "bridge_rel": 1e-12,
    "norm_rel": 1e-12,
    "pairing_rel": 1e-12,
    "factor_rel": 1e-8,
    "witness_gap": 1e-8,
    "scan_monotone": 1e-10,
    "carleson_scale_rel": 1e-10,
    "box_additivity_rel": 1e-10,
}

_PROPERTY_IDS = {name: i for i, name in enumerate(DEFAULT_CASES)}
_MAX_WITNESSES = 5
_SEED_MASK = (1 << 64) - 1


@dataclass
class SuiteConfig:
    seed: int = 0
    cases: dict = field(default_factory=dict)        # overrides of DEFAULT_CASES
    tolerances: dict = field(default_factory=dict)   # overrides of DEFAULT_TOLERANCES
    max_sequence_len: int = 96
    max_poly_degree: int = 10
    grid_size: int = 4096

    def case_count(self, name: str) -> int:
        return int(self.cases.get(name, DEFAULT_CASES[name]))

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))


@dataclass
class PropertyResult:
    name: str
    cases: int
    failures: int
    worst_margin: float   # max over cases of (error - tolerance); pass <= 0
    witnesses: list = field(default_factory=list)


@dataclass
class SuiteReport:
    properties: list
    passed: bool
    seed: int
    fingerprint: dict

    def to_dict(self) -> dict:
        return {
            "properties": [asdict(p) for p in self.properties],
            "pass": self.passed,
            "seed": self.seed,
            "fingerprint": self.fingerprint,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _case_rng(seed: int, prop: str, case: int) -> np.random.Generator:
    return np.random.default_rng((seed & _SEED_MASK, _PROPERTY_IDS[prop], case))


def sample_xsequence(rng: np.random.Generator, N: int) -> seqspace.XSequence:
    """Classic, slow-decay, or unit-norm random nonnegative sequence."""
    if N < 1:
        raise ValueError("N must be positive")
    kind = int(rng.integers(0, 3))
    if kind == 0 or N < 2:
        return seqspace.classic_sequence(N)
    if kind == 1:
        r = float(rng.uniform(0.5, 1.0))
        beta = float(rng.uniform(1.05, 3.0))
        return seqspace.trace_to_xsequence(seqspace.slow_decay_sequence(r, beta, N - 1))
    raw = rng.uniform(0.0, 1.0, N)
    norm = seqspace.xnorm(seqspace.XSequence(raw))
    if norm == 0.0:
        raw[0] = 1.0
        norm = seqspace.xnorm(seqspace.XSequence(raw))
    return seqspace.XSequence(raw / norm)


def sample_polynomial(rng: np.random.Generator, degree: int,
                      for_factorization: bool = False) -> hardyspace.AnalyticPoly:
    """Coefficients uniform in the unit disk; factorization-bound samples
    reject roots within 0.05 of the circle, backing off in degree when the
    rejection budget runs out."""
    d = max(1, int(degree))
    total = 0
    while True:
        for _ in range(25):
            total += 1
            if total > 500:
                raise RuntimeError("polynomial sampling failed to find an acceptable root layout")
            mod = np.sqrt(rng.random(d + 1))
            arg = rng.uniform(0.0, 2.0 * np.pi, d + 1)
            coeffs = mod * np.exp(1j * arg)
            while abs(coeffs[-1]) < 1e-2:
                coeffs[-1] = np.sqrt(rng.random()) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
            f = hardyspace.AnalyticPoly(coeffs)
            if not for_factorization:
                return f
            rts = f.roots()
            if rts.size == 0 or float(np.abs(np.abs(rts) - 1.0).min()) >= 0.05:
                return f
        d = max(1, d // 2)


def _record(witnesses: list, case: int, **inputs) -> None:
    if len(witnesses) < _MAX_WITNESSES:
        witnesses.append({"case": case, **inputs})


def _seq_payload(c: seqspace.XSequence) -> list:
    return [float(v) for v in c.values]


def _poly_payload(f: hardyspace.AnalyticPoly) -> dict:
    return {"re": [float(v) for v in f.coeffs.real],
            "im": [float(v) for v in f.coeffs.imag]}


def _prop_bridge_identity(config: SuiteConfig) -> PropertyResult:
    name = "bridge_identity"
    tol = config.tol("bridge_rel")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        la, lb = int(rng.integers(1, 65)), int(rng.integers(1, 65))
        a, b = rng.random(la), rng.random(lb)
        c = sample_xsequence(rng, la + lb - 1)
        lhs = inequalities.hilbert_form(a, b, c)
        product = hardyspace.cauchy_product(a, b)
        rhs = inequalities.hardy_sum(hardyspace.AnalyticPoly(product), c)
        rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
        margin = rel - tol
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, a=list(map(float, a)), b=list(map(float, b)),
                    c=_seq_payload(c), lhs=lhs, rhs=rhs)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_norm_scaling(config: SuiteConfig) -> PropertyResult:
    name = "norm_scaling"
    tol = config.tol("norm_rel")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        N = int(rng.integers(1, config.max_sequence_len + 1))
        raw = rng.uniform(0.0, 1.0, N)
        raw[int(rng.integers(0, N))] += 0.5  # keep the norm away from zero
        x = seqspace.XSequence(raw)
        lam = float(rng.uniform(0.0, 4.0))
        scaled = seqspace.XSequence(lam * raw)
        homog = abs(seqspace.xnorm(scaled) - lam * seqspace.xnorm(x))
        homog_rel = homog / max(lam * seqspace.xnorm(x), 1e-300) if lam > 0 else homog
        extended = seqspace.XSequence(np.concatenate([raw, rng.uniform(0.0, 1.0, int(rng.integers(1, 17)))]))
        ext_violation = seqspace.xnorm(x) - seqspace.xnorm(extended)
        ratio_gap = abs(float(seqspace.prefix_ratios(x).max()) - x.xnorm_sq)
        margin = max(homog_rel - tol, ext_violation - 1e-14, ratio_gap)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, values=_seq_payload(x), lam=lam)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_slow_decay_certificate(config: SuiteConfig) -> PropertyResult:
    name = "slow_decay_certificate"
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        r = float(rng.uniform(0.5, 1.0))
        beta = float(rng.uniform(1.05, 3.0))
        N = int(rng.integers(50, 3001))
        t = seqspace.slow_decay_sequence(r, beta, N)
        m_nonneg = 0.0 if np.all(t.margins >= 0.0) else float(-t.margins.min())
        cert = seqspace.verify_margins(t)
        m_cert = 0.0 if cert.ok else max(1e-300, -cert.min_margin)
        replay = seqspace.replay_values(r, t.choice)
        m_replay = 0.0 if np.array_equal(replay, t.values) else 1.0
        exported = seqspace.trace_to_xsequence(t)
        m_bound = seqspace.xnorm(exported) - 2.0 * np.sqrt(beta)
        rep = seqspace.infinitude_report(t, s=r + float(rng.uniform(0.01, 0.15)))
        consistent = (
            rep.power_count == rep.power_positions.size
            and (rep.power_count == 0 or rep.largest_power_index == int(rep.power_positions[-1]))
            and all(d2.running_max >= d1.running_max - 1e-15
                    for d1, d2 in zip(rep.decades, rep.decades[1:]))
        )
        m_report = 0.0 if consistent else 1.0
        margin = max(m_nonneg, m_cert, m_replay, m_bound, m_report)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, r=r, beta=beta, N=N)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_pairing_phase_identity(config: SuiteConfig) -> PropertyResult:
    name = "pairing_phase_identity"
    tol = config.tol("pairing_rel")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        f = sample_polynomial(rng, int(rng.integers(1, 17)))
        c = sample_xsequence(rng, f.degree + 1)
        sq = hardyspace.hp_norm(f, 2) ** 2
        rel_self = abs(hardyspace.dual_pairing(f, f) - sq) / max(sq, 1e-300)
        alpha = hardyspace.phase_sequence(f)
        aligned = hardyspace.AnalyticPoly(alpha * c.values)
        pairing = hardyspace.dual_pairing(f, aligned)
        target = inequalities.hardy_sum(f, c)
        rel_aligned = abs(pairing - target) / max(target, 1e-300)
        margin = max(rel_self, rel_aligned) - tol
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, f=_poly_payload(f), c=_seq_payload(c))
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_hardy_degree_bound(config: SuiteConfig) -> PropertyResult:
    name = "hardy_degree_bound"
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        f = sample_polynomial(rng, int(rng.integers(1, config.max_poly_degree + 1)),
                              for_factorization=True)
        c = sample_xsequence(rng, 2 * f.degree + 1)
        check = inequalities.hardy_degree_bound_check(f, c)
        if check.skipped:
            margin = 0.0
        else:
            margin = (check.lhs - check.rhs) / max(check.rhs, 1e-300)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, f=_poly_payload(f), c=_seq_payload(c),
                    lhs=check.lhs, rhs=check.rhs)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_factorization_contract(config: SuiteConfig) -> PropertyResult:
    name = "factorization_contract"
    tol = config.tol("factor_rel")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        f = sample_polynomial(rng, int(rng.integers(1, config.max_poly_degree + 1)),
                              for_factorization=True)
        g, h = hardyspace.riesz_factorize(f)
        M = config.grid_size
        fv = hardyspace.boundary_grid(f, M).samples
        gv = hardyspace.boundary_grid(g, M).samples
        hv = hardyspace.boundary_grid(h, M).samples
        f2 = hardyspace.hp_norm(f, 2)
        f1 = hardyspace.hp_norm(f, 1)
        residual = float(np.abs(fv - gv * hv).max())
        defect = abs(f1 - hardyspace.hp_norm(g, 2) * hardyspace.hp_norm(h, 2))
        product = hardyspace.cauchy_product(g.coeffs, h.coeffs)
        padded = np.zeros(product.size, dtype=complex)
        padded[: f.coeffs.size] = f.coeffs
        coeff_err = float(np.abs(product - padded).max())
        margin = max(residual - tol * f2, defect - tol * f1, coeff_err - tol * f2)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, f=_poly_payload(f), residual=residual, defect=defect)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_witness_closure(config: SuiteConfig) -> PropertyResult:
    name = "witness_closure"
    tol = config.tol("witness_gap")
    mono_tol = config.tol("scan_monotone")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        N = int(rng.integers(2, 25))
        if i % 2 == 0:
            c = seqspace.classic_sequence(2 * N - 1)
        else:
            c = sample_xsequence(rng, 2 * N - 1)
        report = inequalities.equivalence_witness(c, N)
        margin = report.gap - tol
        scan = inequalities.best_constant_scan(c, sorted({max(1, N // 2), N}))
        for lo, hi in zip(scan, scan[1:]):
            margin = max(margin, lo.value - hi.value - mono_tol)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, c=_seq_payload(c), N=N, gap=report.gap)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


def _prop_carleson_bounded(config: SuiteConfig) -> PropertyResult:
    name = "carleson_bounded"
    scale_tol = config.tol("carleson_scale_rel")
    add_tol = config.tol("box_additivity_rel")
    n_cases = config.case_count(name)
    failures, worst, wits = 0, -np.inf, []
    quad = {"depth": 6, "centers_per_length": 4, "radial_points": 64, "angular_points": 64}
    for i in range(n_cases):
        rng = _case_rng(config.seed, name, i)
        variant = i % 3
        if variant == 0:
            c = seqspace.classic_sequence(96)
        elif variant == 1:
            c = seqspace.trace_to_xsequence(
                seqspace.slow_decay_sequence(float(rng.uniform(0.5, 1.0)),
                                             float(rng.uniform(1.1, 2.5)), 95))
        else:
            c = seqspace.classic_sequence(96)
        report = bmoa.carleson_constant(c, **quad)
        margin = 0.0 if bmoa.sweep_is_bounded(report) else 1.0
        if variant == 2:
            lam = float(rng.uniform(0.5, 2.0))
            scaled = bmoa.carleson_constant(seqspace.XSequence(lam * c.values), **quad)
            for rec, rec_s in zip(report.records, scaled.records):
                rel = abs(rec_s.ratio - lam**2 * rec.ratio) / max(report.sup_ratio, 1e-300)
                margin = max(margin, rel - scale_tol)
        kscan = bmoa.k_constant(0.999, 4)
        margin = max(margin, kscan.value - kscan.limit * (1.0 + 1e-9))
        g = hardyspace.AnalyticPoly(c.values)
        arc = bmoa.Arc(float(rng.uniform(0.0, 2 * np.pi)), 2.0**-3)
        lo = 1.0 - arc.length_norm
        mid = 1.0 - arc.length_norm / 2.0
        whole = _box_integral_slab(g, arc, lo, 1.0, 64, 64)
        parts = _box_integral_slab(g, arc, lo, mid, 64, 64) + _box_integral_slab(g, arc, mid, 1.0, 64, 64)
        margin = max(margin, abs(whole - parts) / max(whole, 1e-300) - add_tol)
        direct = bmoa.carleson_box_integral(g, arc, 64, 64)
        margin = max(margin, abs(direct - whole) / max(whole, 1e-300) - add_tol)
        bmo = bmoa.bmo_seminorm(g, 4, 2048)
        bmo_scaled = bmoa.bmo_seminorm(hardyspace.AnalyticPoly(2.0 * c.values), 4, 2048)
        margin = max(margin, abs(bmo_scaled - 2.0 * bmo) / max(bmo, 1e-300) - 1e-12)
        worst = max(worst, margin)
        if margin > 0:
            failures += 1
            _record(wits, i, c=_seq_payload(c), variant=variant)
    return PropertyResult(name, n_cases, failures, float(worst), wits)


_PROPERTY_FUNCS = {
    "bridge_identity": _prop_bridge_identity,
    "norm_scaling": _prop_norm_scaling,
    "slow_decay_certificate": _prop_slow_decay_certificate,
    "pairing_phase_identity": _prop_pairing_phase_identity,
    "hardy_degree_bound": _prop_hardy_degree_bound,
    "factorization_contract": _prop_factorization_contract,
    "witness_closure": _prop_witness_closure,
    "carleson_bounded": _prop_carleson_bounded,
}


def run_suite(config: SuiteConfig | None = None) -> SuiteReport:
    """Run every property and aggregate a deterministic machine-readable verdict."""
    config = config or SuiteConfig()
    results = [_PROPERTY_FUNCS[name](config) for name in DEFAULT_CASES]
    fingerprint = {
        "package": __version__,
        "numpy": np.__version__,
        "python": platform.python_version(),
    }
    return SuiteReport(
        properties=results,
        passed=all(r.failures == 0 for r in results),
        seed=config.seed,
        fingerprint=fingerprint,
    )
