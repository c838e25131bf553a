"""Named verification suites.

Each suite runs seeded random instances against the invariants of one part
of the library and reports, per check, the worst residual seen.  Most
checks are upper bounds (pass iff residual <= tolerance).  The
counterexample suite also has lower-bound checks (pass iff the measured
defect is at least the threshold); those carry ``kind="min"``.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import comparison as cmp
from . import measures as ms
from .algebra import (
    Algebra,
    Element,
    Projection,
    SpinFactor,
    SymmetricFactor,
    _factor_eigs,
    _sa_norm,
    involution,
    jordan_mul,
    pairing,
    triple_product,
    u_map,
)
from .errors import JordanError, ParseError, TraceUnreachable, UnknownSuite
from .lattice import complement, join, meet, range_projection
from .sampling import close_pair, orthogonal_family, positive_below, stream, subprojection
from .traces import Ordering, normalized_trace, subprojection_with_trace, trace_compare

SIXTH = 1.0 / 6.0
DEFAULT_SLACK = 1e-6


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    kind: str = "max"

    @property
    def passed(self):
        if math.isnan(self.residual):
            return False
        if self.kind == "min":
            return self.residual >= self.tolerance
        return self.residual <= self.tolerance

    def as_dict(self):
        out = {"name": self.name, "residual": self.residual, "tolerance": self.tolerance, "pass": self.passed}
        if self.kind != "max":
            out["kind"] = self.kind
        return out


@dataclass
class SuiteReport:
    suite: str
    algebra: str
    seed: int
    trials: int
    checks: list
    duration_ms: float
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [c.as_dict() for c in self.checks],
            "duration_ms": self.duration_ms,
            "notes": list(self.notes),
        }

    def render(self):
        lines = [f"suite {self.suite} on {self.algebra} (seed {self.seed}, trials {self.trials})"]
        for c in self.checks:
            rel = ">=" if c.kind == "min" else "<="
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  {status}  {c.name:<34} {c.residual:.3e} {rel} {c.tolerance:.3e}")
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.append(f"  {'PASS' if self.passed else 'FAIL'} ({self.duration_ms:.0f} ms)")
        return "\n".join(lines)


class _Checks:
    """Running worst-case per named check; first registration fixes order."""

    def __init__(self, tol_override=None):
        self._checks = {}
        self._tol = tol_override
        self.notes = []

    def add(self, name, value, tolerance, kind="max"):
        value = float(value)
        if kind == "min":
            # tolerance is the target; the slack below it defaults to 1e-6
            tolerance = tolerance - (DEFAULT_SLACK if self._tol is None else self._tol)
        elif self._tol is not None:
            tolerance = self._tol
        c = self._checks.get(name)
        if c is None:
            self._checks[name] = Check(name, value, tolerance, kind)
        elif kind == "min":
            c.residual = min(c.residual, value)
        else:
            c.residual = max(c.residual, value)

    def ensure(self, name, tolerance, kind="max"):
        """Register a check that may see no instances (residual 0)."""
        if name not in self._checks:
            self.add(name, 0.0, tolerance, kind)

    def result(self):
        return list(self._checks.values())


# ---------------------------------------------------------------------------
# residual helpers
# ---------------------------------------------------------------------------

def _size(x):
    """max(||Re x||, ||Im x||) for the self-adjoint real and imaginary parts."""
    h = 0.5 * (x + involution(x))
    k = (x - involution(x)) * (-0.5j)
    return max(_sa_norm(h), _sa_norm(k))


def _psd_violation(x):
    """How far a self-adjoint element is from being positive."""
    return max([0.0] + [-lam for lam, _, _ in _factor_eigs(x)])


def _unit_sa(alg, rng):
    x = alg.random_self_adjoint(rng)
    n = _sa_norm(x)
    return x / n if n > 0 else x


def _random_ranks(alg, rng, low=1):
    """Per-summand ranks in [low, rank - 1] (0 when the range is empty)."""
    out = []
    for f in alg.factors:
        hi = f.rank - 1
        out.append(int(rng.integers(low, hi + 1)) if hi >= low else 0)
    return out


def _require_envelope(alg, suite):
    if not alg.envelope:
        raise ParseError(f"suite {suite} needs matrix (m) or symmetric (s) summands only, got {alg}")


def _trial(seed, suite, name, i):
    return stream(seed, suite, name, i)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_axioms(alg, trials, seed, chk):
    for t in range(trials):
        rng = _trial(seed, "axioms", "pair", t)
        a, b, c = (_unit_sa(alg, rng) for _ in range(3))
        a2 = jordan_mul(a, a)
        chk.add("jordan_identity", _size(jordan_mul(jordan_mul(a2, b), a) - jordan_mul(jordan_mul(a, b), a2)), 1e-8)
        chk.add("jb1_norm_of_square", abs(_sa_norm(a2) - _sa_norm(a) ** 2), 1e-8)
        b2 = jordan_mul(b, b)
        chk.add("jb2_monotone_squares", max(0.0, _sa_norm(a2) - _sa_norm(a2 + b2)), 1e-9)
        lhs = u_map(u_map(a, b), c)
        rhs = u_map(a, u_map(b, u_map(a, c)))
        chk.add("fundamental_identity", _size(lhs - rhs), 1e-8)
        for f in alg.factors:
            if not f.envelope:
                continue
            x = f.random_element(rng)
            chk.add("jb_star_norm_cube", abs(f.norm(x) ** 3 - f.norm(f.u_map(x, f.star(x)))), 1e-7)
    if not any(f.envelope for f in alg.factors):
        chk.notes.append("no matrix or symmetric summand: the C*-type norm identity was not sampled")


def _diag_oracle(alg, chk):
    for i, f in enumerate(alg.factors):
        if not f.envelope or f.n > 4:
            continue
        masks = list(itertools.product((0.0, 1.0), repeat=f.n))
        for a, b in itertools.product(masks, masks):
            p = Projection._trusted(alg.embed(i, np.diag(a)))
            q = Projection._trusted(alg.embed(i, np.diag(b)))
            want_meet = alg.embed(i, np.diag(np.minimum(a, b)))
            want_join = alg.embed(i, np.diag(np.maximum(a, b)))
            chk.add("meet_join_diagonal_oracle",
                    max(_size(meet(p, q).element - want_meet), _size(join(p, q).element - want_join)), 1e-8)
        return True
    return False


def suite_lattice(alg, trials, seed, chk):
    for t in range(trials):
        rng = _trial(seed, "lattice", "pair", t)
        q = alg.random_projection(rng)
        p = subprojection(q, rng)
        chk.add("orthomodularity", _size(join(p, meet(q, complement(p))).element - q.element), 1e-8)
        # pairs with a common part so that meets are not trivially zero
        r = subprojection(alg.random_projection(rng), rng)
        rest = complement(r)
        p = Projection._trusted(r.element + subprojection(rest, rng).element)
        q = Projection._trusted(r.element + subprojection(rest, rng).element)
        m = meet(p, q)
        chk.add("de_morgan", _size(complement(join(p, q)).element - meet(complement(p), complement(q)).element), 1e-8)
        chk.add("join_is_support_of_sum", _size(join(p, q).element - range_projection(p + q).element), 1e-8)
        chk.add("meet_contains_common_part", _size(jordan_mul(r, m) - r.element), 1e-8)
        chk.add("meet_below_both", max(_size(jordan_mul(m, p) - m.element), _size(jordan_mul(m, q) - m.element)), 1e-8)
    if not _diag_oracle(alg, chk):
        chk.notes.append("no matrix summand of size <= 4: exhaustive diagonal oracle skipped")


def suite_comparison(alg, trials, seed, chk):
    _require_envelope(alg, "comparison")
    one = alg.unit()
    for t in range(trials):
        rng = _trial(seed, "comparison", "exchange", t)
        f, g = close_pair(alg, rng, 0.9, ranks=_random_ranks(alg, rng))
        s = cmp.exchange_symmetry(f, g)
        chk.add("exchange_maps_f_to_g", _size(u_map(s, f) - g.element), 1e-8)
        chk.add("exchange_is_symmetry", max(_size(jordan_mul(s, s) - one), _size(s - involution(s))), 1e-8)
        d = (f - g)
        c = one - jordan_mul(d, d)
        comm = max(np.max(np.abs(cp @ fp - fp @ cp), initial=0.0) for cp, fp in zip(c.parts, f.parts))
        chk.add("exchange_c_commutes_with_f", comm, 1e-9)
        bound = math.sqrt(2.0) * math.sqrt(cmp.distance(f, g))
        for _ in range(5):
            p = subprojection(f, rng)
            chk.add("exchange_displacement_bound", max(0.0, _size(p.element - u_map(s, p)) - bound), 1e-6)

        rng = _trial(seed, "comparison", "norm_chain", t)
        p, q = alg.random_projection(rng), alg.random_projection(rng)
        lhs = _sa_norm(u_map(p, p - q))
        env = max(np.linalg.norm((a - b) @ a, 2) ** 2 for a, b in zip(p.parts, q.parts))
        chk.add("norm_chain_identity", abs(lhs - env), 1e-9)
        chk.add("norm_chain_bound", max(0.0, lhs - cmp.distance(p, q) ** 2), 1e-9)

        rng = _trial(seed, "comparison", "halving", t)
        p = alg.random_projection(rng, _random_ranks(alg, rng))
        if not p.is_zero():
            h = cmp.halve(p)
            chk.add("halving_sum", _size(h.q1 + h.q2 + h.r - p.element), 1e-8)
            chk.add("halving_exchange", _size(u_map(h.symmetry, h.q1) - h.q2.element), 1e-8)
            chk.add("halving_orthogonal", _size(jordan_mul(h.q1, h.q2)), 1e-8)
            chk.add("halving_remainder_rank", max(0, max(h.r.rank) - 1), 0)

        rng = _trial(seed, "comparison", "isoclinic", t)
        ranks = [f.n // 3 for f in alg.factors]
        if any(ranks):
            _isoclinic_trial(alg, rng, ranks, chk)
    for j in range(20):
        theta = j * (np.pi / 2) / 20
        f, h = cmp.isoclinic_model(theta)
        c2 = math.cos(theta) ** 2
        chk.add("isoclinic_model_identities",
                max(_size(u_map(f, h) - c2 * f.element), _size(u_map(h, f) - c2 * h.element)), 1e-12)
    if not any(f.n >= 3 for f in alg.factors):
        chk.notes.append("all summands smaller than 3: isoclinic_mid needs spare room and was skipped")


def _isoclinic_trial(alg, rng, ranks, chk):
    f, g = close_pair(alg, rng, 0.95, ranks=ranks)
    spare = complement(join(f, g))
    parts = []
    for fac, part, k in zip(alg.factors, spare.parts, ranks):
        cols = cmp.range_basis(part, isinstance(fac, SymmetricFactor))[:, :k]
        parts.append(cols @ cols.conj().T)
    e = Projection._trusted(Element(alg, tuple(parts)))
    h = cmp.isoclinic_mid(f, g, e)
    theta = cmp.half_angle(f, g)
    c2 = math.cos(theta) ** 2
    dfg = cmp.distance(f, g)
    chk.add("isoclinic_mid_distances", max(0.0, cmp.distance(f, h) - dfg, cmp.distance(g, h) - dfg), 1e-7)
    chk.add("isoclinic_mid_compressions",
            max(_size(u_map(f, h) - c2 * f.element), _size(u_map(g, h) - c2 * g.element)), 1e-7)
    spread = 0.0
    for fp, hp, k in zip(f.parts, h.parts, ranks):
        if k:
            sv = np.linalg.svd(fp @ hp, compute_uv=False)[:k]
            spread = max(spread, float(np.max(np.abs(sv - math.sqrt(c2)))))
    chk.add("isoclinic_mid_constant_angle", spread, 1e-7)


def suite_epm(alg, trials, seed, chk):
    _require_envelope(alg, "epm")
    ranks = [f.n // 3 for f in alg.factors]
    for t in range(trials):
        rng = _trial(seed, "epm", "triple", t)
        p, q = orthogonal_family(alg, rng, ranks, 2)
        pq = Projection._trusted(p + q)
        e = subprojection(pq, rng)
        for eps in (0.1, 0.2, 0.3):
            try:
                pair = cmp.e_pm_construct(p, q, e, eps)
            except JordanError:
                chk.add("epm_projections_certified", float("inf"), 1e-8)
                continue
            chk.add("epm_projections_certified", 0.0, 1e-8)
            e4 = eps ** 4
            cross = 2.0 * eps * eps * triple_product(p, e, q)
            dom = max(_size(jordan_mul(x, pq) - x.element) for x in (pair.e_minus, pair.e_plus))
            chk.add("epm_dominated_by_p_plus_q", dom, 1e-8)
            chk.add("epm_equivalent_to_p",
                    sum(x.rank != p.rank for x in (pair.e_minus, pair.e_plus)), 0)
            chk.add("epm_c_bounds", max(_psd_violation(p - pair.c), _psd_violation(0.5 * e4 * p - (p - pair.c))), 1e-8)
            chk.add("epm_d_bounds", max(_psd_violation(pair.d), _psd_violation(0.5 * e4 * q - pair.d)), 1e-8)
            chk.add("epm_cross_term",
                    max(_size(pair.e_minus - pair.c - pair.d - cross), _size(pair.e_plus - pair.c - pair.d + cross)), 1e-8)


def christensen_trial(alg, rng, ranks, chk):
    fam = orthogonal_family(alg, rng, ranks, 4)
    p = fam[0]
    syms = [cmp.swap_symmetry(p, fam[i]) for i in (1, 2, 3)]
    a = positive_below(p, rng, 0.5)
    b = positive_below(p, rng, 0.5)
    r, q = cmp.christensen_pair(p, *syms, a, b)
    chk.add("christensen_orthogonal", _size(jordan_mul(r, q)), 1e-8)
    chk.add("christensen_compressions", max(_size(u_map(p, r) - a), _size(u_map(p, q) - b)), 1e-8)


def reversible_trial(alg, rng, ranks, chk):
    fam = orthogonal_family(alg, rng, ranks, 6)
    p = fam[0]
    syms = [cmp.swap_symmetry(p, fam[i]) for i in range(1, 6)]
    c = positive_below(p, rng, 0.5)
    d = positive_below(p, rng, 0.5)
    r, q = cmp.reversible_pair(p, *syms, c, d)
    chk.add("reversible_orthogonal", _size(jordan_mul(r, q)), 1e-8)
    chk.add("reversible_compressions", max(_size(u_map(p, r) - c), _size(u_map(p, q) - d)), 1e-8)


def suite_christensen(alg, trials, seed, chk):
    _require_envelope(alg, "christensen")
    ranks = [f.n // 4 for f in alg.factors]
    if not any(ranks):
        raise ParseError(f"suite christensen needs a summand of size >= 4, got {alg}")
    rev = [f.n // 6 for f in alg.factors]
    for t in range(trials):
        christensen_trial(alg, _trial(seed, "christensen", "pair", t), ranks, chk)
        if any(rev):
            reversible_trial(alg, _trial(seed, "christensen", "reversible", t), rev, chk)
    if not any(rev):
        chk.notes.append("no summand of size >= 6: the five-symmetry variant was skipped")


def _diag_trace_compare(alg, chk):
    for i, f in enumerate(alg.factors):
        if not f.envelope or f.n > 4:
            continue
        masks = list(itertools.product((0.0, 1.0), repeat=f.n))
        bad = 0
        for a, b in itertools.product(masks, masks):
            p = Projection._trusted(alg.embed(i, np.diag(a)))
            q = Projection._trusted(alg.embed(i, np.diag(b)))
            ra, rb = int(sum(a)), int(sum(b))
            want = Ordering.EQUAL if ra == rb else (Ordering.LESS if ra < rb else Ordering.GREATER)
            bad += trace_compare(p, q)[i] != want
        chk.add("trace_compare_matches_rank", bad, 0)


def suite_traces(alg, trials, seed, chk):
    one = alg.unit()
    chk.add("trace_of_unit", max(abs(v - 1.0) for v in normalized_trace(one)), 1e-9)
    for t in range(trials):
        rng = _trial(seed, "traces", "element", t)
        x = alg.random_self_adjoint(rng)
        p0 = alg.random_projection(rng)
        s = 2.0 * p0.element - one
        chk.add("trace_symmetry_invariance",
                max(abs(a - b) for a, b in zip(normalized_trace(u_map(s, x)), normalized_trace(x))), 1e-9)
        coef = rng.standard_normal(len(alg))
        z = sum((c * alg.central_unit(i) for i, c in enumerate(coef)), alg.zero())
        tz = normalized_trace(jordan_mul(z, x))
        chk.add("trace_centre_linear", max(abs(a - c * b) for a, c, b in zip(tz, coef, normalized_trace(x))), 1e-9)
        y = jordan_mul(x, x)
        ty = normalized_trace(y)
        chk.add("trace_positive", max(0.0, -min(ty)), 1e-9)
        faith = 0.0
        for i, f in enumerate(alg.factors):
            top = max(lam for lam, j, _ in _factor_eigs(y) if j == i)
            faith = max(faith, top / f.rank - ty[i])
        chk.add("trace_faithful_lower_bound", max(0.0, faith), 1e-9)
        p, q = alg.random_projection(rng), alg.random_projection(rng)
        want = tuple(Ordering.EQUAL if a == b else (Ordering.LESS if a < b else Ordering.GREATER)
                     for a, b in zip(p.rank, q.rank))
        chk.add("trace_compare_random_ranks", int(trace_compare(p, q) != want), 0)
    _diag_trace_compare(alg, chk)


def _ivp_for(p, chk, label):
    alg = p.algebra
    grids = [range(r + 1) for r in p.rank]
    for ks in itertools.product(*grids):
        w = [k / f.rank for k, f in zip(ks, alg.factors)]
        try:
            q = subprojection_with_trace(p, w)
        except JordanError:
            chk.add(f"ivp_attainable_{label}", float("inf"), 1e-9)
            continue
        err = max(abs(a - b) for a, b in zip(normalized_trace(q), w))
        chk.add(f"ivp_attainable_{label}", max(err, _size(jordan_mul(q, p) - q.element)), 1e-9)
    misses = 0
    for i, f in enumerate(alg.factors):
        bad_values = [(k + 0.5) / f.rank for k in range(p.rank[i])]
        if p.rank[i] < f.rank:
            bad_values.append((p.rank[i] + 1) / f.rank)
        bad_values.append(-1.0 / f.rank)
        for v in bad_values:
            w = [0.0] * len(alg)
            w[i] = v
            try:
                subprojection_with_trace(p, w)
                misses += 1
            except TraceUnreachable:
                pass
    chk.add(f"ivp_unattainable_{label}", misses, 0)


def suite_ivp(alg, trials, seed, chk):
    _ivp_for(Projection._trusted(alg.unit()), chk, "unit")
    for t in range(trials):
        rng = _trial(seed, "ivp", "projection", t)
        _ivp_for(alg.random_projection(rng), chk, "random")
    chk.ensure("ivp_attainable_random", 1e-9)
    chk.ensure("ivp_unattainable_random", 0)


def suite_quasilinear(alg, trials, seed, chk):
    one = Projection._trusted(alg.unit())
    for t in range(trials):
        rng = _trial(seed, "quasilinear", "measure", t)
        mu = ms.random_witness(alg, rng)
        rho = mu.witness
        x = alg.random_element(rng)
        chk.add("extension_matches_pairing", abs(ms.quasi_linear_extend(mu, x) - pairing(rho, x)), 1e-9)
        frame = [q.element for _, q in ms.spectral_resolution(alg.random_self_adjoint(rng))]
        u = sum((rng.standard_normal() * q for q in frame), alg.zero())
        v = sum((rng.standard_normal() * q for q in frame), alg.zero())
        gap = ms.quasi_linear_extend(mu, u + v) - ms.quasi_linear_extend(mu, u) - ms.quasi_linear_extend(mu, v)
        chk.add("commuting_family_additivity", abs(gap), 1e-9)
        a1 = ms.alpha(mu).value
        mu1 = mu(one)
        y = alg.random_self_adjoint(rng)
        y = ms.positive_part(y) / max(_sa_norm(y), 1e-300)
        chk.add("positive_contraction_below_alpha", max(0.0, ms.quasi_linear_extend(mu, y).real - a1), 1e-9)
        pos = alg.zero()
        for lam, q in ms.spectral_resolution(rho):
            if lam > 0:
                pos = pos + q.element
        chk.add("alpha_attained_by_positive_support", abs(mu(Projection._trusted(pos)) - a1), 1e-9)
        sym = ms.symmetry_sup_check(mu, trials=10, seed=seed + t)
        chk.add("two_alpha_minus_mu1_consistent", abs(sym.two_alpha_minus_mu_one - (2 * a1 - mu1)), 1e-9)
        chk.add("symmetry_sup_equals_two_alpha_minus_mu1", abs(sym.sup - sym.two_alpha_minus_mu_one), 1e-9)
        chk.add("symmetry_sup_below_two_variation", max(0.0, sym.two_alpha_minus_mu_one - sym.two_variation), 1e-9)
        central = sum(ms.alpha(mu, Projection._trusted(alg.central_unit(i))).value for i in range(len(alg)))
        chk.add("alpha_central_additivity", abs(central - a1), 1e-9)
        chk.add("projection_additivity", ms.projection_additivity_residual(mu, trials=5, seed=seed + t), 1e-10)
        chk.add("variation_dominates_alpha", max(0.0, a1 - ms.variation(mu).value), 1e-12)


def suite_gleason(alg, trials, seed, chk):
    for t in range(trials):
        rng = _trial(seed, "gleason", "measure", t)
        mu = ms.random_witness(alg, rng)
        fit = ms.fit_linear_functional(mu, validation_trials=200, seed=seed + t)
        chk.add("witness_recovery", _sa_norm(fit.density - mu.witness), 1e-8)
        chk.add("validation_residual", fit.residual, 1e-8)
    chk.ensure("witness_recovery", 1e-8)
    chk.ensure("validation_residual", 1e-8)
    if any(f.rank == 2 for f in alg.factors):
        chk.notes.append("witness measures are linear by construction, so they extend even on rank-two summands")


def _counterexample_measure(alg):
    if len(alg) == 1:
        f = alg.factors[0]
        if isinstance(f, SymmetricFactor) and f.n == 2:
            return ms.kadison_s2()
        if isinstance(f, SpinFactor):
            return ms.spin_counterexample(f.k)
    raise ParseError(f"suite counterexample runs on s2 or a single spin factor, got {alg}")


def suite_counterexample(alg, trials, seed, chk):
    mu = _counterexample_measure(alg)
    expected = (1.0, 0.0, 0.5, 0.5)
    chk.add("clash_values", max(abs(mu(p) - v) for p, v in zip(mu.probes, expected)), 0.0)
    chk.add("finite_additivity", ms.projection_additivity_residual(mu, trials=max(trials, 1), seed=seed), 1e-12)
    fit = ms.fit_linear_functional(mu, validation_trials=trials, seed=seed)
    chk.add("fit_residual", fit.residual, SIXTH, kind="min")
    chk.add("additivity_defect", ms.additivity_residual(mu, trials=trials, seed=seed), SIXTH, kind="min")
    chk.notes.append("lower-bound checks: the measured defect must reach the threshold")


def suite_uniform_continuity(alg, trials, seed, chk):
    _require_envelope(alg, "uniform-continuity")
    slack = 0.0
    for t in range(trials):
        rng = _trial(seed, "uniform-continuity", "pair", t)
        mu = ms.random_witness(alg, rng, normalize=True)
        scale = 2.0 * ms.alpha(mu).value - mu(Projection._trusted(alg.unit()))
        p, q = close_pair(alg, rng, 0.2499, ranks=_random_ranks(alg, rng))
        delta = cmp.distance(p, q)
        bound = 2.0 * scale * (delta + math.sqrt(2.0 * delta))
        gap = abs(mu(p) - mu(q))
        chk.add("continuity_bound", max(0.0, gap - bound), 1e-6)
        if bound > 0:
            slack = max(slack, gap / bound)
    chk.notes.append(f"largest ratio |mu(p) - mu(q)| / bound: {slack:.4f}")


@dataclass(frozen=True)
class Suite:
    run: Callable
    summary: str
    default_trials: int


SUITES = {
    "axioms": Suite(suite_axioms, "Jordan identity, norm axioms, fundamental identity", 100),
    "lattice": Suite(suite_lattice, "orthomodularity, De Morgan, diagonal meet/join oracle", 50),
    "comparison": Suite(suite_comparison, "exchange symmetries, halving, isoclinic projections", 50),
    "epm": Suite(suite_epm, "e_+/e_- projections below p + q", 30),
    "christensen": Suite(suite_christensen, "projection pairs with prescribed compressions", 30),
    "traces": Suite(suite_traces, "centre-valued trace axioms and comparison", 100),
    "ivp": Suite(suite_ivp, "subprojections of every attainable trace", 5),
    "quasilinear": Suite(suite_quasilinear, "quasi-linear extension of witness measures", 20),
    "gleason": Suite(suite_gleason, "linear reconstruction of witness measures", 20),
    "counterexample": Suite(suite_counterexample, "finitely additive measure with no linear extension", 200),
    "uniform-continuity": Suite(suite_uniform_continuity, "continuity bound for close projection pairs", 200),
}


def run_suite(suite, algebra, trials=None, seed=0, tol=None):
    """Run a named suite and return its :class:`SuiteReport`."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    entry = SUITES[suite]
    alg = algebra if isinstance(algebra, Algebra) else Algebra.parse(algebra)
    trials = entry.default_trials if trials is None else int(trials)
    if trials < 0:
        raise ValueError("trials must be non-negative")
    chk = _Checks(tol)
    start = time.perf_counter()
    entry.run(alg, trials, int(seed), chk)
    elapsed = (time.perf_counter() - start) * 1000.0
    return SuiteReport(suite, str(alg), int(seed), trials, chk.result(), round(elapsed, 3), chk.notes)
