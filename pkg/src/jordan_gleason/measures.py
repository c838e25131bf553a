"""Bounded finitely additive measures on projection lattices.

A measure is a function on projections.  Witness-backed measures carry a
self-adjoint density rho and evaluate ``<rho, p>`` under the trace pairing
(each summand contributes its normalized trace of ``rho o p`` with weight
one).  Oracle measures are plain functions with no density; the built-in
ones live on rank-two factors, where finite additivity does not force
linearity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .algebra import (
    Algebra,
    Element,
    Projection,
    SpinFactor,
    SymmetricFactor,
    as_element,
    involution,
    negative_part,
    normalized_trace_total,
    pairing,
    positive_part,
    self_adjoint_residual,
    spectral_resolution,
    u_map,
    TOL_PROJ,
)
from .errors import DescriptorMismatch, DimensionTooSmall, NotSelfAdjoint, UnknownSuite
from .lattice import leq
from .sampling import stream, subprojection

MEMBERSHIP_TOL = 1e-10


@dataclass(frozen=True)
class Measure:
    """A real function on the projections of ``algebra``.

    ``probes`` are projections of special interest (the ones an oracle
    measure is defined around); samplers always include them.
    """

    algebra: Algebra
    evaluate: Callable[[Projection], float]
    bound: float
    witness: Element | None = None
    name: str = "measure"
    probes: tuple = field(default=())

    def __call__(self, p):
        p = p if isinstance(p, Projection) else Projection.certify(p)
        if p.algebra != self.algebra:
            raise DescriptorMismatch(f"measure on {self.algebra} applied to a projection of {p.algebra}")
        return float(self.evaluate(p))


class Estimate(NamedTuple):
    value: float
    exact: bool


class Fit(NamedTuple):
    density: Element
    residual: float


@dataclass(frozen=True)
class QuasiLinearReport:
    additivity_residual: float
    symmetry_sup: float
    alpha_one: float
    alpha_exact: bool
    mu_one: float
    variation_one: float
    fitted: Element
    fit_residual: float


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def _masses(x):
    """(positive, negative) trace masses of a self-adjoint element."""
    return normalized_trace_total(positive_part(x)), normalized_trace_total(negative_part(x))


def from_density(rho, name="witness"):
    rho = as_element(rho)
    if self_adjoint_residual(rho) > TOL_PROJ:
        raise NotSelfAdjoint("a density must be self-adjoint")
    rho = 0.5 * (rho + involution(rho))
    pos, neg = _masses(rho)

    def evaluate(p):
        return pairing(rho, p.element).real

    return Measure(rho.algebra, evaluate, max(pos, neg), witness=rho, name=name)


def random_witness(algebra, rng, normalize=False):
    """Witness measure from a random self-adjoint density.

    With ``normalize`` the density is rescaled so that sup |mu(p)| = 1.
    """
    rho = algebra.random_self_adjoint(rng)
    if normalize:
        pos, neg = _masses(rho)
        rho = rho / max(pos, neg)
    return from_density(rho)


def _s2_probes(alg, embed):
    r2 = np.sqrt(2.0)
    mats = [
        np.array([[1.0, 0.0], [0.0, 0.0]]),
        np.array([[0.0, 0.0], [0.0, 1.0]]),
        0.5 * np.array([[1.0, 1.0], [1.0, 1.0]]),
        np.array([[1.0 / 3.0, r2 / 3.0], [r2 / 3.0, 2.0 / 3.0]]),
    ]
    return tuple(Projection._trusted(alg.element(embed(m))) for m in mats)


def kadison_s2():
    """The two-valued-on-a-frame measure on S2: mu(E11) = 1, mu(E22) = 0 and
    mu = 1/2 on every other rank-one projection.  It is finitely additive but
    agrees with no linear functional."""
    alg = Algebra((SymmetricFactor(2),))
    e11 = np.diag([1.0, 0.0])
    e22 = np.diag([0.0, 1.0])

    def evaluate(p):
        r = p.rank[0]
        if r != 1:
            return r / 2.0
        m = p.parts[0]
        if np.max(np.abs(m - e11)) <= MEMBERSHIP_TOL:
            return 1.0
        if np.max(np.abs(m - e22)) <= MEMBERSHIP_TOL:
            return 0.0
        return 0.5

    return Measure(alg, evaluate, 1.0, name="kadison_s2", probes=_s2_probes(alg, lambda m: m))


def s2_to_spin(m, k):
    """Jordan embedding of a real symmetric 2x2 matrix into spin(k)."""
    out = np.zeros(k + 1, dtype=np.complex128)
    out[0] = 0.5 * (m[0, 0] + m[1, 1])
    out[1] = 0.5 * (m[0, 0] - m[1, 1])
    out[2] = m[0, 1]
    return out


def spin_counterexample(k):
    """The S2 measure transported into spin(k) and extended by 1/2 on every
    rank-one projection outside the embedded copy."""
    if k < 2:
        raise DimensionTooSmall(f"spin factor dimension must be at least 2, got {k}")
    alg = Algebra((SpinFactor(k),))

    def evaluate(p):
        r = p.rank[0]
        if r != 1:
            return r / 2.0
        u = 2.0 * p.parts[0][1:]
        if np.max(np.abs(u[2:]), initial=0.0) > MEMBERSHIP_TOL:
            return 0.5
        if np.max(np.abs(u[:2] - [1.0, 0.0])) <= MEMBERSHIP_TOL:
            return 1.0
        if np.max(np.abs(u[:2] - [-1.0, 0.0])) <= MEMBERSHIP_TOL:
            return 0.0
        return 0.5

    probes = _s2_probes(alg, lambda m: s2_to_spin(m, k))
    return Measure(alg, evaluate, 1.0, name=f"spin_counterexample:{k}", probes=probes)


def builtin(identifier):
    """Oracle measures by name: ``kadison_s2`` or ``spin_counterexample:K``."""
    if identifier == "kadison_s2":
        return kadison_s2()
    head, _, tail = identifier.partition(":")
    if head == "spin_counterexample" and tail.isdigit():
        return spin_counterexample(int(tail))
    raise UnknownSuite(f"no built-in measure named {identifier!r}")


def to_document(measure):
    """Serializable form of a witness-backed measure."""
    if measure.witness is None:
        raise ValueError(f"{measure.name} has no density; refer to it by name instead")
    coeffs = measure.witness.coefficients()
    return {
        "algebra": str(measure.algebra),
        "density": {"re": coeffs.real.tolist(), "im": coeffs.imag.tolist()},
    }


def from_document(doc):
    alg = Algebra.parse(doc["algebra"])
    flat = np.asarray(doc["density"]["re"]) + 1j * np.asarray(doc["density"]["im"])
    parts, at = [], 0
    for f in alg.factors:
        size = int(np.prod(f.shape))
        parts.append(flat[at:at + size].reshape(f.shape))
        at += size
    if at != flat.size:
        raise DescriptorMismatch(f"density has {flat.size} coefficients, {alg} needs {at}")
    return from_density(alg.element(*parts))


# ---------------------------------------------------------------------------
# quasi-linear extension and derived functionals
# ---------------------------------------------------------------------------

def _extend_sa(measure, h):
    return sum((lam * measure(p) for lam, p in spectral_resolution(h)), 0.0)


def quasi_linear_extend(measure, x):
    """Sum of lambda * mu(p) over the spectral resolution, split into real
    and imaginary self-adjoint parts for general x."""
    x = as_element(x)
    h = 0.5 * (x + involution(x))
    k = (x - involution(x)) * (-0.5j)
    out = complex(_extend_sa(measure, h))
    if self_adjoint_residual(x) > 0.0:
        out += 1j * _extend_sa(measure, k)
    return out


def _samples_below(measure, p, rng, trials):
    yield p
    for q in measure.probes:
        if leq(q, p):
            yield q
    for _ in range(trials):
        yield subprojection(p, rng)


def alpha(measure, p=None, trials=200, seed=0):
    """sup of mu(q) over q <= p.

    Exact for witness measures (positive mass of the compression of the
    density to p).  Otherwise a sampled lower bound, flagged ``exact=False``.
    """
    p = Projection._trusted(measure.algebra.unit()) if p is None else p
    if measure.witness is not None:
        return Estimate(_masses(u_map(p, measure.witness))[0], True)
    rng = stream(seed, "alpha", measure.name)
    best = max(measure(q) for q in _samples_below(measure, p, rng, trials))
    return Estimate(max(best, 0.0), False)


def variation(measure, p=None, trials=200, seed=0):
    """sup of |mu(q)| over q <= p; exact for witness measures."""
    p = Projection._trusted(measure.algebra.unit()) if p is None else p
    if measure.witness is not None:
        return Estimate(max(_masses(u_map(p, measure.witness))), True)
    rng = stream(seed, "variation", measure.name)
    return Estimate(max(abs(measure(q)) for q in _samples_below(measure, p, rng, trials)), False)


def _sample_projections(measure, rng, trials):
    yield from measure.probes
    if measure.witness is not None:
        # the positive spectral projection attains the symmetry supremum
        pos = measure.algebra.zero()
        for lam, q in spectral_resolution(measure.witness):
            if lam > 0:
                pos = pos + q.element
        yield Projection._trusted(pos)
    for _ in range(trials):
        yield measure.algebra.random_projection(rng)


class SymmetrySup(NamedTuple):
    sup: float
    two_alpha_minus_mu_one: float
    two_variation: float
    exact: bool


def symmetry_sup_check(measure, trials=200, seed=0):
    """Sampled sup of mu-bar(2p - 1) against 2 alpha(1) - mu(1) and 2 V(1)."""
    alg = measure.algebra
    rng = stream(seed, "symmetry", measure.name)
    one = alg.unit()
    sup = max(
        quasi_linear_extend(measure, 2.0 * p.element - one).real
        for p in _sample_projections(measure, rng, trials)
    )
    a = alpha(measure, trials=trials, seed=seed)
    mu_one = measure(Projection._trusted(one))
    return SymmetrySup(sup, 2.0 * a.value - mu_one, 2.0 * variation(measure, trials=trials, seed=seed).value, a.exact)


def fit_linear_functional(measure, validation_trials=200, seed=0):
    """Least-squares density reproducing mu-bar on a self-adjoint basis.

    Each summand is solved separately through the Gram matrix of its basis
    under the trace pairing.  The residual is the largest |mu(p) - <rho, p>|
    over the probes and ``validation_trials`` random projections.
    """
    alg = measure.algebra
    parts = []
    for i, f in enumerate(alg.factors):
        basis = f.sa_basis()
        gram = np.array([[f.pairing(a, b).real for b in basis] for a in basis])
        values = np.array([quasi_linear_extend(measure, alg.embed(i, b)).real for b in basis])
        coeffs = np.linalg.solve(gram, values)
        parts.append(sum((c * b for c, b in zip(coeffs, basis)), f.zero()))
    rho = Element(alg, tuple(parts))
    rng = stream(seed, "fit", measure.name)
    samples = list(measure.probes) + [alg.random_projection(rng) for _ in range(validation_trials)]
    residual = max((abs(measure(p) - pairing(rho, p.element).real) for p in samples), default=0.0)
    return Fit(rho, float(residual))


def _random_positive(alg, rng, scale):
    x = alg.random_self_adjoint(rng)
    y = positive_part(x) + positive_part(-x) * rng.uniform(0.0, 1.0)
    lam = max((abs(v) for v, _ in spectral_resolution(y)), default=0.0)
    return y * (scale / lam) if lam > 0 else y


def _targeted_pairs(measure):
    """Sums of two probe projections, rescaled so that a + b <= 1."""
    for i, p in enumerate(measure.probes):
        for q in measure.probes[i + 1:]:
            total = p.element + q.element
            lam = max(abs(v) for v, _ in spectral_resolution(total))
            yield p.element / lam, q.element / lam


def additivity_residual(measure, trials=200, seed=0):
    """max |mu-bar(a + b) - mu-bar(a) - mu-bar(b)| over positive pairs with
    a + b <= 1: rescaled probe pairs plus ``trials`` random pairs."""
    alg = measure.algebra
    rng = stream(seed, "additivity", measure.name)
    pairs = list(_targeted_pairs(measure))
    pairs += [(_random_positive(alg, rng, 0.5), _random_positive(alg, rng, 0.5)) for _ in range(trials)]
    worst = 0.0
    for a, b in pairs:
        gap = quasi_linear_extend(measure, a + b) - quasi_linear_extend(measure, a) - quasi_linear_extend(measure, b)
        worst = max(worst, abs(gap))
    return float(worst)


def projection_additivity_residual(measure, trials=200, seed=0):
    """max |mu(p + q) - mu(p) - mu(q)| over orthogonal pairs cut from the
    spectral frames of random self-adjoint elements."""
    alg = measure.algebra
    rng = stream(seed, "orthogonal", measure.name)
    worst = 0.0
    for _ in range(trials):
        pieces = [q.element for _, q in spectral_resolution(alg.random_self_adjoint(rng))]
        labels = rng.integers(0, 3, size=len(pieces))
        p = sum((x for x, c in zip(pieces, labels) if c == 0), alg.zero())
        q = sum((x for x, c in zip(pieces, labels) if c == 1), alg.zero())
        p, q = Projection._trusted(p), Projection._trusted(q)
        worst = max(worst, abs(measure(Projection._trusted(p.element + q.element)) - measure(p) - measure(q)))
    return float(worst)


def quasi_linear_report(measure, trials=200, seed=0):
    sym = symmetry_sup_check(measure, trials, seed)
    fit = fit_linear_functional(measure, trials, seed)
    a = alpha(measure, trials=trials, seed=seed)
    return QuasiLinearReport(
        additivity_residual=additivity_residual(measure, trials, seed),
        symmetry_sup=sym.sup,
        alpha_one=a.value,
        alpha_exact=a.exact,
        mu_one=measure(Projection._trusted(measure.algebra.unit())),
        variation_one=variation(measure, trials=trials, seed=seed).value,
        fitted=fit.density,
        fit_residual=fit.residual,
    )
