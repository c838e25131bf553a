"""Seeded random constructions used by the verification suites and tests.

Every stream is derived from an integer seed plus a text label, so two
checks never share random numbers and adding a check does not perturb the
others.
"""
from __future__ import annotations

import zlib

import numpy as np

from .algebra import Element, Projection, SymmetricFactor, haar_unitary, spectral_resolution, u_map
from .comparison import range_basis
from .errors import UnsupportedFactor


def stream(seed, *labels):
    """Independent generator for ``(seed, label...)``."""
    words = [int(seed) & 0xFFFFFFFF] + [zlib.crc32(str(x).encode()) for x in labels]
    return np.random.default_rng(words)


def _envelope_only(alg):
    for f in alg.factors:
        if not f.envelope:
            raise UnsupportedFactor(f"{f.label} has no associative envelope")


def _unitary(f, rng):
    return haar_unitary(f.n, rng, real=isinstance(f, SymmetricFactor))


def orthogonal_family(alg, rng, ranks, count):
    """``count`` mutually orthogonal projections with the given rank vector,
    obtained from one Haar unitary per summand."""
    _envelope_only(alg)
    fams = [[] for _ in range(count)]
    for f, k in zip(alg.factors, ranks):
        if k * count > f.n:
            raise ValueError(f"{count} orthogonal rank-{k} projections do not fit in {f.label}")
        u = _unitary(f, rng)
        for j in range(count):
            cols = u[:, j * k:(j + 1) * k]
            fams[j].append(cols @ cols.conj().T)
    return [Projection._trusted(Element(alg, tuple(parts))) for parts in fams]


def conjugate(x, unitaries):
    """Apply ``w x w*`` summand-wise."""
    return Element(x.algebra, tuple(w @ p @ w.conj().T for w, p in zip(unitaries, x.parts)))


def small_unitaries(alg, rng, scale):
    """Cayley transforms (1 - tK)^(-1)(1 + tK) of random skew K with ||tK|| = scale."""
    _envelope_only(alg)
    out = []
    for f in alg.factors:
        if isinstance(f, SymmetricFactor):
            g = rng.standard_normal((f.n, f.n))
        else:
            g = rng.standard_normal((f.n, f.n)) + 1j * rng.standard_normal((f.n, f.n))
        k = g - g.conj().T
        k = k * (scale / max(np.linalg.norm(k, 2), 1e-300))
        eye = np.eye(f.n)
        out.append(np.linalg.solve(eye - k, eye + k).astype(np.complex128))
    return out


def close_pair(alg, rng, max_dist, ranks=None, min_dist=0.0):
    """Projections (f, g) with ``min_dist <= ||f - g|| <= max_dist`` and equal ranks."""
    from .comparison import distance

    _envelope_only(alg)
    while True:
        f = alg.random_projection(rng, ranks)
        target = rng.uniform(min_dist, max_dist)
        scale = np.tan(0.5 * np.arcsin(min(target, 0.999)))
        g = Projection._trusted(conjugate(f.element, small_unitaries(alg, rng, scale)))
        dist = distance(f, g)
        if min_dist <= dist <= max_dist:
            return f, g


def subprojection(p, rng):
    """Random projection below p.

    Envelope summands rotate a random-rank block of range(p) by a Haar
    unitary; other summands take a random subset of the non-zero spectral
    projections of U_p(x) for a random self-adjoint x.
    """
    alg = p.algebra
    parts = []
    for i, (f, part) in enumerate(zip(alg.factors, p.parts)):
        if not np.any(part):
            parts.append(f.zero())
            continue
        if f.envelope:
            basis = range_basis(part, real=isinstance(f, SymmetricFactor))
            k = basis.shape[1]
            m = int(rng.integers(0, k + 1))
            w = haar_unitary(k, rng, real=isinstance(f, SymmetricFactor))
            cols = basis @ w[:, :m]
            parts.append(cols @ cols.conj().T)
            continue
        x = alg.embed(i, f.random_self_adjoint(rng) + 3.0 * f.unit())
        y = u_map(Projection._trusted(alg.embed(i, part)), x)
        pieces = [proj.parts[i] for lam, proj in spectral_resolution(y) if abs(lam) > 1e-9]
        keep = [pc for pc in pieces if rng.random() < 0.5]
        parts.append(sum(keep, f.zero()))
    return Projection._trusted(Element(alg, tuple(parts)))


def positive_below(p, rng, scale=1.0):
    """Random a with 0 <= a <= scale * p (compression of a random positive)."""
    alg = p.algebra
    x = alg.random_self_adjoint(rng)
    res = spectral_resolution(u_map(p, x))
    # rescale eigenvalues into [0, scale] with a random profile
    out = alg.zero()
    for lam, proj in res:
        if abs(lam) <= 1e-12:
            continue
        out = out + float(scale * rng.uniform(0.0, 1.0)) * proj.element
    return out
