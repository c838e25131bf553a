"""Centre-valued traces on finite direct sums of factors.

The centre of a direct sum of factors is spanned by the summand units, so a
centre value is one real number per summand.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlbertFactor,
    Algebra,
    Element,
    Projection,
    SpinFactor,
    SymmetricFactor,
    as_element,
    self_adjoint_residual,
    spectral_resolution,
    u_map,
    TOL_PROJ,
)
from .comparison import range_basis
from .errors import DescriptorMismatch, NotSelfAdjoint, TraceUnreachable

COMPARE_TOL = 1e-9
GRID_TOL = 1e-9


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class CentreValue:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __le__(self, other):
        return all(a <= b + COMPARE_TOL for a, b in zip(self.values, other.values))

    def close_to(self, other, tol=COMPARE_TOL):
        return len(self) == len(other) and all(abs(a - b) <= tol for a, b in zip(self, other))


def normalized_trace(x):
    """Per-summand normalized trace: tr/n, the scalar part of a spin element,
    or a third of the diagonal sum on the Albert factor."""
    x = as_element(x)
    if self_adjoint_residual(x) > TOL_PROJ:
        raise NotSelfAdjoint("trace is only defined here on self-adjoint elements")
    return CentreValue(float(f.trace(p).real) for f, p in zip(x.algebra.factors, x.parts))


def trace_compare(p, q, tol=COMPARE_TOL):
    """Per-summand comparison of normalized traces."""
    if as_element(p).algebra != as_element(q).algebra:
        raise DescriptorMismatch("trace comparison needs equal descriptors")
    out = []
    for a, b in zip(normalized_trace(p), normalized_trace(q)):
        if abs(a - b) <= tol:
            out.append(Ordering.EQUAL)
        elif a < b:
            out.append(Ordering.LESS)
        else:
            out.append(Ordering.GREATER)
    return tuple(out)


def attainable_grid(factor):
    """The discrete set of normalized traces of projections in a factor."""
    return [k / factor.rank for k in range(factor.rank + 1)]


def _target_ranks(p, w):
    alg = p.algebra
    if len(w) != len(alg.factors):
        raise DescriptorMismatch(f"centre value has {len(w)} entries, algebra has {len(alg.factors)}")
    ranks = []
    for f, have, wi in zip(alg.factors, p.rank, w):
        k = int(round(wi * f.rank))
        if abs(wi * f.rank - k) > GRID_TOL * f.rank:
            raise TraceUnreachable(f"{f.label}: {wi!r} is not a multiple of 1/{f.rank}")
        if k < 0 or k > have:
            raise TraceUnreachable(f"{f.label}: trace {wi!r} outside [0, {have}/{f.rank}]")
        ranks.append(k)
    return ranks


def _albert_pieces(part, factor):
    """Rank-one projections summing to an Albert projection, chosen
    deterministically from U_p of a fixed positive definite element."""
    rng = np.random.default_rng(0)
    alg = Algebra((factor,))
    pe = Projection._trusted(alg.element(part))
    for _ in range(20):
        y = factor.zero()
        y[:3] = [1.0, 2.0, 4.0]
        y[3:] = 0.05 * rng.standard_normal(24)
        res = spectral_resolution(u_map(pe, alg.element(y)))
        pieces = [proj.parts[0] for lam, proj in res if lam > 1e-6]
        if all(int(round(3 * factor.trace(pc).real)) == 1 for pc in pieces):
            return pieces
    raise TraceUnreachable("could not split the Albert projection")  # pragma: no cover


def subprojection_with_trace(p, w):
    """q <= p with normalized trace exactly w (per summand).

    The attainable traces in a factor of rank n are 0, 1/n, ..., 1; anything
    else raises :class:`TraceUnreachable`.  Matrix summands keep the first
    k eigenvectors of p in Jacobi order.
    """
    p = p if isinstance(p, Projection) else Projection.certify(p)
    w = w if isinstance(w, CentreValue) else CentreValue(w)
    ranks = _target_ranks(p, w)
    alg = p.algebra
    parts = []
    for f, part, have, k in zip(alg.factors, p.parts, p.rank, ranks):
        if k == 0:
            parts.append(f.zero())
        elif k == have:
            parts.append(part.copy())
        elif f.envelope:
            vecs = range_basis(part, real=isinstance(f, SymmetricFactor))[:, :k]
            parts.append(vecs @ vecs.conj().T)
        elif isinstance(f, SpinFactor):
            # only k = 1 below the unit remains
            parts.append(f.rank_one(np.eye(f.k)[0]))
        elif isinstance(f, AlbertFactor):
            if have == 3:
                diag = f.zero()
                diag[:k] = 1.0
                parts.append(diag)
            else:
                parts.append(sum(_albert_pieces(part, f)[:k]))
        else:  # pragma: no cover
            raise TraceUnreachable(f"unsupported factor {f.label}")
    return Projection.certify(Element(alg, tuple(parts)))
