"""Order, orthogonality and lattice operations on projections."""
from __future__ import annotations

from .algebra import (
    Element,
    Projection,
    _sa_norm,
    _same,
    as_element,
    involution,
    is_positive,
    jordan_mul,
    spectral_resolution,
)
from .errors import NotPositive

ORDER_TOL = 1e-8
MEET_WINDOW = 1e-6
SUPPORT_TOL = 1e-8


def _as_projection(p):
    return p if isinstance(p, Projection) else Projection.certify(p)


def _herm(x):
    # p o q is self-adjoint up to rounding for self-adjoint p, q
    return 0.5 * (x + involution(x))


def leq(p, q, tol=ORDER_TOL):
    """p <= q, decided by ||p o q - p||."""
    p, q = _same(p, q)
    return _sa_norm(_herm(jordan_mul(p, q) - p)) <= tol


def orthogonal(p, q, tol=ORDER_TOL):
    p, q = _same(p, q)
    return _sa_norm(_herm(jordan_mul(p, q))) <= tol


def complement(p):
    p = _as_projection(p)
    return Projection._trusted(p.algebra.unit() - p.element)


def zero_projection(algebra):
    return Projection._trusted(algebra.zero())


def unit_projection(algebra):
    return Projection._trusted(algebra.unit())


def _spectral_part(x, keep):
    x = as_element(x)
    out = x.algebra.zero()
    for lam, proj in spectral_resolution(x):
        if keep(lam):
            out = out + proj.element
    return Projection._trusted(out)


def meet(p, q):
    """Infimum: spectral projection of p + q for eigenvalues near 2.

    Eigenvalues of p + q lie in [0, 2]; the eigenvalue-2 eigenspace is the
    intersection of the ranges.  Values within ``MEET_WINDOW`` of 2 count;
    nearly tangent ranges with eigenvalues just below the window are treated
    as not intersecting.
    """
    p, q = _same(p, q)
    return _spectral_part(p + q, lambda lam: lam >= 2.0 - MEET_WINDOW)


def join(p, q):
    """Supremum, via De Morgan from ``meet``."""
    return complement(meet(complement(p), complement(q)))


def central_cover(p):
    """Smallest central projection above p: the unit of every summand p touches."""
    p = _as_projection(p)
    alg = p.algebra
    parts = tuple(f.unit() if r > 0 else f.zero() for f, r in zip(alg.factors, p.rank))
    return Projection._trusted(Element(alg, parts))


def range_projection(x, tol=SUPPORT_TOL):
    """Support projection of a positive element."""
    x = as_element(x)
    if not is_positive(x):
        raise NotPositive("range projection needs a positive element")
    return _spectral_part(x, lambda lam: lam > tol)
