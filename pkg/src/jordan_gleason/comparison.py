"""Comparison of projections: exchange symmetries, halving, isoclinic
projections and explicit projection pairs with prescribed compressions.

Functions marked *envelope only* work summand-by-summand on matrix and
symmetric factors, where the associative product is available; they raise
:class:`UnsupportedFactor` when a spin or Albert summand carries data.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import _kernels
from .algebra import (
    Algebra,
    Element,
    Projection,
    SymmetricFactor,
    _factor_eigs,
    _same,
    _sa_norm,
    functional_calculus,
    as_element,
    involution,
    is_positive,
    jordan_mul,
    sqrt_positive,
    triple_product,
    u_bilinear,
    u_map,
)
from .errors import (
    AngleOutOfRange,
    InversionIllConditioned,
    MissingSpareRoom,
    NotDominated,
    NotOrthogonal,
    PreconditionViolation,
    TooFarApart,
    UnsupportedFactor,
    ZeroProjection,
)
from .lattice import leq, orthogonal

INVERSE_FLOOR = 1e-12
CHECK_TOL = 1e-8


def inverse_sqrt(x, floor=INVERSE_FLOOR):
    """x^(-1/2) for a positive invertible element."""
    x = as_element(x)
    lowest = min(lam for lam, _, _ in _factor_eigs(x))
    if lowest < floor:
        raise InversionIllConditioned(f"smallest eigenvalue {lowest:.3g} below the inversion floor")
    return functional_calculus(x, lambda t: 1.0 / np.sqrt(t))


def distance(p, q):
    """||p - q|| for self-adjoint p, q."""
    p, q = _same(p, q)
    return _sa_norm(p - q)


def is_symmetry(s, tol=CHECK_TOL):
    s = as_element(s)
    return (_sa_norm(1j * (s - involution(s))) <= tol
            and _sa_norm(jordan_mul(s, s) - s.algebra.unit()) <= tol)


# ---------------------------------------------------------------------------
# exchange symmetry
# ---------------------------------------------------------------------------

def exchange_symmetry(f, g):
    """Symmetry s with U_s(f) = g for projections at distance < 1.

    s = c^(-1/2) o (f + g - 1) with c = 1 - (f - g)^2; c commutes with f
    and g, so the Jordan product agrees with the associative one.
    """
    f, g = _same(f, g)
    gap = distance(f, g)
    if gap >= 1.0 - 1e-9:
        raise TooFarApart(f"||f - g|| = {gap:.6g}")
    one = f.algebra.unit()
    diff = f - g
    c = one - jordan_mul(diff, diff)
    return jordan_mul(inverse_sqrt(c), f + g - one)


def equivalent(p, q):
    """Jordan equivalence in a direct sum of factors: equal rank vectors."""
    p = p if isinstance(p, Projection) else Projection.certify(p)
    q = q if isinstance(q, Projection) else Projection.certify(q)
    _same(p, q)
    return p.rank == q.rank


# ---------------------------------------------------------------------------
# envelope helpers
# ---------------------------------------------------------------------------

def _check_envelope(*xs):
    alg = as_element(xs[0]).algebra
    for i, f in enumerate(alg.factors):
        if f.envelope:
            continue
        if any(np.any(as_element(x).parts[i]) for x in xs):
            raise UnsupportedFactor(f"{f.label} summand has no associative envelope")


def range_basis(matrix, real=False):
    """Orthonormal basis (Jacobi order) of the range of a projection matrix."""
    h = 0.5 * (matrix + matrix.conj().T)
    w, v = _kernels.jacobi_eigh(h.real if real else h)
    cols = v[:, w >= 0.5]
    return cols.real.astype(np.complex128) if real else cols


class Halving(NamedTuple):
    q1: Projection
    q2: Projection
    r: Projection
    symmetry: Element


def halve(p):
    """Split p = q1 + q2 + r with q1 ~ q2 exchanged by a symmetry and r of
    rank at most one per summand.  *Envelope only.*

    The range of p is spanned by its eigenvalue-one eigenvectors in Jacobi
    order; q1 takes the first m, q2 the next m and r the leftover one.
    """
    p = p if isinstance(p, Projection) else Projection.certify(p)
    if p.is_zero():
        raise ZeroProjection("cannot halve the zero projection")
    _check_envelope(p)
    alg = p.algebra
    q1s, q2s, rs, ss = [], [], [], []
    for f, part in zip(alg.factors, p.parts):
        if not f.envelope:
            zero = f.zero()
            q1s.append(zero), q2s.append(zero), rs.append(zero), ss.append(f.unit())
            continue
        vecs = range_basis(part, real=isinstance(f, SymmetricFactor))
        m = vecs.shape[1] // 2
        a, b = vecs[:, :m], vecs[:, m:2 * m]
        q1 = a @ a.conj().T
        q2 = b @ b.conj().T
        rest = vecs[:, 2 * m:]
        s = b @ a.conj().T + a @ b.conj().T + f.unit() - q1 - q2
        q1s.append(q1), q2s.append(q2), rs.append(rest @ rest.conj().T), ss.append(s)
    mk = lambda parts: Projection._trusted(Element(alg, tuple(parts)))
    return Halving(mk(q1s), mk(q2s), mk(rs), Element(alg, tuple(ss)))


def swap_symmetry(p, q):
    """Symmetry exchanging two orthogonal projections of equal rank.
    *Envelope only.*"""
    p, q = _same(p, q)
    _check_envelope(p, q)
    alg = p.algebra
    parts = []
    for f, a, b in zip(alg.factors, p.parts, q.parts):
        if not f.envelope:
            parts.append(f.unit())
            continue
        real = isinstance(f, SymmetricFactor)
        u, w = range_basis(a, real), range_basis(b, real)
        if u.shape[1] != w.shape[1]:
            raise PreconditionViolation("equal rank", f"{u.shape[1]} vs {w.shape[1]} in {f.label}")
        parts.append(w @ u.conj().T + u @ w.conj().T + f.unit() - a - b)
    return Element(alg, tuple(parts))


# ---------------------------------------------------------------------------
# isoclinic projections
# ---------------------------------------------------------------------------

def isoclinic_model(theta):
    """The pair (E11, h_theta) in S2 with constant angle theta."""
    if not (0.0 <= theta < np.pi / 2):
        raise AngleOutOfRange(f"theta = {theta!r} not in [0, pi/2)")
    alg = Algebra.parse("s2")
    c, s = np.cos(theta), np.sin(theta)
    f = np.array([[1.0, 0.0], [0.0, 0.0]])
    h = np.array([[c * c, c * s], [c * s, s * s]])
    return Projection._trusted(alg.element(f)), Projection._trusted(alg.element(h))


def half_angle(f, g):
    """theta = asin(||U_f(1 - g)||^(1/2)) / 2."""
    f, g = _same(f, g)
    val = _sa_norm(u_map(f, f.algebra.unit() - g))
    return 0.5 * float(np.arcsin(min(1.0, np.sqrt(max(val, 0.0)))))


def isoclinic_mid(f, g, e):
    """Projection h isoclinic with the same angle to both f and g.
    *Envelope only.*

    Uses the two-projection canonical form: principal vectors u_i of f and
    w_i = cos(phi_i) u_i + sin(phi_i) v_i of g come from an SVD, the spare
    room e supplies orthonormal e_i, and

        h_i = cos(t) u_i + cos(t) (w_i - cos(phi_i) u_i) / (1 + cos(phi_i))
              + sqrt(1 - 2 cos(t)^2 / (1 + cos(phi_i))) e_i

    with t = phi_max / 2, so that <h_i, u_j> = <h_i, w_j> = cos(t) delta_ij.
    """
    f = f if isinstance(f, Projection) else Projection.certify(f)
    g = g if isinstance(g, Projection) else Projection.certify(g)
    e = e if isinstance(e, Projection) else Projection.certify(e)
    _same(f, g, e)
    _check_envelope(f, g, e)
    if distance(f, g) >= 1.0 - 1e-9:
        raise TooFarApart(f"||f - g|| = {distance(f, g):.6g}")
    if e.rank != f.rank:
        raise MissingSpareRoom(f"spare projection has rank {e.rank}, need {f.rank}")
    if not (orthogonal(e, f) and orthogonal(e, g)):
        raise MissingSpareRoom("spare projection must be orthogonal to f and g")
    alg = f.algebra
    theta = half_angle(f, g)
    ct = np.cos(theta)
    parts = []
    for fac, fp, gp, ep in zip(alg.factors, f.parts, g.parts, e.parts):
        if not fac.envelope or not np.any(fp):
            parts.append(fac.zero())
            continue
        real = isinstance(fac, SymmetricFactor)
        U, W, E = range_basis(fp, real), range_basis(gp, real), range_basis(ep, real)
        a, sig, bh = np.linalg.svd(U.conj().T @ W)
        u = U @ a
        w = W @ bh.conj().T
        cos_phi = np.clip(sig, 0.0, 1.0)
        coef = ct / (1.0 + cos_phi)
        rad = np.sqrt(np.clip(1.0 - 2.0 * ct * ct / (1.0 + cos_phi), 0.0, None))
        hv = ct * u + (w - u * cos_phi) * coef + E * rad
        parts.append(hv @ hv.conj().T)
    return Projection._trusted(Element(alg, tuple(parts)))


# ---------------------------------------------------------------------------
# the e_+/e_- construction
# ---------------------------------------------------------------------------

class EPair(NamedTuple):
    e_minus: Projection
    e_plus: Projection
    c: Element
    d: Element


def e_pm_construct(p, q, e, eps):
    """Projections e_-/e_+ = c + d +/- 2 eps^2 {p, e, q} below p + q.

    c = p/2 + (p/4 - eps^4 U_p U_e(q))^(1/2),
    d = q/2 - (q/4 - eps^4 U_q U_e(p))^(1/2).
    """
    p, q, e = _same(p, q, e)
    if not (0.0 < eps < 0.5):
        raise PreconditionViolation("0 < eps < 1/2", f"eps = {eps!r}")
    pp = Projection.certify(p)
    qq = Projection.certify(q)
    ee = Projection.certify(e)
    if not orthogonal(pp, qq):
        raise NotOrthogonal("p and q must be orthogonal")
    if not leq(ee, Projection._trusted(p + q)):
        raise NotDominated("e must lie below p + q")
    e4 = eps ** 4
    c = 0.5 * p + sqrt_positive(0.25 * p - e4 * u_map(p, u_map(e, q)))
    d = 0.5 * q - sqrt_positive(0.25 * q - e4 * u_map(q, u_map(e, p)))
    cross = 2.0 * eps * eps * triple_product(p, e, q)
    e_minus = Projection.certify(c + d + cross)
    e_plus = Projection.certify(c + d - cross)
    return EPair(e_minus, e_plus, c, d)


# ---------------------------------------------------------------------------
# projection pairs with prescribed compressions
# ---------------------------------------------------------------------------

def _require(cond, clause, detail=""):
    if not cond:
        raise PreconditionViolation(clause, detail)


def _check_frame(p, syms, tol=CHECK_TOL):
    """Check that the U_{s_i}(p) are projections orthogonal to p and each other."""
    frame = [Projection.certify(p)]
    for i, s in enumerate(syms, 1):
        _require(is_symmetry(s, tol), f"s{i} is a symmetry")
        qi = u_map(s, p)
        try:
            frame.append(Projection.certify(qi))
        except Exception as exc:  # pragma: no cover - certify only fails on bad s
            raise PreconditionViolation(f"U_s{i}(p) is a projection", str(exc)) from exc
    for i in range(len(frame)):
        for j in range(i + 1, len(frame)):
            name_i = "p" if i == 0 else f"q{i}"
            _require(orthogonal(frame[i], frame[j], tol), f"{name_i} orthogonal to q{j}")
    return frame


def _between(x, upper, clause):
    _require(is_positive(x), f"0 <= {clause}")
    _require(is_positive(upper - x), f"{clause} <= bound")


def christensen_pair(p, s1, s2, s3, a, b):
    """Orthogonal projections r, q with U_p(r) = a and U_p(q) = b.

    Preconditions: q_i = U_{s_i}(p) and p mutually orthogonal, and
    0 <= a, b <= p/2.  The outputs are the six-term Jordan expressions

      r = a + 2 a o s1 + U_s1(a) + U_s2(p - 2a) + 2 U_{s2, a^(1/2)}((p - 2a)^(1/2))
          + 2 U_{s1, s2}((a o (p - 2a))^(1/2))
      q = b - 2 b o s1 + U_s1(b) + U_s3(p - 2b) + 2 U_{s3, b^(1/2)}((p - 2b)^(1/2))
          - 2 U_{s1, s3}((b o (p - 2b))^(1/2))
    """
    p, s1, s2, s3, a, b = _same(p, s1, s2, s3, a, b)
    _check_envelope(p, s1, s2, s3, a, b)
    _check_frame(p, (s1, s2, s3))
    _between(a, 0.5 * p, "a")
    _between(b, 0.5 * p, "b")
    pa = p - 2.0 * a
    pb = p - 2.0 * b
    r = (a + 2.0 * jordan_mul(a, s1) + u_map(s1, a) + u_map(s2, pa)
         + 2.0 * u_bilinear(s2, sqrt_positive(a), sqrt_positive(pa))
         + 2.0 * u_bilinear(s1, s2, sqrt_positive(jordan_mul(a, pa))))
    q = (b - 2.0 * jordan_mul(b, s1) + u_map(s1, b) + u_map(s3, pb)
         + 2.0 * u_bilinear(s3, sqrt_positive(b), sqrt_positive(pb))
         - 2.0 * u_bilinear(s1, s3, sqrt_positive(jordan_mul(b, pb))))
    return Projection.certify(r), Projection.certify(q)


def _psd_sqrt(m):
    w, v = _kernels.jacobi_eigh(0.5 * (m + m.conj().T))
    return (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T


def reversible_pair(p, s1, s2, s3, s4, s5, c, d):
    """Orthogonal projections r~, q~ with U_p(r~) = c and U_p(q~) = d
    whenever c, d >= 0 and c + d <= p.  *Envelope only.*

    r~ = z* z and q~ = t* t with z = c^(1/2) + A s4 + B s5 and
    t = d^(1/2) + B* s4 + D s5, where [[A, B], [B*, D]] is the square root
    of 1 - [c^(1/2); d^(1/2)][c^(1/2), d^(1/2)] on range(p) + range(p).
    Then z z* = t t* = p and z t* = 0.  All five symmetries are validated;
    the completion only occupies the slots of s4 and s5.
    """
    p, s1, s2, s3, s4, s5, c, d = _same(p, s1, s2, s3, s4, s5, c, d)
    alg = p.algebra
    for i, f in enumerate(alg.factors):
        if not f.envelope:
            raise UnsupportedFactor(f"{f.label}: reversible pairs need an associative envelope")
    _check_frame(p, (s1, s2, s3, s4, s5))
    _require(is_positive(c), "0 <= c")
    _require(is_positive(d), "0 <= d")
    _require(is_positive(p - c - d), "c + d <= p")
    r_parts, q_parts = [], []
    for i, f in enumerate(alg.factors):
        pm = p.parts[i]
        real = isinstance(f, SymmetricFactor)
        V = range_basis(pm, real)
        k = V.shape[1]
        if k == 0:
            r_parts.append(f.zero()), q_parts.append(f.zero())
            continue
        ck = V.conj().T @ c.parts[i] @ V
        dk = V.conj().T @ d.parts[i] @ V
        rc, rd = _psd_sqrt(ck), _psd_sqrt(dk)
        col = np.vstack([rc, rd])
        root = _psd_sqrt(np.eye(2 * k) - col @ col.conj().T)
        lift = lambda m: V @ m @ V.conj().T
        A, B, D = lift(root[:k, :k]), lift(root[:k, k:]), lift(root[k:, k:])
        S4, S5 = s4.parts[i], s5.parts[i]
        z = lift(rc) + A @ S4 + B @ S5
        t = lift(rd) + B.conj().T @ S4 + D @ S5
        r_parts.append(z.conj().T @ z)
        q_parts.append(t.conj().T @ t)
    r = Projection.certify(Element(alg, tuple(r_parts)))
    q = Projection.certify(Element(alg, tuple(q_parts)))
    return r, q
