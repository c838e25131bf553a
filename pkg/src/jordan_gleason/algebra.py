"""Finite-dimensional JB*-algebras: descriptors, elements and core arithmetic.

An :class:`Algebra` is a finite direct sum of factors:

* ``MatrixFactor(n)``    -- M_n(C), Jordan product (ab + ba)/2, involution a^H
* ``SymmetricFactor(n)`` -- S_n(C), complex symmetric matrices, involution is
  entrywise conjugation so the self-adjoint part is the real symmetric matrices
* ``SpinFactor(k)``      -- complexified R1 + R^k with
  (a + u)(b + v) = (ab + <u, v>) + (a v + b u)
* ``AlbertFactor()``     -- complexified H3(O), see :mod:`.octonion`

Elements store one complex numpy payload per summand.  Everything is
immutable by convention; operations return new objects.
"""
from __future__ import annotations

import numbers
import re
from dataclasses import dataclass

import numpy as np

from . import _kernels, octonion
from .errors import (
    DescriptorMismatch,
    NotAProjection,
    NotPositive,
    NotSelfAdjoint,
    ParseError,
    UnsupportedFactor,
)

TOL_SYM = 1e-12
TOL_PROJ = 1e-9
CLUSTER_TOL = 1e-8
POSITIVE_TOL = 1e-9
SQRT_FLOOR = 1e-14


def haar_unitary(n, rng, real=False):
    """Haar-distributed unitary (or orthogonal when ``real``) matrix."""
    if real:
        z = rng.standard_normal((n, n))
    else:
        z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    q = q * (d / np.abs(d))
    return q.astype(np.complex128)


def _cluster(values, tol=CLUSTER_TOL):
    """Chain-cluster sorted values; returns lists of indices."""
    groups = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


# ---------------------------------------------------------------------------
# factors
# ---------------------------------------------------------------------------

class Factor:
    """A simple summand.  Subclasses supply the payload arithmetic."""

    envelope = False

    def zero(self):
        return np.zeros(self.shape, dtype=np.complex128)

    def validate(self, payload):
        payload = np.asarray(payload, dtype=np.complex128)
        if payload.shape != self.shape:
            raise DescriptorMismatch(f"{self.label}: payload shape {payload.shape} != {self.shape}")
        return payload

    def u_bilinear(self, a, c, b):
        j = self.jordan
        return j(j(a, b), c) + j(j(b, c), a) - j(j(a, c), b)

    def u_map(self, a, b):
        j = self.jordan
        return 2.0 * j(j(a, b), a) - j(j(a, a), b)

    def pairing(self, a, b):
        return self.trace(self.jordan(a, b))

    def norm_bound(self, a):
        raise NotImplementedError


@dataclass(frozen=True)
class MatrixFactor(Factor):
    n: int
    envelope = True

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("matrix factor dimension must be >= 1")

    @property
    def label(self):
        return f"m{self.n}"

    @property
    def shape(self):
        return (self.n, self.n)

    @property
    def rank(self):
        return self.n

    def unit(self):
        return np.eye(self.n, dtype=np.complex128)

    def jordan(self, a, b):
        return 0.5 * (a @ b + b @ a)

    def u_map(self, a, b):
        return a @ b @ a

    def star(self, a):
        return a.conj().T

    def trace(self, a):
        return np.trace(a) / self.n

    def norm_bound(self, a):
        return float(np.linalg.norm(a))

    def norm(self, a):
        """Largest singular value (any element)."""
        return float(np.linalg.norm(a, 2))

    def eig_vectors(self, a):
        h = 0.5 * (a + self.star(a))
        return _kernels.jacobi_eigh(h)

    def eig(self, a):
        w, v = self.eig_vectors(a)
        out = []
        for g in _cluster(w):
            vs = v[:, g]
            out.append((float(np.mean(w[g])), self._proj_from_vectors(vs)))
        return out

    def _proj_from_vectors(self, vs):
        return vs @ vs.conj().T

    def apply(self, a, fn):
        w, v = self.eig_vectors(a)
        vals = np.array([fn(t) for t in w], dtype=np.complex128)
        return (v * vals) @ v.conj().T

    def random_self_adjoint(self, rng):
        g = (rng.standard_normal(self.shape) + 1j * rng.standard_normal(self.shape)) / np.sqrt(2 * self.n)
        return g + g.conj().T

    def random_element(self, rng):
        return (rng.standard_normal(self.shape) + 1j * rng.standard_normal(self.shape)) / np.sqrt(self.n)

    def random_unitary(self, rng):
        return haar_unitary(self.n, rng)

    def random_projection(self, rng, rank=None):
        if rank is None:
            rank = int(rng.integers(0, self.n + 1))
        q = self.random_unitary(rng)[:, :rank]
        return q @ q.conj().T

    def sa_basis(self):
        basis = []
        n = self.n
        for i in range(n):
            e = self.zero()
            e[i, i] = 1.0
            basis.append(e)
        for i in range(n):
            for j in range(i + 1, n):
                e = self.zero()
                e[i, j] = e[j, i] = 1.0
                basis.append(e)
                f = self.zero()
                f[i, j] = 1j
                f[j, i] = -1j
                basis.append(f)
        return basis


@dataclass(frozen=True)
class SymmetricFactor(MatrixFactor):
    envelope = True

    @property
    def label(self):
        return f"s{self.n}"

    def validate(self, payload):
        payload = super().validate(payload)
        if np.max(np.abs(payload - payload.T), initial=0.0) > TOL_SYM:
            raise DescriptorMismatch(f"{self.label}: payload is not transpose-symmetric")
        return payload

    def star(self, a):
        return a.conj()

    def eig_vectors(self, a):
        h = 0.5 * (a + a.conj()).real
        h = 0.5 * (h + h.T)
        w, v = _kernels.jacobi_eigh(h)
        return w, v.real.astype(np.complex128)

    def random_self_adjoint(self, rng):
        g = rng.standard_normal(self.shape) / np.sqrt(2 * self.n)
        return (g + g.T).astype(np.complex128)

    def random_element(self, rng):
        g = (rng.standard_normal(self.shape) + 1j * rng.standard_normal(self.shape)) / np.sqrt(2 * self.n)
        return g + g.T

    def random_unitary(self, rng):
        return haar_unitary(self.n, rng, real=True)

    def sa_basis(self):
        return [e for e in super().sa_basis() if np.all(e.imag == 0)]


@dataclass(frozen=True)
class SpinFactor(Factor):
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ParseError("spin factor dimension must be >= 2")

    @property
    def label(self):
        return f"spin{self.k}"

    @property
    def shape(self):
        return (self.k + 1,)

    @property
    def rank(self):
        return 2

    def unit(self):
        e = self.zero()
        e[0] = 1.0
        return e

    def jordan(self, a, b):
        out = np.empty(self.k + 1, dtype=np.complex128)
        out[0] = a[0] * b[0] + a[1:] @ b[1:]
        out[1:] = a[0] * b[1:] + b[0] * a[1:]
        return out

    def star(self, a):
        return a.conj()

    def trace(self, a):
        return a[0]

    def norm_bound(self, a):
        re, im = a.real, a.imag
        return float(abs(re[0]) + np.linalg.norm(re[1:]) + abs(im[0]) + np.linalg.norm(im[1:]))

    def eig(self, a):
        alpha = float(a[0].real)
        u = a[1:].real
        r = float(np.linalg.norm(u))
        if 2.0 * r <= CLUSTER_TOL:
            return [(alpha, self.unit())]
        d = u / r
        lo = np.concatenate([[0.5], -0.5 * d]).astype(np.complex128)
        hi = np.concatenate([[0.5], 0.5 * d]).astype(np.complex128)
        return [(alpha - r, lo), (alpha + r, hi)]

    def apply(self, a, fn):
        alpha = float(a[0].real)
        u = a[1:].real
        r = float(np.linalg.norm(u))
        if r == 0.0:
            return complex(fn(alpha)) * self.unit()
        d = u / r
        lo, hi = complex(fn(alpha - r)), complex(fn(alpha + r))
        out = np.empty(self.k + 1, dtype=np.complex128)
        out[0] = 0.5 * (lo + hi)
        out[1:] = 0.5 * (hi - lo) * d
        return out

    def rank_one(self, direction):
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        return np.concatenate([[0.5], 0.5 * d]).astype(np.complex128)

    def random_self_adjoint(self, rng):
        return rng.standard_normal(self.k + 1).astype(np.complex128)

    def random_element(self, rng):
        return rng.standard_normal(self.k + 1) + 1j * rng.standard_normal(self.k + 1)

    def random_projection(self, rng, rank=None):
        if rank is None:
            rank = int(rng.integers(0, 3))
        if rank == 0:
            return self.zero()
        if rank == 2:
            return self.unit()
        return self.rank_one(rng.standard_normal(self.k))

    def sa_basis(self):
        return [np.eye(self.k + 1, dtype=np.complex128)[i] for i in range(self.k + 1)]


@dataclass(frozen=True)
class AlbertFactor(Factor):

    @property
    def label(self):
        return "albert"

    @property
    def shape(self):
        return (27,)

    @property
    def rank(self):
        return 3

    def unit(self):
        return octonion.albert_unit().astype(np.complex128)

    def jordan(self, a, b):
        return octonion.albert_jordan_mul(a, b)

    def star(self, a):
        return a.conj()

    def trace(self, a):
        return (a[0] + a[1] + a[2]) / 3.0

    def norm_bound(self, a):
        total = 0.0
        for part in (a.real, a.imag):
            total += np.sum(np.abs(part[:3]))
            total += sum(np.linalg.norm(part[s:s + 8]) for s in (3, 11, 19))
        return float(total)

    def eig(self, a):
        return [(lam, p.astype(np.complex128))
                for lam, p in octonion.albert_spectral_resolution(a.real)]

    def apply(self, a, fn):
        # Clusters of nearly equal roots get a secant correction so that
        # merging them does not cost accuracy: on a cluster projection P
        # with roots in [lo, hi], f(a) P ~ f(mean) P + slope (a o P - mean P).
        re = a.real
        out = np.zeros(27, dtype=np.complex128)
        for lam, lo, hi, proj in octonion.albert_spectral_clusters(re):
            out += complex(fn(lam)) * proj
            if hi > lo:
                slope = (complex(fn(hi)) - complex(fn(lo))) / (hi - lo)
                out += slope * (octonion.albert_jordan_mul(re, proj) - lam * proj)
        return out

    def random_self_adjoint(self, rng):
        return rng.standard_normal(27).astype(np.complex128) / np.sqrt(3.0)

    def random_element(self, rng):
        return (rng.standard_normal(27) + 1j * rng.standard_normal(27)) / np.sqrt(6.0)

    def random_frame(self, rng):
        """Three orthogonal rank-one projections summing to the unit.

        Eigenframes of random self-adjoint elements are conjugates of the
        diagonal frame under the automorphism group.
        """
        while True:
            pairs = self.eig(self.random_self_adjoint(rng))
            if len(pairs) == 3:
                gaps = np.diff([lam for lam, _ in pairs])
                if np.min(gaps) > 1e-3:
                    return [p for _, p in pairs]

    def random_projection(self, rng, rank=None):
        if rank is None:
            rank = int(rng.integers(0, 4))
        if rank == 0:
            return self.zero()
        if rank == 3:
            return self.unit()
        frame = self.random_frame(rng)
        pick = rng.permutation(3)[:rank]
        return sum(frame[i] for i in pick)

    def sa_basis(self):
        return [np.eye(27, dtype=np.complex128)[i] for i in range(27)]


_TOKEN = re.compile(r"^(m|s|spin)(\d+)$")


# ---------------------------------------------------------------------------
# algebra descriptor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Algebra:
    """Finite direct sum of factors.  Equality is structural."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ParseError("an algebra needs at least one summand")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def parse(cls, text):
        """Parse ``"m3+s4+spin5+albert"`` style descriptors."""
        if not isinstance(text, str) or not text.strip():
            raise ParseError(f"empty algebra descriptor {text!r}")
        factors = []
        for token in text.strip().split("+"):
            token = token.strip()
            if token == "albert":
                factors.append(AlbertFactor())
                continue
            m = _TOKEN.match(token)
            if not m:
                raise ParseError(f"cannot parse algebra token {token!r}")
            kind, dim = m.group(1), int(m.group(2))
            if dim < 1:
                raise ParseError(f"dimension must be positive in {token!r}")
            cls_ = {"m": MatrixFactor, "s": SymmetricFactor, "spin": SpinFactor}[kind]
            factors.append(cls_(dim))
        return cls(tuple(factors))

    def __str__(self):
        return "+".join(f.label for f in self.factors)

    def __len__(self):
        return len(self.factors)

    # construction helpers
    def element(self, *payloads):
        if len(payloads) != len(self.factors):
            raise DescriptorMismatch(f"{self} expects {len(self.factors)} payloads, got {len(payloads)}")
        return Element(self, tuple(f.validate(p) for f, p in zip(self.factors, payloads)))

    def zero(self):
        return Element(self, tuple(f.zero() for f in self.factors))

    def unit(self):
        return Element(self, tuple(f.unit() for f in self.factors))

    def embed(self, index, payload):
        parts = [f.zero() for f in self.factors]
        parts[index] = self.factors[index].validate(payload)
        return Element(self, tuple(parts))

    def central_unit(self, index):
        return self.embed(index, self.factors[index].unit())

    def random_self_adjoint(self, rng):
        return Element(self, tuple(f.random_self_adjoint(rng) for f in self.factors))

    def random_element(self, rng):
        return Element(self, tuple(f.random_element(rng) for f in self.factors))

    def random_projection(self, rng, ranks=None):
        if ranks is None:
            ranks = [None] * len(self.factors)
        parts = tuple(f.random_projection(rng, r) for f, r in zip(self.factors, ranks))
        return Projection._trusted(Element(self, parts))

    def self_adjoint_basis(self):
        """Pairs ``(summand index, element)`` spanning the self-adjoint part."""
        return [(i, self.embed(i, b)) for i, f in enumerate(self.factors) for b in f.sa_basis()]

    @property
    def envelope(self):
        return all(f.envelope for f in self.factors)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Element:
    algebra: Algebra
    parts: tuple

    def _check(self, other):
        other = as_element(other)
        if other.algebra != self.algebra:
            raise DescriptorMismatch(f"{self.algebra} vs {other.algebra}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other):
        other = self._check(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.parts))

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return Element(self.algebra, tuple(scalar * a for a in self.parts))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1.0 / scalar)

    def star(self):
        return involution(self)

    def coefficients(self):
        """Flat complex coefficient vector (all summands concatenated)."""
        return np.concatenate([np.ravel(p) for p in self.parts])

    def max_abs(self):
        return float(max(np.max(np.abs(p), initial=0.0) for p in self.parts))

    def __repr__(self):
        return f"Element({self.algebra}, max|coef|={self.max_abs():.3g})"


def as_element(x):
    if isinstance(x, Element):
        return x
    if isinstance(x, Projection):
        return x.element
    raise TypeError(f"expected an Element or Projection, got {type(x).__name__}")


def _same(*xs):
    xs = [as_element(x) for x in xs]
    alg = xs[0].algebra
    for x in xs[1:]:
        if x.algebra != alg:
            raise DescriptorMismatch(f"{alg} vs {x.algebra}")
    return xs


# ---------------------------------------------------------------------------
# projections and spectral resolutions
# ---------------------------------------------------------------------------

def _rank_vector(x):
    return tuple(int(round(float((f.rank * f.trace(p)).real))) for f, p in zip(x.algebra.factors, x.parts))


@dataclass(frozen=True, eq=False)
class Projection:
    """A self-adjoint idempotent, certified within ``TOL_PROJ``."""

    element: Element
    rank: tuple

    @classmethod
    def certify(cls, x, tol=TOL_PROJ):
        x = as_element(x)
        skew = x - involution(x)
        if _sa_norm(1j * skew) > tol:
            raise NotAProjection(f"not self-adjoint (residual {_sa_norm(1j * skew):.3g})")
        h = 0.5 * (x + involution(x))
        resid = _sa_norm(jordan_mul(h, h) - h)
        if resid > tol:
            raise NotAProjection(f"not idempotent (residual {resid:.3g})")
        return cls(x, _rank_vector(x))

    @classmethod
    def _trusted(cls, x):
        return cls(x, _rank_vector(x))

    @property
    def algebra(self):
        return self.element.algebra

    @property
    def parts(self):
        return self.element.parts

    def __add__(self, other):
        return self.element + other

    def __radd__(self, other):
        return as_element(other) + self.element

    def __sub__(self, other):
        return self.element - other

    def __rsub__(self, other):
        return as_element(other) - self.element

    def __neg__(self):
        return -self.element

    def __mul__(self, scalar):
        return self.element * scalar

    __rmul__ = __mul__

    def is_zero(self):
        return sum(self.rank) == 0

    def __repr__(self):
        return f"Projection({self.algebra}, rank={self.rank})"


@dataclass(frozen=True)
class SpectralResolution:
    """Pairs ``(eigenvalue, projection)`` with eigenvalues ascending."""

    algebra: Algebra
    pairs: tuple

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    @property
    def eigenvalues(self):
        return [lam for lam, _ in self.pairs]

    @property
    def projections(self):
        return [p for _, p in self.pairs]

    def reconstruct(self):
        out = self.algebra.zero()
        for lam, p in self.pairs:
            out = out + lam * p.element
        return out

    def apply(self, fn):
        """Functional calculus: ``sum fn(lambda_i) p_i``."""
        out = self.algebra.zero()
        for lam, p in self.pairs:
            out = out + complex(fn(lam)) * p.element
        return out


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def jordan_mul(a, b):
    """Jordan product a o b (summand-wise)."""
    a, b = _same(a, b)
    return Element(a.algebra, tuple(f.jordan(x, y) for f, x, y in zip(a.algebra.factors, a.parts, b.parts)))


def u_bilinear(a, c, b):
    """U_{a,c}(b) = (a o b) o c + (b o c) o a - (a o c) o b."""
    a, c, b = _same(a, c, b)
    return Element(a.algebra, tuple(
        f.u_bilinear(x, z, y) for f, x, z, y in zip(a.algebra.factors, a.parts, c.parts, b.parts)))


def u_map(a, b):
    """U_a(b); equals a b a in an associative envelope."""
    a, b = _same(a, b)
    return Element(a.algebra, tuple(f.u_map(x, y) for f, x, y in zip(a.algebra.factors, a.parts, b.parts)))


def triple_product(a, b, c):
    """Jordan triple product {a, b, c} = U_{a,c}(b*)."""
    return u_bilinear(a, c, involution(b))


def involution(a):
    a = as_element(a)
    return Element(a.algebra, tuple(f.star(x) for f, x in zip(a.algebra.factors, a.parts)))


def power(a, k):
    """Jordan power a^k for k >= 0 (a^0 is the unit)."""
    a = as_element(a)
    if k < 0:
        raise ValueError(f"negative power {k}")
    out = a.algebra.unit()
    for _ in range(k):
        out = jordan_mul(a, out)
    return out


def _norm_bound(x):
    return max(f.norm_bound(p) for f, p in zip(x.algebra.factors, x.parts))


def self_adjoint_residual(x):
    """Norm of x - x* (exact operator norm)."""
    x = as_element(x)
    skew = x - involution(x)
    if _norm_bound(skew) == 0.0:
        return 0.0
    return _sa_norm(1j * skew)


def is_self_adjoint(x, tol=TOL_PROJ):
    return self_adjoint_residual(x) <= tol


def _factor_eigs(x):
    """Per-summand clusters of the (Hermitian part of the) element."""
    out = []
    for i, (f, p) in enumerate(zip(x.algebra.factors, x.parts)):
        for lam, proj in f.eig(p):
            out.append((lam, i, proj))
    return out


def _sa_norm(x):
    x = as_element(x)
    if _norm_bound(x) == 0.0:
        return 0.0
    best = 0.0
    for f, p in zip(x.algebra.factors, x.parts):
        if f.norm_bound(p) == 0.0:
            continue
        if f.envelope:
            h = 0.5 * (p + f.star(p))
            w, _ = _kernels.jacobi_eigh(h if not isinstance(f, SymmetricFactor) else h.real)
            best = max(best, float(np.max(np.abs(w))))
        else:
            best = max(best, max(abs(lam) for lam, _ in f.eig(0.5 * (p + f.star(p)))))
    return best


def spectral_resolution(x, cluster_tol=CLUSTER_TOL):
    """Spectral resolution of a self-adjoint element.

    Eigenvalues within ``cluster_tol`` of each other (across all summands)
    are merged into a single spectral projection.  The zero element has
    the empty resolution.
    """
    x = as_element(x)
    if self_adjoint_residual(x) > TOL_PROJ:
        raise NotSelfAdjoint(f"||x - x*|| = {self_adjoint_residual(x):.3g}")
    alg = x.algebra
    if all(not np.any(p) for p in x.parts):
        return SpectralResolution(alg, ())
    raw = sorted(_factor_eigs(x), key=lambda t: t[0])
    values = [lam for lam, _, _ in raw]
    pairs = []
    for group in _cluster(values, cluster_tol):
        parts = [f.zero() for f in alg.factors]
        weights = 0.0
        total = 0.0
        for idx in group:
            lam, i, proj = raw[idx]
            parts[i] = parts[i] + proj
            w = float(alg.factors[i].trace(proj).real) * alg.factors[i].rank
            weights += w
            total += w * lam
        lam = total / weights if weights > 0 else float(np.mean([values[i] for i in group]))
        pairs.append((lam, Projection._trusted(Element(alg, tuple(parts)))))
    return SpectralResolution(alg, tuple(pairs))


def operator_norm_sa(x):
    """max |lambda| over the spectrum of a self-adjoint element (0 for x = 0)."""
    x = as_element(x)
    if self_adjoint_residual(x) > TOL_PROJ:
        raise NotSelfAdjoint(f"||x - x*|| = {self_adjoint_residual(x):.3g}")
    return _sa_norm(x)


def operator_norm(x):
    """Norm of an arbitrary element.

    Self-adjoint elements use their spectrum.  Other elements are only
    supported on matrix/symmetric summands (largest singular value).
    """
    x = as_element(x)
    if self_adjoint_residual(x) <= TOL_PROJ:
        return _sa_norm(x)
    best = 0.0
    for f, p in zip(x.algebra.factors, x.parts):
        if not f.envelope:
            raise UnsupportedFactor(f"general-element norm not available on {f.label}")
        best = max(best, f.norm(p))
    return best


def is_positive(x, tol=POSITIVE_TOL):
    x = as_element(x)
    if self_adjoint_residual(x) > TOL_PROJ:
        return False
    return all(lam >= -tol for lam, _, _ in _factor_eigs(x))


def functional_calculus(x, fn):
    """Apply a real function to a self-adjoint element via its spectrum.

    Works per summand on unclustered eigenvalues, so nearly equal
    eigenvalues do not lose accuracy to merging.
    """
    x = as_element(x)
    if self_adjoint_residual(x) > TOL_PROJ:
        raise NotSelfAdjoint(f"||x - x*|| = {self_adjoint_residual(x):.3g}")
    return Element(x.algebra, tuple(f.apply(p, fn) for f, p in zip(x.algebra.factors, x.parts)))


def positive_part(x):
    return functional_calculus(x, lambda t: max(t, 0.0))


def negative_part(x):
    return functional_calculus(x, lambda t: max(-t, 0.0))


def sqrt_positive(x, tol=POSITIVE_TOL):
    """Square root of a positive element.

    Eigenvalues below ``SQRT_FLOOR`` (relative to max(1, ||x||)) are treated
    as zero: they are rounding noise of exact zeros, and their square roots
    (~1e-8) would otherwise leak into every product built from the root.
    """
    x = as_element(x)
    if not is_positive(x, tol):
        raise NotPositive("square root needs a positive element")
    floor = SQRT_FLOOR * max(1.0, _sa_norm(x))
    return functional_calculus(x, lambda t: np.sqrt(t) if t > floor else 0.0)


def normalized_trace_total(x):
    """Sum over summands of the normalized traces (the unit pairing)."""
    x = as_element(x)
    return float(sum(f.trace(p).real for f, p in zip(x.algebra.factors, x.parts)))


def pairing(a, b):
    """Trace pairing <a, b> = sum over summands of tau(a o b)."""
    a, b = _same(a, b)
    return complex(sum(f.pairing(x, y) for f, x, y in zip(a.algebra.factors, a.parts, b.parts)))


def envelope_matrix(x, index):
    """The associative-envelope matrix of an envelope summand."""
    x = as_element(x)
    f = x.algebra.factors[index]
    if not f.envelope:
        raise UnsupportedFactor(f"{f.label} has no associative envelope")
    return x.parts[index]
