"""Octonions and the exceptional Jordan algebra H3(O).

Octonions are 8-vectors over the basis e0..e7 with the product obtained by
Cayley-Dickson doubling of the quaternions,

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).

An element of H3(O) is stored as a 27-vector
``[alpha, beta, gamma, x(8), y(8), z(8)]`` standing for the Hermitian matrix

    [[alpha,   z,       conj(y)],
     [conj(z), beta,    x      ],
     [y,       conj(x), gamma  ]]

Coefficients may be complex; the product is extended complex-bilinearly,
which realizes the complexification H3(O^C).  Its involution conjugates
the complex coefficients only.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels

CUBIC_CLUSTER_TOL = 1e-7


def _cd_conj(x):
    out = -x
    out[0] = x[0]
    return out


def _cd_mul(x, y):
    n = len(x)
    if n == 1:
        return x * y
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    return np.concatenate([
        _cd_mul(a, c) - _cd_mul(_cd_conj(d), b),
        _cd_mul(d, a) + _cd_mul(b, _cd_conj(c)),
    ])


def _build_table():
    sign = np.zeros((8, 8))
    index = np.zeros((8, 8), dtype=np.int64)
    eye = np.eye(8)
    for i in range(8):
        for j in range(8):
            prod = _cd_mul(eye[i], eye[j])
            k = int(np.flatnonzero(prod)[0])
            index[i, j] = k
            sign[i, j] = prod[k]
    structure = np.zeros((8, 8, 8))
    structure[np.arange(8)[:, None], np.arange(8)[None, :], index] = sign
    return sign, index, structure


MUL_SIGN, MUL_INDEX, STRUCTURE = _build_table()


def oct_mul(x, y):
    """Octonion product (bilinear, works for complex coefficients)."""
    return np.einsum("i,j,ijk->k", np.asarray(x), np.asarray(y), STRUCTURE)


def oct_conj(x):
    """Octonion conjugate: negate the imaginary units."""
    return _cd_conj(np.asarray(x))


def oct_norm(x):
    return float(np.sqrt(np.sum(np.asarray(x, dtype=float) ** 2)))


def oct_unit(i=0):
    e = np.zeros(8)
    e[i] = 1.0
    return e


@dataclass(frozen=True, eq=False)
class AlbertElement:
    """A self-adjoint element of H3(O): real diagonal and three octonions."""

    diag: np.ndarray
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        return cls(v[0:3].copy(), v[3:11].copy(), v[11:19].copy(), v[19:27].copy())

    def to_vector(self):
        return np.concatenate([self.diag, self.x, self.y, self.z])

    @classmethod
    def diagonal(cls, a, b, c):
        z = np.zeros(8)
        return cls(np.array([a, b, c], dtype=float), z, z.copy(), z.copy())

    def to_matrix(self):
        """Explicit 3x3 octonion matrix, shape (3, 3, 8)."""
        return albert_matrix(self.to_vector())


def albert_matrix(v):
    """Expand a 27-vector into its (3, 3, 8) Hermitian octonion matrix."""
    v = np.asarray(v)
    m = np.zeros((3, 3, 8), dtype=v.dtype)
    for i in range(3):
        m[i, i, 0] = v[i]
    x, y, z = v[3:11], v[11:19], v[19:27]
    m[0, 1], m[1, 0] = z, oct_conj(z)
    m[1, 2], m[2, 1] = x, oct_conj(x)
    m[2, 0], m[0, 2] = y, oct_conj(y)
    return m


def albert_unit():
    v = np.zeros(27)
    v[:3] = 1.0
    return v


def albert_jordan_mul(a, b):
    """Jordan product on H3(O) (complex-bilinear on coefficient vectors).

    Accepts ``AlbertElement`` instances or raw 27-vectors and returns the
    same kind as ``a``.
    """
    wrap = isinstance(a, AlbertElement)
    va = a.to_vector() if wrap else a
    vb = b.to_vector() if isinstance(b, AlbertElement) else b
    out = _kernels.albert_jordan(va, vb, STRUCTURE, MUL_SIGN, MUL_INDEX)
    if wrap:
        return AlbertElement.from_vector(out.real)
    if np.isrealobj(va) and np.isrealobj(vb):
        return out.real
    return out


def albert_trace(v):
    return v[0] + v[1] + v[2]


def cubic_form(a):
    """Coefficients (T, S, N) of the generic minimum polynomial.

    Every element satisfies ``a^3 - T a^2 + S a - N 1 = 0`` with powers
    taken in the Jordan product.  The determinant uses the association
    order ``2 Re((x y) z)``; real parts of octonion triple products are
    association- and cyclic-invariant, so this matches the matrix layout.
    """
    v = a.to_vector() if isinstance(a, AlbertElement) else np.asarray(a)
    al, be, ga = v[0], v[1], v[2]
    x, y, z = v[3:11], v[11:19], v[19:27]
    nx, ny, nz = x @ x, y @ y, z @ z
    t = al + be + ga
    s = al * be + be * ga + ga * al - nx - ny - nz
    n = al * be * ga - al * nx - be * ny - ga * nz + 2.0 * oct_mul(oct_mul(x, y), z)[0]
    return t, s, n


def _cubic_roots(t, s, n):
    """Three real roots of l^3 - t l^2 + s l - n, ascending."""
    shift = t / 3.0
    p = s - t * t / 3.0
    q = -2.0 * t ** 3 / 27.0 + t * s / 3.0 - n
    # depressed: u^3 + p u + q = 0
    if p >= 0.0:
        # only possible (for a real spectrum) when all roots coincide
        roots = np.full(3, shift)
    else:
        m = 2.0 * np.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        phi = np.arccos(np.clip(arg, -1.0, 1.0)) / 3.0
        roots = shift + m * np.cos(phi - 2.0 * np.pi * np.arange(3) / 3.0)
    # Newton polish against the original cubic
    for _ in range(2):
        f = ((roots - t) * roots + s) * roots - n
        df = (3.0 * roots - 2.0 * t) * roots + s
        safe = np.abs(df) > 1e-12 * max(1.0, abs(t) ** 2, abs(s))
        roots = np.where(safe, roots - np.where(safe, f / np.where(safe, df, 1.0), 0.0), roots)
    return np.sort(roots)


def _jordan_poly_factor(v, lam):
    return v - lam * albert_unit()


def albert_spectral_clusters(a, cluster_tol=CUBIC_CLUSTER_TOL):
    """Like :func:`albert_spectral_resolution` but each entry also carries
    the smallest and largest root merged into the cluster:
    ``(mean, lo, hi, projection_vector)``."""
    v = a.to_vector() if isinstance(a, AlbertElement) else np.asarray(a, dtype=float)
    roots = _cubic_roots(*cubic_form(v))
    clusters = [[roots[0]]]
    for r in roots[1:]:
        if r - clusters[-1][-1] < cluster_tol:
            clusters[-1].append(r)
        else:
            clusters.append([r])
    values = [float(np.mean(c)) for c in clusters]
    # Multiple roots of the cubic are only accurate to ~sqrt(eps); the trace
    # pins them down to rounding level once the simple roots are known.
    t = float(albert_trace(v).real)
    if len(values) == 1:
        values = [t / 3.0]
    elif len(values) == 2:
        multi = 0 if len(clusters[0]) == 2 else 1
        values[multi] = 0.5 * (t - values[1 - multi])
    if len(values) == 1:
        return [(values[0], float(roots[0]), float(roots[-1]), albert_unit())]
    out = []
    for i, li in enumerate(values):
        proj = albert_unit()
        for j, lj in enumerate(values):
            if j == i:
                continue
            proj = albert_jordan_mul(proj, _jordan_poly_factor(v, lj)) / (li - lj)
        out.append((li, float(clusters[i][0]), float(clusters[i][-1]), proj))
    return out


def albert_spectral_resolution(a, cluster_tol=CUBIC_CLUSTER_TOL):
    """Spectral resolution of a self-adjoint Albert element.

    Returns a list of ``(eigenvalue, projection_vector)`` pairs with
    eigenvalues ascending.  Roots of the cubic closer than ``cluster_tol``
    are merged; projections come from Lagrange interpolation in the
    (associative) subalgebra generated by ``a``.
    """
    return [(lam, p) for lam, _, _, p in albert_spectral_clusters(a, cluster_tol)]
