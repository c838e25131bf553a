"""Hot numeric kernels.

Two implementations live side by side: numba-compiled scalar loops and a
pure-numpy path.  The numba path is used when numba imports and the
environment variable ``JG_USE_NUMBA`` is not set to a false value
(``0``, ``false``, ``no``, ``off``).  Both paths implement the same
algorithms and are exercised by the test suite and ``benchmarks/``.
"""
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

_flag = os.environ.get("JG_USE_NUMBA", "1").strip().lower()
USE_NUMBA = numba is not None and _flag not in {"0", "false", "no", "off"}

MAX_SWEEPS = 60


# ---------------------------------------------------------------------------
# cyclic Jacobi for complex Hermitian matrices
# ---------------------------------------------------------------------------

def _jacobi_numpy(a, rtol, max_sweeps):
    a = np.array(a, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    scale = np.sqrt(np.sum(np.abs(a) ** 2))
    sweeps = 0
    for sweep in range(max_sweeps):
        off = np.sum(np.abs(a - np.diag(np.diag(a))) ** 2)
        if np.sqrt(off) <= rtol * scale:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g == 0.0:
                    continue
                phase = apq / g
                theta = (a[q, q].real - a[p, p].real) / (2.0 * g)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                cph = np.conj(phase)
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * cph * col_q
                a[:, q] = s * col_p + c * cph * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * cph * vq
                v[:, q] = s * vp + c * cph * vq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    return np.diag(a).real.copy(), v, sweeps


def _jacobi_loops(a, rtol, max_sweeps):
    a = a.copy()
    n = a.shape[0]
    v = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        v[i, i] = 1.0
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += a[i, j].real ** 2 + a[i, j].imag ** 2
    scale = np.sqrt(scale)
    sweeps = 0
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if np.sqrt(off) <= rtol * scale:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g == 0.0:
                    continue
                phase = apq / g
                cph = phase.conjugate()
                theta = (a[q, q].real - a[p, p].real) / (2.0 * g)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * cph * akq
                    a[k, q] = s * akp + c * cph * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * phase * aqk
                    a[q, k] = s * apk + c * phase * aqk
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * cph * vkq
                    v[k, q] = s * vkp + c * cph * vkq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v, sweeps


# ---------------------------------------------------------------------------
# Albert algebra Jordan product on 27-coefficient vectors
# layout: [alpha, beta, gamma, x(8), y(8), z(8)] for the Hermitian matrix
#   [[alpha, z, conj(y)], [conj(z), beta, x], [y, conj(x), gamma]]
# ---------------------------------------------------------------------------

def _albert_jordan_numpy(a, b, structure):
    def mul(x, y):
        return np.einsum("i,j,ijk->k", x, y, structure)

    def bar(x):
        out = -x
        out[0] = x[0]
        return out

    al, be, ga = a[0], a[1], a[2]
    x, y, z = a[3:11], a[11:19], a[19:27]
    al2, be2, ga2 = b[0], b[1], b[2]
    x2, y2, z2 = b[3:11], b[11:19], b[19:27]
    dx, dy, dz = x @ x2, y @ y2, z @ z2
    out = np.empty(27, dtype=np.result_type(a, b))
    out[0] = al * al2 + dz + dy
    out[1] = be * be2 + dz + dx
    out[2] = ga * ga2 + dy + dx
    out[3:11] = 0.5 * ((be + ga) * x2 + (be2 + ga2) * x + bar(mul(y2, z)) + bar(mul(y, z2)))
    out[11:19] = 0.5 * ((al + ga) * y2 + (al2 + ga2) * y + bar(mul(z2, x)) + bar(mul(z, x2)))
    out[19:27] = 0.5 * ((al + be) * z2 + (al2 + be2) * z + bar(mul(x2, y)) + bar(mul(x, y2)))
    return out


def _oct_mul_loops(x, y, sign, index):
    out = np.zeros(8, dtype=np.complex128)
    for i in range(8):
        if x[i] == 0:
            continue
        for j in range(8):
            out[index[i, j]] += sign[i, j] * x[i] * y[j]
    return out


def _oct_bar_add(acc, w, factor):
    # acc += factor * conj_octonion(w)
    acc[0] += factor * w[0]
    for i in range(1, 8):
        acc[i] -= factor * w[i]


def _albert_jordan_loops(a, b, sign, index):
    out = np.zeros(27, dtype=np.complex128)
    dx = 0j
    dy = 0j
    dz = 0j
    for i in range(8):
        dx += a[3 + i] * b[3 + i]
        dy += a[11 + i] * b[11 + i]
        dz += a[19 + i] * b[19 + i]
    out[0] = a[0] * b[0] + dz + dy
    out[1] = a[1] * b[1] + dz + dx
    out[2] = a[2] * b[2] + dy + dx
    al, be, ga = a[0], a[1], a[2]
    al2, be2, ga2 = b[0], b[1], b[2]
    x, y, z = a[3:11], a[11:19], a[19:27]
    x2, y2, z2 = b[3:11], b[11:19], b[19:27]
    acc = np.zeros(8, dtype=np.complex128)
    for i in range(8):
        acc[i] = (be + ga) * x2[i] + (be2 + ga2) * x[i]
    _oct_bar_add(acc, _oct_mul_loops(y2, z, sign, index), 1.0)
    _oct_bar_add(acc, _oct_mul_loops(y, z2, sign, index), 1.0)
    for i in range(8):
        out[3 + i] = 0.5 * acc[i]
    for i in range(8):
        acc[i] = (al + ga) * y2[i] + (al2 + ga2) * y[i]
    _oct_bar_add(acc, _oct_mul_loops(z2, x, sign, index), 1.0)
    _oct_bar_add(acc, _oct_mul_loops(z, x2, sign, index), 1.0)
    for i in range(8):
        out[11 + i] = 0.5 * acc[i]
    for i in range(8):
        acc[i] = (al + be) * z2[i] + (al2 + be2) * z[i]
    _oct_bar_add(acc, _oct_mul_loops(x2, y, sign, index), 1.0)
    _oct_bar_add(acc, _oct_mul_loops(x, y2, sign, index), 1.0)
    for i in range(8):
        out[19 + i] = 0.5 * acc[i]
    return out


if numba is not None:
    _jit = numba.njit(cache=True, nogil=True)
    _jacobi_numba = _jit(_jacobi_loops)
    _oct_mul_numba = _jit(_oct_mul_loops)
    _oct_bar_add = _jit(_oct_bar_add)
    _oct_mul_loops = _oct_mul_numba
    _albert_jordan_numba = _jit(_albert_jordan_loops)
else:  # pragma: no cover
    _jacobi_numba = None
    _albert_jordan_numba = None


def jacobi_eigh(a, rtol=1e-14, max_sweeps=MAX_SWEEPS, backend=None):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps visit pairs ``(p, q)`` in row-major order and stop once the
    off-diagonal Frobenius mass drops below ``rtol * ||a||_F``.  Returns
    ``(w, v)`` with eigenvalues ascending (stable order) and ``v[:, i]``
    the eigenvector of ``w[i]``.
    """
    backend = backend or ("numba" if USE_NUMBA else "numpy")
    a = np.ascontiguousarray(a, dtype=np.complex128)
    if backend == "numba":
        w, v, _ = _jacobi_numba(a, rtol, max_sweeps)
    else:
        w, v, _ = _jacobi_numpy(a, rtol, max_sweeps)
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def albert_jordan(a, b, structure, sign, index, backend=None):
    """Jordan product of two (possibly complexified) Albert coefficient vectors."""
    backend = backend or ("numba" if USE_NUMBA else "numpy")
    a = np.ascontiguousarray(a, dtype=np.complex128)
    b = np.ascontiguousarray(b, dtype=np.complex128)
    if backend == "numba":
        return _albert_jordan_numba(a, b, sign, index)
    return _albert_jordan_numpy(a, b, structure)


def backends():
    """Names of the kernel backends available in this process."""
    return ("numba", "numpy") if numba is not None else ("numpy",)
