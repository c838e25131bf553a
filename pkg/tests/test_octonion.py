import numpy as np
import pytest
from hypothesis import given, strategies as st

from jordan_gleason.octonion import (
    AlbertElement,
    albert_jordan_mul,
    albert_matrix,
    albert_spectral_resolution,
    albert_trace,
    albert_unit,
    cubic_form,
    oct_conj,
    oct_mul,
    oct_norm,
    oct_unit,
)

seeds = st.integers(0, 2**32 - 1)


def octs(seed, k):
    rng = np.random.default_rng(seed)
    return [rng.standard_normal(8) for _ in range(k)]


def test_units():
    e1 = oct_unit(1)
    assert np.allclose(oct_mul(e1, e1), -oct_unit(0))
    x = octs(0, 1)[0]
    assert np.allclose(oct_mul(oct_unit(0), x), x)
    assert np.allclose(oct_mul(x, oct_unit(0)), x)


def test_not_associative():
    x, y, z = octs(1, 3)
    assert np.abs(oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))).max() > 1e-3


@given(seeds)
def test_composition_and_alternativity(seed):
    x, y, z = octs(seed, 3)
    assert np.isclose(oct_norm(oct_mul(x, y)), oct_norm(x) * oct_norm(y), rtol=1e-12)
    xx = oct_mul(x, x)
    assert np.allclose(oct_mul(x, oct_mul(x, y)), oct_mul(xx, y), atol=1e-12 * 100)
    assert np.allclose(oct_mul(oct_mul(y, x), x), oct_mul(y, xx), atol=1e-12 * 100)
    # Moufang
    lhs = oct_mul(oct_mul(x, y), oct_mul(z, x))
    rhs = oct_mul(x, oct_mul(oct_mul(y, z), x))
    assert np.allclose(lhs, rhs, atol=1e-12 * 1000)
    assert np.allclose(oct_mul(x, oct_conj(x)), oct_norm(x) ** 2 * oct_unit(0), atol=1e-12)


def oct_matmul(a, b):
    out = np.zeros((3, 3, 8))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                out[i, j] += oct_mul(a[i, k], b[k, j])
    return out


@given(seeds)
def test_jordan_product_matches_matrix_oracle(seed):
    rng = np.random.default_rng(seed)
    a, b = rng.standard_normal(27), rng.standard_normal(27)
    ma, mb = albert_matrix(a), albert_matrix(b)
    want = 0.5 * (oct_matmul(ma, mb) + oct_matmul(mb, ma))
    got = albert_matrix(albert_jordan_mul(a, b))
    assert np.allclose(got, want, atol=1e-10)


def test_jordan_product_examples():
    e1 = AlbertElement.diagonal(1, 0, 0)
    e2 = AlbertElement.diagonal(0, 1, 0)
    assert np.allclose(albert_jordan_mul(e1, e2).to_vector(), 0)
    a = np.random.default_rng(3).standard_normal(27)
    assert np.allclose(albert_jordan_mul(albert_unit(), a), a)


@given(seeds)
def test_jordan_identity_and_commutativity(seed):
    rng = np.random.default_rng(seed)
    a, b = rng.standard_normal(27), rng.standard_normal(27)
    assert np.allclose(albert_jordan_mul(a, b), albert_jordan_mul(b, a), atol=1e-14)
    a2 = albert_jordan_mul(a, a)
    lhs = albert_jordan_mul(albert_jordan_mul(a2, b), a)
    rhs = albert_jordan_mul(a2, albert_jordan_mul(b, a))
    scale = np.abs(a).max() ** 3 * np.abs(b).max()
    assert np.abs(lhs - rhs).max() <= 1e-8 * scale


def test_cubic_form_examples():
    assert np.allclose(cubic_form(AlbertElement.diagonal(1, 2, 3)), (6, 11, 6))
    assert np.allclose(cubic_form(AlbertElement.diagonal(1, 0, 0)), (1, 0, 0))


@given(seeds)
def test_cayley_hamilton(seed):
    a = np.random.default_rng(seed).standard_normal(27)
    t, s, n = cubic_form(a)
    a2 = albert_jordan_mul(a, a)
    a3 = albert_jordan_mul(a, a2)
    assert np.abs(a3 - t * a2 + s * a - n * albert_unit()).max() <= 1e-8 * max(1, np.abs(a).max() ** 3)
    assert np.isclose(t, albert_trace(a))
    assert np.isclose(s, 0.5 * (t * t - albert_trace(a2)))


@given(seeds)
def test_spectral_resolution_reconstructs(seed):
    a = np.random.default_rng(seed).standard_normal(27)
    res = albert_spectral_resolution(a)
    assert sum(lam * p for lam, p in res) == pytest.approx(a, abs=1e-7)
    assert sum(p for _, p in res) == pytest.approx(albert_unit(), abs=1e-7)
    for i, (_, p) in enumerate(res):
        assert np.abs(albert_jordan_mul(p, p) - p).max() <= 1e-7
        for _, q in res[i + 1:]:
            assert np.abs(albert_jordan_mul(p, q)).max() <= 1e-7
    assert [lam for lam, _ in res] == sorted(lam for lam, _ in res)


def test_spectral_resolution_examples():
    res = albert_spectral_resolution(albert_unit())
    assert len(res) == 1 and res[0][0] == pytest.approx(1.0)
    e1 = AlbertElement.diagonal(1, 0, 0).to_vector()
    res = albert_spectral_resolution(e1)
    assert [lam for lam, _ in res] == pytest.approx([0.0, 1.0])
    assert res[1][1] == pytest.approx(e1, abs=1e-12)
    assert res[0][1] == pytest.approx(albert_unit() - e1, abs=1e-12)


def test_diagonal_frame_and_trace_invariance(rng):
    frame = [AlbertElement.diagonal(*np.eye(3)[i]).to_vector() for i in range(3)]
    assert sum(frame) == pytest.approx(albert_unit())
    for i in range(3):
        for j in range(i + 1, 3):
            assert np.allclose(albert_jordan_mul(frame[i], frame[j]), 0)
    for p in frame + [frame[0] + frame[1]]:
        s = 2 * p - albert_unit()
        a = rng.standard_normal(27)
        usa = 2 * albert_jordan_mul(albert_jordan_mul(s, a), s) - albert_jordan_mul(albert_jordan_mul(s, s), a)
        assert albert_trace(usa) / 3 == pytest.approx(albert_trace(a) / 3, abs=1e-12)
