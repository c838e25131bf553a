import numpy as np
import pytest
from hypothesis import given, strategies as st

from jordan_gleason.algebra import (
    Algebra,
    AlbertFactor,
    Element,
    MatrixFactor,
    Projection,
    SpinFactor,
    SymmetricFactor,
    _sa_norm,
    functional_calculus,
    involution,
    is_positive,
    is_self_adjoint,
    jordan_mul,
    negative_part,
    operator_norm,
    operator_norm_sa,
    pairing,
    positive_part,
    power,
    spectral_resolution,
    sqrt_positive,
    triple_product,
    u_bilinear,
    u_map,
)
from jordan_gleason.errors import (
    DescriptorMismatch,
    NotAProjection,
    NotPositive,
    NotSelfAdjoint,
    ParseError,
    UnsupportedFactor,
)

DESCRIPTORS = ["m3", "m5", "s4", "spin5", "albert", "m2+spin3", "m3+s4+spin4+albert"]
seeds = st.integers(0, 2**32 - 1)


def m(*rows):
    return Algebra.parse(f"m{len(rows)}").element(np.array(rows, dtype=complex))


def unit_sa(alg, rng):
    x = alg.random_self_adjoint(rng)
    return x / _sa_norm(x)


def size(x):
    h = 0.5 * (x + involution(x))
    k = (x - involution(x)) * (-0.5j)
    return max(_sa_norm(h), _sa_norm(k))


# -- descriptors ------------------------------------------------------------

def test_parse_round_trip():
    alg = Algebra.parse("m3+s4+spin5+albert")
    assert [type(f) for f in alg.factors] == [MatrixFactor, SymmetricFactor, SpinFactor, AlbertFactor]
    assert str(alg) == "m3+s4+spin5+albert"
    assert Algebra.parse(" m3 + m3 ") == Algebra.parse("m3+m3")


@pytest.mark.parametrize("bad", ["", "m", "m0", "x3", "M3", "m3+", "spin", "albert2", "s-1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        Algebra.parse(bad)


def test_descriptor_mismatch():
    a = Algebra.parse("m2").unit()
    b = Algebra.parse("m3").unit()
    with pytest.raises(DescriptorMismatch):
        jordan_mul(a, b)
    with pytest.raises(DescriptorMismatch):
        Algebra.parse("m2").element(np.eye(3))
    with pytest.raises(DescriptorMismatch):
        Algebra.parse("m2+m2").element(np.eye(2))


def test_symmetric_factor_rejects_non_symmetric():
    with pytest.raises(DescriptorMismatch):
        Algebra.parse("s2").element(np.array([[0, 1], [0, 0]]))


# -- products ---------------------------------------------------------------

def test_u_bilinear_examples(rng):
    alg = Algebra.parse("m3")
    b = alg.random_element(rng)
    assert size(u_bilinear(alg.unit(), alg.unit(), b) - b) < 1e-14
    e11, e22 = np.diag([1, 0, 0]), np.diag([0, 1, 0])
    x = alg.random_element(rng)
    got = u_bilinear(alg.element(e11), alg.element(e22), x)
    want = 0.5 * (e11 @ x.parts[0] @ e22 + e22 @ x.parts[0] @ e11)
    assert np.allclose(got.parts[0], want)
    a2 = Algebra.parse("m2")
    sym = a2.element(np.array([[0, 1], [1, 0]]))
    got = u_bilinear(a2.element(np.diag([1, 0])), a2.element(np.diag([0, 1])), sym)
    assert np.allclose(got.parts[0], 0.5 * np.array([[0, 1], [1, 0]]))


@given(seeds)
def test_envelope_oracles(seed):
    rng = np.random.default_rng(seed)
    alg = Algebra.parse("m4")
    a, b, c = (alg.random_element(rng) for _ in range(3))
    A, B, C = a.parts[0], b.parts[0], c.parts[0]
    assert np.allclose(jordan_mul(a, b).parts[0], 0.5 * (A @ B + B @ A))
    assert np.allclose(u_map(a, b).parts[0], A @ B @ A)
    assert np.allclose(triple_product(a, b, c).parts[0], 0.5 * (A @ B.conj().T @ C + C @ B.conj().T @ A))


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_generic_u_map_matches_quadratic_formula(desc, rng):
    alg = Algebra.parse(desc)
    a, b = alg.random_element(rng), alg.random_element(rng)
    generic = 2.0 * jordan_mul(jordan_mul(a, b), a) - jordan_mul(jordan_mul(a, a), b)
    assert size(u_map(a, b) - generic) < 1e-12
    assert size(u_bilinear(a, a, b) - u_map(a, b)) < 1e-12


@pytest.mark.parametrize("desc", DESCRIPTORS)
@given(seed=seeds)
def test_jordan_identity_and_fundamental_identity(desc, seed):
    rng = np.random.default_rng(seed)
    alg = Algebra.parse(desc)
    a, b, c = (unit_sa(alg, rng) for _ in range(3))
    a2 = jordan_mul(a, a)
    assert size(jordan_mul(jordan_mul(a2, b), a) - jordan_mul(jordan_mul(a, b), a2)) <= 1e-8
    assert size(u_map(u_map(a, b), c) - u_map(a, u_map(b, u_map(a, c)))) <= 1e-8
    assert size(jordan_mul(a, b) - jordan_mul(b, a)) <= 1e-15


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_norm_axioms(desc, rng):
    alg = Algebra.parse(desc)
    for _ in range(20):
        a, b = alg.random_self_adjoint(rng), alg.random_self_adjoint(rng)
        a2, b2 = jordan_mul(a, a), jordan_mul(b, b)
        assert operator_norm_sa(a2) == pytest.approx(operator_norm_sa(a) ** 2, abs=1e-8)
        assert operator_norm_sa(a2) <= operator_norm_sa(a2 + b2) + 1e-9
        assert operator_norm_sa(involution(a)) == pytest.approx(operator_norm_sa(a), abs=1e-12)


@pytest.mark.parametrize("desc", ["m3", "s4", "m2+s3"])
def test_c_star_norm_identity(desc, rng):
    alg = Algebra.parse(desc)
    for _ in range(20):
        a = alg.random_element(rng)
        assert abs(operator_norm(a) ** 3 - operator_norm(u_map(a, involution(a)))) <= 1e-7


def test_general_norm_unsupported_on_spin(rng):
    alg = Algebra.parse("spin3")
    with pytest.raises(UnsupportedFactor):
        operator_norm(alg.random_element(rng))


def test_involution_examples(rng):
    x = m([1j, 0], [0, 0])
    assert np.allclose(involution(x).parts[0], [[-1j, 0], [0, 0]])
    s = Algebra.parse("s2").element(np.array([[1.0, 2.0], [2.0, 3.0]]))
    assert np.allclose(involution(s).parts[0], s.parts[0])
    for desc in DESCRIPTORS:
        a = Algebra.parse(desc).random_element(rng)
        assert size(involution(involution(a)) - a) == 0.0


def test_power(rng):
    alg = Algebra.parse("m3")
    a = alg.random_self_adjoint(rng)
    assert np.allclose(power(a, 3).parts[0], np.linalg.matrix_power(a.parts[0], 3))
    assert np.allclose(power(a, 0).parts[0], np.eye(3))


# -- spectral theory --------------------------------------------------------

def test_spectral_examples():
    alg = Algebra.parse("m3")
    res = spectral_resolution(alg.unit())
    assert len(res) == 1 and res.eigenvalues[0] == pytest.approx(1.0)
    res = spectral_resolution(alg.element(np.diag([2.0, 2.0, 5.0])))
    assert res.eigenvalues == pytest.approx([2.0, 5.0])
    assert np.allclose(res.projections[0].parts[0], np.diag([1, 1, 0]))
    assert np.allclose(res.projections[1].parts[0], np.diag([0, 0, 1]))
    assert len(spectral_resolution(alg.zero())) == 0
    assert operator_norm_sa(alg.zero()) == 0.0


@pytest.mark.parametrize("desc", DESCRIPTORS)
@given(seed=seeds)
def test_spectral_reconstruction(desc, seed):
    rng = np.random.default_rng(seed)
    alg = Algebra.parse(desc)
    x = alg.random_self_adjoint(rng)
    res = spectral_resolution(x)
    assert size(res.reconstruct() - x) <= 1e-9
    lams = res.eigenvalues
    assert list(lams) == sorted(lams)
    assert all(b - a >= 1e-8 for a, b in zip(lams, lams[1:]))
    total = sum((p.element for p in res.projections), alg.zero())
    assert size(total - alg.unit()) <= 1e-9


def test_spectral_against_lapack(rng):
    alg = Algebra.parse("m5")
    for _ in range(10):
        x = alg.random_self_adjoint(rng)
        assert spectral_resolution(x).eigenvalues == pytest.approx(np.linalg.eigvalsh(x.parts[0]), abs=1e-10)


def test_spectral_requires_self_adjoint():
    with pytest.raises(NotSelfAdjoint):
        spectral_resolution(m([0, 1], [0, 0]))
    with pytest.raises(NotSelfAdjoint):
        operator_norm_sa(m([0, 1], [0, 0]))


def test_norm_examples():
    assert operator_norm_sa(m([-3, 0], [0, 2])) == pytest.approx(3.0)
    alg = Algebra.parse("m4+spin3+albert")
    p = alg.random_projection(np.random.default_rng(0), [2, 1, 1])
    assert operator_norm_sa(p.element) == pytest.approx(1.0)


def test_positivity(rng):
    assert not is_positive(m([1, 0], [0, -1e-3]))
    assert is_positive(m([1, 0], [0, -1e-12]))
    assert not is_positive(m([0, 1], [0, 0]))
    for desc in DESCRIPTORS:
        alg = Algebra.parse(desc)
        x = alg.random_self_adjoint(rng)
        assert is_positive(jordan_mul(x, x))
        xp, xm = positive_part(x), negative_part(x)
        assert is_positive(xp) and is_positive(xm)
        assert size(xp - xm - x) <= 1e-9
        assert size(jordan_mul(xp, xm)) <= 1e-9


def test_sqrt_and_calculus(rng):
    for desc in DESCRIPTORS:
        alg = Algebra.parse(desc)
        x = alg.random_self_adjoint(rng)
        y = jordan_mul(x, x)
        r = sqrt_positive(y)
        assert size(jordan_mul(r, r) - y) <= 1e-9
        assert size(functional_calculus(x, lambda t: t) - x) <= 1e-9
    with pytest.raises(NotPositive):
        sqrt_positive(m([1, 0], [0, -1]))


def test_symmetries_are_two_p_minus_one(rng):
    for desc in DESCRIPTORS:
        alg = Algebra.parse(desc)
        p = alg.random_projection(rng)
        s = 2.0 * p.element - alg.unit()
        assert size(jordan_mul(s, s) - alg.unit()) <= 1e-9
        Projection.certify(0.5 * (alg.unit() + s))


# -- projections ------------------------------------------------------------

def test_projection_certification():
    alg = Algebra.parse("m2")
    p = Projection.certify(alg.element(np.diag([1.0, 0.0])))
    assert p.rank == (1,)
    with pytest.raises(NotAProjection):
        Projection.certify(alg.element(np.diag([0.5, 0.0])))
    with pytest.raises(NotAProjection):
        Projection.certify(alg.element(np.array([[1.0, 1.0], [0.0, 0.0]])))


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_random_projections_certify(desc, rng):
    alg = Algebra.parse(desc)
    for _ in range(10):
        p = alg.random_projection(rng)
        q = Projection.certify(p.element)
        assert q.rank == p.rank
        assert size(u_map(p, p) - p.element) <= 1e-9
        assert size(triple_product(p, p, p) - p.element) <= 1e-9


def test_pairing_weights(rng):
    alg = Algebra.parse("m2+spin3")
    assert pairing(alg.unit(), alg.unit()) == pytest.approx(2.0)
    rho = alg.random_self_adjoint(rng)
    x = alg.random_self_adjoint(rng)
    want = np.trace(rho.parts[0] @ x.parts[0]) / 2 + (rho.parts[1][0] * x.parts[1][0] + rho.parts[1][1:] @ x.parts[1][1:])
    assert pairing(rho, x) == pytest.approx(want)


def test_norm_chain_identity(rng):
    alg = Algebra.parse("m4")
    for _ in range(30):
        p, q = alg.random_projection(rng), alg.random_projection(rng)
        P, Q = p.parts[0], q.parts[0]
        lhs = operator_norm_sa(u_map(p, p - q))
        assert abs(lhs - np.linalg.norm((P - Q) @ P, 2) ** 2) <= 1e-9
        assert lhs <= np.linalg.norm(P - Q, 2) ** 2 + 1e-9


def test_is_self_adjoint():
    assert is_self_adjoint(m([1, 1j], [-1j, 2]))
    assert not is_self_adjoint(m([1, 1j], [1j, 2]))
    assert isinstance(m([1, 0], [0, 1]), Element)
