import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgehom.assembly import assemble_generic
from sgehom.dilute import square_hole_aligned
from sgehom.moduli import IsotropicModuli, Regime, cubic_tensor4, iso_tensor4
from sgehom.tensors import (OrthogonalMap, Tensor4, Tensor6, chi_basis,
                            chi_matrix_of_tensor6, is_invariant_under,
                            min_eigenvalue_sym, rotate_tensor4, rotate_tensor6,
                            sym_matrix_basis, sym_matrix_of_tensor4)


def random_sym_tensor4(dim, rng):
    """Random minor+major symmetric fourth-order tensor from a symmetric
    matrix on the orthonormal basis."""
    B = sym_matrix_basis(dim)
    n = B.shape[0]
    M = rng.standard_normal((n, n))
    M = 0.5 * (M + M.T)
    C = np.einsum("ab,aij,bhk->ijhk", M, B, B)
    return Tensor4.from_array(C, dim)


# ----------------------------------------------------------------- bases ---

@pytest.mark.parametrize("dim", [2, 3])
def test_sym_basis_orthonormal(dim):
    B = sym_matrix_basis(dim)
    G = np.einsum("aij,bij->ab", B, B)
    assert np.abs(G - np.eye(B.shape[0])).max() < 1e-14


@pytest.mark.parametrize("dim,size", [(2, 6), (3, 18)])
def test_chi_basis_orthonormal(dim, size):
    B = chi_basis(dim)
    assert B.shape[0] == size
    G = np.einsum("aijk,bijk->ab", B, B)
    assert np.abs(G - np.eye(size)).max() < 1e-14
    # chi symmetry in the first index pair
    assert np.abs(B - B.transpose(0, 2, 1, 3)).max() == 0.0


# -------------------------------------------------------------- symmetry ---

def test_canonical_storage_is_exact():
    rng = np.random.default_rng(0)
    C = random_sym_tensor4(3, rng)
    c = C.components
    assert np.array_equal(c, c.transpose(1, 0, 2, 3))
    assert np.array_equal(c, c.transpose(0, 1, 3, 2))
    assert np.array_equal(c, c.transpose(2, 3, 0, 1))


def test_canonicalization_idempotent():
    rng = np.random.default_rng(1)
    C = random_sym_tensor4(2, rng)
    again = Tensor4.from_array(C.components, 2)
    assert np.array_equal(C.components, again.components)


def test_from_array_rejects_asymmetric():
    bad = np.zeros((2, 2, 2, 2))
    bad[0, 0, 0, 1] = 1.0  # breaks the minor symmetry by far more than tol
    with pytest.raises(ValueError, match="symmetries"):
        Tensor4.from_array(bad, 2)


def test_assembled_tensor6_symmetries_exact():
    rng = np.random.default_rng(2)
    for dim in (2, 3):
        C = random_sym_tensor4(dim, rng)
        a = assemble_generic(C, 0.07, 1.3).components
        assert np.array_equal(a, a.transpose(1, 0, 2, 3, 4, 5))
        assert np.array_equal(a, a.transpose(0, 1, 2, 4, 3, 5))
        assert np.array_equal(a, a.transpose(3, 4, 5, 0, 1, 2))


# -------------------------------------------------------------- rotation ---

def test_rotate_identity():
    rng = np.random.default_rng(3)
    C = random_sym_tensor4(3, rng)
    Q = OrthogonalMap.identity(3)
    assert np.abs(rotate_tensor4(C, Q).components - C.components).max() == 0.0


def test_rotate_isotropic_tensor4_invariant():
    rng = np.random.default_rng(4)
    C = iso_tensor4(1.0, 2.0, 3)
    for _ in range(10):
        Q = OrthogonalMap.random_rotation(3, rng)
        dev = np.abs(rotate_tensor4(C, Q).components - C.components).max()
        assert dev < 1e-12


def test_square_hole_tensor_invariant_under_quarter_turn():
    mat = IsotropicModuli(1.0, 1.0, Regime.PLANE_STRAIN)
    d = square_hole_aligned(mat)
    C = cubic_tensor4(d.lam_t, d.mu_t, d.xi_t, dim=2)
    Q = OrthogonalMap.rotation_2d(np.pi / 2.0)
    dev = np.abs(rotate_tensor4(C, Q).components - C.components).max()
    assert dev < 1e-12 * (1.0 + C.max_abs())


def test_rotate_tensor6_isotropic_invariant():
    rng = np.random.default_rng(5)
    C = iso_tensor4(1.0, 2.0, 3)  # a2 = 1, a4 = a5 = 2 pattern up to scale
    A = assemble_generic(C, 0.1, 1.0)
    for _ in range(5):
        Q = OrthogonalMap.random_rotation(3, rng)
        dev = np.abs(rotate_tensor6(A, Q).components - A.components).max()
        assert dev < 1e-12 * (1.0 + A.max_abs())


def test_cubic_tensor6_not_isotropic():
    mat = IsotropicModuli(1.0, 1.0, Regime.PLANE_STRAIN)
    d = square_hole_aligned(mat)
    C = cubic_tensor4(d.lam_t, d.mu_t, d.xi_t, dim=2)
    A = assemble_generic(C, 0.1, 1.0)
    Q = OrthogonalMap.rotation_2d(np.pi / 4.0)
    dev = np.abs(rotate_tensor6(A, Q).components - A.components).max()
    assert dev > 1e-6


def test_rotation_dimension_mismatch():
    C = iso_tensor4(1.0, 1.0, 2)
    with pytest.raises(ValueError, match="dimension mismatch"):
        rotate_tensor4(C, OrthogonalMap.identity(3))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), dim=st.sampled_from([2, 3]))
def test_rotation_group_action(seed, dim):
    rng = np.random.default_rng(seed)
    C = random_sym_tensor4(dim, rng)
    Q1 = OrthogonalMap.random_rotation(dim, rng)
    Q2 = OrthogonalMap.random_rotation(dim, rng)
    left = rotate_tensor4(rotate_tensor4(C, Q1), Q2)
    right = rotate_tensor4(C, Q2.compose(Q1))
    assert np.abs(left.components - right.components).max() < 1e-12 * (1 + C.max_abs())


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_rotation_preserves_spectra(seed):
    rng = np.random.default_rng(seed)
    C = random_sym_tensor4(3, rng)
    A = assemble_generic(C, 0.05, 1.5)
    Q = OrthogonalMap.random_rotation(3, rng)
    e4 = np.linalg.eigvalsh(sym_matrix_of_tensor4(C))
    e4r = np.linalg.eigvalsh(sym_matrix_of_tensor4(rotate_tensor4(C, Q)))
    assert np.abs(e4 - e4r).max() < 1e-10 * (1 + np.abs(e4).max())
    e6 = np.linalg.eigvalsh(chi_matrix_of_tensor6(A))
    e6r = np.linalg.eigvalsh(chi_matrix_of_tensor6(rotate_tensor6(A, Q)))
    assert np.abs(e6 - e6r).max() < 1e-10 * (1 + np.abs(e6).max())


# ----------------------------------------------------------- invariance ---

def test_is_invariant_examples():
    rng = np.random.default_rng(6)
    C = iso_tensor4(2.0, 1.0, 2)
    assert is_invariant_under(C, OrthogonalMap.rotation_2d(0.37), 1e-10)
    mat = IsotropicModuli(1.0, 1.0, Regime.PLANE_STRAIN)
    d = square_hole_aligned(mat)
    Cc = cubic_tensor4(d.lam_t, d.mu_t, d.xi_t, dim=2)
    assert is_invariant_under(Cc, OrthogonalMap.reflection(2, 0), 1e-10)
    assert not is_invariant_under(Cc, OrthogonalMap.rotation_2d(np.pi / 6.0), 1e-10)
    with pytest.raises(ValueError):
        is_invariant_under(C, OrthogonalMap.identity(2), 0.0)


# ------------------------------------------------------- quadratic forms ---

def test_sym_matrix_zero():
    assert np.abs(sym_matrix_of_tensor4(Tensor4.zero(3))).max() == 0.0


def test_sym_matrix_pure_shear_3d():
    M = sym_matrix_of_tensor4(iso_tensor4(0.0, 1.0, 3))
    assert np.abs(M - 2.0 * np.eye(6)).max() < 1e-14


def test_sym_matrix_rank_one_2d():
    M = sym_matrix_of_tensor4(iso_tensor4(1.0, 0.0, 2))
    eigs = np.sort(np.linalg.eigvalsh(M))
    assert np.abs(eigs - np.array([0.0, 0.0, 2.0])).max() < 1e-14


def test_chi_matrix_zero():
    assert np.abs(chi_matrix_of_tensor6(Tensor6.zero(2))).max() == 0.0


def test_chi_matrix_negative_identity_gives_pd():
    # minus the identity on symmetric tensors is iso_tensor4(0, -1/2)
    C = iso_tensor4(0.0, -0.5, 3)
    A = assemble_generic(C, 0.1, 1.0)
    eigs = np.linalg.eigvalsh(chi_matrix_of_tensor6(A))
    assert eigs[0] > 0.0


def test_chi_matrix_a4_only_nonnegative():
    C = iso_tensor4(0.0, -1.0, 2)  # a4 = a5 = f rho^2 / 2 > 0, a2 = 0
    A = assemble_generic(C, 2.0 / (1.0 ** 2), 1.0)
    eigs = np.linalg.eigvalsh(chi_matrix_of_tensor6(A))
    assert eigs[0] >= -1e-12 * np.abs(eigs).max()


# ------------------------------------------------------------ eigenvalue ---

def test_min_eigenvalue_examples():
    assert min_eigenvalue_sym(np.eye(6)) == pytest.approx(1.0, abs=1e-14)
    assert min_eigenvalue_sym(np.diag([-3.0, 2.0])) == pytest.approx(-3.0, abs=1e-14)
    M = sym_matrix_of_tensor4(iso_tensor4(-1.0, 1.0, 3))
    eigs = np.sort(np.linalg.eigvalsh(M))
    assert np.abs(eigs - np.array([-1.0, 2, 2, 2, 2, 2])).max() < 1e-12
    assert min_eigenvalue_sym(M) == pytest.approx(-1.0, abs=1e-12)


def test_min_eigenvalue_rejects_asymmetric():
    with pytest.raises(ValueError, match="symmetric"):
        min_eigenvalue_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_orthogonal_map_validation():
    with pytest.raises(ValueError, match="orthogonal"):
        OrthogonalMap(2, np.array([[1.0, 0.1], [0.0, 1.0]]))
