"""Dense complex linear algebra kernels.

Everything downstream (support functions, spectral checks, witness solves)
goes through the handful of primitives in this module. Eigen- and singular
value decompositions are delegated to LAPACK via numpy/scipy; a real
symmetric tridiagonal fast path keeps large discretized operators cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import BadParameter, NoConvergence, NotHermitian, ZeroVector

# Relative tolerances for the decomposition contracts.
TOL_SYM_REL = 1e-10   # Hermitian pre-check, x ||H||_F
TOL_EIG_REL = 1e-12   # Hermitian residual/orthonormality, x dim
TOL_GEIG_REL = 1e-9   # general eigenpair residual, x dim x ||A||

# Dimension above which the tridiagonal fast path pays off.
_TRIDIAG_MIN_DIM = 64


def as_matrix(a) -> np.ndarray:
    """Validate and return a square complex matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BadParameter(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise BadParameter("empty matrix")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise BadParameter("matrix entries must be finite")
    return m


def rotated_hermitian_part(a, theta: float) -> np.ndarray:
    """Hermitian part of e^{-i theta} A.

    Its largest eigenvalue is the support value of the numerical range of A
    in direction e^{i theta}. Construction is elementwise symmetric, so the
    result is Hermitian exactly.
    """
    a = as_matrix(a)
    m = np.exp(-1j * theta) * a
    return (m + m.conj().T) / 2


def skew_part_rotated(a, theta: float) -> np.ndarray:
    """Hermitian matrix S with e^{-i theta} A = H + iS."""
    a = as_matrix(a)
    m = np.exp(-1j * theta) * a
    return (m - m.conj().T) / 2j


@dataclass(frozen=True)
class HermitianEig:
    """Full Hermitian eigendecomposition, eigenvalues ascending."""

    values: np.ndarray    # real, ascending
    vectors: np.ndarray   # orthonormal columns, vectors[:, k] pairs values[k]


def _check_hermitian(h: np.ndarray) -> None:
    hnorm = np.linalg.norm(h)
    dev = np.linalg.norm(h - h.conj().T)
    if dev > TOL_SYM_REL * max(hnorm, 1e-300):
        raise NotHermitian(
            f"matrix deviates from Hermitian by {dev:.3e} (||H||_F = {hnorm:.3e})"
        )


def eig_hermitian(h) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix.

    Raises NotHermitian when the input fails the symmetry pre-check.
    """
    h = as_matrix(h)
    _check_hermitian(h)
    if np.all(h.imag == 0.0):
        w, v = np.linalg.eigh(h.real)
        v = v.astype(complex)
    else:
        w, v = np.linalg.eigh(h)
    return HermitianEig(values=w, vectors=v)


def _is_real_tridiagonal(h: np.ndarray) -> bool:
    if not np.all(h.imag == 0.0):
        return False
    n = h.shape[0]
    if n < 3:
        return True
    hr = h.real
    mask = ~(np.tri(n, n, 1, dtype=bool) & ~np.tri(n, n, -2, dtype=bool))
    return not np.any(hr[mask])


def top_eigenpairs(h, k: int = 8) -> tuple[np.ndarray, np.ndarray]:
    """Largest k eigenpairs of a Hermitian matrix, ascending.

    Dispatches to the real symmetric tridiagonal solver when the structure
    allows it; large discretized 1-D operators hit that path on every
    support-function evaluation.
    """
    h = as_matrix(h)
    n = h.shape[0]
    k = min(k, n)
    if n >= _TRIDIAG_MIN_DIM and _is_real_tridiagonal(h):
        d = np.ascontiguousarray(h.real.diagonal())
        e = np.ascontiguousarray(h.real.diagonal(1))
        w, v = scipy.linalg.eigh_tridiagonal(
            d, e, select="i", select_range=(n - k, n - 1)
        )
        return w, v.astype(complex)
    dec = eig_hermitian(h)
    return dec.values[n - k:], dec.vectors[:, n - k:]


def eig_general(a) -> tuple[np.ndarray, np.ndarray]:
    """All eigenvalues of A with unit right eigenvectors as columns.

    Eigenvalues are repeated with algebraic multiplicity and sorted by
    (real, imag) for reproducibility.
    """
    a = as_matrix(a)
    try:
        w, v = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails
        raise NoConvergence("general eigensolver did not converge", str(exc))
    order = np.lexsort((w.imag, w.real))
    w = w[order]
    v = v[:, order]
    v = v / np.linalg.norm(v, axis=0, keepdims=True)
    return w, v


def smallest_singular_value(a, lam: complex, return_vector: bool = False):
    """Smallest singular value of A - lam*I.

    Zero (within tolerance) exactly when lam is an eigenvalue; in general it
    measures how good an approximate eigenvalue lam is. With
    return_vector=True also returns the minimizing right singular vector,
    a unit vector v with ||(A - lam)v|| equal to the returned value.
    """
    a = as_matrix(a)
    m = a - lam * np.eye(a.shape[0])
    try:
        if not return_vector:
            s = np.linalg.svd(m, compute_uv=False)
            return float(s[-1])
        u, s, vh = np.linalg.svd(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence("SVD did not converge", str(exc))
    return float(s[-1]), vh[-1].conj()


def tridiag_profile(a: np.ndarray):
    """(diag, off) when A is tridiagonal with equal real off-diagonals.

    Discretized 1-D differential operators have this shape; the rotated
    Hermitian and skew parts are then real symmetric tridiagonal and never
    need dense storage. Returns None when the structure is absent.
    """
    n = a.shape[0]
    if n < 2:
        return None
    off_u = a.diagonal(1)
    off_l = a.diagonal(-1)
    if np.any(off_u.imag != 0.0) or not np.array_equal(off_u, off_l):
        return None
    nz = int(np.count_nonzero(a))
    band = int(np.count_nonzero(a.diagonal())) + 2 * int(np.count_nonzero(off_u))
    if nz != band:
        return None
    return (np.ascontiguousarray(a.diagonal()),
            np.ascontiguousarray(off_u.real))


def tridiag_apply(d: np.ndarray, e: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product for tridiag(diag=d, symmetric off=e)."""
    out = d * v
    if len(e):
        out[:-1] += e * v[1:]
        out[1:] += e * v[:-1]
    return out


def rayleigh(a, v) -> complex:
    """<Av, v> / <v, v> for a nonzero vector v; always lies in Num(A)."""
    a = as_matrix(a)
    v = np.asarray(v, dtype=complex).ravel()
    nrm2 = np.vdot(v, v).real
    if nrm2 == 0.0 or not np.isfinite(nrm2):
        raise ZeroVector("Rayleigh quotient of the zero vector")
    return complex(np.vdot(v, a @ v) / nrm2)


def fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate a vector so its largest-magnitude entry is real positive."""
    v = np.asarray(v, dtype=complex)
    idx = int(np.argmax(np.abs(v)))
    pivot = v[idx]
    if pivot == 0:
        return v
    return v * (abs(pivot) / pivot)
