"""Dense complex linear-algebra kernel.

Thin, contract-checked wrappers around LAPACK (via ``numpy.linalg``) so that
every other module decomposes matrices through one place.  All routines take
and return 2-D ``complex128`` arrays; real input is embedded with a zero
imaginary part.  Hermitian inputs are symmetrized before decomposition to
absorb accumulation error.
"""

from typing import NamedTuple

import numpy as np

__all__ = [
    "SingularMatrixError",
    "HermEig",
    "Svd",
    "as_matrix",
    "hs_norm",
    "herm_eig",
    "svd",
    "inv_sqrt_psd",
]

EIG_FLOOR = 1e-12


class SingularMatrixError(np.linalg.LinAlgError):
    """A nominally positive-definite matrix is numerically singular."""


class HermEig(NamedTuple):
    """Hermitian eigendecomposition, eigenvalues sorted descending."""

    eigenvalues: np.ndarray  # real, descending
    eigenvectors: np.ndarray  # unitary; column j pairs with eigenvalues[j]


class Svd(NamedTuple):
    """Singular value decomposition A = left @ diag(s) @ right^H."""

    left: np.ndarray
    singular_values: np.ndarray  # real, nonnegative, descending
    right: np.ndarray


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array, validating shape."""
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must have positive dimensions, got shape {arr.shape}")
    arr = arr.astype(np.complex128, copy=False)
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains NaN or Inf entries")
    return arr


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(a))


def herm_eig(h) -> HermEig:
    """Eigendecomposition of a Hermitian matrix.

    The input is replaced by (H + H^H)/2 before decomposing, so callers may
    pass matrices that are Hermitian only up to roundoff.
    """
    h = as_matrix(h, "H")
    if h.shape[0] != h.shape[1]:
        raise ValueError(f"H must be square, got shape {h.shape}")
    h = 0.5 * (h + h.conj().T)
    evals, evecs = np.linalg.eigh(h)
    return HermEig(np.ascontiguousarray(evals[::-1]), np.ascontiguousarray(evecs[:, ::-1]))


def svd(a) -> Svd:
    """Thin singular value decomposition with A = U diag(s) V^H.

    ``right`` holds V itself (orthonormal columns), not V^H.
    """
    a = as_matrix(a, "A")
    u, s, vh = np.linalg.svd(a, full_matrices=False)
    return Svd(u, s, vh.conj().T)


def inv_sqrt_psd(s, eig_floor: float = EIG_FLOOR) -> np.ndarray:
    """Inverse square root of a Hermitian positive-definite matrix.

    Returns the Hermitian R with R @ S @ R = I.  Raises
    :class:`SingularMatrixError` when the smallest eigenvalue of the
    symmetrized input does not clear ``eig_floor``.
    """
    decomp = herm_eig(s)
    lam_min = float(decomp.eigenvalues[-1])
    if lam_min <= eig_floor:
        raise SingularMatrixError(
            f"matrix is numerically singular: smallest eigenvalue "
            f"{lam_min:.6e} <= {eig_floor:.0e}"
        )
    v = decomp.eigenvectors
    r = (v * decomp.eigenvalues**-0.5) @ v.conj().T
    return 0.5 * (r + r.conj().T)
