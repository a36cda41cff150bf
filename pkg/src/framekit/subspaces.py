"""Orthogonal projections, principal angles, chordal distance, and the
alignment machinery that moves between Parseval frames and projections.

Projections of rank M on C^N stand in for M-dimensional subspaces (their
ranges).  The central quantities:

* ``proj_distance``   d(P, Q) = sum_i ||P e_i - Q e_i||^2 = ||P - Q||_HS^2
* ``principal_angles``  cosines are singular values of A^H B for orthonormal
  basis matrices A, B of the two ranges (basis independent)
* ``chordal_sq``      sum_j sin^2(theta_j) = M - Tr PQ = d(P, Q) / 2
* ``aligned_bases``   orthonormal bases paired so that <a_j, b_j> equals the
  j-th cosine (real, nonnegative) and cross inner products vanish
* ``frame_lift``      given a Parseval frame F and a target projection Q,
  a Parseval frame G with Gram(G) = Q and
  sum ||f_i - g_i||^2 <= 2 d(Gram(F), Q)
"""

from dataclasses import dataclass

import numpy as np

from .frames import Frame, analysis_matrix, defects, gram
from .linalg import as_matrix, herm_eig, hs_norm

__all__ = [
    "Projection",
    "PrincipalAngles",
    "AlignedBases",
    "projection_from_frame",
    "frame_from_projection",
    "diagonal_defect",
    "proj_distance",
    "principal_angles",
    "chordal_sq",
    "aligned_bases",
    "frame_lift",
]

# Principal-angle cosines may overshoot 1 by roundoff; anything beyond this
# indicates a bug rather than accumulation error.
COSINE_OVERSHOOT = 1e-12

PARSEVAL_ATOL = 1e-8


class Projection:
    """N x N Hermitian idempotent matrix of rank M.

    Validation (relative to max(1, HS norm)): Hermiticity and idempotency
    within ``atol``, trace within 1e-8 of the rank inferred from the
    eigenvalue split at 1/2.
    """

    __slots__ = ("_matrix", "_rank")

    def __init__(self, matrix, *, atol: float = 1e-9):
        p = as_matrix(matrix, "matrix")
        n, n2 = p.shape
        if n != n2:
            raise ValueError(f"projection matrix must be square, got shape {p.shape}")
        scale = max(1.0, hs_norm(p))
        herm_defect = hs_norm(p - p.conj().T)
        if herm_defect > atol * scale:
            raise ValueError(f"matrix is not Hermitian: defect {herm_defect:.3e}")
        p = 0.5 * (p + p.conj().T)
        idem_defect = hs_norm(p @ p - p)
        if idem_defect > atol * scale:
            raise ValueError(f"matrix is not idempotent: defect {idem_defect:.3e}")
        evals = herm_eig(p).eigenvalues
        rank = int(np.count_nonzero(evals > 0.5))
        if rank == 0:
            raise ValueError("projection has rank 0")
        trace = float(np.trace(p).real)
        if abs(trace - rank) > 1e-8 * max(1.0, rank):
            raise ValueError(f"trace {trace!r} is not consistent with rank {rank}")
        p.flags.writeable = False
        self._matrix = p
        self._rank = rank

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def size(self) -> int:
        return self._matrix.shape[0]

    @property
    def rank(self) -> int:
        return self._rank

    def __repr__(self) -> str:
        return f"Projection(size={self.size}, rank={self.rank})"


@dataclass(frozen=True)
class PrincipalAngles:
    """Angles between two equal-rank subspaces; cosines descending in [0, 1]."""

    cosines: np.ndarray
    angles: np.ndarray

    def sin_sq_sum(self) -> float:
        return float(np.sum(np.sin(self.angles) ** 2))


@dataclass(frozen=True)
class AlignedBases:
    """Orthonormal basis matrices of two ranges, column-paired along angles.

    Columns satisfy <a_j, b_j> = cos(theta_j) (real, nonnegative),
    <a_j, b_k> = 0 for j != k, and ||a_j - b_j||^2 = 4 sin^2(theta_j / 2).
    """

    first: np.ndarray
    second: np.ndarray

    def pair_distance_sq_sum(self) -> float:
        return float(np.sum(np.abs(self.first - self.second) ** 2))


def projection_from_frame(frame: Frame, *, atol: float = PARSEVAL_ATOL) -> Projection:
    """Gram matrix of a Parseval frame as the projection onto its analysis range."""
    eps = defects(frame).parseval_eps
    if eps > atol:
        raise ValueError(f"frame is not Parseval: defect {eps:.3e} exceeds {atol:.0e}")
    # Wrap tolerance is looser than the gate: a frame at the gate boundary
    # produces a Gram whose idempotency defect is of the same order.
    return Projection(gram(frame), atol=max(1e-9, 10.0 * atol))


def frame_from_projection(p: Projection) -> Frame:
    """Parseval frame {P e_i} in coordinates of an orthonormal basis of range(P).

    The resulting frame's Gram matrix reproduces ``p.matrix``.
    """
    return Frame(np.conj(_range_basis(p)))


def diagonal_defect(p: Projection) -> float:
    """Smallest eps with (1-eps) M/N <= P_ii <= (1+eps) M/N for all i."""
    diag = np.real(np.diagonal(p.matrix))
    target = p.rank / p.size
    return float(np.max(np.abs(diag / target - 1.0)))


def proj_distance(p: Projection, q: Projection) -> float:
    """d(P, Q) = sum_i ||P e_i - Q e_i||^2 = ||P - Q||_HS^2."""
    if p.size != q.size:
        raise ValueError(f"projection sizes differ: {p.size} vs {q.size}")
    return hs_norm(p.matrix - q.matrix) ** 2


def _check_equal_ranks(p: Projection, q: Projection) -> None:
    if p.size != q.size:
        raise ValueError(f"projection sizes differ: {p.size} vs {q.size}")
    if p.rank != q.rank:
        raise ValueError(f"projection ranks differ: {p.rank} vs {q.rank}")


def _range_basis(p: Projection) -> np.ndarray:
    """N x M matrix with orthonormal columns spanning range(P).

    Columns are the eigenvectors whose eigenvalue is within 1e-6 of 1; for a
    validated projection the spectrum splits cleanly, so this is a sanity
    gate rather than a numerical decision.
    """
    eig = herm_eig(p.matrix)
    m = p.rank
    if eig.eigenvalues[m - 1] < 1.0 - 1e-6 or (
        p.size > m and eig.eigenvalues[m] > 1e-6
    ):
        raise ValueError("projection spectrum does not split at rank; matrix is corrupt")
    return np.ascontiguousarray(eig.eigenvectors[:, :m])


def _clamped_cosines(s: np.ndarray) -> np.ndarray:
    if s.size and float(s[0]) > 1.0 + COSINE_OVERSHOOT:
        raise ArithmeticError(f"principal-angle cosine overshoot: {float(s[0])!r}")
    return np.clip(s, 0.0, 1.0)


def principal_angles(p: Projection, q: Projection) -> PrincipalAngles:
    """Principal angles between range(P) and range(Q), cosines descending."""
    _check_equal_ranks(p, q)
    a0 = _range_basis(p)
    b0 = _range_basis(q)
    s = np.linalg.svd(a0.conj().T @ b0, compute_uv=False)
    cos = _clamped_cosines(s)
    return PrincipalAngles(cosines=cos, angles=np.arccos(cos))


def chordal_sq(p: Projection, q: Projection) -> float:
    """Squared chordal distance M - Tr PQ between the two ranges."""
    _check_equal_ranks(p, q)
    return float(p.rank - np.trace(p.matrix @ q.matrix).real)


def aligned_bases(p: Projection, q: Projection) -> AlignedBases:
    """Orthonormal bases of the two ranges rotated onto the principal vectors.

    Taking the SVD U S V^H of the cross-correlation A0^H B0 and returning
    (A0 U, B0 V) makes the pairwise inner products exactly the (real,
    nonnegative) singular values, which is the phase correction needed for
    ||a_j - b_j||^2 = 4 sin^2(theta_j / 2) to hold over C.
    """
    _check_equal_ranks(p, q)
    a0 = _range_basis(p)
    b0 = _range_basis(q)
    u, s, vh = np.linalg.svd(a0.conj().T @ b0)
    _clamped_cosines(s)
    return AlignedBases(first=a0 @ u, second=b0 @ vh.conj().T)


def frame_lift(frame: Frame, q: Projection) -> Frame:
    """Parseval frame G with Gram(G) = Q, close to a given Parseval frame F.

    The lift pairs orthonormal bases of range(Gram F) and range(Q) along the
    principal angles, identifies the basis of range(Gram F) with F itself
    through the unitary C = A^H T_F, and carries the paired basis of
    range(Q) back through the same unitary.  The construction guarantees
    sum_i ||f_i - g_i||^2 = sum_j ||a_j - b_j||^2 <= 2 d(Gram F, Q), and if
    Q has constant diagonal the output is equal norm.
    """
    p = projection_from_frame(frame)
    if q.size != frame.n_vectors:
        raise ValueError(f"projection size {q.size} != frame vector count {frame.n_vectors}")
    if q.rank != frame.dim:
        raise ValueError(f"projection rank {q.rank} != frame dimension {frame.dim}")
    ab = aligned_bases(p, q)
    c = ab.first.conj().T @ analysis_matrix(frame)
    unit_defect = hs_norm(c.conj().T @ c - np.eye(frame.dim))
    if unit_defect > 1e-10:
        u, _, vh = np.linalg.svd(c)
        c = u @ vh
    return Frame(np.conj(ab.second @ c))
