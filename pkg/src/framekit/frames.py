"""Frames for finite-dimensional complex Hilbert spaces.

A frame is an ordered, spanning family of N vectors in C^M, stored as the
(N, M) array whose rows are the vectors.  Inner products are linear in the
first slot, <x, y> = sum_k x_k conj(y_k).  With vector rows V this fixes the
conventions used throughout:

* analysis matrix      T = conj(V), so (T f)_i = <f, f_i>
* frame operator       S = T^H T = V^T conj(V)
* Gram matrix          G = T T^H,  G[i, j] = <f_j, f_i>

For a Parseval frame (S = I) the Gram matrix is the orthogonal projection of
C^N onto the range of the analysis matrix, which is what ties frames to the
subspace geometry in :mod:`framekit.subspaces`.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, herm_eig, hs_norm, inv_sqrt_psd

__all__ = [
    "RankDeficientError",
    "Frame",
    "FrameDefects",
    "analysis_matrix",
    "frame_operator",
    "frame_bounds",
    "gram",
    "vector_norms_sq",
    "defects",
    "canonical_parseval",
    "frame_distance",
    "frame_potential",
    "analysis_image_distance",
]

SPAN_EIG_FLOOR = 1e-12


class RankDeficientError(ValueError):
    """The supplied vectors do not span the ambient space."""


class Frame:
    """Ordered spanning family of N vectors in C^M (N >= M).

    Construction validates finiteness and the spanning property (smallest
    frame-operator eigenvalue above ``SPAN_EIG_FLOOR``); rank-deficient
    vector lists are rejected outright.  Instances are immutable.
    """

    __slots__ = ("_vectors",)

    def __init__(self, vectors):
        v = as_matrix(vectors, "vectors")
        n, m = v.shape
        if n < m:
            raise ValueError(
                f"a frame needs at least dim vectors: got {n} vectors in dimension {m}"
            )
        s = v.T @ v.conj()
        lam_min = float(herm_eig(s).eigenvalues[-1])
        if lam_min <= SPAN_EIG_FLOOR:
            raise RankDeficientError(
                f"vectors do not span C^{m}: smallest frame-operator eigenvalue {lam_min:.3e}"
            )
        v = v.copy()
        v.flags.writeable = False
        self._vectors = v

    @property
    def vectors(self) -> np.ndarray:
        """(N, M) array; row i is the i-th frame vector."""
        return self._vectors

    @property
    def dim(self) -> int:
        return self._vectors.shape[1]

    @property
    def n_vectors(self) -> int:
        return self._vectors.shape[0]

    def __repr__(self) -> str:
        return f"Frame(n_vectors={self.n_vectors}, dim={self.dim})"


@dataclass(frozen=True)
class FrameDefects:
    """How far a frame is from Parseval and from equal norm.

    ``parseval_eps`` is the smallest eps with (1-eps) I <= S <= (1+eps) I;
    ``equal_norm_eps`` the smallest eps with
    (1-eps) M/N <= ||f_i||^2 <= (1+eps) M/N for every i.
    """

    parseval_eps: float
    equal_norm_eps: float

    def max(self) -> float:
        return max(self.parseval_eps, self.equal_norm_eps)


def analysis_matrix(frame: Frame) -> np.ndarray:
    """N x M matrix T with (T f)_i = <f, f_i>; row i is conj(f_i)."""
    return np.conj(frame.vectors)


def frame_operator(frame: Frame) -> np.ndarray:
    """M x M Hermitian positive-definite S = T^H T = sum_i f_i f_i^H."""
    v = frame.vectors
    s = v.T @ v.conj()
    return 0.5 * (s + s.conj().T)


def frame_bounds(frame: Frame) -> tuple[float, float]:
    """Optimal frame bounds (A, B) = extreme eigenvalues of the frame operator."""
    evals = herm_eig(frame_operator(frame)).eigenvalues
    return float(evals[-1]), float(evals[0])


def gram(frame: Frame) -> np.ndarray:
    """N x N Gram matrix with entries G[i, j] = <f_j, f_i>."""
    v = frame.vectors
    g = np.conj(v) @ v.T
    return 0.5 * (g + g.conj().T)


def vector_norms_sq(frame: Frame) -> np.ndarray:
    """Real array of squared vector norms ||f_i||^2."""
    return np.sum(np.abs(frame.vectors) ** 2, axis=1)


def defects(frame: Frame) -> FrameDefects:
    a, b = frame_bounds(frame)
    norms_sq = vector_norms_sq(frame)
    target = frame.dim / frame.n_vectors
    return FrameDefects(
        parseval_eps=max(1.0 - a, b - 1.0),
        equal_norm_eps=float(np.max(np.abs(norms_sq / target - 1.0))),
    )


def canonical_parseval(frame: Frame) -> Frame:
    """The Parseval frame {S^{-1/2} f_i}, the closest Parseval frame to F."""
    r = inv_sqrt_psd(frame_operator(frame))
    return Frame(frame.vectors @ r.T)


def _check_same_shape(f: Frame, g: Frame) -> None:
    if f.n_vectors != g.n_vectors or f.dim != g.dim:
        raise ValueError(
            f"frames are incompatible: ({f.n_vectors}, {f.dim}) vs ({g.n_vectors}, {g.dim})"
        )


def frame_distance(f: Frame, g: Frame) -> float:
    """Summed squared vector distance sum_i ||f_i - g_i||^2."""
    _check_same_shape(f, g)
    return float(np.sum(np.abs(f.vectors - g.vectors) ** 2))


def frame_potential(frame: Frame) -> float:
    """sum_{i,j} |<f_i, f_j>|^2 = ||Gram||_HS^2 = Tr S^2."""
    return hs_norm(gram(frame)) ** 2


def analysis_image_distance(f: Frame, g: Frame) -> float:
    """Summed squared distance between the analysis images of two frames.

    For frames with analysis matrices T_1, T_2 this is
    sum_i ||T_1 f_i - T_2 g_i||^2, computed basis-free as the squared
    Hilbert-Schmidt distance between the Gram matrices (T_1 f_i is the
    i-th column of the Gram matrix of F).
    """
    _check_same_shape(f, g)
    return hs_norm(gram(f) - gram(g)) ** 2
