import numpy as np
import pytest

from framekit import (
    Frame,
    canonical_parseval,
    defects,
    gram,
    harmonic_frame,
    hs_norm,
    naimark_complement,
    naimark_reduction_check,
    perturb,
    random_parseval,
    reduce_to_small,
    vector_norms_sq,
)
from framekit.verify import random_equal_norm_parseval


class TestComplement:
    def test_harmonic_2_3_complement(self):
        comp = naimark_complement(harmonic_frame(2, 3))
        assert comp.n_vectors == 3 and comp.dim == 1
        assert np.allclose(vector_norms_sq(comp), 1.0 / 3.0)

    def test_gram_identity(self):
        for seed in range(10):
            f = random_parseval(3, 8, seed)
            comp = naimark_complement(f)
            assert hs_norm(gram(comp) + gram(f) - np.eye(8)) <= 1e-9

    def test_norm_identity(self):
        f = random_parseval(2, 7, 4)
        comp = naimark_complement(f)
        assert np.max(np.abs(vector_norms_sq(comp) + vector_norms_sq(f) - 1.0)) <= 1e-10

    def test_double_complement_restores_gram(self):
        f = random_parseval(3, 7, 9)
        double = naimark_complement(naimark_complement(f))
        assert hs_norm(gram(double) - gram(f)) <= 1e-8

    def test_defect_transfer(self):
        for seed in range(10):
            f = canonical_parseval(
                perturb(random_equal_norm_parseval(2, 6, seed), 0.08, seed)
            )
            eps = defects(f).equal_norm_eps
            comp_eps = defects(naimark_complement(f)).equal_norm_eps
            assert comp_eps <= eps * 2 / (6 - 2) + 1e-9

    def test_rejects_square_frame(self):
        with pytest.raises(ValueError, match="dimension is zero"):
            naimark_complement(harmonic_frame(3, 3))

    def test_rejects_non_parseval(self):
        f = Frame(1.2 * harmonic_frame(2, 5).vectors)
        with pytest.raises(ValueError, match="not Parseval"):
            naimark_complement(f)


class TestReductionCheck:
    def test_equal_norm_input_gives_zero_distances(self):
        rep = naimark_reduction_check(harmonic_frame(2, 5))
        assert rep.complement_distance <= 1e-12
        assert rep.lift_distance <= 1e-10
        assert rep.within_bound

    def test_complement_dimension_one(self):
        for seed in range(10):
            f = canonical_parseval(
                perturb(random_equal_norm_parseval(3, 4, seed), 0.06, seed)
            )
            rep = naimark_reduction_check(f)
            assert rep.within_bound
            assert rep.complement_equal_norm_eps <= rep.transfer_bound + 1e-9

    def test_wide_frame_complement_branch(self):
        f = canonical_parseval(perturb(random_equal_norm_parseval(2, 6, 17), 0.05, 17))
        rep = naimark_reduction_check(f)
        assert rep.within_bound
        reduced, flag = reduce_to_small(f)
        assert flag == "complemented"
        assert reduced.dim == 4 and reduced.n_vectors == 6
        assert reduced.n_vectors <= 2 * reduced.dim


class TestReduceToSmall:
    def test_narrow_frame_kept(self):
        f = harmonic_frame(3, 5)
        reduced, flag = reduce_to_small(f)
        assert flag == "original"
        assert reduced is f

    def test_wide_frame_complemented(self):
        f = harmonic_frame(2, 7)
        reduced, flag = reduce_to_small(f)
        assert flag == "complemented"
        assert reduced.dim == 5 and reduced.n_vectors == 7
        assert reduced.n_vectors <= 2 * reduced.dim

    def test_boundary_two_m_keeps_original(self):
        f = harmonic_frame(3, 6)
        reduced, flag = reduce_to_small(f)
        assert flag == "original"
        assert reduced is f
