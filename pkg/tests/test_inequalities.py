import numpy as np
import pytest

from hardyhilbert.hardyspace import AnalyticPoly, cauchy_product
from hardyhilbert.inequalities import (
    DENSE_EIGEN,
    POWER_ITERATION,
    best_constant_scan,
    equivalence_witness,
    hankel_matvec,
    hardy_degree_bound_check,
    hardy_ratio,
    hardy_sum,
    hilbert_form,
    matrix_norm,
    scan_to_csv,
)
from hardyhilbert.seqspace import XSequence, classic_sequence

CLASSIC_N2 = (4.0 + np.sqrt(13.0)) / 6.0  # closed-form top eigenvalue of [[1,1/2],[1/2,1/3]]


class TestHardySum:
    def test_constant_against_classic(self):
        assert hardy_sum(AnalyticPoly([1.0]), classic_sequence(5)) == 1.0

    def test_harmonic_partial_sum(self):
        f = AnalyticPoly([1.0, 1.0, 1.0, 1.0])
        assert hardy_sum(f, classic_sequence(4)) == pytest.approx(25.0 / 12.0, rel=1e-15)

    def test_one_plus_z_ratio(self):
        f = AnalyticPoly([1.0, 1.0])
        c = classic_sequence(2)
        assert hardy_sum(f, c) == 1.5
        assert hardy_ratio(f, c, 4096) == pytest.approx(3.0 * np.pi / 8.0, rel=1e-11)


class TestHardyRatio:
    def test_constant_is_one(self):
        assert hardy_ratio(AnalyticPoly([1.0]), classic_sequence(3)) == pytest.approx(1.0, rel=1e-14)

    def test_monomials(self):
        for k in (1, 2, 5):
            coeffs = np.zeros(k + 1)
            coeffs[k] = 1.0
            ratio = hardy_ratio(AnalyticPoly(coeffs), classic_sequence(k + 1))
            assert ratio == pytest.approx(1.0 / (k + 1), rel=1e-14)

    def test_zero_inputs_rejected(self):
        with pytest.raises(ValueError):
            hardy_ratio(AnalyticPoly([0.0]), classic_sequence(3))
        with pytest.raises(ValueError):
            hardy_ratio(AnalyticPoly([1.0]), XSequence([0.0, 0.0]))


class TestHilbertForm:
    def test_unit_impulses(self):
        assert hilbert_form([1.0], [1.0], classic_sequence(1)) == 1.0

    def test_hand_sum(self):
        assert hilbert_form([1.0, 1.0], [1.0], classic_sequence(2)) == pytest.approx(1.5, rel=1e-15)

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        a, b = rng.random(9), rng.random(5)
        c = XSequence(rng.random(13))
        assert hilbert_form(a, b, c) == pytest.approx(hilbert_form(b, a, c), rel=1e-14)

    def test_bridge_identity_against_cauchy_route(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            a = rng.random(int(rng.integers(1, 30)))
            b = rng.random(int(rng.integers(1, 30)))
            c = XSequence(rng.random(a.size + b.size - 1))
            direct = hilbert_form(a, b, c)
            via_product = hardy_sum(AnalyticPoly(cauchy_product(a, b)), c)
            assert direct == pytest.approx(via_product, rel=1e-12)

    def test_short_sequence_warns_and_truncates(self):
        with pytest.warns(RuntimeWarning):
            val = hilbert_form([1.0, 1.0], [1.0, 1.0], classic_sequence(2))
        # only weights c_0, c_1 available: 1*1*1 + 2*(1*1)*0.5 = 2
        assert val == pytest.approx(2.0, rel=1e-15)


class TestHankelMatvec:
    def test_direct_matches_dense(self):
        rng = np.random.default_rng(3)
        gen = rng.random(19)
        v = rng.random(10)
        idx = np.arange(10)
        dense = gen[idx[:, None] + idx[None, :]] @ v
        assert np.allclose(hankel_matvec(gen, v, "direct"), dense, rtol=1e-14)

    def test_fft_agrees_with_direct(self):
        rng = np.random.default_rng(4)
        for N in (1, 2, 17, 128):
            gen = rng.random(2 * N - 1)
            v = rng.random(N)
            d = hankel_matvec(gen, v, "direct")
            f = hankel_matvec(gen, v, "fft")
            assert np.abs(d - f).max() <= 1e-13 * max(1.0, np.abs(d).max())

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            hankel_matvec(np.ones(3), np.ones(2), "magic")


class TestMatrixNorm:
    def test_single_entry(self):
        est = matrix_norm(classic_sequence(1), 1)
        assert est.value == 1.0
        assert est.converged

    def test_two_by_two_closed_form(self):
        est = matrix_norm(classic_sequence(3), 2)
        assert est.value == pytest.approx(CLASSIC_N2, abs=1e-12)

    def test_dense_two_by_two(self):
        est = matrix_norm(classic_sequence(3), 2, DENSE_EIGEN)
        assert est.value == pytest.approx(CLASSIC_N2, abs=1e-13)
        assert est.iterations == 0

    def test_submatrix_monotonicity(self):
        c = classic_sequence(7)
        assert matrix_norm(c, 4).value >= matrix_norm(c, 2).value

    def test_power_matches_dense(self):
        rng = np.random.default_rng(5)
        for N in (3, 16, 40):
            c = XSequence(rng.uniform(0.05, 1.0, 2 * N - 1))
            p = matrix_norm(c, N, POWER_ITERATION)
            d = matrix_norm(c, N, DENSE_EIGEN)
            assert p.converged and d.converged
            assert abs(p.value - d.value) <= 1e-10

    def test_top_vector_nonnegative_unit(self):
        est = matrix_norm(classic_sequence(21), 11)
        assert np.all(est.top_vector >= 0)
        assert np.linalg.norm(est.top_vector) == pytest.approx(1.0, abs=1e-12)
        assert est.residual <= 1e-12

    def test_short_sequence_rejected(self):
        with pytest.raises(ValueError):
            matrix_norm(classic_sequence(4), 3)  # needs 2*3-1 = 5 entries

    def test_dense_size_cap(self):
        with pytest.raises(ValueError):
            matrix_norm(classic_sequence(2 * 600 - 1), 600, DENSE_EIGEN)

    def test_zero_sequence(self):
        est = matrix_norm(XSequence(np.zeros(5)), 3)
        assert est.value == 0.0
        assert est.converged


class TestEquivalenceWitness:
    def test_trivial_size_one(self):
        rep = equivalence_witness(classic_sequence(1), 1)
        assert rep.matrix_norm == pytest.approx(1.0, abs=1e-14)
        assert rep.hardy_ratio == pytest.approx(1.0, abs=1e-14)
        assert rep.gap <= 1e-14
        assert rep.classic

    def test_two_by_two_gap(self):
        rep = equivalence_witness(classic_sequence(3), 2)
        assert rep.gap <= 1e-8
        assert rep.matrix_norm == pytest.approx(CLASSIC_N2, abs=1e-10)
        assert rep.hardy_ratio == pytest.approx(CLASSIC_N2, abs=1e-8)

    def test_gap_closes_for_non_unit_norm_sequence(self):
        rng = np.random.default_rng(6)
        c = XSequence(rng.uniform(0.1, 1.0, 15))  # xnorm far from 1
        rep = equivalence_witness(c, 8)
        assert rep.gap <= 1e-8
        assert not rep.classic

    def test_witness_degree(self):
        rep = equivalence_witness(classic_sequence(9), 5)
        assert rep.witness.degree == 8
        assert rep.to_dict()["witness_degree"] == 8


class TestBestConstantScan:
    def test_classic_starts_at_one(self):
        scan = best_constant_scan(classic_sequence(1), [1])
        assert scan[0].value == 1.0

    def test_monotone_under_pi_small(self):
        c = classic_sequence(63)
        scan = best_constant_scan(c, [2, 4, 8, 16, 32])
        values = [e.value for e in scan]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(v < np.pi for v in values)

    def test_requires_ascending(self):
        with pytest.raises(ValueError):
            best_constant_scan(classic_sequence(9), [4, 2])

    def test_slow_decay_scan_finite_and_monotone(self):
        from hardyhilbert.seqspace import slow_decay_sequence, trace_to_xsequence
        c = trace_to_xsequence(slow_decay_sequence(0.6, 1.5, 2 * 256 - 2))
        scan = best_constant_scan(c, [2**j for j in range(1, 9)])
        values = [e.value for e in scan]
        assert all(np.isfinite(v) for v in values)
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert all(e.converged for e in scan)

    def test_csv_schema(self, tmp_path):
        path = tmp_path / "scan.csv"
        scan_to_csv(path, best_constant_scan(classic_sequence(7), [1, 2, 4]))
        lines = path.read_text().splitlines()
        assert lines[0] == "N,norm,residual,iterations"
        assert lines[1].startswith("1,1.0,")


class TestDegreeBound:
    def test_constant_saturates(self):
        chk = hardy_degree_bound_check(AnalyticPoly([1.0]), classic_sequence(1))
        assert chk.holds
        assert chk.lhs == pytest.approx(chk.rhs, rel=1e-7)

    def test_perfect_square_holds_with_slack(self):
        chk = hardy_degree_bound_check(AnalyticPoly([1.0, 1.0, 0.25]), classic_sequence(5))
        assert chk.holds
        assert chk.slack > 0

    def test_witness_is_nearly_extremal(self):
        N = 6
        c = classic_sequence(2 * (2 * N - 2) + 1)
        rep = equivalence_witness(c, N)
        chk = hardy_degree_bound_check(rep.witness, c)
        assert chk.holds
        # the witness saturates its own truncation size, leaving little slack
        assert chk.lhs >= chk.rhs / (1.0 + 1e-6) * (matrix_norm(c, N).value
                                                    / matrix_norm(c, rep.witness.degree + 1).value)

    def test_circle_root_skipped_with_reason(self):
        chk = hardy_degree_bound_check(AnalyticPoly([1.0, 1.0]), classic_sequence(3))
        assert chk.skipped
        assert chk.holds is None
        assert "circle" in chk.reason

    def test_random_pairs_hold(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            d = int(rng.integers(1, 8))
            radii = np.concatenate([rng.uniform(0.0, 0.9, d // 2),
                                    rng.uniform(1.1, 2.0, d - d // 2)])
            angles = rng.uniform(0, 2 * np.pi, d)
            f = AnalyticPoly(np.poly(radii * np.exp(1j * angles))[::-1])
            c = XSequence(rng.uniform(0.05, 1.0, 2 * d + 1))
            chk = hardy_degree_bound_check(f, c)
            assert not chk.skipped
            assert chk.holds


class TestNormalizedConstantScale:
    def test_ratio_invariant_under_sequence_scaling(self):
        rng = np.random.default_rng(8)
        c = XSequence(rng.uniform(0.1, 1.0, 9))
        scaled = XSequence(7.5 * c.values)
        f = AnalyticPoly(rng.random(5))
        assert hardy_ratio(f, c) == pytest.approx(hardy_ratio(f, scaled), rel=1e-12)
        r1 = equivalence_witness(c, 5)
        r2 = equivalence_witness(scaled, 5)
        assert r1.matrix_norm == pytest.approx(r2.matrix_norm, rel=1e-10)
