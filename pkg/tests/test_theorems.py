import numpy as np
import pytest

from geninv.linalg import approx_equal
from geninv.inverses import pseudo_core
from geninv.theorems import (
    THEOREM_SYMBOLS,
    check_corollary_3_2,
    check_corollary_4_2,
    check_corollary_4_4,
    check_corollary_4_6,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_2_3,
    check_lemma_2_4,
    check_lemma_2_5,
    check_lemma_2_5_converse,
    check_theorem_1_1,
    check_theorem_3_1,
    check_theorem_4_1,
    check_theorem_4_3,
    check_theorem_4_5,
    pierce_decompose,
    reproduce_example_3_3,
    run_check,
)
from geninv.generators import (
    gen_annihilating_pair,
    gen_commutant_pair,
    gen_intertwined_4_1,
    gen_intertwined_4_2,
    gen_intertwined_4_3,
    gen_intertwined_4_4,
    gen_lemma_2_5_instance,
    gen_star_dmp,
    gen_with_index,
    gen_zero_product_4_5,
    gen_zero_product_4_6,
    instance_for,
)

A33 = np.array([[1j, 0], [0, 0]], dtype=complex)
B33 = np.array([[0, 0], [1, 0]], dtype=complex)
SHIFT = np.array([[0, 1], [0, 0]], dtype=complex)
I2 = np.eye(2, dtype=complex)
Z2 = np.zeros((2, 2), dtype=complex)


def crandn(rg, *shape):
    return (rg.standard_normal(shape) + 1j * rg.standard_normal(shape)) / np.sqrt(2)


class TestPierce:
    def test_full_projection(self):
        rg = np.random.default_rng(30)
        a = crandn(rg, 3, 3)
        blocks = pierce_decompose(a, np.eye(3)).blocks
        assert approx_equal(blocks[0], a)
        for blk in blocks[1:]:
            assert np.linalg.norm(blk) < 1e-12

    def test_zero_projection(self):
        rg = np.random.default_rng(31)
        a = crandn(rg, 3, 3)
        blocks = pierce_decompose(a, np.zeros((3, 3))).blocks
        assert approx_equal(blocks[3], a)

    def test_fixed_corner_blocks(self):
        a = np.array([[1j, 0], [1, 0]], dtype=complex)
        p = np.diag([1.0, 0.0])
        blocks = pierce_decompose(a, p).blocks
        assert approx_equal(blocks[0], [[1j, 0], [0, 0]])
        assert np.linalg.norm(blocks[1]) < 1e-12
        assert approx_equal(blocks[2], [[0, 0], [1, 0]])
        assert np.linalg.norm(blocks[3]) < 1e-12

    def test_reconstruction(self):
        rg = np.random.default_rng(32)
        W = np.linalg.qr(crandn(rg, 4, 4))[0]
        p = W[:, :2] @ W[:, :2].conj().T
        a = crandn(rg, 4, 4)
        assert approx_equal(sum(pierce_decompose(a, p).blocks), a)

    def test_rejects_non_projection(self):
        with pytest.raises(ValueError):
            pierce_decompose(np.eye(2), np.array([[1, 1], [0, 0]], dtype=complex))


class TestLemma21:
    def test_identity_pair(self):
        assert check_lemma_2_1(I2, I2).verdict == "pass"

    def test_fixed_noncommuting_pair(self):
        report = check_lemma_2_1(A33, B33)
        assert report.verdict == "hypotheses_not_met"

    def test_commutant_sample(self):
        a, b = gen_commutant_pair(4, seed=301, target_index=2)
        assert check_lemma_2_1(a, b).verdict == "pass"


class TestLemma22:
    def test_identity_partner(self):
        a, _ = gen_commutant_pair(3, seed=302)
        report = check_lemma_2_2(a, np.eye(3))
        assert report.verdict == "pass"
        assert approx_equal(report.witnesses["ab_pcore"],
                            pseudo_core(a).inverse)

    def test_diagonal_pair(self):
        a = np.diag([2.0, 0.0]).astype(complex)
        report = check_lemma_2_2(a, a)
        assert report.verdict == "pass"
        assert approx_equal(report.witnesses["ab_pcore"], np.diag([0.25, 0.0]))

    def test_commutant_sample_dim6(self):
        a, b = gen_commutant_pair(6, seed=303)
        assert check_lemma_2_2(a, b).verdict == "pass"


class TestLemma23:
    def test_zero_partner(self):
        rg = np.random.default_rng(33)
        a = crandn(rg, 3, 3)
        assert check_lemma_2_3(a, np.zeros((3, 3))).verdict == "pass"

    def test_diagonal_disjoint(self):
        assert check_lemma_2_3(np.diag([1.0, 0.0]), Z2).verdict == "pass"

    def test_orthogonal_support_pair(self):
        a, b = gen_annihilating_pair(6, seed=304)
        assert check_lemma_2_3(a, b).verdict == "pass"


class TestLemma24:
    def test_zero_b(self):
        rg = np.random.default_rng(34)
        report = check_lemma_2_4(crandn(rg, 3, 3), np.zeros((3, 3)))
        assert report.verdict == "pass"

    def test_invertible_a(self):
        rg = np.random.default_rng(35)
        report = check_lemma_2_4(np.diag([1.0, 2.0]), crandn(rg, 2, 2))
        assert report.verdict == "pass"
        assert report.witnesses["left_annihilates"]
        assert report.witnesses["right_annihilates"]

    def test_inside_and_outside_range(self):
        rg = np.random.default_rng(36)
        X = pseudo_core(A33).inverse
        inside = (X @ A33) @ crandn(rg, 2, 2)
        rep_in = check_lemma_2_4(A33, inside)
        assert rep_in.verdict == "pass"
        assert rep_in.witnesses["left_annihilates"]
        rep_out = check_lemma_2_4(A33, B33)
        assert rep_out.verdict == "pass"
        assert not rep_out.witnesses["left_annihilates"]
        assert not rep_out.witnesses["right_annihilates"]


class TestLemma25:
    def test_invertible_top_nilpotent_bottom(self):
        rg = np.random.default_rng(37)
        a = np.diag([1.0, 2.0]).astype(complex)
        d = SHIFT.copy()
        b = crandn(rg, 2, 2)
        report = check_lemma_2_5(a, b, d)
        assert report.verdict == "pass"

    def test_scalar_hand_case(self):
        a = np.array([[0.0]], dtype=complex)
        d = np.array([[0.0]], dtype=complex)
        b = np.array([[1.0]], dtype=complex)
        report = check_lemma_2_5(a, b, d)
        assert report.verdict == "pass"
        assert report.witnesses["m"] == 2

    def test_generated_instance(self):
        a, b, d, degenerate = gen_lemma_2_5_instance(3, 3, seed=305)
        report = check_lemma_2_5(a, b, d)
        assert report.verdict == "pass"

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            check_lemma_2_5(np.eye(2), np.eye(3), np.eye(2))


class TestLemma25Converse:
    def test_diagonal(self):
        report = check_lemma_2_5_converse(np.diag([1.0, 0.0]).astype(complex), 1)
        assert report.verdict == "pass"

    def test_rank_one_idempotent_like(self):
        x = np.array([[1, 1], [0, 0]], dtype=complex)
        report = check_lemma_2_5_converse(x, 1)
        assert report.verdict == "pass"
        assert approx_equal(report.witnesses["x_pcore"], [[1, 0], [0, 0]])

    def test_nilpotent(self):
        report = check_lemma_2_5_converse(SHIFT, 1)
        assert report.verdict == "pass"
        assert report.witnesses["m"] == 2

    def test_nonzero_lower_left_rejected(self):
        with pytest.raises(ValueError):
            check_lemma_2_5_converse(np.array([[1, 0], [1, 1]], dtype=complex), 1)

    def test_bad_split_rejected(self):
        with pytest.raises(ValueError):
            check_lemma_2_5_converse(np.eye(2), 2)


class TestTheorem31:
    def test_zero_perturbation(self):
        a = gen_with_index(4, 2, 2, seed=306)
        report = check_theorem_3_1(a, np.zeros((4, 4)))
        assert report.verdict == "pass"
        assert report.witnesses["lhs"] and report.witnesses["rhs"]

    def test_hermitian_base(self):
        rg = np.random.default_rng(38)
        h = crandn(rg, 4, 4)
        a = h + h.conj().T
        b = a @ a + 0.5 * a   # polynomial in a: commutes with a and a*
        report = check_theorem_3_1(a, b)
        assert report.verdict == "pass"
        assert report.witnesses["rhs"]

    def test_fixed_noncommuting_pair(self):
        report = check_theorem_3_1(A33, B33)
        assert report.verdict == "hypotheses_not_met"

    def test_fuzz_small(self):
        for trial in range(25):
            a, b = gen_commutant_pair(5, seed=3100 + trial)
            report = check_theorem_3_1(a, b)
            assert report.verdict == "pass", (trial, report.witnesses)


class TestCorollary32:
    def test_fixed_star_dmp_with_zero(self):
        report = check_corollary_3_2(A33, Z2)
        assert report.verdict == "pass"

    def test_hermitian_projection_pair(self):
        p = np.diag([1.0, 0.0]).astype(complex)
        report = check_corollary_3_2(p, 2 * p)
        assert report.verdict == "pass"

    def test_generated_star_dmp(self):
        a = gen_star_dmp(6, 3, 2, seed=308)
        from geninv.generators import _commutant_sample, _rng
        b = _commutant_sample(_rng(309), a, 1.0)
        report = check_corollary_3_2(a, b)
        assert report.verdict == "pass"

    def test_non_star_dmp_flagged(self):
        a = np.array([[1, 1], [0, 0]], dtype=complex)
        report = check_corollary_3_2(a, Z2)
        assert report.verdict == "hypotheses_not_met"


class TestExample33:
    def test_all_checks_pass(self):
        report = reproduce_example_3_3()
        assert report.verdict == "pass"
        labels = [c.label for c in report.conclusion_checks]
        assert "a_pcore_value" in labels and "annihilation_rank_one" in labels

    def test_intermediate_witnesses(self):
        report = reproduce_example_3_3()
        expected_sum_pcore = 0.5 * np.array([[-1j, 1], [-1, -1j]], dtype=complex)
        expected_ann = np.array([[0, 0], [-0.5, 0]], dtype=complex)
        assert approx_equal(report.witnesses["sum_pcore"], expected_sum_pcore)
        assert approx_equal(report.witnesses["annihilation"], expected_ann)
        assert "note" in report.witnesses


class TestTheorem11:
    def test_identity(self):
        assert check_theorem_1_1(np.eye(3)).verdict == "pass"

    def test_nilpotent(self):
        assert check_theorem_1_1(SHIFT).verdict == "pass"

    def test_random_dim5_index2(self):
        A = gen_with_index(5, 2, 3, seed=310)
        assert check_theorem_1_1(A).verdict == "pass"


class TestTheorem41:
    def test_block_diagonal(self):
        A = gen_with_index(3, 1, 2, seed=311)
        D = gen_with_index(2, 0, 2, seed=312)
        report = check_theorem_4_1(A, np.zeros((3, 2)), np.zeros((2, 3)), D)
        assert report.verdict == "pass"

    def test_identity_blocks_with_one_coupling(self):
        report = check_theorem_4_1(I2, I2, Z2, I2)
        assert report.verdict == "pass"

    def test_generated(self):
        A, B, C, D, degenerate = gen_intertwined_4_1(3, 2, seed=313)
        report = check_theorem_4_1(A, B, C, D)
        assert report.verdict == "pass"

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            check_theorem_4_1(I2, np.zeros((3, 2)), Z2, I2)


class TestCorollary42:
    def test_trivial_coupling(self):
        report = check_corollary_4_2(I2, Z2, Z2, 2 * I2)
        assert report.verdict == "pass"

    def test_generated(self):
        A, B, C, D, degenerate = gen_intertwined_4_2(3, 3, seed=314)
        report = check_corollary_4_2(A, B, C, D)
        assert report.verdict == "pass"


class TestTheorem43:
    def test_zero_couplings(self):
        A = gen_with_index(2, 1, 1, seed=315)
        report = check_theorem_4_3(A, Z2, Z2, I2)
        assert report.verdict == "pass"

    def test_antidiagonal_permutation(self):
        report = check_theorem_4_3(Z2, I2, I2, Z2)
        assert report.verdict == "pass"
        # Q is a symmetric permutation here, its own pseudo core inverse
        check = next(c for c in report.conclusion_checks
                     if c.label == "antidiagonal_square_identity")
        assert check.passed

    def test_generated(self):
        A, B, C, D, degenerate = gen_intertwined_4_3(2, 2, seed=316)
        report = check_theorem_4_3(A, B, C, D)
        assert report.verdict == "pass"


class TestCorollary44:
    def test_zero_couplings(self):
        report = check_corollary_4_4(I2, Z2, Z2, I2)
        assert report.verdict == "pass"

    def test_dualized_permutation(self):
        report = check_corollary_4_4(Z2, I2, I2, Z2)
        assert report.verdict == "pass"

    def test_generated(self):
        A, B, C, D, degenerate = gen_intertwined_4_4(3, 2, seed=317)
        report = check_corollary_4_4(A, B, C, D)
        assert report.verdict == "pass"


class TestTheorem45:
    def test_all_zero_couplings(self):
        A = gen_with_index(3, 2, 1, seed=318)
        D = gen_with_index(2, 1, 1, seed=319)
        report = check_theorem_4_5(A, np.zeros((3, 2)), np.zeros((2, 3)), D)
        assert report.verdict == "pass"

    def test_invertible_top_free_b(self):
        rg = np.random.default_rng(39)
        A = np.diag([1.0, 2.0]).astype(complex)
        D = gen_with_index(2, 1, 1, seed=320)
        report = check_theorem_4_5(A, crandn(rg, 2, 2), Z2, D)
        assert report.verdict == "pass"

    def test_generated(self):
        A, B, C, D, degenerate = gen_zero_product_4_5(3, 3, seed=321)
        report = check_theorem_4_5(A, B, C, D)
        assert report.verdict == "pass"


class TestCorollary46:
    def test_zero_c(self):
        rg = np.random.default_rng(40)
        A = np.diag([1.0, 2.0]).astype(complex)
        report = check_corollary_4_6(A, crandn(rg, 2, 2) * 0, Z2, I2)
        assert report.verdict == "pass"

    def test_invertible_top(self):
        A = np.diag([1.0, 3.0]).astype(complex)
        report = check_corollary_4_6(A, Z2, Z2, 2 * I2)
        assert report.verdict == "pass"

    def test_generated(self):
        A, B, C, D, degenerate = gen_zero_product_4_6(3, 3, seed=322)
        report = check_corollary_4_6(A, B, C, D)
        assert report.verdict == "pass"


class TestDispatch:
    def test_unknown_id(self):
        with pytest.raises(KeyError):
            run_check("T9_9", {})

    def test_missing_symbol(self):
        with pytest.raises(ValueError):
            run_check("L2_1", {"a": I2})

    def test_symbol_table_covers_all(self):
        for theorem_id in THEOREM_SYMBOLS:
            inst = instance_for(theorem_id, (3, 3), seed=4000)
            report = run_check(theorem_id, inst.matrices)
            assert report.theorem_id == theorem_id
            assert report.verdict in ("pass", "fail", "hypotheses_not_met")

    def test_verdict_logic(self):
        report = check_lemma_2_1(A33, B33)
        assert any(not c.passed for c in report.hypothesis_checks)
        assert report.verdict == "hypotheses_not_met"
