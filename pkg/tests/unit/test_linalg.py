"""
Unit tests for exact integer linear algebra

Tests normal forms, kernels, integer solving, cokernels and the finite abelian
group helpers against hand computations and brute-force oracles.
"""

import unittest

from hnp_lattice.constants import DENSE_THRESHOLD

from hnp_lattice.linalg import (
    FiniteAbelianGroup,
    IntMatrix,
    SparseMatrix,
    cokernel,
    contains,
    elements,
    hermite_decomposition,
    hnf,
    invariant_factors,
    intersect_subgroups,
    kernel_basis,
    kernel_of_map,
    preimage_of_subgroup,
    snf,
    solve,
    span_generators,
    subgroup_structure,
)
from ..fixtures.test_helpers import (
    brute_force_kernel_vectors,
    in_column_span,
    same_column_span,
    sympy_invariant_factors,
)


SAMPLE_MATRICES = [
    IntMatrix([[2, 4], [0, 2]]),
    IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]),
    IntMatrix([[0, 3, 0], [6, 0, 9]]),
    IntMatrix([[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]),
    IntMatrix([[4, 6], [6, 9], [2, 3]]),
]


class TestIntMatrix(unittest.TestCase):
    """Test matrix construction and arithmetic."""

    def test_constructors(self):
        """Test zeros, identity, diagonal and from_columns."""
        self.assertEqual(IntMatrix.zeros(2, 3).shape, (2, 3))
        self.assertTrue(IntMatrix.identity(3).is_identity())
        self.assertEqual(IntMatrix.diagonal([2, 3]).tolist(), [[2, 0], [0, 3]])
        M = IntMatrix.from_columns([(1, 2), (3, 4)], 2)
        self.assertEqual(M.tolist(), [[1, 3], [2, 4]])
        self.assertEqual(M.columns(), [(1, 2), (3, 4)])

    def test_ragged_rows_rejected(self):
        """Test rows of different lengths."""
        with self.assertRaises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_products(self):
        """Test matrix and matrix-vector products."""
        A = IntMatrix([[1, 2], [3, 4]])
        self.assertEqual((A @ IntMatrix.identity(2)), A)
        self.assertEqual(A @ [1, 1], (3, 7))
        self.assertEqual((A - A).is_zero(), True)

    def test_stacking(self):
        """Test hstack, vstack and block_diagonal."""
        A = IntMatrix([[1], [2]])
        self.assertEqual(A.hstack(A).shape, (2, 2))
        self.assertEqual(A.vstack(A).shape, (4, 1))
        B = IntMatrix.block_diagonal([IntMatrix([[1]]), IntMatrix([[2, 0], [0, 3]])])
        self.assertEqual(B.tolist(), [[1, 0, 0], [0, 2, 0], [0, 0, 3]])

    def test_determinant(self):
        """Test determinant and unimodularity."""
        self.assertEqual(IntMatrix([[2, 1], [1, 1]]).determinant(), 1)
        self.assertTrue(IntMatrix([[2, 1], [1, 1]]).is_unimodular())
        self.assertFalse(IntMatrix([[2, 0], [0, 1]]).is_unimodular())

    def test_sparse_round_trip(self):
        """Test sparse conversion keeps entries."""
        A = IntMatrix([[0, 5, 0], [1, 0, 0]])
        S = A.to_sparse()
        self.assertEqual(S.nnz, 2)
        self.assertEqual(S.to_dense(), A)
        self.assertEqual(S @ [1, 1, 1], (5, 1))

    def test_sparse_add_cancels(self):
        """Test that entries cancelling to zero are dropped."""
        S = SparseMatrix(2, 2)
        S.add(0, 1, 3)
        S.add(0, 1, -3)
        self.assertTrue(S.is_zero())


class TestHermiteForm(unittest.TestCase):
    """Test the column-style Hermite normal form."""

    def test_worked_example(self):
        """Test [[2,4],[0,2]] reduces to [[2,0],[0,2]]."""
        A = IntMatrix([[2, 4], [0, 2]])
        H = hnf(A)
        self.assertEqual(H.tolist(), [[2, 0], [0, 2]])
        self.assertTrue(same_column_span(A, H))

    def test_identity_and_zero(self):
        """Test fixed points of the reduction."""
        self.assertEqual(hnf(IntMatrix.identity(4)), IntMatrix.identity(4))
        self.assertEqual(hnf(IntMatrix.zeros(3, 2)), IntMatrix.zeros(3, 2))

    def test_gcd_combination(self):
        """Test a row with negative and non-coprime entries reduces to its gcd."""
        self.assertEqual(hnf(IntMatrix([[-4, 6, 10]])).tolist(), [[2, 0, 0]])
        self.assertEqual(hnf(IntMatrix([[6, -9]])).tolist(), [[3, 0]])

    def test_transform_is_unimodular(self):
        """Test H = A·V with V unimodular on sample matrices."""
        for A in SAMPLE_MATRICES:
            dec = hermite_decomposition(A)
            self.assertEqual(A @ dec.V, dec.H)
            self.assertTrue(dec.V.is_unimodular())
            self.assertTrue(same_column_span(A, dec.H))

    def test_echelon_shape(self):
        """Test entries above each pivot vanish and pivots are positive."""
        for A in SAMPLE_MATRICES:
            dec = hermite_decomposition(A)
            for k, r in enumerate(dec.pivot_rows):
                self.assertGreater(dec.H[r, k], 0)
                for i in range(r):
                    self.assertEqual(dec.H[i, k], 0)
            for k in range(dec.rank, A.ncols):
                self.assertTrue(all(v == 0 for v in dec.H.column(k)))


class TestSmithForm(unittest.TestCase):
    """Test the Smith normal form."""

    def test_coprime_diagonal(self):
        """Test diag(2,3) has invariant factors [1, 6]."""
        self.assertEqual(snf(IntMatrix.diagonal([2, 3])).invariant_factors, (1, 6))

    def test_zero_matrix(self):
        """Test the zero matrix has no invariant factors."""
        self.assertEqual(snf(IntMatrix.zeros(2, 3)).invariant_factors, ())

    def test_scalar_two(self):
        """Test [[2,0],[0,2]] has invariant factors [2, 2]."""
        self.assertEqual(snf(IntMatrix([[2, 0], [0, 2]])).invariant_factors, (2, 2))

    def test_decomposition_identity(self):
        """Test U·A·V = S with U, V unimodular and U_inverse correct."""
        for A in SAMPLE_MATRICES:
            dec = snf(A)
            self.assertEqual(dec.U @ A @ dec.V, dec.S)
            self.assertTrue(dec.U.is_unimodular())
            self.assertTrue(dec.V.is_unimodular())
            self.assertTrue((dec.U_inverse @ dec.U).is_identity())

    def test_divisibility_chain(self):
        """Test each invariant factor divides the next."""
        for A in SAMPLE_MATRICES:
            factors = snf(A).invariant_factors
            for a, b in zip(factors, factors[1:]):
                self.assertEqual(b % a, 0)

    def test_matches_sympy(self):
        """Test invariant factors of nonsingular matrices against sympy's Smith form."""
        for A in [SAMPLE_MATRICES[0], SAMPLE_MATRICES[1], IntMatrix([[6, 4], [4, 10]])]:
            self.assertEqual(list(snf(A).invariant_factors), sympy_invariant_factors(A))

    def test_idempotent(self):
        """Test the Smith form of S has the same factors."""
        for A in SAMPLE_MATRICES:
            dec = snf(A)
            self.assertEqual(snf(dec.S).invariant_factors, dec.invariant_factors)

    def test_deterministic(self):
        """Test repeated decompositions agree exactly."""
        A = SAMPLE_MATRICES[1]
        first, second = snf(A), snf(A)
        self.assertEqual(first.U, second.U)
        self.assertEqual(first.V, second.V)


class TestKernelBasis(unittest.TestCase):
    """Test saturated integer kernels."""

    def test_single_row(self):
        """Test [[1,1]] has kernel spanned by (1,-1)."""
        K = kernel_basis(IntMatrix([[1, 1]]))
        self.assertEqual(K.ncols, 1)
        self.assertIn(K.column(0), [(1, -1), (-1, 1)])

    def test_identity_has_trivial_kernel(self):
        """Test an invertible matrix has an empty kernel basis."""
        self.assertEqual(kernel_basis(IntMatrix.identity(3)).ncols, 0)

    def test_rank_two_kernel(self):
        """Test [[2,-1,0],[0,0,0]] has a rank-2 kernel with (1,2,0) and (0,0,1)."""
        K = kernel_basis(IntMatrix([[2, -1, 0], [0, 0, 0]]))
        self.assertEqual(K.ncols, 2)
        self.assertTrue(in_column_span(K, (1, 2, 0)))
        self.assertTrue(in_column_span(K, (0, 0, 1)))

    def test_saturation(self):
        """Test every small integer kernel vector is an integer combination of the basis."""
        for A in [IntMatrix([[2, 4, 6]]), IntMatrix([[1, 2, 3], [2, 4, 6]]), IntMatrix([[3, 0, 6], [0, 2, 4]])]:
            K = kernel_basis(A)
            self.assertTrue((A @ K).is_zero())
            for x in brute_force_kernel_vectors(A, bound=3):
                self.assertTrue(in_column_span(K, x), f"{x} not in kernel span of {A}")

    def test_sparse_path_agrees(self):
        """Test the elimination path gives the same saturated kernel as the Hermite form."""
        matrices = SAMPLE_MATRICES + [IntMatrix([[2, 4, 6]]), IntMatrix([[1, 2, 3], [2, 4, 6]]), IntMatrix([[3, 0, 6], [0, 2, 4]])]
        for A in matrices:
            K = kernel_basis(A.to_sparse())
            for col in K.columns():
                self.assertFalse(any(A @ col))
            self.assertTrue(same_column_span(K, kernel_basis(A)))
            for x in brute_force_kernel_vectors(A, bound=2):
                self.assertTrue(in_column_span(K, x), f"{x} not in kernel span of {A}")

    def test_large_matrix_uses_elimination(self):
        """Test a block matrix above the dense threshold against its Hermite form."""
        A = IntMatrix.block_diagonal(SAMPLE_MATRICES * 6)
        self.assertGreater(A.ncols, DENSE_THRESHOLD)
        dec = hermite_decomposition(A)
        expected = IntMatrix.from_columns([dec.V.column(j) for j in range(dec.rank, A.ncols)], A.ncols)
        K = kernel_basis(A)
        self.assertEqual(K.ncols, expected.ncols)
        for col in K.columns():
            self.assertFalse(any(A @ col))
        self.assertTrue(same_column_span(K, expected))


class TestSolve(unittest.TestCase):
    """Test integer solving."""

    def test_solvable(self):
        """Test a solvable system returns a genuine solution."""
        A = IntMatrix([[2, 3], [4, 5]])
        x = solve(A, [5, 9])
        self.assertIsNotNone(x)
        self.assertEqual(A @ list(x), (5, 9))

    def test_rational_only(self):
        """Test a system solvable only over Q returns None."""
        self.assertIsNone(solve(IntMatrix([[2, 0], [0, 2]]), [1, 0]))

    def test_inconsistent(self):
        """Test a system outside the real span returns None."""
        self.assertIsNone(solve(IntMatrix([[1], [1]]), [1, 2]))

    def test_length_mismatch(self):
        """Test a right-hand side of the wrong length is rejected."""
        with self.assertRaises(ValueError):
            solve(IntMatrix.identity(2), [1])


class TestCokernel(unittest.TestCase):
    """Test cokernels as finite abelian groups plus free rank."""

    def test_coprime_diagonal(self):
        """Test Z^2 / diag(2,3) is Z/6 with no free part."""
        coker = cokernel(2, IntMatrix.diagonal([2, 3]))
        self.assertEqual(coker.structure.to_list(), [6])
        self.assertEqual(coker.free_rank, 0)

    def test_unit_column(self):
        """Test Z^2 / <(1,0)> is free of rank 1."""
        coker = cokernel(2, IntMatrix.from_columns([(1, 0)], 2))
        self.assertTrue(coker.structure.is_trivial)
        self.assertEqual(coker.free_rank, 1)

    def test_empty_image(self):
        """Test Z / 0 is free of rank 1."""
        coker = cokernel(1, IntMatrix.zeros(1, 0))
        self.assertTrue(coker.structure.is_trivial)
        self.assertEqual(coker.free_rank, 1)

    def test_project_lift(self):
        """Test project after lift is the identity and image columns project to zero."""
        A = SAMPLE_MATRICES[1]
        coker = cokernel(3, A)
        for coords in elements(coker.structure.invariant_factors):
            self.assertEqual(coker.project(coker.lift(coords)), tuple(coords))
        for col in A.columns():
            self.assertTrue(coker.contains(col))

    def test_sparse_path_agrees(self):
        """Test the sparse elimination path gives the dense structure."""
        for A in SAMPLE_MATRICES:
            dense = cokernel(A.nrows, A)
            sparse = cokernel(A.nrows, A.to_sparse())
            self.assertEqual(dense.structure, sparse.structure)
            self.assertEqual(dense.free_rank, sparse.free_rank)

    def test_invariant_factors_paths_agree(self):
        """Test Smith invariants from elimination match the dense Smith form."""
        for A in SAMPLE_MATRICES:
            self.assertEqual(invariant_factors(A), snf(A).invariant_factors)
            self.assertEqual(invariant_factors(A.to_sparse()), snf(A).invariant_factors)
        big = IntMatrix.block_diagonal(SAMPLE_MATRICES * 6)
        self.assertEqual(invariant_factors(big), snf(big).invariant_factors)

    def test_sparse_project_lift(self):
        """Test coordinates round-trip on the sparse path."""
        A = IntMatrix([[2, 0, 0], [0, 4, 0], [0, 0, 1], [0, 0, 0]])
        coker = cokernel(4, A.to_sparse())
        self.assertEqual(coker.structure.to_list(), [2, 4])
        self.assertEqual(coker.free_rank, 1)
        for coords in elements(coker.structure.invariant_factors):
            self.assertEqual(coker.project(coker.lift(coords)), tuple(coords))
        self.assertFalse(coker.in_saturation((0, 0, 0, 1)))
        self.assertTrue(coker.in_saturation((1, 1, 0, 0)))

    def test_row_mismatch(self):
        """Test an image matrix with the wrong row count is rejected."""
        with self.assertRaises(ValueError):
            cokernel(3, IntMatrix.identity(2))


class TestFiniteAbelianGroup(unittest.TestCase):
    """Test invariant factor normalisation."""

    def test_from_cyclic_orders(self):
        """Test Z/2 x Z/3 x Z/4 normalises to Z/2 x Z/12."""
        group = FiniteAbelianGroup.from_cyclic_orders([2, 3, 4])
        self.assertEqual(group.to_list(), [2, 12])
        self.assertEqual(group.order, 24)

    def test_trivial(self):
        """Test the trivial group prints as 1."""
        self.assertEqual(str(FiniteAbelianGroup()), "1")
        self.assertEqual(FiniteAbelianGroup.from_cyclic_orders([1, 1]).to_list(), [])

    def test_str(self):
        """Test the printed form."""
        self.assertEqual(str(FiniteAbelianGroup((2, 2))), "Z/2 x Z/2")

    def test_invalid_factors(self):
        """Test factors outside a divisibility chain are rejected."""
        with self.assertRaises(ValueError):
            FiniteAbelianGroup((2, 3))
        with self.assertRaises(ValueError):
            FiniteAbelianGroup((1, 2))


class TestAbelianHelpers(unittest.TestCase):
    """Test subgroup arithmetic in Z/d1 x ... x Z/dk."""

    def test_span_and_structure(self):
        """Test the subgroup of Z/4 x Z/4 generated by (2, 0) and (0, 2)."""
        gens = span_generators([(2, 0), (0, 2)], (4, 4))
        self.assertEqual(subgroup_structure(gens, (4, 4)).to_list(), [2, 2])
        self.assertTrue(contains(gens, (4, 4), (2, 2)))
        self.assertFalse(contains(gens, (4, 4), (1, 0)))

    def test_span_is_canonical(self):
        """Test different generating sets of one subgroup give the same generators."""
        self.assertEqual(span_generators([(1, 1)], (2, 2)), span_generators([(3, 3), (1, 1)], (2, 2)))

    def test_kernel_of_map(self):
        """Test the kernel of Z/4 -> Z/2, x -> x mod 2."""
        gens = kernel_of_map(IntMatrix([[1]]), (4,), (2,))
        self.assertEqual(subgroup_structure(gens, (4,)).to_list(), [2])
        self.assertTrue(contains(gens, (4,), (2,)))

    def test_kernel_into_trivial_group(self):
        """Test everything lies in the kernel of a map to the trivial group."""
        gens = kernel_of_map(IntMatrix.zeros(0, 2), (2, 2), ())
        self.assertEqual(subgroup_structure(gens, (2, 2)).order, 4)

    def test_preimage(self):
        """Test the preimage of 0 equals the kernel."""
        M = IntMatrix([[1, 1]])
        pre = preimage_of_subgroup(M, (2, 2), (2,), [])
        self.assertEqual(subgroup_structure(pre, (2, 2)).order, 2)
        self.assertTrue(contains(pre, (2, 2), (1, 1)))

    def test_intersection(self):
        """Test <(1,0)> and <(1,1)> meet trivially in Z/2 x Z/2."""
        self.assertEqual(intersect_subgroups([(1, 0)], [(1, 1)], (2, 2)), [])
        meet = intersect_subgroups([(1, 0)], [(2, 0)], (4, 4))
        self.assertEqual(subgroup_structure(meet, (4, 4)).to_list(), [2])

    def test_elements(self):
        """Test enumeration of Z/2 x Z/3."""
        self.assertEqual(len(list(elements((2, 3)))), 6)
        self.assertEqual(list(elements(())), [()])


if __name__ == '__main__':
    unittest.main()
