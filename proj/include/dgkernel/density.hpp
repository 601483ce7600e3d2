#pragma once

#include "dgkernel/freebasis.hpp"
#include "dgkernel/hom.hpp"

namespace dgk {

/// For acyclic A and B with witnesses z, w: verifies
/// ker(d_{A(x)B}) = (ker d_A (x) ker d_B) + (1(x)w - z(x)1)(ker d_A (x) ker d_B),
/// a direct sum equal to the directly computed kernel.
Report cycles_of_tensor_check(const DGAlgebra& a, const DGAlgebra& b, const Vec& z, const Vec& w);

/// At least one factor acyclic over the shared central Z: the tensor is
/// acyclic, via the transported witness and an independent H = 0 computation.
Report acyclic_tensor_check(const DGAlgebra& a, const DGAlgebra& b, const CentralPair& zp);

struct TensorSimplicityResult {
    bool simple = false;
    Report report;
};

/// Both factors certified dg-division with Z equal to the graded center of
/// each: the tensor over Z is dg-simple (a disagreement is a theorem alarm).
TensorSimplicityResult tensor_of_divisions_simplicity(const DGAlgebra& da, const DGAlgebra& db,
                                                      const CentralPair& zp,
                                                      std::uint64_t budget = kDefaultBudget);

struct IndependenceVerdict {
    bool independent = false;
    /// a nontrivial dependency (f_1, ..., f_k) with sum f_i(x_i) = 0, as
    /// End-coordinate vectors, when not independent
    std::vector<Vec> dependency;
};

/// D-independence of cycles x_1..x_k in M, for D the cycles of End_A(M).
IndependenceVerdict d_independent(const DGModule& m, const std::vector<Vec>& xs);

struct DensityResult {
    Vec solution; // an element of ker(d) with a x_i = y_i for all i
    Report report;
};

/// Solves {a in ker(d), a x_i = y_i} exactly. Preconditions (A acyclic, M
/// dg-simple, x_i D-independent cycles, y_i cycles) are each checked and
/// reported; the theorem guarantees solvability, so NoSolution raises
/// TheoremViolation.
DensityResult density_solve(const DGAlgebra& a, const DGModule& m, const std::vector<Vec>& xs,
                            const std::vector<Vec>& ys, std::uint64_t budget = kDefaultBudget);

struct MatrixDecompositionResult {
    int n = 0;
    std::vector<int> shifts;   // M decomposes as S[shift_1] + ... + S[shift_n]
    DGModule simple;           // the unique simple S, shift-normalized
    EndAlgebra d_algebra;      // D = End(S)
    EndAlgebra end_m;          // End(M)
    Report report;
};

/// Decomposes M into shifted copies of the unique simple module (explicit
/// idempotent projections), builds End(M) ~ End(S[k_1] + ... + S[k_n]) — the
/// n x n matrix form over D — and verifies the dg-algebra isomorphism.
MatrixDecompositionResult matrix_decomposition(const DGAlgebra& a, const DGModule& m,
                                               std::uint64_t budget = kDefaultBudget);

} // namespace dgk
