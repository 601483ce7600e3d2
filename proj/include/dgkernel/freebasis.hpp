#pragma once

#include "dgkernel/division.hpp"

namespace dgk {

struct FreeBasisResult {
    bool has_cycle_basis = false;
    std::vector<Vec> generators; // homogeneous cycles in M
    std::vector<int> degrees;
    Report report; // directness and per-factor isomorphism verification
};

/// Greedy construction of a cycle basis of M over a dg-division algebra:
/// adjoin a cycle outside the current free part, or correct a non-cycle x to
/// the cycle y - x with y in A delta(x) solving delta(y) = delta(x). Each
/// factor is verified isomorphic to a shifted regular module and the sum is
/// verified direct by rank. When d = 0 and M contains a contractible pair no
/// cycle basis exists; that case is reported, not forced.
FreeBasisResult free_basis(const DGAlgebra& a, const DGModule& m,
                           std::uint64_t budget = kDefaultBudget);

/// For graded-commutative dg-division A and a dg-submodule N <= M: expresses
/// N's cycle basis in M's, verifies the coefficients are cycles, checks
/// n <= m, and checks n = m iff N = M.
Report submodule_rank_compare(const DGAlgebra& a, const DGModule& m, const GradedSubspace& n,
                              std::uint64_t budget = kDefaultBudget);

} // namespace dgk
