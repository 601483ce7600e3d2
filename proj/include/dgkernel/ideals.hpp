#pragma once

#include "dgkernel/simple.hpp"

namespace dgk {

struct DGIdeal {
    Side side = Side::twosided;
    GradedSubspace carrier;
};

/// Fixpoint closure of the given homogeneous elements (inhomogeneous inputs
/// are split into components) under d and multiplication on the stated sides.
DGIdeal dg_ideal_generate(const DGAlgebra& a, const std::vector<Vec>& elements, Side side);

bool is_dg_ideal(const DGAlgebra& a, const GradedSubspace& carrier, Side side);

struct AlgebraSimplicityVerdict {
    bool simple = false;
    int witness_degree = 0;
    Vec witness_component;
    GradedSubspace witness; // the proper twosided dg-ideal found
    std::uint64_t closures = 0;
};

/// Exhaustive: every nonzero twosided dg-ideal contains one generated by a
/// single homogeneous projective representative.
AlgebraSimplicityVerdict is_dg_simple_algebra(const DGAlgebra& a,
                                              std::uint64_t budget = kDefaultBudget);

/// Trivial one-sided dg-ideals only? Used by the direct dg-division path.
struct OneSidedVerdict {
    bool trivial_only = false;
    int witness_degree = 0;
    Vec witness_component;
    GradedSubspace witness;
};
OneSidedVerdict only_trivial_dg_ideals(const DGAlgebra& a, Side side,
                                       std::uint64_t budget = kDefaultBudget);

struct PrimeVerdict {
    bool prime = false;
    int a_degree = 0, b_degree = 0;
    Vec a_component, b_component; // witness pair (a, b) with (a)(b) = 0
    std::uint64_t pairs = 0;
};

/// Complete over single-generator pairs: any offending pair of ideals contains
/// such a sub-pair.
PrimeVerdict is_dg_prime(const DGAlgebra& a, std::uint64_t budget = kDefaultBudget);

struct PrimitiveSearch {
    bool primitive = false;
    GradedSubspace witness_carrier;
    DGModule witness_module; // dg-simple dg-faithful, when found
    Report report;           // lists the minimal candidates and their annihilators
};

/// Searches the inclusion-minimal nonzero dg-submodules of the regular module
/// (each is dg-simple) for a dg-faithful one.
PrimitiveSearch find_simple_faithful(const DGAlgebra& a, std::uint64_t budget = kDefaultBudget);

struct SemisimpleVerdict {
    bool semisimple = false;
    bool acyclic = false;
    Vec witness_y; // when acyclic
    Report report;
};

/// Semisimplicity of the dg-module category: acyclic and the graded modules
/// over ker(d) are semisimple (decided by socle coverage of the regular graded
/// module); the positive case cross-checks an explicit dg-decomposition of the
/// regular dg-module.
SemisimpleVerdict is_semisimple_category(const DGAlgebra& a,
                                         std::uint64_t budget = kDefaultBudget);

} // namespace dgk
