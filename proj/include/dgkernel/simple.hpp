#pragma once

#include "dgkernel/dgmodule.hpp"

namespace dgk {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Visit the projective representatives of nonzero vectors in F_p^dim in a
/// fixed lexicographic order (leading coordinate normalized to 1). Stops early
/// when the visitor returns false.
void for_each_projective_rep(const Field& f, int dim,
                             const std::function<bool(const Vec&)>& visit);

std::uint64_t projective_count(std::int64_t p, int dim);

struct ModuleSimplicityVerdict {
    bool simple = false;
    std::string method; // "enumeration" or "acyclic_reduction"
    // when not simple: the lexicographically first proper closure found
    int witness_degree = 0;
    Vec witness_component;       // coordinates within that degree
    GradedSubspace witness;      // the proper dg-submodule
    std::uint64_t closures = 0;
};

/// Exhaustive homogeneous enumeration over F_p (complete: graded submodules
/// are generated by homogeneous elements). Over Q only the acyclic reduction
/// applies (ker(delta) of total dimension 1 is gr-simple); otherwise throws
/// UnsupportedField, pointing at certificate checking.
ModuleSimplicityVerdict is_dg_simple_module(const DGModule& m,
                                            std::uint64_t budget = kDefaultBudget);

/// Certificate verification over any field: checks that the closure of the
/// claimed generators is a proper nonzero dg-submodule.
Report verify_proper_submodule(const DGModule& m, const std::vector<Vec>& generators);

} // namespace dgk
