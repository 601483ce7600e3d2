#pragma once

#include "dgkernel/laurent.hpp"

namespace dgk {
namespace catalog {

/// The base field as a dg-algebra in degree 0 with zero differential.
DGAlgebra q0(const Field& f);

/// Basis {one (deg 0), eps (deg -1)}, eps^2 = 0, d(eps) = one.
DGAlgebra dual_numbers(const Field& f);

/// Endomorphisms of a contractible two-term complex: matrix units
/// E00, E11 (deg 0), E01 (deg -1), E10 (deg +1) with d(E01) = E00 + E11.
DGAlgebra m2(const Field& f);

/// dual_numbers (x) dual_numbers over the base field.
DGAlgebra dd(const Field& f);

/// K[X, X^-1] with d(X) = 1; d has degree +1, so deg X = -1 and
/// d(X^{2n+1}) = X^{2n}, d(X^{2n}) = 0.
TwistedLaurentDGA lau(const Field& f);

/// K[T, T^-1] with deg T = 2 and zero differential.
TwistedLaurentDGA lau2(const Field& f);

struct CatalogEntry {
    std::string name;
    std::string kind; // "algebra" or "laurent"
    std::string provenance;
    std::string expected; // recorded expected verdicts
};

const std::vector<CatalogEntry>& entries();

bool has_algebra(const std::string& name);
bool has_laurent(const std::string& name);
DGAlgebra make_algebra(const std::string& name, const Field& f);
TwistedLaurentDGA make_laurent(const std::string& name, const Field& f);

} // namespace catalog
} // namespace dgk
