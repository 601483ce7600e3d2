#pragma once

#include "dgkernel/dgmodule.hpp"
#include "dgkernel/laurent.hpp"

namespace dgk {

Json field_to_json(const Field& f);
Json vec_to_json(const Vec& v); // exact scalars as strings
Json subspace_to_json(const GradedSubspace& s);

/// Canonical JSON form of a dg-algebra: field, basis names and degrees,
/// structure constants and differential as exact scalar strings.
Json algebra_to_json(const DGAlgebra& a);
Json module_to_json(const DGModule& m);
Json laurent_to_json(const TwistedLaurentDGA& l);

/// Content hash of the canonical serialization, used to identify report inputs.
std::string algebra_hash(const DGAlgebra& a);
std::string module_hash(const DGModule& m);

/// DSL source text reconstructing the algebra (basis names are quoted when
/// they are not plain identifiers).
std::string algebra_to_dsl(const DGAlgebra& a, const std::string& name,
                           const std::string& field_name);
std::string laurent_to_dsl(const TwistedLaurentDGA& l, const std::string& name,
                           const std::string& field_name, const std::string& r0_name);

} // namespace dgk
