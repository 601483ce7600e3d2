#pragma once

#include "dgkernel/dgmodule.hpp"

namespace dgk {

/// The complex of A-semilinear graded maps M -> N: degree-k elements satisfy
/// f(a m) = (-1)^{|a| k} a f(m), with d_Hom(f) = delta_N o f - (-1)^k f o delta_M.
struct HomComplex {
    DGModule source, target;
    std::vector<BasisVector> basis; // one entry per basis map, degree = its shift
    std::vector<GradedMap> basis_maps;
    GradedSpace space;
    GradedMap dhom; // on hom coordinates, shift +1

    std::size_t dim() const { return basis.size(); }

    /// Apply a hom element (coordinates over `basis`) to a module vector.
    Vec eval(const Vec& hom_coords, const Vec& m_coords) const;
    /// Assemble a hom element into a single graded map.
    GradedMap as_map(const Vec& hom_coords) const;
    /// Coordinates of a graded map in the hom basis; nullopt when the map is
    /// not semilinear (i.e., lies outside the complex).
    std::optional<Vec> coordinates_of(const GradedMap& g) const;

    Vec dhom_of(const Vec& hom_coords) const;
    Vec compose(const Vec& f, const Vec& g) const; // f o g
    Vec identity_coords() const;                   // only when source == target
};

/// Exact solve of the semilinearity equations, degreewise.
HomComplex hom_complex(const DGModule& m, const DGModule& n);

struct EndAlgebra {
    DGAlgebra algebra; // composition as multiplication, d_Hom as differential
    HomComplex hom;
};

/// End_A(M) as a dg-algebra (a strong consistency test for the d_Hom signs:
/// the result must pass validate_dga).
EndAlgebra end_algebra(const DGModule& m);

/// The same module with only the base field acting; hom complexes over it are
/// plain graded-linear maps.
DGModule underlying_complex(const DGModule& m);

/// End over the base field: all graded K-linear endomorphisms with d_Hom.
EndAlgebra end_algebra_over_base(const DGModule& m);

struct FaithfulEmbedding {
    EndAlgebra target;            // End_K(M)
    std::vector<Vec> mu;          // images of the algebra basis in End coordinates
    Report report;                // verdicts: faithful | kernel witness
    GradedSubspace annihilator_ideal;
};

/// The action map mu : A -> End_K(M): checked unital, multiplicative and
/// compatible with the differentials (mu o d = d_Hom o mu); faithful iff the
/// annihilator vanishes.
FaithfulEmbedding faithful_embedding(const DGModule& m);

} // namespace dgk
