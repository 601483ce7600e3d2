#pragma once

#include <optional>
#include <string>

#include "dgkernel/graded.hpp"
#include "dgkernel/report.hpp"

namespace dgk {

struct BasisVector {
    std::string name;
    int degree = 0;
    bool operator==(const BasisVector& o) const { return name == o.name && degree == o.degree; }
};

enum class Side { left, right, twosided };

std::string side_name(Side s);

/// A finite-dimensional differential graded algebra given by structure
/// constants. Elements are coordinate vectors over the full basis; the
/// cohomological convention is used throughout (d has degree +1,
/// d(ab) = d(a)b + (-1)^{|a|} a d(b)).
class DGAlgebra {
public:
    DGAlgebra() = default;
    /// mul[i][j] is the coordinate vector of e_i * e_j; diff[i] of d(e_i).
    DGAlgebra(Field field, std::vector<BasisVector> basis, Vec unit,
              std::vector<std::vector<Vec>> mul, std::vector<Vec> diff,
              std::string label = "");

    const Field& field() const { return field_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    int degree_of(std::size_t i) const { return basis_[i].degree; }
    const GradedSpace& space() const { return space_; }
    const Vec& unit() const { return unit_; }
    const Vec& mul_entry(std::size_t i, std::size_t j) const { return mul_[i][j]; }
    const Vec& diff_entry(std::size_t i) const { return diff_[i]; }

    /// Global basis indices of a degree component, ascending.
    const std::vector<std::size_t>& indices_of_degree(int degree) const;
    std::size_t global_index(int degree, std::size_t pos) const;
    std::optional<std::size_t> index_of_name(const std::string& name) const;

    Vec zero() const { return zero_vec(field_, dim()); }
    Vec basis_element(std::size_t i) const;
    Vec scalar_multiple_of_unit(const Scalar& c) const;

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec differentiate(const Vec& a) const;

    /// Extract the coordinates of a global vector within one degree component.
    Vec component(const Vec& global, int degree) const;
    Vec embed_component(int degree, const Vec& comp) const;
    GradedVec decompose(const Vec& global) const;
    Vec assemble(const GradedVec& parts) const;
    /// Degree when homogeneous and nonzero; nullopt for 0 or inhomogeneous.
    std::optional<int> homogeneous_degree(const Vec& v) const;

    /// The differential as a graded map of shift +1.
    GradedMap differential_map() const;
    /// Multiplication by a homogeneous element as a graded map of shift = its degree.
    GradedMap mult_map(const Vec& element, int element_degree, Side side) const;

    std::string element_to_string(const Vec& v) const;
    bool operator==(const DGAlgebra& o) const;

private:
    Field field_;
    std::vector<BasisVector> basis_;
    Vec unit_;
    std::vector<std::vector<Vec>> mul_;
    std::vector<Vec> diff_;
    std::string label_;

    GradedSpace space_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    std::vector<std::size_t> pos_in_degree_;

    void build_index();
};

/// Checks, in order: degree additivity, unit axioms, associativity on all
/// basis triples, diff shift = +1, diff^2 = 0, Leibniz on all basis pairs.
/// Failures are report entries with witnessing basis indices, not exceptions.
Report validate_dga(const DGAlgebra& a);

DGAlgebra opposite_algebra(const DGAlgebra& a);

/// A subalgebra materialized on its own basis, with the inclusion data.
struct Subalgebra {
    DGAlgebra algebra;
    GradedSubspace span;           // inside the host's graded space
    std::vector<Vec> basis_global; // host coordinates of the subalgebra basis
    GradedMap embedding;           // subalgebra space -> host space
};

/// Materialize a unital, multiplicatively and differentially closed graded
/// subspace as a dg-algebra. Throws when a closure property fails.
Subalgebra subalgebra_from_subspace(const DGAlgebra& host, const GradedSubspace& s,
                                    const std::string& name_prefix);

/// ker(d) with the induced multiplication (differential zero) and inclusion.
Subalgebra cycles_algebra(const DGAlgebra& a);

struct HomologyAlgebra {
    DGAlgebra algebra;          // graded algebra with zero differential
    Subalgebra cycles;          // ker(d)
    Quotient quotient_data;     // cycles-span / boundary-span inside the host space
    std::vector<Vec> repr_global; // host coordinates of chosen homology representatives

    /// Homology class of a host-coordinate cycle.
    Vec project(const DGAlgebra& host, const Vec& host_vec) const;
};

/// H(A,d) = ker(d)/im(d) with induced structure constants. Well-definedness
/// (im * ker and ker * im land in im) is verified.
HomologyAlgebra homology_algebra(const DGAlgebra& a);

struct CentralSubalgebra {
    Subalgebra sub;
    Report certification;
};

/// The graded center {a : a b = (-1)^{|a||b|} b a for all homogeneous b},
/// certified closed under d and multiplication, with the even-degree
/// comparison against the ungraded center.
CentralSubalgebra graded_center(const DGAlgebra& a);

/// Tensor product over the base field with Koszul signs. Basis names combine
/// as "x⊗y"; the pair (i, j) sits at global index i * dim(B) + j.
DGAlgebra tensor_over_base(const DGAlgebra& a, const DGAlgebra& b);

Vec tensor_pure(const DGAlgebra& a, const DGAlgebra& b, const Vec& x, const Vec& y);

/// A common central dg-subalgebra of two hosts, given by matched images of an
/// abstract basis. Used to form tensor products over a central subalgebra.
struct CentralPair {
    std::vector<BasisVector> z_basis;  // abstract basis with degrees
    std::vector<Vec> into_a, into_b;   // images in the two hosts
    Vec unit_coords;                   // unit of Z in the abstract basis
};

CentralPair central_pair_trivial(const DGAlgebra& a, const DGAlgebra& b);
/// Both embeddings = inclusion of the graded center of `a`; requires b == a shape-wise.
CentralPair central_pair_from_center(const DGAlgebra& a, const DGAlgebra& b);

/// Verifies: images are central in their hosts, both spans are closed under
/// multiplication and d with *matching* structure constants, and the units
/// correspond.
Report verify_central_pair(const DGAlgebra& a, const DGAlgebra& b, const CentralPair& z);

struct CentralTensor {
    DGAlgebra algebra;     // the quotient A (x)_Z B
    DGAlgebra base_tensor; // A (x)_K B
    Quotient quotient_data;
    Report descent; // stability of the balancing span under multiplication and d

    /// Class of a base-tensor vector in the quotient algebra's coordinates.
    Vec project(const Vec& base_tensor_vec) const;
};

/// Quotient of A (x)_K B by the span of {a z (x) b - a (x) z b}; multiplication
/// and differential descend (checked).
CentralTensor tensor_over_central(const DGAlgebra& a, const DGAlgebra& b, const CentralPair& z);

/// Checks a candidate basis-level map A -> B (image vectors per A-basis
/// element) for being a dg-algebra isomorphism.
bool is_dg_isomorphism(const DGAlgebra& a, const DGAlgebra& b, const std::vector<Vec>& images);

} // namespace dgk
