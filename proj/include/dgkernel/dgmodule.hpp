#pragma once

#include "dgkernel/dga.hpp"

namespace dgk {

/// A finite-dimensional left dg-module given by action tensors and a degree +1
/// differential delta. The underlying algebra is stored by value; module
/// operations requiring "the same algebra" compare structurally.
class DGModule {
public:
    DGModule() = default;
    /// action[i][m] = coordinates of e_i . m_m; delta[m] = coordinates of delta(m_m).
    DGModule(DGAlgebra algebra, std::vector<BasisVector> basis,
             std::vector<std::vector<Vec>> action, std::vector<Vec> delta, std::string label = "");

    const DGAlgebra& algebra() const { return algebra_; }
    const Field& field() const { return algebra_.field(); }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisVector>& basis() const { return basis_; }
    int degree_of(std::size_t m) const { return basis_[m].degree; }
    const GradedSpace& space() const { return space_; }
    const std::vector<std::size_t>& indices_of_degree(int degree) const;

    Vec zero() const { return zero_vec(field(), dim()); }
    Vec basis_element(std::size_t m) const;
    const Vec& action_entry(std::size_t i, std::size_t m) const { return action_[i][m]; }
    const Vec& delta_entry(std::size_t m) const { return delta_[m]; }

    Vec act(const Vec& a_coords, const Vec& m_coords) const;
    Vec delta(const Vec& m_coords) const;

    Vec component(const Vec& global, int degree) const;
    Vec embed_component(int degree, const Vec& comp) const;
    GradedVec decompose(const Vec& global) const;
    std::optional<int> homogeneous_degree(const Vec& v) const;

    GradedMap delta_map() const;
    /// The action of a homogeneous algebra element as a graded map.
    GradedMap action_map(const Vec& a, int a_degree) const;

    std::string element_to_string(const Vec& v) const;
    bool operator==(const DGModule& o) const;

private:
    DGAlgebra algebra_;
    std::vector<BasisVector> basis_;
    std::vector<std::vector<Vec>> action_;
    std::vector<Vec> delta_;
    std::string label_;

    GradedSpace space_;
    std::map<int, std::vector<std::size_t>> by_degree_;

    void build_index();
};

/// Reports unit, associativity, delta^2 = 0, degree bookkeeping and module
/// Leibniz failures with witnesses.
Report validate_module(const DGModule& m);

/// The algebra acting on itself by left multiplication, delta = d.
DGModule regular_module(const DGAlgebra& a);

/// (M[k])_n = M_{n+k}; delta[k] = (-1)^k delta; action twisted by (-1)^{k|a|}.
DGModule shift_module(const DGModule& m, int k);

/// External direct sum over the same algebra.
DGModule direct_sum_module(const DGModule& a, const DGModule& b);

/// Smallest graded subspace containing the generators that is closed under the
/// action of every algebra basis element and under delta.
GradedSubspace submodule_closure(const DGModule& m, const std::vector<Vec>& generators);

/// Is the carrier closed under action and delta?
bool is_dg_submodule(const DGModule& m, const GradedSubspace& carrier);

/// Materialize a dg-submodule on its own basis.
DGModule module_from_submodule(const DGModule& m, const GradedSubspace& carrier,
                               std::string label = "");

/// Quotient module M / carrier (carrier must be a dg-submodule).
DGModule quotient_module(const DGModule& m, const GradedSubspace& carrier, std::string label = "");

struct AnnihilatorResult {
    GradedSubspace ideal; // inside the algebra's graded space
    Report certification; // d-closure and two-sided multiplicative closure
};

/// {a in A : a M = 0}, certified a twosided dg-ideal.
AnnihilatorResult annihilator(const DGModule& m);

/// Checks a basis-level map M -> N (images per M-basis element) for being a
/// degree-preserving isomorphism of dg-modules over the same algebra.
bool is_module_isomorphism(const DGModule& m, const DGModule& n, const std::vector<Vec>& images);

struct ZFunctorResult {
    DGModule module;            // graded module over the cycles algebra (delta = 0)
    Subalgebra cycles;          // ker(d) of the acting algebra
    GradedSubspace kernel_in_m; // ker(delta) inside M
    std::vector<Vec> basis_in_m;
};

/// ker(delta) with the restricted action of ker(d).
ZFunctorResult z_functor(const DGModule& m);

struct InduceResult {
    DGModule module; // dg-module over A with carrier N + y N
    /// round-trip data: images of N's basis inside ker(delta) of the module
    std::vector<Vec> unit_images;
    Report round_trip; // verified natural isomorphism z(induce(N)) = N
};

/// For acyclic A with witness y (d(y) = 1) and a graded module N over
/// cycles(A): the induced dg-module with carrier N + y N. The round-trip
/// isomorphism z(induce(N)) = N is produced and verified.
InduceResult induce_functor(const DGAlgebra& a, const Vec& y, const DGModule& n);

} // namespace dgk
