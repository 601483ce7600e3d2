#pragma once

#include "dgkernel/dga.hpp"

namespace dgk {

/// Finite sum of terms r * X^k with r in the degree-0 coefficient algebra.
/// Coefficients sit on the left; X^a * r is rewritten as sigma^a(r) * X^a.
class LaurentElement {
public:
    LaurentElement() = default;

    static LaurentElement term(int power, Vec r0_coords);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Vec>& terms() const { return terms_; }
    Vec coeff(int power, std::size_t r0_dim, const Field& f) const;

    LaurentElement operator+(const LaurentElement& o) const;
    LaurentElement operator-(const LaurentElement& o) const;
    LaurentElement scaled(const Scalar& c) const;
    bool operator==(const LaurentElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentElement& o) const { return !(*this == o); }

private:
    std::map<int, Vec> terms_; // power -> coefficient coordinates, no zero entries
    void prune();
    friend class TwistedLaurentDGA;
};

/// R0[X, X^-1; sigma] with deg X = g and a differential generated from d(X)
/// and d|R0 by the Leibniz rule. Every degree component is finite-dimensional,
/// so per-degree questions are answered exactly; global axiom checks run on a
/// finite window of basis pairs and triples.
class TwistedLaurentDGA {
public:
    TwistedLaurentDGA() = default;
    /// dr0[i] = d of the i-th R0 basis element (empty vector means d|R0 = 0).
    TwistedLaurentDGA(DGAlgebra r0, Matrix sigma, int gen_degree, LaurentElement dx,
                      std::vector<LaurentElement> dr0, std::string label = "");

    const Field& field() const { return r0_.field(); }
    const DGAlgebra& r0() const { return r0_; }
    const Matrix& sigma() const { return sigma_; }
    int gen_degree() const { return gen_degree_; }
    const LaurentElement& dx() const { return dx_; }
    const std::string& label() const { return label_; }
    bool differential_is_zero() const;

    LaurentElement one() const;
    LaurentElement x_power(int k) const; // 1 * X^k
    LaurentElement from_r0(const Vec& coords) const;

    Vec sigma_power_apply(int a, const Vec& coords) const;

    LaurentElement multiply(const LaurentElement& a, const LaurentElement& b) const;
    LaurentElement differentiate(const LaurentElement& a) const;

    /// Degree of a homogeneous nonzero element; nullopt for 0 or mixed degrees.
    std::optional<int> degree_of(const LaurentElement& a) const;

    /// Per-degree component data: dimension, basis elements, coordinates.
    int degree_dim(int degree) const;
    std::vector<LaurentElement> degree_basis(int degree) const;
    std::optional<Vec> degree_coords(const LaurentElement& a, int degree) const;

    /// Solve d(y) = target with y homogeneous of degree deg(target) - 1.
    std::optional<LaurentElement> solve_d_equals(const LaurentElement& target, int target_degree) const;

    int cycles_dim(int degree) const;
    int boundaries_dim(int degree) const;
    int homology_dim(int degree) const;
    std::vector<LaurentElement> cycles_basis(int degree) const;

    std::string element_to_string(const LaurentElement& a) const;

private:
    DGAlgebra r0_;
    Matrix sigma_, sigma_inv_;
    int gen_degree_ = 1;
    LaurentElement dx_;
    std::vector<LaurentElement> dr0_;
    std::string label_;

    mutable std::map<int, LaurentElement> dpow_cache_; // d(X^k)
    const LaurentElement& d_of_power(int k) const;
    Matrix degree_block_of_d(int degree) const; // d : A_degree -> A_{degree+1}
};

/// Finite materialization of a twisted Laurent ring over a degree window.
struct LaurentWindow {
    TwistedLaurentDGA ring;
    int lo = 0, hi = 0;

    struct Entry {
        int power;
        std::size_t r0_index;
        int degree;
        std::string name;
    };
    std::vector<Entry> entries; // ordered by (degree, r0 index)
    GradedSpace space;

    LaurentElement element_of(std::size_t index) const;
    std::optional<std::size_t> index_of_name(const std::string& name) const;

    /// Window-restricted axiom checks (exact symbolic arithmetic; the window
    /// only bounds which basis pairs and triples are sampled).
    Report validate() const;

    /// Per-degree cycle/boundary/homology dimensions, exact for every listed
    /// degree; boundary degrees of the window are still flagged untrusted in
    /// reports, matching the per-window contract.
    Json graded_summary() const;

    bool degree_trusted(int degree) const { return degree > lo && degree < hi; }
};

/// Materialize the window [lo, hi]; throws when hi - lo < 2.
LaurentWindow laurent_window(const TwistedLaurentDGA& ring, int lo, int hi);

} // namespace dgk
