#pragma once

#include <map>
#include <optional>
#include <set>

#include "dgkernel/matrix.hpp"

namespace dgk {

/// Finite-support Z-graded vector space, stored as degree -> dimension.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::map<int, int> dims);

    int dim(int degree) const;
    int total_dim() const;
    const std::map<int, int>& dims() const { return dims_; }
    std::vector<int> support() const;
    bool is_zero() const { return dims_.empty(); }

    bool operator==(const GradedSpace& o) const { return dims_ == o.dims_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<int, int> dims_; // only degrees with dim > 0
};

/// A vector supported in finitely many degrees.
using GradedVec = std::map<int, Vec>; // degree -> coordinates within that degree

/// Degree-shifting linear map between graded spaces, one exact block per degree.
/// The block at source degree n has shape dim(target, n+shift) x dim(source, n).
class GradedMap {
public:
    GradedMap() : shift_(0) {}
    GradedMap(const Field& f, GradedSpace source, GradedSpace target, int shift);

    static GradedMap identity(const Field& f, const GradedSpace& s);

    const Field& field() const { return field_; }
    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int shift() const { return shift_; }

    Matrix& block(int source_degree);
    const Matrix& block(int source_degree) const;
    bool has_block(int source_degree) const;

    /// Throws on block shape inconsistency.
    void validate() const;

    Vec apply(int source_degree, const Vec& v) const;
    GradedVec apply(const GradedVec& v) const;

    GradedMap compose(const GradedMap& inner) const; // this o inner
    GradedMap operator+(const GradedMap& o) const;
    GradedMap scaled(const Scalar& c) const;
    bool operator==(const GradedMap& o) const;
    bool is_zero() const;

private:
    Field field_;
    GradedSpace source_, target_;
    int shift_;
    std::map<int, Matrix> blocks_; // keyed by source degree, present for each support degree
};

/// A graded subspace of an ambient graded space; per-degree canonical (RREF)
/// row bases make equality and membership cheap.
class GradedSubspace {
public:
    GradedSubspace() = default;
    explicit GradedSubspace(const Field& f, GradedSpace ambient);

    /// Build from arbitrary per-degree spanning vectors (canonicalized).
    static GradedSubspace span(const Field& f, const GradedSpace& ambient,
                               const std::map<int, std::vector<Vec>>& vectors);
    static GradedSubspace full(const Field& f, const GradedSpace& ambient);

    const Field& field() const { return field_; }
    const GradedSpace& ambient() const { return ambient_; }
    int dim(int degree) const;
    int total_dim() const;
    GradedSpace dims() const;

    /// Canonical basis rows at a degree (0-row matrix if empty).
    Matrix basis(int degree) const;
    std::vector<int> support() const;

    bool contains(int degree, const Vec& v) const;
    bool contains(const GradedVec& v) const;
    bool contains(const GradedSubspace& other) const;
    bool operator==(const GradedSubspace& o) const;
    bool operator!=(const GradedSubspace& o) const { return !(*this == o); }

    /// Returns a subspace spanned by this and the given vector.
    GradedSubspace with_vector(int degree, const Vec& v) const;

    std::string to_string() const;

private:
    Field field_;
    GradedSpace ambient_;
    std::map<int, Matrix> rows_; // canonical RREF bases, only nonempty degrees
    friend GradedSubspace subspace_sum(const GradedSubspace&, const GradedSubspace&);
    friend GradedSubspace subspace_intersect(const GradedSubspace&, const GradedSubspace&);
};

struct KernelImage {
    GradedSubspace kernel; // subspace of the source
    GradedSubspace image;  // subspace of the target
};

/// Exact per-degree kernel and image of a graded map.
KernelImage kernel_and_image(const GradedMap& f);

GradedSubspace subspace_sum(const GradedSubspace& u, const GradedSubspace& v);
GradedSubspace subspace_intersect(const GradedSubspace& u, const GradedSubspace& v);

/// Quotient U/V for V <= U (checked): an abstract graded space plus the
/// projection from the ambient space (vanishing on V and on the canonical
/// complement of U) and a section picking coset representatives inside U.
struct Quotient {
    GradedSpace space;
    GradedMap projection;          // ambient -> quotient, shift 0
    std::map<int, Matrix> section; // quotient coords -> ambient coords (rows = quotient basis)

    Vec lift(int degree, const Vec& qv) const;
};

Quotient quotient(const GradedSubspace& u, const GradedSubspace& v);

struct AffineSolution {
    int source_degree = 0;
    Vec particular;          // one preimage
    std::vector<Vec> kernel; // basis of ker(block) in that degree
};

/// Solve f(x) = target for target in a single degree of f's target space.
/// nullopt = no solution (including a target outside the image).
std::optional<AffineSolution> solve_affine(const GradedMap& f, int target_degree, const Vec& target);

} // namespace dgk
