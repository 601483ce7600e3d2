#pragma once

#include "dgkernel/ideals.hpp"
#include "dgkernel/laurent.hpp"

namespace dgk {

struct AcyclicityVerdict {
    bool acyclic = false;
    Vec witness_y;                // homogeneous of degree -1 with d(y) = 1
    std::map<int, int> homology_dims; // reported when not acyclic
};

/// 1 in im(d), decided by solve_affine on the differential.
AcyclicityVerdict is_acyclic(const DGAlgebra& a);
AcyclicityVerdict is_acyclic(const TwistedLaurentDGA& l, LaurentElement* witness_out = nullptr,
                             int window_lo = -4, int window_hi = 4);

/// Verifies A = ker(d) + ker(d) y = ker(d) + y ker(d), both direct, degreewise.
Report acyclic_decomposition(const DGAlgebra& a, const Vec& y);

/// ker(d)[X; D]/(X^2 - y^2) with D(a) = -(-1)^{|a|} d(y a y), together with the
/// verified isomorphism Phi (X -> y, identity on cycles).
struct SkewPresentationResult {
    DGAlgebra presentation; // basis: cycles then cycles * X
    Subalgebra cycles;
    std::vector<Vec> derivation; // D on the cycles basis, in cycles coordinates
    Vec y;
    std::vector<Vec> phi_images; // images of the presentation basis in A
    Report verification;
};

SkewPresentationResult skew_presentation(const DGAlgebra& a, const Vec& y);

struct GrDivisionVerdict {
    bool division = false;
    std::string method; // "enumeration", "dimension_one", "minimal_polynomial", "laurent_structural"
    int witness_degree = 0;
    Vec witness_component; // a homogeneous non-invertible element, when found
    std::string detail;
};

/// Every nonzero homogeneous element two-sided invertible? The input must
/// carry the zero differential. Routes: exhaustive enumeration over F_p;
/// dimension one; commutative degree-0 algebras over Q via minimal-polynomial
/// irreducibility (with explicit zero-divisor witnesses from factorizations).
/// Throws UnsupportedInstance (std::invalid_argument) outside these shapes.
GrDivisionVerdict is_gr_division(const DGAlgebra& g, std::uint64_t budget = kDefaultBudget);

/// Certificate mode over any field: verify a claimed inverse table.
Report verify_gr_inverse_certificate(const DGAlgebra& g, const std::vector<Vec>& elements,
                                     const std::vector<Vec>& inverses);

enum class RegularityStatus {
    holds_finite_dimensional,
    holds_graded_commutative,
    holds_structural_laurent,
    undecided,
};

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::undecided;
    std::string justification;
    bool holds() const { return status != RegularityStatus::undecided; }
};

/// Do the left-regular and right-regular homogeneous elements coincide?
/// Automatic for finite-dimensional algebras over a field; also detected for
/// graded-commutative input (reported with that justification).
RegularityVerdict regularity_condition(const DGAlgebra& g);
RegularityVerdict regularity_condition(const TwistedLaurentDGA& l);

struct DgDivisionVerdict {
    bool division = false;
    bool direct_path_ran = false;   // one-sided ideal enumeration (F_p only)
    bool direct_path_result = false;
    GrDivisionVerdict cycles_verdict; // theorem path: cycles gr-division
    RegularityVerdict regularity;
    Report report;
};

/// Runs both the definitional path (left and right dg-ideal enumeration) and
/// the theorem path (cycles gr-division) where available and asserts they
/// agree. Requires the regularity condition on the cycles.
DgDivisionVerdict is_dg_division(const DGAlgebra& a, std::uint64_t budget = kDefaultBudget);
DgDivisionVerdict is_dg_division(const TwistedLaurentDGA& l, std::uint64_t budget = kDefaultBudget);

struct DivisionClassification {
    enum class Case { zero_differential, acyclic };
    enum class Shape { degree_zero_division, twisted_laurent };
    Case differential_case = Case::zero_differential;
    Shape cycles_shape = Shape::degree_zero_division;
    Vec witness_y;          // acyclic case (finite-dimensional input)
    int generator_degree = 0; // twisted-Laurent shape: degree of T
    int generator_power = 0;  // power of X realizing T (Laurent input)
    bool sigma_is_identity = true;
    Report report;
};

/// Every certified dg-division algebra has d = 0 or is acyclic; the cycles are
/// a division algebra in degree 0 or a twisted Laurent ring. A verdict outside
/// these cases raises TheoremViolation.
DivisionClassification classify_dg_division(const DGAlgebra& a,
                                            std::uint64_t budget = kDefaultBudget);
DivisionClassification classify_dg_division(const TwistedLaurentDGA& l,
                                             std::uint64_t budget = kDefaultBudget);

/// Acyclic case: H = 0. Zero-differential case: H = ker(d) = A, re-certified
/// gr-division.
Report homology_of_division(const DGAlgebra& a, std::uint64_t budget = kDefaultBudget);
Report homology_of_division(const TwistedLaurentDGA& l, std::uint64_t budget = kDefaultBudget);

/// For a certified dg-simple algebra: the graded center is a dg-division
/// algebra; in characteristic != 2 its cycles live in even degrees; the cycles
/// are classified (degree-0 field or Laurent).
Report graded_center_division_check(const DGAlgebra& a, std::uint64_t budget = kDefaultBudget);

/// Minimal polynomial of an element in a commutative degree-0 algebra.
std::vector<Scalar> minimal_polynomial(const DGAlgebra& g, const Vec& u);

/// Irreducibility over Q (Kronecker factor search) or F_p (exhaustive factor
/// enumeration) for small degrees; returns a nontrivial monic factor when
/// reducible.
struct FactorResult {
    bool irreducible = false;
    std::vector<Scalar> factor; // monic nontrivial factor when reducible
};
FactorResult factor_polynomial(const Field& f, const std::vector<Scalar>& monic_poly);

} // namespace dgk
