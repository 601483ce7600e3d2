#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgkernel/catalog.hpp"
#include "support/oracle.hpp"

using namespace dgk;

namespace {

const Field Q = Field::rationals();

bool has_failure(const Report& rep, const std::string& axiom)
{
    for (const auto& e : rep.certificates.at("failures"))
        if (e.at("axiom") == axiom)
            return true;
    return false;
}

} // namespace

TEST_CASE("catalog algebras validate")
{
    for (const auto& name : {"Q0", "DUAL", "M2", "DD"}) {
        DGAlgebra a = catalog::make_algebra(name, Q);
        Report rep = validate_dga(a);
        INFO(name);
        CHECK(rep.verdict == "valid");
    }
}

TEST_CASE("mis-graded dual numbers fail the diff-shift axiom")
{
    // same tables as DUAL but eps placed in degree +1
    DGAlgebra dual = catalog::dual_numbers(Q);
    std::vector<BasisVector> basis = {{"one", 0}, {"eps", 1}};
    std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2, zero_vec(Q, 2)));
    std::vector<Vec> diff(2, zero_vec(Q, 2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            mul[i][j] = dual.mul_entry(i, j);
    diff[1] = dual.diff_entry(1);
    DGAlgebra bad(Q, basis, dual.unit(), mul, diff, "DUAL_misgraded");
    Report rep = validate_dga(bad);
    CHECK(rep.verdict == "invalid");
    CHECK(has_failure(rep, "diff_shift_plus_one"));
}

TEST_CASE("element arithmetic in DUAL and M2")
{
    DGAlgebra dual = catalog::dual_numbers(Q);
    const Vec one = dual.basis_element(0), eps = dual.basis_element(1);
    CHECK(is_zero_vec(dual.multiply(eps, eps)));
    CHECK(dual.multiply(one, eps) == eps);
    CHECK(is_zero_vec(dual.differentiate(dual.unit())));
    CHECK(dual.differentiate(eps) == one);

    DGAlgebra m2 = catalog::m2(Q);
    const auto idx = [&](const char* n) { return *m2.index_of_name(n); };
    CHECK(m2.multiply(m2.basis_element(idx("E01")), m2.basis_element(idx("E10"))) ==
          m2.basis_element(idx("E00")));
    CHECK(m2.differentiate(m2.basis_element(idx("E01"))) == m2.unit());
    CHECK(is_zero_vec(m2.differentiate(m2.unit())));
}

TEST_CASE("opposite algebra")
{
    DGAlgebra q0 = catalog::q0(Q);
    CHECK(opposite_algebra(q0).mul_entry(0, 0) == q0.mul_entry(0, 0));

    // opposite(DUAL) has the same tables: the only sign touches eps*eps = 0
    DGAlgebra dual = catalog::dual_numbers(Q);
    DGAlgebra dop = opposite_algebra(dual);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(dop.mul_entry(i, j) == dual.mul_entry(i, j));

    // involution, field-exactly
    DGAlgebra m2 = catalog::m2(Q);
    DGAlgebra m2opop = opposite_algebra(opposite_algebra(m2));
    for (std::size_t i = 0; i < m2.dim(); ++i)
        for (std::size_t j = 0; j < m2.dim(); ++j)
            CHECK(m2opop.mul_entry(i, j) == m2.mul_entry(i, j));
    CHECK(validate_dga(opposite_algebra(m2)).verdict == "valid");
}

TEST_CASE("kernel and image of the DUAL differential")
{
    DGAlgebra dual = catalog::dual_numbers(Q);
    KernelImage ki = kernel_and_image(dual.differential_map());
    // frozen from row-reducing the single 1x1 block d(eps) = 1
    CHECK(ki.kernel.dims() == GradedSpace(std::map<int, int>{{0, 1}}));
    CHECK(ki.image.dims() == GradedSpace(std::map<int, int>{{0, 1}}));

    auto s = solve_affine(dual.differential_map(), 0, Vec{Scalar::one(Q)});
    REQUIRE(s.has_value());
    CHECK(s->source_degree == -1);
    CHECK(s->particular == Vec{Scalar::one(Q)}); // the coordinate of eps in degree -1
    CHECK(s->kernel.empty());
}

TEST_CASE("cycles algebras")
{
    CHECK(cycles_algebra(catalog::q0(Q)).algebra.dim() == 1);

    Subalgebra c = cycles_algebra(catalog::dual_numbers(Q));
    CHECK(c.algebra.dim() == 1);
    CHECK(c.algebra.space() == GradedSpace(std::map<int, int>{{0, 1}}));

    Subalgebra cm2 = cycles_algebra(catalog::m2(Q));
    CHECK(cm2.algebra.space() == GradedSpace(std::map<int, int>{{0, 1}, {1, 1}}));
    // cycles of M2 are K[w]/(w^2) with |w| = 1
    const std::size_t w = cm2.algebra.indices_of_degree(1).at(0);
    CHECK(is_zero_vec(cm2.algebra.mul_entry(w, w)));
}

TEST_CASE("homology algebras")
{
    HomologyAlgebra hq0 = homology_algebra(catalog::q0(Q));
    CHECK(hq0.algebra.dim() == 1);

    HomologyAlgebra hdual = homology_algebra(catalog::dual_numbers(Q));
    CHECK(hdual.algebra.dim() == 0);

    // d = 0 with a square-zero generator in degree 2: homology is the algebra itself
    std::vector<BasisVector> basis = {{"one", 0}, {"t", 2}};
    std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2, zero_vec(Q, 2)));
    std::vector<Vec> diff(2, zero_vec(Q, 2));
    Vec unit = zero_vec(Q, 2);
    unit[0] = Scalar::one(Q);
    mul[0][0] = unit;
    mul[0][1] = zero_vec(Q, 2);
    mul[0][1][1] = Scalar::one(Q);
    mul[1][0] = mul[0][1];
    DGAlgebra a(Q, basis, unit, mul, diff, "Kt");
    REQUIRE(validate_dga(a).verdict == "valid");
    HomologyAlgebra h = homology_algebra(a);
    CHECK(h.algebra.dim() == 2);
    CHECK(h.algebra.space() == a.space());
}

TEST_CASE("graded center")
{
    CHECK(graded_center(catalog::q0(Q)).sub.algebra.dim() == 1);

    CentralSubalgebra zd = graded_center(catalog::dual_numbers(Q));
    CHECK(zd.sub.algebra.dim() == 2); // DUAL is graded-commutative
    CHECK_FALSE(zd.certification.alarm);

    CentralSubalgebra zm = graded_center(catalog::m2(Q));
    CHECK(zm.sub.algebra.dim() == 1);
    CHECK(zm.sub.algebra.space() == GradedSpace(std::map<int, int>{{0, 1}}));
    CHECK_FALSE(zm.certification.alarm);
}

TEST_CASE("tensor over the base field: Koszul signs")
{
    DGAlgebra dual = catalog::dual_numbers(Q);
    DGAlgebra t = catalog::dd(Q);
    REQUIRE(validate_dga(t).verdict == "valid");

    // basis order: one(x)one, one(x)eps, eps(x)one, eps(x)eps
    const Vec one_eps = t.basis_element(1);
    const Vec eps_one = t.basis_element(2);
    const Vec eps_eps = t.basis_element(3);

    // (1(x)eps)(eps(x)1) = -(eps(x)eps)
    CHECK(t.multiply(one_eps, eps_one) == scale_vec(-Scalar::one(Q), eps_eps));

    // w = 1(x)eps - eps(x)1 has w^2 = 0 and d(eps(x)eps) = w
    const Vec w = sub_vec(one_eps, eps_one);
    CHECK(is_zero_vec(t.multiply(w, w)));
    CHECK(t.differentiate(eps_eps) == w);

    // Q0 (x) A is isomorphic to A
    DGAlgebra qa = tensor_over_base(catalog::q0(Q), dual);
    std::vector<Vec> images = {dual.basis_element(0), dual.basis_element(1)};
    CHECK(is_dg_isomorphism(qa, dual, images));

    // Koszul-sign associativity is a real test on all catalog pairs
    for (const auto& n1 : {"Q0", "DUAL", "M2"})
        for (const auto& n2 : {"Q0", "DUAL", "M2"}) {
            DGAlgebra p = tensor_over_base(catalog::make_algebra(n1, Q),
                                           catalog::make_algebra(n2, Q));
            INFO(n1 << " (x) " << n2);
            CHECK(validate_dga(p).verdict == "valid");
        }
}

TEST_CASE("tensor over a central subalgebra")
{
    DGAlgebra dual = catalog::dual_numbers(Q);

    SUBCASE("balancing over the base field reproduces the plain tensor")
    {
        CentralPair z = central_pair_trivial(dual, dual);
        CHECK(verify_central_pair(dual, dual, z).ok);
        CentralTensor ct = tensor_over_central(dual, dual, z);
        CHECK(ct.algebra.dim() == 4);
        CHECK(validate_dga(ct.algebra).verdict == "valid");
    }

    SUBCASE("DUAL (x)_DUAL DUAL collapses to DUAL")
    {
        CentralPair z = central_pair_from_center(dual, dual);
        REQUIRE(verify_central_pair(dual, dual, z).ok);
        CentralTensor ct = tensor_over_central(dual, dual, z);
        CHECK(ct.algebra.dim() == 2); // quotient dimension count 4 - 2
        CHECK(validate_dga(ct.algebra).verdict == "valid");
        // explicit isomorphism with DUAL: 1 -> [1(x)1], eps -> [eps(x)1]
        std::vector<Vec> images = {ct.project(ct.base_tensor.basis_element(0)),
                                   ct.project(ct.base_tensor.basis_element(2))};
        CHECK(is_dg_isomorphism(dual, ct.algebra, images));
    }

    SUBCASE("M2 (x)_Q0 Q0 is M2 again")
    {
        DGAlgebra m2 = catalog::m2(Q);
        DGAlgebra q0 = catalog::q0(Q);
        CentralPair z = central_pair_trivial(m2, q0);
        CentralTensor ct = tensor_over_central(m2, q0, z);
        CHECK(ct.algebra.dim() == 4);
        std::vector<Vec> images;
        for (std::size_t i = 0; i < m2.dim(); ++i)
            images.push_back(ct.project(tensor_pure(m2, q0, m2.basis_element(i), q0.unit())));
        CHECK(is_dg_isomorphism(m2, ct.algebra, images));
    }

    SUBCASE("a non-central pair is rejected")
    {
        DGAlgebra m2 = catalog::m2(Q);
        CentralPair z;
        z.z_basis = {{"z0", 0}, {"z1", 1}};
        z.into_a = {m2.unit(), m2.basis_element(*m2.index_of_name("E10"))};
        z.into_b = z.into_a;
        z.unit_coords = {Scalar::one(Q), Scalar::zero(Q)};
        Report rep = verify_central_pair(m2, m2, z);
        CHECK_FALSE(rep.ok);
        CHECK(rep.verdict == "not_central_in_A");
    }
}

TEST_CASE("graded-commutativity detection and odd squares")
{
    Report rep = validate_dga(catalog::dual_numbers(Q));
    bool noted = false;
    for (const auto& n : rep.notes)
        if (n.find("graded-commutative") != std::string::npos)
            noted = true;
    CHECK(noted);
    CHECK_FALSE(rep.alarm);
}

TEST_CASE("validator failures carry verifiable witnesses")
{
    // break one structure constant of M2 and check the named axioms truly fail
    DGAlgebra m2 = catalog::m2(Q);
    std::vector<std::vector<Vec>> mul(m2.dim(), std::vector<Vec>(m2.dim()));
    std::vector<Vec> diff;
    for (std::size_t i = 0; i < m2.dim(); ++i) {
        diff.push_back(m2.diff_entry(i));
        for (std::size_t j = 0; j < m2.dim(); ++j)
            mul[i][j] = m2.mul_entry(i, j);
    }
    mul[2][3][0] = Scalar::from_int(Q, 2); // E01*E10 = 2*E00
    DGAlgebra bad(Q, m2.basis(), m2.unit(), mul, diff, "M2_mut");
    Report rep = validate_dga(bad);
    CHECK(rep.verdict == "invalid");
    for (const auto& e : rep.certificates.at("failures")) {
        const std::string axiom = e.at("axiom");
        CHECK((axiom == "associativity" || axiom == "leibniz"));
    }
}
