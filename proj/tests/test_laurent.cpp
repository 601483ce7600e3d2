#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgkernel/catalog.hpp"

using namespace dgk;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("Laurent power differentials follow the Leibniz recursion")
{
    TwistedLaurentDGA lau = catalog::lau(Q);
    // d(X^{2n+1}) = X^{2n}, d(X^{2n}) = 0, over the whole test window
    for (int k = -6; k <= 6; ++k) {
        LaurentElement d = lau.differentiate(lau.x_power(k));
        if (k % 2 == 0)
            CHECK(d.is_zero());
        else
            CHECK(d == lau.x_power(k - 1));
    }
    // d(X^3) = X^2 and d(X^-1) = X^-2, frozen
    CHECK(lau.differentiate(lau.x_power(3)) == lau.x_power(2));
    CHECK(lau.differentiate(lau.x_power(-1)) == lau.x_power(-2));
}

TEST_CASE("Laurent multiplication and the twist relation")
{
    TwistedLaurentDGA lau = catalog::lau(Q);
    CHECK(lau.multiply(lau.x_power(1), lau.x_power(-1)) == lau.one());
    CHECK(lau.multiply(lau.x_power(3), lau.x_power(4)) == lau.x_power(7));
    CHECK(lau.degree_of(lau.x_power(2)) == -2); // deg X = -1 since d(X) = 1
}

TEST_CASE("LAU window validates and has even-power cycles")
{
    LaurentWindow w = laurent_window(catalog::lau(Q), -4, 4);
    Report rep = w.validate();
    CHECK(rep.verdict == "valid");

    for (int deg = -3; deg <= 3; ++deg) {
        INFO("degree " << deg);
        CHECK(w.ring.cycles_dim(deg) == (deg % 2 == 0 ? 1 : 0));
    }
    // acyclic on interior degrees
    for (int deg = -3; deg <= 3; ++deg)
        CHECK(w.ring.homology_dim(deg) == 0);
}

TEST_CASE("LAU2 window: zero differential, cycles everywhere")
{
    LaurentWindow w = laurent_window(catalog::lau2(Q), -4, 4);
    CHECK(w.validate().verdict == "valid");
    CHECK(w.ring.differential_is_zero());
    for (int deg = -4; deg <= 4; ++deg) {
        const int dim = deg % 2 == 0 ? 1 : 0;
        CHECK(w.ring.degree_dim(deg) == dim);
        CHECK(w.ring.cycles_dim(deg) == dim);
        CHECK(w.ring.homology_dim(deg) == dim);
    }
}

TEST_CASE("acyclicity by solving d(y) = 1")
{
    TwistedLaurentDGA lau = catalog::lau(Q);
    auto y = lau.solve_d_equals(lau.one(), 0);
    REQUIRE(y.has_value());
    CHECK(*y == lau.x_power(1)); // the witness is X itself
    CHECK(lau.differentiate(*y) == lau.one());

    TwistedLaurentDGA lau2 = catalog::lau2(Q);
    CHECK(!lau2.solve_d_equals(lau2.one(), 0).has_value());
}

TEST_CASE("zero-differential Laurent ring with deg X = 1")
{
    DGAlgebra r0 = catalog::q0(Q);
    TwistedLaurentDGA ring(r0, Matrix::identity(Q, 1), 1, LaurentElement(), {}, "LAU_d0");
    LaurentWindow w = laurent_window(ring, -2, 2);
    CHECK(w.validate().verdict == "valid");
    for (int deg = -2; deg <= 2; ++deg)
        CHECK(w.ring.homology_dim(deg) == 1); // H equals the window of K[X, X^-1]
}

TEST_CASE("window constraints")
{
    CHECK_THROWS_AS(laurent_window(catalog::lau(Q), 0, 1), std::invalid_argument);
    LaurentWindow w = laurent_window(catalog::lau(Q), -4, 4);
    CHECK(w.degree_trusted(0));
    CHECK_FALSE(w.degree_trusted(-4));
    CHECK_FALSE(w.degree_trusted(4));
}

TEST_CASE("a nontrivial automorphism: sign twist on a quadratic extension")
{
    // R0 = Q[s]/(s^2 - 2), sigma(s) = -s, deg X = 1, d = 0
    std::vector<BasisVector> basis = {{"one", 0}, {"s", 0}};
    std::vector<std::vector<Vec>> mul(2, std::vector<Vec>(2, zero_vec(Q, 2)));
    std::vector<Vec> diff(2, zero_vec(Q, 2));
    Vec unit = zero_vec(Q, 2);
    unit[0] = Scalar::one(Q);
    mul[0][0] = unit;
    mul[0][1] = zero_vec(Q, 2);
    mul[0][1][1] = Scalar::one(Q);
    mul[1][0] = mul[0][1];
    mul[1][1] = scale_vec(Scalar::from_int(Q, 2), unit);
    DGAlgebra r0(Q, basis, unit, mul, diff, "Qsqrt2");
    REQUIRE(validate_dga(r0).verdict == "valid");

    Matrix sigma = Matrix::identity(Q, 2);
    sigma.at(1, 1) = -Scalar::one(Q);
    TwistedLaurentDGA ring(r0, sigma, 1, LaurentElement(), {}, "twisted");
    LaurentWindow w = laurent_window(ring, -3, 3);
    CHECK(w.validate().verdict == "valid");

    // X s = sigma(s) X = -s X
    LaurentElement s = ring.from_r0(r0.basis_element(1));
    LaurentElement lhs = ring.multiply(ring.x_power(1), s);
    LaurentElement rhs = ring.multiply(s, ring.x_power(1)).scaled(-Scalar::one(Q));
    CHECK(lhs == rhs);
}
