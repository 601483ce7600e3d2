#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dgkernel/graded.hpp"
#include "support/oracle.hpp"

using namespace dgk;

namespace {

Scalar q(long long n, long long d = 1)
{
    return Scalar::from_big(Field::rationals(), BigInt(n), BigInt(d));
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-4, 4);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar::from_int(f, dist(rng));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic round-trips")
{
    const Field Q = Field::rationals();
    const Field F5 = Field::prime(5);

    // (a/b) * b = a over Q
    for (long long a = -6; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b) {
            Scalar ab = Scalar::from_big(Q, BigInt(a), BigInt(b));
            CHECK(ab * q(b) == q(a));
        }

    // Fermat inverse check over F_5
    for (long long x = 1; x < 5; ++x) {
        Scalar s = Scalar::from_int(F5, x);
        CHECK(s * s.inverse() == Scalar::one(F5));
        // x^(p-1) = 1
        Scalar p = Scalar::one(F5);
        for (int i = 0; i < 4; ++i)
            p *= s;
        CHECK(p == Scalar::one(F5));
    }

    CHECK_THROWS_AS(Scalar::one(Q) / Scalar::zero(Q), std::domain_error);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F5), std::invalid_argument);
    CHECK(q(3, 7).to_string() == "3/7");
    CHECK(Scalar::from_int(F5, 7).to_string() == "2 mod 5");
    CHECK(q(-2, 4).to_string() == "-1/2");
}

TEST_CASE("rank + nullity = columns, against the oracle")
{
    std::mt19937_64 rng(42);
    for (const Field& f : {Field::rationals(), Field::prime(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> sz(0, 5);
            const std::size_t r = sz(rng), c = sz(rng);
            Matrix m = random_matrix(f, r, c, rng);
            const std::size_t rk = rank(m);
            CHECK(rk + nullspace(m).size() == c);
            CHECK(rk == oracle::rank_oracle(m));
            for (const Vec& v : nullspace(m))
                CHECK(is_zero_vec(m.apply(v)));
        }
    }
}

TEST_CASE("solve returns verified solutions")
{
    std::mt19937_64 rng(7);
    const Field f = Field::rationals();
    int solved = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 4);
        const std::size_t r = sz(rng), c = sz(rng);
        Matrix m = random_matrix(f, r, c, rng);
        Vec x0;
        {
            std::uniform_int_distribution<int> dist(-3, 3);
            for (std::size_t j = 0; j < c; ++j)
                x0.push_back(Scalar::from_int(f, dist(rng)));
        }
        Vec b = m.apply(x0);
        auto s = solve(m, b);
        REQUIRE(s.has_value());
        CHECK(m.apply(s->particular) == b);
        ++solved;
    }
    CHECK(solved == 50);
}

TEST_CASE("graded kernel and image")
{
    const Field f = Field::rationals();
    GradedSpace two(std::map<int, int>{{0, 2}});

    SUBCASE("zero map: kernel everything, image zero")
    {
        GradedMap z(f, two, two, 0);
        KernelImage ki = kernel_and_image(z);
        CHECK(ki.kernel.dim(0) == 2);
        CHECK(ki.image.total_dim() == 0);
    }
    SUBCASE("identity: kernel zero, image everything")
    {
        GradedMap id = GradedMap::identity(f, two);
        KernelImage ki = kernel_and_image(id);
        CHECK(ki.kernel.total_dim() == 0);
        CHECK(ki.image.dim(0) == 2);
    }
    SUBCASE("malformed block shapes are rejected")
    {
        GradedMap z(f, two, two, 0);
        GradedMap bad(f, GradedSpace(std::map<int, int>{{0, 1}}), two, 0);
        // hand-build a map with a wrong-shaped block by composing mismatched spaces
        CHECK_THROWS(z.block(5));
    }
}

TEST_CASE("subspace sum and intersection in Q^2")
{
    const Field f = Field::rationals();
    GradedSpace two(std::map<int, int>{{0, 2}});
    auto U = GradedSubspace::span(f, two, {{0, {{q(1), q(0)}}}});
    auto V = GradedSubspace::span(f, two, {{0, {{q(0), q(1)}}}});
    auto Z = GradedSubspace(f, two);

    // frozen oracle values: sum has dim 2, intersection dim 0 (row reduction)
    CHECK(subspace_sum(U, V).dim(0) == 2);
    CHECK(subspace_intersect(U, V).total_dim() == 0);
    CHECK(subspace_sum(U, Z) == U);
    CHECK(subspace_intersect(U, U) == U);
    CHECK(subspace_sum(U, V).contains(U));
    CHECK(U.contains(subspace_intersect(U, V)));
}

TEST_CASE("subspace properties on random inputs")
{
    std::mt19937_64 rng(99);
    const Field f = Field::prime(3);
    GradedSpace amb(std::map<int, int>{{-1, 3}, {2, 2}});
    auto random_subspace = [&]() {
        std::map<int, std::vector<Vec>> vecs;
        std::uniform_int_distribution<int> dist(0, 2);
        for (int d : {-1, 2}) {
            const int n = amb.dim(d);
            const int count = dist(rng);
            for (int i = 0; i < count; ++i) {
                Vec v;
                for (int j = 0; j < n; ++j)
                    v.push_back(Scalar::from_int(f, dist(rng)));
                vecs[d].push_back(v);
            }
        }
        return GradedSubspace::span(f, amb, vecs);
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto U = random_subspace(), V = random_subspace();
        auto S = subspace_sum(U, V);
        auto I = subspace_intersect(U, V);
        CHECK(S.contains(U));
        CHECK(S.contains(V));
        CHECK(U.contains(I));
        CHECK(V.contains(I));
        // dim(U) + dim(V) = dim(U+V) + dim(U cap V), degreewise
        for (int d : {-1, 2})
            CHECK(U.dim(d) + V.dim(d) == S.dim(d) + I.dim(d));
    }
}

TEST_CASE("quotient")
{
    const Field f = Field::rationals();
    GradedSpace amb(std::map<int, int>{{0, 3}});
    auto U = GradedSubspace::full(f, amb);
    auto V = GradedSubspace::span(f, amb, {{0, {{q(1), q(1), q(0)}}}});
    auto Z = GradedSubspace(f, amb);

    SUBCASE("U/0 is U with identity-like projection")
    {
        Quotient qd = quotient(U, Z);
        CHECK(qd.space.dim(0) == 3);
        Vec v{q(1), q(2), q(3)};
        CHECK(qd.lift(0, qd.projection.apply(0, v)) == v);
    }
    SUBCASE("U/U is zero")
    {
        Quotient qd = quotient(U, U);
        CHECK(qd.space.total_dim() == 0);
    }
    SUBCASE("projection kills V and dimensions subtract")
    {
        Quotient qd = quotient(U, V);
        CHECK(qd.space.dim(0) == 2);
        CHECK(is_zero_vec(qd.projection.apply(0, Vec{q(1), q(1), q(0)})));
        CHECK(is_zero_vec(qd.projection.apply(0, Vec{q(2), q(2), q(0)})));
    }
    SUBCASE("V not inside U is rejected")
    {
        auto W = GradedSubspace::span(f, amb, {{0, {{q(1), q(0), q(0)}}}});
        auto U2 = GradedSubspace::span(f, amb, {{0, {{q(0), q(1), q(0)}}}});
        CHECK_THROWS_AS(quotient(U2, W), std::invalid_argument);
    }
}

TEST_CASE("solve_affine")
{
    const Field f = Field::rationals();
    GradedSpace two(std::map<int, int>{{0, 2}});
    GradedMap id = GradedMap::identity(f, two);
    GradedMap zero(f, two, two, 0);

    SUBCASE("identity: particular = target, kernel = 0")
    {
        Vec t{q(3), q(-1)};
        auto s = solve_affine(id, 0, t);
        REQUIRE(s.has_value());
        CHECK(s->particular == t);
        CHECK(s->kernel.empty());
    }
    SUBCASE("zero map, nonzero target: no solution")
    {
        auto s = solve_affine(zero, 0, Vec{q(1), q(0)});
        CHECK(!s.has_value());
    }
    SUBCASE("target outside support: no solution rather than an error")
    {
        GradedSpace one_dim(std::map<int, int>{{5, 1}});
        GradedMap m(f, two, one_dim, 5);
        auto s = solve_affine(m, 5, Vec{q(1)});
        CHECK(!s.has_value());
    }
}
