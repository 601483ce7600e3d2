#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgkernel/catalog.hpp"
#include "dgkernel/hom.hpp"

using namespace dgk;

namespace {
const Field Q = Field::rationals();

DGModule two_term_complex(const Field& f)
{
    // K -> K with identity differential, degrees 0 and 1, over Q0
    DGAlgebra q0 = catalog::q0(f);
    std::vector<BasisVector> basis = {{"m0", 0}, {"m1", 1}};
    std::vector<std::vector<Vec>> action(1, std::vector<Vec>(2));
    action[0][0] = Vec{Scalar::one(f), Scalar::zero(f)};
    action[0][1] = Vec{Scalar::zero(f), Scalar::one(f)};
    std::vector<Vec> delta(2, zero_vec(f, 2));
    delta[0][1] = Scalar::one(f);
    return DGModule(q0, basis, action, delta, "two_term");
}

} // namespace

TEST_CASE("regular modules validate; a broken Leibniz is caught")
{
    for (const auto& name : {"Q0", "DUAL", "M2", "DD"}) {
        DGModule r = regular_module(catalog::make_algebra(name, Q));
        INFO(name);
        CHECK(validate_module(r).verdict == "valid");
    }
    CHECK(regular_module(catalog::q0(Q)).dim() == 1);
    CHECK(regular_module(catalog::dual_numbers(Q)).dim() == 2);
    CHECK(regular_module(catalog::m2(Q)).dim() == 4);

    // redefine delta(eps) = 0: module Leibniz fails at (a, m) = (eps, one)
    DGAlgebra dual = catalog::dual_numbers(Q);
    DGModule reg = regular_module(dual);
    std::vector<std::vector<Vec>> action(2, std::vector<Vec>(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            action[i][j] = reg.action_entry(i, j);
    std::vector<Vec> delta(2, zero_vec(Q, 2));
    DGModule broken(dual, reg.basis(), action, delta, "broken");
    Report rep = validate_module(broken);
    CHECK(rep.verdict == "invalid");
    bool found = false;
    for (const auto& e : rep.certificates.at("failures"))
        if (e.at("axiom") == "module_leibniz" && e.at("witness").at("a") == 1 &&
            e.at("witness").at("m") == 0)
            found = true;
    CHECK(found);
}

TEST_CASE("shift modules")
{
    DGAlgebra q0 = catalog::q0(Q);
    DGModule k = regular_module(q0);
    CHECK(shift_module(k, 0) == k);
    CHECK(shift_module(k, 3).degree_of(0) == -3);

    DGModule reg = regular_module(catalog::dual_numbers(Q));
    DGModule s = shift_module(reg, 1);
    CHECK(s.space() == GradedSpace(std::map<int, int>{{-1, 1}, {-2, 1}}));
    CHECK(validate_module(s).verdict == "valid"); // sign check on Leibniz
    CHECK(shift_module(s, -1) == reg);

    DGModule m2reg = regular_module(catalog::m2(Q));
    for (int kk : {-2, -1, 1, 2})
        CHECK(validate_module(shift_module(m2reg, kk)).verdict == "valid");
}

TEST_CASE("hom complexes")
{
    SUBCASE("Hom of the trivial module is one-dimensional with zero differential")
    {
        DGModule k = regular_module(catalog::q0(Q));
        HomComplex h = hom_complex(k, k);
        CHECK(h.dim() == 1);
        CHECK(h.space == GradedSpace(std::map<int, int>{{0, 1}}));
        CHECK(h.dhom.is_zero());
    }
    SUBCASE("End(regular DUAL) is 2-dimensional with cycles spanned by the identity")
    {
        DGModule reg = regular_module(catalog::dual_numbers(Q));
        HomComplex h = hom_complex(reg, reg);
        CHECK(h.dim() == 2);
        KernelImage ki = kernel_and_image(h.dhom);
        CHECK(ki.kernel.dims() == GradedSpace(std::map<int, int>{{0, 1}}));
        // the degree-0 cycle is a multiple of the identity
        Vec id = h.identity_coords();
        const Matrix rows = ki.kernel.basis(0);
        Vec cyc = zero_vec(Q, h.dim());
        std::size_t pos = 0;
        for (std::size_t i = 0; i < h.dim(); ++i)
            if (h.basis[i].degree == 0)
                cyc[i] = rows.at(0, pos++);
        bool proportional = false;
        for (const Scalar& c : {Scalar::one(Q), -Scalar::one(Q)})
            if (scale_vec(c, cyc) == id || cyc == scale_vec(c, id))
                proportional = true;
        CHECK(proportional);
    }
    SUBCASE("Hom(M, M[k]) has the dimensions of End(M) shifted by k")
    {
        DGModule reg = regular_module(catalog::dual_numbers(Q));
        HomComplex end = hom_complex(reg, reg);
        for (int k : {-2, 1, 3}) {
            HomComplex h = hom_complex(reg, shift_module(reg, k));
            for (int d : end.space.support())
                CHECK(h.space.dim(d - k) == end.space.dim(d));
        }
    }
}

TEST_CASE("end_algebra")
{
    SUBCASE("End of the trivial module is the base field")
    {
        EndAlgebra e = end_algebra(regular_module(catalog::q0(Q)));
        CHECK(e.algebra.dim() == 1);
        CHECK(validate_dga(e.algebra).verdict == "valid");
    }
    SUBCASE("End of a contractible two-term complex is M2")
    {
        EndAlgebra e = end_algebra(two_term_complex(Q));
        CHECK(e.algebra.dim() == 4);
        REQUIRE(validate_dga(e.algebra).verdict == "valid");
        // acyclic: d_Hom hits the identity
        auto w = solve_affine(e.algebra.differential_map(), 0,
                              e.algebra.component(e.algebra.unit(), 0));
        CHECK(w.has_value());
        // isomorphic to the catalog M2 via matrix units
        DGAlgebra m2 = catalog::m2(Q);
        HomComplex& h = e.hom;
        auto unit_map = [&](std::size_t to, std::size_t from) {
            // the graded map sending m_from to m_to and the other basis vector to 0
            GradedMap g(Q, h.source.space(), h.source.space(),
                        h.source.degree_of(to) - h.source.degree_of(from));
            g.block(h.source.degree_of(from)).at(0, 0) = Scalar::one(Q);
            auto c = h.coordinates_of(g);
            REQUIRE(c.has_value());
            return e.algebra.assemble(e.algebra.decompose(*c));
        };
        std::vector<Vec> images(4);
        images[*m2.index_of_name("E00")] = unit_map(0, 0);
        images[*m2.index_of_name("E11")] = unit_map(1, 1);
        images[*m2.index_of_name("E01")] = unit_map(0, 1);
        images[*m2.index_of_name("E10")] = unit_map(1, 0);
        CHECK(is_dg_isomorphism(m2, e.algebra, images));
    }
    SUBCASE("End of the regular DUAL module is DUAL again")
    {
        EndAlgebra e = end_algebra(regular_module(catalog::dual_numbers(Q)));
        REQUIRE(validate_dga(e.algebra).verdict == "valid");
        CHECK(e.algebra.dim() == 2);
        DGAlgebra dual = catalog::dual_numbers(Q);
        // map 1 -> id, eps -> the degree -1 basis map, fixing signs as needed
        Vec id = e.hom.identity_coords();
        std::size_t fm1 = 0;
        for (std::size_t i = 0; i < 2; ++i)
            if (e.algebra.degree_of(i) == -1)
                fm1 = i;
        bool ok = false;
        for (const Scalar& c : {Scalar::one(Q), -Scalar::one(Q)}) {
            std::vector<Vec> images = {id, scale_vec(c, e.algebra.basis_element(fm1))};
            if (is_dg_isomorphism(dual, e.algebra, images))
                ok = true;
        }
        CHECK(ok);
    }
    SUBCASE("end_algebra validates over every catalog regular module")
    {
        for (const auto& name : {"Q0", "DUAL", "M2", "DD"}) {
            EndAlgebra e = end_algebra(regular_module(catalog::make_algebra(name, Q)));
            INFO(name);
            CHECK(validate_dga(e.algebra).verdict == "valid");
        }
    }
}

TEST_CASE("submodule closure")
{
    DGAlgebra dual = catalog::dual_numbers(Q);
    DGModule reg = regular_module(dual);

    CHECK(submodule_closure(reg, {}).total_dim() == 0);

    // closure({eps}) = everything, since delta(eps) = 1
    GradedSubspace c = submodule_closure(reg, {reg.basis_element(1)});
    CHECK(c.total_dim() == 2);

    // in DD: closure({w}) is the 2-dimensional span {w, eps(x)eps}
    DGAlgebra ddalg = catalog::dd(Q);
    DGModule ddreg = regular_module(ddalg);
    Vec w = sub_vec(ddreg.basis_element(1), ddreg.basis_element(2));
    GradedSubspace cw = submodule_closure(ddreg, {w});
    CHECK(cw.total_dim() == 2);
    CHECK(cw.dims() == GradedSpace(std::map<int, int>{{-2, 1}, {-1, 1}}));
    CHECK(cw.contains(-1, ddreg.component(w, -1)));
    CHECK(cw.contains(-2, ddreg.component(ddreg.basis_element(3), -2)));
    CHECK(is_dg_submodule(ddreg, cw));
}

TEST_CASE("annihilators")
{
    for (const auto& name : {"Q0", "DUAL", "M2", "DD"}) {
        AnnihilatorResult ann = annihilator(regular_module(catalog::make_algebra(name, Q)));
        INFO(name);
        CHECK(ann.ideal.total_dim() == 0); // a . 1 = a
    }
    AnnihilatorResult a0 = annihilator(regular_module(catalog::q0(Q)));
    CHECK(a0.certification.verdict == "zero");

    // the quotient DD / closure({w}) is annihilated by w
    DGAlgebra ddalg = catalog::dd(Q);
    DGModule ddreg = regular_module(ddalg);
    Vec w = sub_vec(ddreg.basis_element(1), ddreg.basis_element(2));
    DGModule quot = quotient_module(ddreg, submodule_closure(ddreg, {w}), "DD/w");
    CHECK(validate_module(quot).verdict == "valid");
    AnnihilatorResult ann = annihilator(quot);
    CHECK(ann.ideal.total_dim() > 0);
    CHECK(ann.ideal.contains(-1, ddalg.component(w, -1)));
}

TEST_CASE("faithful embeddings")
{
    SUBCASE("regular modules are faithful and the intertwining identity holds")
    {
        for (const auto& name : {"Q0", "DUAL", "M2"}) {
            FaithfulEmbedding fe = faithful_embedding(regular_module(catalog::make_algebra(name, Q)));
            INFO(name);
            CHECK(fe.report.verdict == "faithful");
        }
    }
    SUBCASE("DD / closure({w}) is not faithful, witnessed by w")
    {
        DGAlgebra ddalg = catalog::dd(Q);
        DGModule ddreg = regular_module(ddalg);
        Vec w = sub_vec(ddreg.basis_element(1), ddreg.basis_element(2));
        DGModule quot = quotient_module(ddreg, submodule_closure(ddreg, {w}), "DD/w");
        FaithfulEmbedding fe = faithful_embedding(quot);
        CHECK(fe.report.verdict == "not_faithful");
        CHECK(fe.annihilator_ideal.contains(-1, ddalg.component(w, -1)));
    }
}

TEST_CASE("z functor")
{
    CHECK(z_functor(regular_module(catalog::q0(Q))).module.dim() == 1);

    ZFunctorResult z = z_functor(regular_module(catalog::dual_numbers(Q)));
    CHECK(z.module.dim() == 1);
    CHECK(z.module.space() == GradedSpace(std::map<int, int>{{0, 1}}));

    ZFunctorResult zt = z_functor(two_term_complex(Q));
    CHECK(zt.module.space() == GradedSpace(std::map<int, int>{{1, 1}}));
}

TEST_CASE("induce functor and the round trip")
{
    DGAlgebra dual = catalog::dual_numbers(Q);
    Vec y = dual.basis_element(1); // eps

    SUBCASE("inducing the trivial cycles module gives the regular module")
    {
        Subalgebra cyc = cycles_algebra(dual);
        DGModule n = regular_module(cyc.algebra); // K in degree 0
        InduceResult ind = induce_functor(dual, y, n);
        CHECK(validate_module(ind.module).verdict == "valid");
        CHECK(ind.module.dim() == 2);
        CHECK(ind.round_trip.verdict == "isomorphic");
        // isomorphic to the regular module: 1 (x) n0 generates everything
        DGModule reg = regular_module(dual);
        std::vector<Vec> images = {ind.module.basis_element(0), // 1 (x) n0 <- one
                                   ind.module.basis_element(1)}; // y (x) n0 <- eps
        CHECK(is_module_isomorphism(reg, ind.module, images));
    }
    SUBCASE("shifted cycles modules induce shifted regular modules")
    {
        Subalgebra cyc = cycles_algebra(dual);
        DGModule n = shift_module(regular_module(cyc.algebra), 3);
        InduceResult ind = induce_functor(dual, y, n);
        CHECK(ind.module.space() ==
              GradedSpace(std::map<int, int>{{-3, 1}, {-4, 1}}));
        CHECK(ind.round_trip.verdict == "isomorphic");
    }
    SUBCASE("M2: inducing ker(d) over itself recovers the regular module")
    {
        DGAlgebra m2 = catalog::m2(Q);
        Vec y = m2.basis_element(*m2.index_of_name("E01"));
        Subalgebra cyc = cycles_algebra(m2);
        DGModule n = regular_module(cyc.algebra);
        InduceResult ind = induce_functor(m2, y, n);
        CHECK(ind.module.dim() == 4);
        CHECK(validate_module(ind.module).verdict == "valid");
        CHECK(ind.round_trip.verdict == "isomorphic");
        ZFunctorResult z = z_functor(ind.module);
        CHECK(z.module.dim() == n.dim());
    }
}
