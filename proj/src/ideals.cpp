#include "dgkernel/ideals.hpp"

namespace dgk {

namespace {

GradedSubspace closure_in_algebra(const DGAlgebra& a, const std::vector<Vec>& seeds, Side side)
{
    GradedSubspace s(a.field(), a.space());
    for (const Vec& g : seeds)
        for (const auto& [deg, comp] : a.decompose(g))
            if (!s.contains(deg, comp))
                s = s.with_vector(deg, comp);
    bool stable = false;
    while (!stable) {
        stable = true;
        for (int deg : s.support()) {
            const Matrix rows = s.basis(deg);
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                const Vec v = a.embed_component(deg, rows.row(r));
                std::vector<Vec> derived{a.differentiate(v)};
                for (std::size_t i = 0; i < a.dim(); ++i) {
                    if (side == Side::left || side == Side::twosided)
                        derived.push_back(a.multiply(a.basis_element(i), v));
                    if (side == Side::right || side == Side::twosided)
                        derived.push_back(a.multiply(v, a.basis_element(i)));
                }
                for (const Vec& w : derived)
                    for (const auto& [dd, comp] : a.decompose(w))
                        if (!s.contains(dd, comp)) {
                            s = s.with_vector(dd, comp);
                            stable = false;
                        }
            }
        }
    }
    return s;
}

} // namespace

DGIdeal dg_ideal_generate(const DGAlgebra& a, const std::vector<Vec>& elements, Side side)
{
    DGIdeal out;
    out.side = side;
    out.carrier = closure_in_algebra(a, elements, side);
    return out;
}

bool is_dg_ideal(const DGAlgebra& a, const GradedSubspace& carrier, Side side)
{
    for (int deg : carrier.support()) {
        const Matrix rows = carrier.basis(deg);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            const Vec v = a.embed_component(deg, rows.row(r));
            std::vector<Vec> derived{a.differentiate(v)};
            for (std::size_t i = 0; i < a.dim(); ++i) {
                if (side == Side::left || side == Side::twosided)
                    derived.push_back(a.multiply(a.basis_element(i), v));
                if (side == Side::right || side == Side::twosided)
                    derived.push_back(a.multiply(v, a.basis_element(i)));
            }
            for (const Vec& w : derived)
                for (const auto& [dd, comp] : a.decompose(w))
                    if (!carrier.contains(dd, comp))
                        return false;
        }
    }
    return true;
}

AlgebraSimplicityVerdict is_dg_simple_algebra(const DGAlgebra& a, std::uint64_t budget)
{
    if (!a.field().is_prime_field())
        throw UnsupportedField("is_dg_simple_algebra over Q: enumeration impossible; verify a "
                               "claimed proper ideal instead");
    AlgebraSimplicityVerdict out;
    bool done = false;
    for (int deg : a.space().support()) {
        if (done)
            break;
        for_each_projective_rep(a.field(), a.space().dim(deg), [&](const Vec& rep) {
            if (++out.closures > budget)
                throw BudgetExceeded("is_dg_simple_algebra: budget exhausted");
            DGIdeal ideal = dg_ideal_generate(a, {a.embed_component(deg, rep)}, Side::twosided);
            if (ideal.carrier.total_dim() < static_cast<int>(a.dim())) {
                out.simple = false;
                out.witness_degree = deg;
                out.witness_component = rep;
                out.witness = ideal.carrier;
                done = true;
                return false;
            }
            return true;
        });
    }
    if (!done)
        out.simple = true;
    return out;
}

OneSidedVerdict only_trivial_dg_ideals(const DGAlgebra& a, Side side, std::uint64_t budget)
{
    if (!a.field().is_prime_field())
        throw UnsupportedField("only_trivial_dg_ideals requires a prime field");
    if (side == Side::twosided)
        throw std::invalid_argument("only_trivial_dg_ideals: pick left or right");
    OneSidedVerdict out;
    std::uint64_t used = 0;
    bool done = false;
    for (int deg : a.space().support()) {
        if (done)
            break;
        for_each_projective_rep(a.field(), a.space().dim(deg), [&](const Vec& rep) {
            if (++used > budget)
                throw BudgetExceeded("only_trivial_dg_ideals: budget exhausted");
            DGIdeal ideal = dg_ideal_generate(a, {a.embed_component(deg, rep)}, side);
            if (ideal.carrier.total_dim() < static_cast<int>(a.dim())) {
                out.trivial_only = false;
                out.witness_degree = deg;
                out.witness_component = rep;
                out.witness = ideal.carrier;
                done = true;
                return false;
            }
            return true;
        });
    }
    if (!done)
        out.trivial_only = true;
    return out;
}

PrimeVerdict is_dg_prime(const DGAlgebra& a, std::uint64_t budget)
{
    if (!a.field().is_prime_field())
        throw UnsupportedField("is_dg_prime over Q: enumeration impossible");
    PrimeVerdict out;
    // collect the ideals generated by each projective representative once
    struct Gen {
        int degree;
        Vec rep;
        GradedSubspace ideal;
    };
    std::vector<Gen> gens;
    for (int deg : a.space().support())
        for_each_projective_rep(a.field(), a.space().dim(deg), [&](const Vec& rep) {
            GradedSubspace ideal =
                dg_ideal_generate(a, {a.embed_component(deg, rep)}, Side::twosided).carrier;
            gens.push_back({deg, rep, std::move(ideal)});
            return true;
        });
    for (const Gen& gi : gens)
        for (const Gen& gj : gens) {
            if (++out.pairs > budget)
                throw BudgetExceeded("is_dg_prime: budget exhausted");
            // product of the two ideals: spanned by pairwise basis products
            bool all_zero = true;
            for (int di : gi.ideal.support()) {
                const Matrix bi = gi.ideal.basis(di);
                for (std::size_t r = 0; r < bi.rows() && all_zero; ++r) {
                    const Vec u = a.embed_component(di, bi.row(r));
                    for (int dj : gj.ideal.support()) {
                        const Matrix bj = gj.ideal.basis(dj);
                        for (std::size_t s = 0; s < bj.rows(); ++s) {
                            const Vec v = a.embed_component(dj, bj.row(s));
                            if (!is_zero_vec(a.multiply(u, v))) {
                                all_zero = false;
                                break;
                            }
                        }
                        if (!all_zero)
                            break;
                    }
                }
            }
            if (all_zero) {
                out.prime = false;
                out.a_degree = gi.degree;
                out.a_component = gi.rep;
                out.b_degree = gj.degree;
                out.b_component = gj.rep;
                return out;
            }
        }
    out.prime = true;
    return out;
}

PrimitiveSearch find_simple_faithful(const DGAlgebra& a, std::uint64_t budget)
{
    if (!a.field().is_prime_field())
        throw UnsupportedField("find_simple_faithful requires a prime field");
    PrimitiveSearch out;
    out.report = Report("find_simple_faithful");
    out.report.inputs["algebra"] = a.label();
    DGModule reg = regular_module(a);
    std::vector<GradedSubspace> closures;
    std::uint64_t used = 0;
    for (int deg : a.space().support())
        for_each_projective_rep(a.field(), a.space().dim(deg), [&](const Vec& rep) {
            if (++used > budget)
                throw BudgetExceeded("find_simple_faithful: budget exhausted");
            GradedSubspace c = submodule_closure(reg, {reg.embed_component(deg, rep)});
            bool seen = false;
            for (const auto& prev : closures)
                if (prev == c)
                    seen = true;
            if (!seen)
                closures.push_back(std::move(c));
            return true;
        });
    // keep the inclusion-minimal ones; each is a dg-simple dg-submodule
    std::vector<const GradedSubspace*> minimal;
    for (const auto& c : closures) {
        bool is_min = true;
        for (const auto& other : closures)
            if (&other != &c && c.contains(other) && !(other == c)) {
                is_min = false;
                break;
            }
        if (is_min)
            minimal.push_back(&c);
    }
    Json candidates = Json::array();
    for (const GradedSubspace* c : minimal) {
        DGModule sub = module_from_submodule(reg, *c, "minimal");
        ModuleSimplicityVerdict sv = is_dg_simple_module(sub, budget);
        if (!sv.simple)
            throw TheoremViolation("find_simple_faithful: a minimal submodule is not dg-simple");
        AnnihilatorResult ann = annihilator(sub);
        Json entry;
        entry["dims"] = c->dims().to_string();
        entry["annihilator_dims"] = ann.ideal.dims().to_string();
        entry["faithful"] = ann.ideal.total_dim() == 0;
        candidates.push_back(entry);
        if (ann.ideal.total_dim() == 0 && !out.primitive) {
            out.primitive = true;
            out.witness_carrier = *c;
            out.witness_module = sub;
        }
    }
    out.report.certificates["minimal_candidates"] = candidates;
    out.report.verdict = out.primitive ? "primitive" : "no_faithful_simple_among_minimal";
    return out;
}

SemisimpleVerdict is_semisimple_category(const DGAlgebra& a, std::uint64_t budget)
{
    SemisimpleVerdict out;
    out.report = Report("is_semisimple_category");
    out.report.inputs["algebra"] = a.label();

    auto wit = solve_affine(a.differential_map(), 0, a.component(a.unit(), 0));
    if (!wit) {
        out.acyclic = false;
        out.semisimple = false;
        out.report.verdict = "not_semisimple";
        out.report.note("not acyclic: the dg-module category cannot be semisimple");
        std::map<int, int> hdims;
        HomologyAlgebra h = homology_algebra(a);
        out.report.certificates["homology_dims"] = h.algebra.space().to_string();
        return out;
    }
    out.acyclic = true;
    out.witness_y = a.embed_component(-1, wit->particular);

    if (!a.field().is_prime_field())
        throw UnsupportedField("is_semisimple_category: the graded sub-check enumerates over F_p");

    // graded semisimplicity of ker(d): socle coverage of the regular graded module
    Subalgebra cyc = cycles_algebra(a);
    DGModule regc = regular_module(cyc.algebra); // delta = 0: a graded module
    std::vector<GradedSubspace> closures;
    std::uint64_t used = 0;
    for (int deg : regc.space().support())
        for_each_projective_rep(a.field(), regc.space().dim(deg), [&](const Vec& rep) {
            if (++used > budget)
                throw BudgetExceeded("is_semisimple_category: budget exhausted");
            GradedSubspace c = submodule_closure(regc, {regc.embed_component(deg, rep)});
            bool seen = false;
            for (const auto& prev : closures)
                if (prev == c)
                    seen = true;
            if (!seen)
                closures.push_back(std::move(c));
            return true;
        });
    std::vector<const GradedSubspace*> minimal;
    for (const auto& c : closures) {
        bool is_min = true;
        for (const auto& other : closures)
            if (&other != &c && c.contains(other) && !(other == c))
                is_min = false;
        if (is_min)
            minimal.push_back(&c);
    }
    GradedSubspace socle(a.field(), regc.space());
    for (const GradedSubspace* c : minimal)
        socle = subspace_sum(socle, *c);
    const bool graded_ss = socle.total_dim() == static_cast<int>(regc.dim());
    out.report.certificates["socle_dims"] = socle.dims().to_string();

    if (!graded_ss) {
        out.semisimple = false;
        out.report.verdict = "not_semisimple";
        out.report.note("acyclic, but the graded modules over ker(d) are not semisimple");
        return out;
    }
    out.semisimple = true;
    out.report.verdict = "semisimple";

    // cross-check: the regular dg-module decomposes into dg-simples
    DGModule reg = regular_module(a);
    std::vector<GradedSubspace> dg_closures;
    for (int deg : reg.space().support())
        for_each_projective_rep(a.field(), reg.space().dim(deg), [&](const Vec& rep) {
            if (++used > budget)
                throw BudgetExceeded("is_semisimple_category: budget exhausted");
            GradedSubspace c = submodule_closure(reg, {reg.embed_component(deg, rep)});
            bool seen = false;
            for (const auto& prev : dg_closures)
                if (prev == c)
                    seen = true;
            if (!seen)
                dg_closures.push_back(std::move(c));
            return true;
        });
    std::vector<const GradedSubspace*> dg_minimal;
    for (const auto& c : dg_closures) {
        bool is_min = true;
        for (const auto& other : dg_closures)
            if (&other != &c && c.contains(other) && !(other == c))
                is_min = false;
        if (is_min)
            dg_minimal.push_back(&c);
    }
    GradedSubspace sum(a.field(), reg.space());
    Json parts = Json::array();
    for (const GradedSubspace* c : dg_minimal) {
        GradedSubspace inter = subspace_intersect(sum, *c);
        if (inter.total_dim() == 0) {
            sum = subspace_sum(sum, *c);
            parts.push_back(c->dims().to_string());
        }
        if (sum.total_dim() == static_cast<int>(reg.dim()))
            break;
    }
    if (sum.total_dim() != static_cast<int>(reg.dim()))
        throw TheoremViolation(
            "is_semisimple_category: regular dg-module failed to decompose into dg-simples");
    out.report.certificates["regular_decomposition"] = parts;
    out.report.note("regular dg-module decomposed into dg-simple summands");
    return out;
}

} // namespace dgk
