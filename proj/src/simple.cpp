#include "dgkernel/simple.hpp"

#include <functional>

namespace dgk {

void for_each_projective_rep(const Field& f, int dim,
                             const std::function<bool(const Vec&)>& visit)
{
    if (!f.is_prime_field())
        throw UnsupportedField("projective enumeration requires a prime field");
    const std::int64_t p = f.characteristic();
    for (int lead = 0; lead < dim; ++lead) {
        const int tail = dim - lead - 1;
        std::vector<std::int64_t> digits(tail, 0);
        while (true) {
            Vec v = zero_vec(f, dim);
            v[lead] = Scalar::one(f);
            for (int i = 0; i < tail; ++i)
                v[lead + 1 + i] = Scalar::from_int(f, digits[i]);
            if (!visit(v))
                return;
            int pos = tail - 1;
            while (pos >= 0 && digits[pos] == p - 1) {
                digits[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++digits[pos];
        }
    }
}

std::uint64_t projective_count(std::int64_t p, int dim)
{
    std::uint64_t total = 0, power = 1;
    for (int i = 0; i < dim; ++i) {
        total += power;
        power *= static_cast<std::uint64_t>(p);
    }
    return total;
}

ModuleSimplicityVerdict is_dg_simple_module(const DGModule& m, std::uint64_t budget)
{
    ModuleSimplicityVerdict out;
    if (m.dim() == 0) {
        out.simple = false;
        out.method = "trivial";
        return out;
    }
    const Field& f = m.field();
    if (f.is_prime_field()) {
        out.method = "enumeration";
        bool done = false;
        for (int deg : m.space().support()) {
            if (done)
                break;
            for_each_projective_rep(f, m.space().dim(deg), [&](const Vec& rep) {
                if (++out.closures > budget)
                    throw BudgetExceeded("is_dg_simple_module: enumeration budget exhausted");
                GradedSubspace c = submodule_closure(m, {m.embed_component(deg, rep)});
                if (c.total_dim() < static_cast<int>(m.dim())) {
                    out.simple = false;
                    out.witness_degree = deg;
                    out.witness_component = rep;
                    out.witness = c;
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

    // over the rationals: the acyclic reduction when ker(delta) is a line
    const DGAlgebra& a = m.algebra();
    auto wit = solve_affine(a.differential_map(), 0, a.component(a.unit(), 0));
    if (wit.has_value()) {
        ZFunctorResult z = z_functor(m);
        const int zdim = z.module.space().total_dim();
        if (zdim == 1) {
            out.simple = true;
            out.method = "acyclic_reduction";
            return out;
        }
        if (zdim == 0) {
            out.simple = false;
            out.method = "acyclic_reduction";
            return out;
        }
        throw UnsupportedField(
            "is_dg_simple_module over Q: ker(delta) has dimension > 1; use the graded "
            "reduction over a prime field or certificate checking (verify_proper_submodule)");
    }
    throw UnsupportedField(
        "is_dg_simple_module over Q: enumeration impossible; supply a claimed proper "
        "submodule for certificate checking (verify_proper_submodule)");
}

Report verify_proper_submodule(const DGModule& m, const std::vector<Vec>& generators)
{
    Report rep("verify_proper_submodule");
    rep.inputs["module"] = m.label();
    GradedSubspace c = submodule_closure(m, generators);
    if (c.total_dim() == 0) {
        rep.fail("generators_span_zero");
        return rep;
    }
    if (!is_dg_submodule(m, c))
        throw std::logic_error("verify_proper_submodule: closure is not closed");
    if (c.total_dim() == static_cast<int>(m.dim())) {
        rep.verdict = "not_proper";
        rep.note("the generators generate the whole module");
        return rep;
    }
    rep.verdict = "proper_submodule_certified";
    rep.certificates["dims"] = c.dims().to_string();
    return rep;
}

} // namespace dgk
