#include "dgkernel/catalog.hpp"

namespace dgk {
namespace catalog {

namespace {

struct Builder {
    Field f;
    std::vector<BasisVector> basis;
    std::vector<std::vector<Vec>> mul;
    std::vector<Vec> diff;

    explicit Builder(const Field& field, std::vector<BasisVector> b) : f(field), basis(std::move(b))
    {
        const std::size_t n = basis.size();
        mul.assign(n, std::vector<Vec>(n, zero_vec(f, n)));
        diff.assign(n, zero_vec(f, n));
    }

    Vec unit_vec(std::size_t i) const
    {
        Vec v = zero_vec(f, basis.size());
        v[i] = Scalar::one(f);
        return v;
    }

    void set_mul(std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, long long>> terms)
    {
        Vec v = zero_vec(f, basis.size());
        for (auto [k, c] : terms)
            v[k] = Scalar::from_int(f, c);
        mul[i][j] = std::move(v);
    }

    void set_diff(std::size_t i, std::initializer_list<std::pair<std::size_t, long long>> terms)
    {
        Vec v = zero_vec(f, basis.size());
        for (auto [k, c] : terms)
            v[k] = Scalar::from_int(f, c);
        diff[i] = std::move(v);
    }

    DGAlgebra build(std::size_t unit_index, std::string label)
    {
        return DGAlgebra(f, basis, unit_vec(unit_index), mul, diff, std::move(label));
    }
};

} // namespace

DGAlgebra q0(const Field& f)
{
    Builder b(f, {{"one", 0}});
    b.set_mul(0, 0, {{0, 1}});
    return b.build(0, "Q0");
}

DGAlgebra dual_numbers(const Field& f)
{
    Builder b(f, {{"one", 0}, {"eps", -1}});
    b.set_mul(0, 0, {{0, 1}});
    b.set_mul(0, 1, {{1, 1}});
    b.set_mul(1, 0, {{1, 1}});
    b.set_mul(1, 1, {});
    b.set_diff(1, {{0, 1}});
    return b.build(0, "DUAL");
}

DGAlgebra m2(const Field& f)
{
    // matrix units acting on a complex K -> K (identity differential),
    // composition as multiplication: Eab * Ecd = [b == c] Ead
    Builder b(f, {{"E00", 0}, {"E11", 0}, {"E01", -1}, {"E10", 1}});
    const std::size_t E00 = 0, E11 = 1, E01 = 2, E10 = 3;
    b.set_mul(E00, E00, {{E00, 1}});
    b.set_mul(E00, E01, {{E01, 1}});
    b.set_mul(E01, E10, {{E00, 1}});
    b.set_mul(E01, E11, {{E01, 1}});
    b.set_mul(E10, E00, {{E10, 1}});
    b.set_mul(E10, E01, {{E11, 1}});
    b.set_mul(E11, E10, {{E10, 1}});
    b.set_mul(E11, E11, {{E11, 1}});
    b.set_diff(E00, {{E10, 1}});
    b.set_diff(E11, {{E10, -1}});
    b.set_diff(E01, {{E00, 1}, {E11, 1}});

    // unit = E00 + E11
    Vec unit = zero_vec(f, 4);
    unit[E00] = Scalar::one(f);
    unit[E11] = Scalar::one(f);
    return DGAlgebra(f, b.basis, unit, b.mul, b.diff, "M2");
}

DGAlgebra dd(const Field& f)
{
    DGAlgebra t = tensor_over_base(dual_numbers(f), dual_numbers(f));
    t.set_label("DD");
    return t;
}

TwistedLaurentDGA lau(const Field& f)
{
    DGAlgebra r0 = q0(f);
    Matrix sigma = Matrix::identity(f, 1);
    LaurentElement dx = LaurentElement::term(0, r0.unit()); // d(X) = 1, deg X = -1
    return TwistedLaurentDGA(r0, sigma, -1, dx, {}, "LAU");
}

TwistedLaurentDGA lau2(const Field& f)
{
    DGAlgebra r0 = q0(f);
    Matrix sigma = Matrix::identity(f, 1);
    return TwistedLaurentDGA(r0, sigma, 2, LaurentElement(), {}, "LAU2");
}

const std::vector<CatalogEntry>& entries()
{
    static const std::vector<CatalogEntry> list = {
        {"Q0", "algebra", "base field in degree 0, zero differential",
         "not acyclic; H = Q0; not semisimple as a dg-module category"},
        {"DUAL", "algebra", "dual numbers with d(eps) = 1; smallest acyclic dg-division algebra",
         "dg-division; acyclic with witness eps"},
        {"M2", "algebra", "endomorphism dg-algebra of a contractible two-term complex",
         "dg-simple but not dg-division; acyclic with witness E01"},
        {"DD", "algebra", "DUAL (x) DUAL over the base field",
         "not dg-simple (witness ideal span{1(x)eps - eps(x)1, eps(x)eps}); not dg-prime"},
        {"LAU", "laurent", "Laurent ring K[X,X^-1] with d(X^{2n+1}) = X^{2n}",
         "dg-division and acyclic"},
        {"LAU2", "laurent", "Laurent ring K[T,T^-1], deg T = 2, zero differential",
         "dg-division with d = 0; twisted-Laurent cycles with sigma = id"},
    };
    return list;
}

bool has_algebra(const std::string& name)
{
    return name == "Q0" || name == "DUAL" || name == "M2" || name == "DD";
}

bool has_laurent(const std::string& name)
{
    return name == "LAU" || name == "LAU2";
}

DGAlgebra make_algebra(const std::string& name, const Field& f)
{
    if (name == "Q0")
        return q0(f);
    if (name == "DUAL")
        return dual_numbers(f);
    if (name == "M2")
        return m2(f);
    if (name == "DD")
        return dd(f);
    throw std::invalid_argument("catalog: unknown algebra " + name);
}

TwistedLaurentDGA make_laurent(const std::string& name, const Field& f)
{
    if (name == "LAU")
        return lau(f);
    if (name == "LAU2")
        return lau2(f);
    throw std::invalid_argument("catalog: unknown Laurent algebra " + name);
}

} // namespace catalog
} // namespace dgk
