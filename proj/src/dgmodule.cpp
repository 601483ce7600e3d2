#include "dgkernel/dgmodule.hpp"

#include <sstream>

namespace dgk {

DGModule::DGModule(DGAlgebra algebra, std::vector<BasisVector> basis,
                   std::vector<std::vector<Vec>> action, std::vector<Vec> delta, std::string label)
    : algebra_(std::move(algebra)), basis_(std::move(basis)), action_(std::move(action)),
      delta_(std::move(delta)), label_(std::move(label))
{
    const std::size_t n = basis_.size();
    if (action_.size() != algebra_.dim() || delta_.size() != n)
        throw std::invalid_argument("DGModule: table sizes disagree");
    for (const auto& row : action_) {
        if (row.size() != n)
            throw std::invalid_argument("DGModule: action table shape mismatch");
        for (const auto& v : row)
            if (v.size() != n)
                throw std::invalid_argument("DGModule: action vector length mismatch");
    }
    for (const auto& v : delta_)
        if (v.size() != n)
            throw std::invalid_argument("DGModule: delta vector length mismatch");
    build_index();
}

void DGModule::build_index()
{
    std::map<int, int> dims;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        by_degree_[basis_[i].degree].push_back(i);
        ++dims[basis_[i].degree];
    }
    space_ = GradedSpace(dims);
}

const std::vector<std::size_t>& DGModule::indices_of_degree(int degree) const
{
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? empty : it->second;
}

Vec DGModule::basis_element(std::size_t m) const
{
    Vec v = zero();
    v[m] = Scalar::one(field());
    return v;
}

Vec DGModule::act(const Vec& a_coords, const Vec& m_coords) const
{
    if (a_coords.size() != algebra_.dim() || m_coords.size() != dim())
        throw std::invalid_argument("DGModule::act: coordinate length mismatch");
    Vec r = zero();
    for (std::size_t i = 0; i < algebra_.dim(); ++i) {
        if (a_coords[i].is_zero())
            continue;
        for (std::size_t m = 0; m < dim(); ++m) {
            if (m_coords[m].is_zero())
                continue;
            const Scalar c = a_coords[i] * m_coords[m];
            const Vec& t = action_[i][m];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!t[k].is_zero())
                    r[k] += c * t[k];
        }
    }
    return r;
}

Vec DGModule::delta(const Vec& m_coords) const
{
    Vec r = zero();
    for (std::size_t m = 0; m < dim(); ++m)
        if (!m_coords[m].is_zero())
            for (std::size_t k = 0; k < dim(); ++k)
                if (!delta_[m][k].is_zero())
                    r[k] += m_coords[m] * delta_[m][k];
    return r;
}

Vec DGModule::component(const Vec& global, int degree) const
{
    const auto& idx = indices_of_degree(degree);
    Vec r;
    r.reserve(idx.size());
    for (std::size_t g : idx)
        r.push_back(global[g]);
    return r;
}

Vec DGModule::embed_component(int degree, const Vec& comp) const
{
    const auto& idx = indices_of_degree(degree);
    if (comp.size() != idx.size())
        throw std::invalid_argument("DGModule::embed_component: length mismatch");
    Vec r = zero();
    for (std::size_t p = 0; p < idx.size(); ++p)
        r[idx[p]] = comp[p];
    return r;
}

GradedVec DGModule::decompose(const Vec& global) const
{
    GradedVec out;
    for (int d : space_.support()) {
        Vec c = component(global, d);
        if (!is_zero_vec(c))
            out[d] = std::move(c);
    }
    return out;
}

std::optional<int> DGModule::homogeneous_degree(const Vec& v) const
{
    GradedVec parts = decompose(v);
    if (parts.size() != 1)
        return std::nullopt;
    return parts.begin()->first;
}

GradedMap DGModule::delta_map() const
{
    GradedMap d(field(), space_, space_, 1);
    for (int deg : space_.support()) {
        Matrix& b = d.block(deg);
        const auto& cols = indices_of_degree(deg);
        const auto& rows = indices_of_degree(deg + 1);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                b.at(r, c) = delta_[cols[c]][rows[r]];
    }
    return d;
}

GradedMap DGModule::action_map(const Vec& a, int a_degree) const
{
    GradedMap m(field(), space_, space_, a_degree);
    for (int deg : space_.support()) {
        Matrix& b = m.block(deg);
        const auto& cols = indices_of_degree(deg);
        const auto& rows = indices_of_degree(deg + a_degree);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Vec img = act(a, basis_element(cols[c]));
            for (std::size_t r = 0; r < rows.size(); ++r)
                b.at(r, c) = img[rows[r]];
        }
    }
    return m;
}

std::string DGModule::element_to_string(const Vec& v) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero())
            continue;
        os << (first ? "" : " + ") << v[i].to_string() << "*" << basis_[i].name;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

bool DGModule::operator==(const DGModule& o) const
{
    return algebra_ == o.algebra_ && basis_ == o.basis_ && action_ == o.action_ &&
           delta_ == o.delta_;
}

Report validate_module(const DGModule& m)
{
    Report rep("validate_module");
    rep.inputs["module"] = m.label();
    Json failures = Json::array();
    auto record = [&](const std::string& axiom, const Json& witness) {
        failures.push_back(Json{{"axiom", axiom}, {"witness", witness}});
    };
    const DGAlgebra& a = m.algebra();

    // action degree bookkeeping
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t mm = 0; mm < m.dim(); ++mm) {
            const int want = a.degree_of(i) + m.degree_of(mm);
            const Vec& t = m.action_entry(i, mm);
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (!t[k].is_zero() && m.degree_of(k) != want) {
                    record("action_degree", Json{{"i", i}, {"m", mm}});
                    break;
                }
        }

    // unit acts as the identity
    for (std::size_t mm = 0; mm < m.dim(); ++mm)
        if (m.act(a.unit(), m.basis_element(mm)) != m.basis_element(mm))
            record("unit_action", Json{{"m", mm}});

    // (ab) m = a (b m) on all basis triples
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t mm = 0; mm < m.dim(); ++mm) {
                Vec lhs = m.act(a.mul_entry(i, j), m.basis_element(mm));
                Vec rhs = m.act(a.basis_element(i), m.act(a.basis_element(j), m.basis_element(mm)));
                if (lhs != rhs)
                    record("action_associativity", Json{{"i", i}, {"j", j}, {"m", mm}});
            }

    // delta raises degree by one
    for (std::size_t mm = 0; mm < m.dim(); ++mm) {
        const Vec& dm = m.delta_entry(mm);
        for (std::size_t k = 0; k < m.dim(); ++k)
            if (!dm[k].is_zero() && m.degree_of(k) != m.degree_of(mm) + 1) {
                record("delta_shift_plus_one", Json{{"m", mm}});
                break;
            }
    }

    // delta^2 = 0
    for (std::size_t mm = 0; mm < m.dim(); ++mm)
        if (!is_zero_vec(m.delta(m.delta_entry(mm))))
            record("delta_squared_zero", Json{{"m", mm}});

    // module Leibniz: delta(a m) = d(a) m + (-1)^{|a|} a delta(m)
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t mm = 0; mm < m.dim(); ++mm) {
            Vec lhs = m.delta(m.action_entry(i, mm));
            Vec rhs = m.act(a.diff_entry(i), m.basis_element(mm));
            Vec second = m.act(a.basis_element(i), m.delta_entry(mm));
            if (a.degree_of(i) % 2 != 0)
                second = scale_vec(-Scalar::one(m.field()), second);
            rhs = add_vec(rhs, second);
            if (lhs != rhs)
                record("module_leibniz", Json{{"a", i}, {"m", mm}});
        }

    rep.certificates["failures"] = failures;
    rep.verdict = failures.empty() ? "valid" : "invalid";
    return rep;
}

DGModule regular_module(const DGAlgebra& a)
{
    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(a.dim()));
    std::vector<Vec> delta;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        delta.push_back(a.diff_entry(i));
        for (std::size_t j = 0; j < a.dim(); ++j)
            action[i][j] = a.mul_entry(i, j);
    }
    return DGModule(a, a.basis(), std::move(action), std::move(delta),
                    a.label().empty() ? "regular" : "regular(" + a.label() + ")");
}

DGModule shift_module(const DGModule& m, int k)
{
    const DGAlgebra& a = m.algebra();
    const Field& f = m.field();
    std::vector<BasisVector> basis = m.basis();
    for (auto& b : basis)
        b.degree -= k;
    const Scalar delta_sign = k % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    std::vector<Vec> delta;
    for (std::size_t mm = 0; mm < m.dim(); ++mm)
        delta.push_back(scale_vec(delta_sign, m.delta_entry(mm)));
    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(m.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const bool twist = (k % 2 != 0) && (a.degree_of(i) % 2 != 0);
        for (std::size_t mm = 0; mm < m.dim(); ++mm)
            action[i][mm] =
                twist ? scale_vec(-Scalar::one(f), m.action_entry(i, mm)) : m.action_entry(i, mm);
    }
    std::string label = m.label().empty() ? "" : m.label() + "[" + std::to_string(k) + "]";
    return DGModule(a, std::move(basis), std::move(action), std::move(delta), label);
}

DGModule direct_sum_module(const DGModule& x, const DGModule& y)
{
    if (!(x.algebra() == y.algebra()))
        throw std::invalid_argument("direct_sum_module: algebra mismatch");
    const DGAlgebra& a = x.algebra();
    const Field& f = x.field();
    const std::size_t nx = x.dim(), ny = y.dim(), n = nx + ny;
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < nx; ++i)
        basis.push_back({"l." + x.basis()[i].name, x.degree_of(i)});
    for (std::size_t i = 0; i < ny; ++i)
        basis.push_back({"r." + y.basis()[i].name, y.degree_of(i)});
    auto embed_x = [&](const Vec& v) {
        Vec r = zero_vec(f, n);
        for (std::size_t i = 0; i < nx; ++i)
            r[i] = v[i];
        return r;
    };
    auto embed_y = [&](const Vec& v) {
        Vec r = zero_vec(f, n);
        for (std::size_t i = 0; i < ny; ++i)
            r[nx + i] = v[i];
        return r;
    };
    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(n));
    std::vector<Vec> delta(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t mm = 0; mm < nx; ++mm)
            action[i][mm] = embed_x(x.action_entry(i, mm));
        for (std::size_t mm = 0; mm < ny; ++mm)
            action[i][nx + mm] = embed_y(y.action_entry(i, mm));
    }
    for (std::size_t mm = 0; mm < nx; ++mm)
        delta[mm] = embed_x(x.delta_entry(mm));
    for (std::size_t mm = 0; mm < ny; ++mm)
        delta[nx + mm] = embed_y(y.delta_entry(mm));
    std::string label;
    if (!x.label().empty() && !y.label().empty())
        label = x.label() + "+" + y.label();
    return DGModule(a, std::move(basis), std::move(action), std::move(delta), label);
}

GradedSubspace submodule_closure(const DGModule& m, const std::vector<Vec>& generators)
{
    const DGAlgebra& a = m.algebra();
    GradedSubspace s(m.field(), m.space());
    std::vector<Vec> queue;
    for (const Vec& g : generators)
        for (const auto& [deg, comp] : m.decompose(g))
            queue.push_back(m.embed_component(deg, comp));
    while (!queue.empty()) {
        Vec v = queue.back();
        queue.pop_back();
        bool grew = false;
        for (const auto& [deg, comp] : m.decompose(v)) {
            if (s.contains(deg, comp))
                continue;
            s = s.with_vector(deg, comp);
            grew = true;
        }
        if (!grew)
            continue;
        queue.push_back(m.delta(v));
        for (std::size_t i = 0; i < a.dim(); ++i)
            queue.push_back(m.act(a.basis_element(i), v));
    }
    // fixpoint sweep: close the canonical basis under action and delta
    bool stable = false;
    while (!stable) {
        stable = true;
        for (int deg : s.support()) {
            const Matrix rows = s.basis(deg);
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                const Vec v = m.embed_component(deg, rows.row(r));
                std::vector<Vec> derived{m.delta(v)};
                for (std::size_t i = 0; i < a.dim(); ++i)
                    derived.push_back(m.act(a.basis_element(i), v));
                for (const Vec& w : derived)
                    for (const auto& [dd, comp] : m.decompose(w))
                        if (!s.contains(dd, comp)) {
                            s = s.with_vector(dd, comp);
                            stable = false;
                        }
            }
        }
    }
    return s;
}

bool is_dg_submodule(const DGModule& m, const GradedSubspace& carrier)
{
    const DGAlgebra& a = m.algebra();
    for (int deg : carrier.support()) {
        const Matrix rows = carrier.basis(deg);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            const Vec v = m.embed_component(deg, rows.row(r));
            for (const auto& [dd, comp] : m.decompose(m.delta(v)))
                if (!carrier.contains(dd, comp))
                    return false;
            for (std::size_t i = 0; i < a.dim(); ++i)
                for (const auto& [dd, comp] : m.decompose(m.act(a.basis_element(i), v)))
                    if (!carrier.contains(dd, comp))
                        return false;
        }
    }
    return true;
}

DGModule module_from_submodule(const DGModule& m, const GradedSubspace& carrier, std::string label)
{
    if (!is_dg_submodule(m, carrier))
        throw std::invalid_argument("module_from_submodule: carrier is not a dg-submodule");
    const Field& f = m.field();
    std::vector<BasisVector> basis;
    std::vector<Vec> basis_global;
    for (int d : carrier.support()) {
        const Matrix rows = carrier.basis(d);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            basis.push_back({"s" + std::to_string(basis.size()), d});
            basis_global.push_back(m.embed_component(d, rows.row(r)));
        }
    }
    const std::size_t n = basis.size();
    auto coords = [&](const Vec& hv) {
        Vec out = zero_vec(f, n);
        for (const auto& [deg, comp] : m.decompose(hv)) {
            auto c = coordinates_in_rows(carrier.basis(deg), comp);
            if (!c)
                throw std::logic_error("module_from_submodule: vector escaped the carrier");
            std::size_t base = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[i].degree == deg)
                    out[i] = (*c)[base++];
        }
        return out;
    };
    const DGAlgebra& a = m.algebra();
    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(n));
    std::vector<Vec> delta;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            action[i][j] = coords(m.act(a.basis_element(i), basis_global[j]));
    for (std::size_t j = 0; j < n; ++j)
        delta.push_back(coords(m.delta(basis_global[j])));
    return DGModule(a, std::move(basis), std::move(action), std::move(delta), std::move(label));
}

DGModule quotient_module(const DGModule& m, const GradedSubspace& carrier, std::string label)
{
    if (!is_dg_submodule(m, carrier))
        throw std::invalid_argument("quotient_module: carrier is not a dg-submodule");
    const Field& f = m.field();
    Quotient q = quotient(GradedSubspace::full(f, m.space()), carrier);
    std::vector<BasisVector> basis;
    std::vector<Vec> reps;
    for (int d : q.space.support())
        for (int r = 0; r < q.space.dim(d); ++r) {
            basis.push_back({"q" + std::to_string(basis.size()), d});
            Vec qv = zero_vec(f, q.space.dim(d));
            qv[r] = Scalar::one(f);
            reps.push_back(m.embed_component(d, q.lift(d, qv)));
        }
    const std::size_t n = basis.size();
    auto project = [&](const Vec& hv) {
        Vec out = zero_vec(f, n);
        for (const auto& [deg, comp] : m.decompose(hv)) {
            Vec qc = q.projection.apply(deg, comp);
            std::size_t base = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[i].degree == deg)
                    out[i] = qc[base++];
        }
        return out;
    };
    const DGAlgebra& a = m.algebra();
    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(n));
    std::vector<Vec> delta;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            action[i][j] = project(m.act(a.basis_element(i), reps[j]));
    for (std::size_t j = 0; j < n; ++j)
        delta.push_back(project(m.delta(reps[j])));
    return DGModule(a, std::move(basis), std::move(action), std::move(delta), std::move(label));
}

AnnihilatorResult annihilator(const DGModule& m)
{
    const DGAlgebra& a = m.algebra();
    const Field& f = m.field();
    std::map<int, std::vector<Vec>> ann_vecs;
    for (int deg : a.space().support()) {
        const auto& idx = a.indices_of_degree(deg);
        // x . m_j = 0 for all module basis m_j, x supported in A_deg
        std::vector<Vec> rows;
        const std::size_t cols = idx.size();
        Matrix stacked(f, m.dim() * m.dim(), cols);
        std::size_t row0 = 0;
        for (std::size_t mm = 0; mm < m.dim(); ++mm) {
            for (std::size_t c = 0; c < cols; ++c) {
                const Vec img = m.action_entry(idx[c], mm);
                for (std::size_t k = 0; k < m.dim(); ++k)
                    stacked.at(row0 + k, c) = img[k];
            }
            row0 += m.dim();
        }
        for (auto& v : nullspace(stacked))
            ann_vecs[deg].push_back(std::move(v));
    }
    AnnihilatorResult out;
    out.ideal = GradedSubspace::span(f, a.space(), ann_vecs);
    out.certification = Report("annihilator");
    out.certification.inputs["module"] = m.label();
    // certify: closed under d and two-sided multiplication
    for (int deg : out.ideal.support()) {
        const Matrix rows = out.ideal.basis(deg);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            const Vec v = a.embed_component(deg, rows.row(r));
            for (const auto& [dd, comp] : a.decompose(a.differentiate(v)))
                if (!out.ideal.contains(dd, comp))
                    throw std::logic_error("annihilator: not closed under d");
            for (std::size_t j = 0; j < a.dim(); ++j) {
                for (const Vec& prod : {a.multiply(a.basis_element(j), v),
                                        a.multiply(v, a.basis_element(j))})
                    for (const auto& [dd, comp] : a.decompose(prod))
                        if (!out.ideal.contains(dd, comp))
                            throw std::logic_error("annihilator: not a twosided ideal");
            }
        }
    }
    out.certification.verdict = out.ideal.total_dim() == 0 ? "zero" : "nonzero";
    out.certification.certificates["dims"] = out.ideal.dims().to_string();
    out.certification.note("certified d-closed and twosided");
    return out;
}

bool is_module_isomorphism(const DGModule& m, const DGModule& n, const std::vector<Vec>& images)
{
    if (!(m.algebra() == n.algebra()) || images.size() != m.dim() || m.dim() != n.dim())
        return false;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        auto hd = n.homogeneous_degree(images[i]);
        if (!hd || *hd != m.degree_of(i))
            return false;
    }
    Matrix mat(m.field(), m.dim(), n.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t c = 0; c < n.dim(); ++c)
            mat.at(i, c) = images[i][c];
    if (rank(mat) != m.dim())
        return false;
    auto phi = [&](const Vec& v) {
        Vec r = n.zero();
        for (std::size_t i = 0; i < m.dim(); ++i)
            if (!v[i].is_zero())
                r = add_vec(r, scale_vec(v[i], images[i]));
        return r;
    };
    const DGAlgebra& a = m.algebra();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (phi(m.delta_entry(i)) != n.delta(images[i]))
            return false;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (phi(m.action_entry(j, i)) != n.act(a.basis_element(j), images[i]))
                return false;
    }
    return true;
}

ZFunctorResult z_functor(const DGModule& m)
{
    ZFunctorResult out;
    out.cycles = cycles_algebra(m.algebra());
    KernelImage ki = kernel_and_image(m.delta_map());
    out.kernel_in_m = ki.kernel;
    const Field& f = m.field();
    std::vector<BasisVector> basis;
    for (int d : ki.kernel.support()) {
        const Matrix rows = ki.kernel.basis(d);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            basis.push_back({"n" + std::to_string(basis.size()), d});
            out.basis_in_m.push_back(m.embed_component(d, rows.row(r)));
        }
    }
    const std::size_t n = basis.size();
    auto coords = [&](const Vec& hv) {
        Vec outv = zero_vec(f, n);
        for (const auto& [deg, comp] : m.decompose(hv)) {
            auto c = coordinates_in_rows(ki.kernel.basis(deg), comp);
            if (!c)
                throw std::logic_error("z_functor: a cycle action left the kernel");
            std::size_t base = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[i].degree == deg)
                    outv[i] = (*c)[base++];
        }
        return outv;
    };
    const std::size_t cdim = out.cycles.algebra.dim();
    std::vector<std::vector<Vec>> action(cdim, std::vector<Vec>(n));
    for (std::size_t i = 0; i < cdim; ++i)
        for (std::size_t j = 0; j < n; ++j)
            action[i][j] = coords(m.act(out.cycles.basis_global[i], out.basis_in_m[j]));
    std::vector<Vec> delta(n, zero_vec(f, n));
    out.module = DGModule(out.cycles.algebra, std::move(basis), std::move(action), std::move(delta),
                          m.label().empty() ? "Z" : "Z(" + m.label() + ")");
    return out;
}

InduceResult induce_functor(const DGAlgebra& a, const Vec& y, const DGModule& n)
{
    const Field& f = a.field();
    if (a.differentiate(y) != a.unit())
        throw std::invalid_argument("induce_functor: y is not an acyclicity witness");
    Subalgebra cyc = cycles_algebra(a);
    if (!(n.algebra() == cyc.algebra))
        throw std::invalid_argument("induce_functor: N is not a module over cycles(A)");
    const std::size_t cdim = cyc.algebra.dim();
    // decomposition A = ker(d) + y ker(d): columns are the cycle basis and y * cycles
    Matrix dec(f, a.dim(), 2 * cdim);
    for (std::size_t i = 0; i < cdim; ++i) {
        const Vec& c = cyc.basis_global[i];
        const Vec yc = a.multiply(y, c);
        for (std::size_t r = 0; r < a.dim(); ++r) {
            dec.at(r, i) = c[r];
            dec.at(r, cdim + i) = yc[r];
        }
    }
    if (rank(dec) != a.dim())
        throw std::logic_error("induce_functor: A != ker(d) + y ker(d)");
    auto split = [&](const Vec& v) -> std::pair<Vec, Vec> {
        auto s = solve(dec, v);
        if (!s)
            throw std::logic_error("induce_functor: decomposition solve failed");
        Vec c0(s->particular.begin(), s->particular.begin() + cdim);
        Vec c1(s->particular.begin() + cdim, s->particular.end());
        return {c0, c1};
    };

    const std::size_t nd = n.dim();
    const std::size_t total = 2 * nd;
    auto y_deg = a.homogeneous_degree(y);
    if (!y_deg)
        throw std::invalid_argument("induce_functor: witness must be homogeneous");
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < nd; ++i)
        basis.push_back({"u." + n.basis()[i].name, n.degree_of(i)});
    for (std::size_t i = 0; i < nd; ++i)
        basis.push_back({"y." + n.basis()[i].name, n.degree_of(i) + *y_deg});

    auto embed = [&](const Vec& unit_part, const Vec& y_part) {
        Vec r = zero_vec(f, total);
        for (std::size_t i = 0; i < nd; ++i) {
            r[i] = unit_part[i];
            r[nd + i] = y_part[i];
        }
        return r;
    };

    std::vector<std::vector<Vec>> action(a.dim(), std::vector<Vec>(total));
    for (std::size_t e = 0; e < a.dim(); ++e) {
        const Vec ev = a.basis_element(e);
        auto [c0, c1] = split(ev);
        auto [d0, d1] = split(a.multiply(ev, y));
        for (std::size_t i = 0; i < nd; ++i) {
            const Vec ni = n.basis_element(i);
            // e . (1 (x) n) = c0 (x) n + y (x) c1 n
            action[e][i] = embed(n.act(c0, ni), n.act(c1, ni));
            // e . (y (x) n) = d0 (x) n + y (x) d1 n   where e y = d0 + y d1
            action[e][nd + i] = embed(n.act(d0, ni), n.act(d1, ni));
        }
    }
    std::vector<Vec> delta(total, zero_vec(f, total));
    for (std::size_t i = 0; i < nd; ++i) {
        // delta(y (x) n) = d(y) (x) n = 1 (x) n
        Vec v = zero_vec(f, total);
        v[i] = Scalar::one(f);
        delta[nd + i] = v;
    }

    InduceResult out;
    out.module = DGModule(a, std::move(basis), std::move(action), std::move(delta),
                          n.label().empty() ? "induced" : "A(x)" + n.label());

    // round trip: ker(delta) = 1 (x) N, naturally isomorphic to N
    out.round_trip = Report("induce_round_trip");
    ZFunctorResult z = z_functor(out.module);
    std::vector<Vec> forward; // N -> Z(induce(N)) on basis
    const std::size_t zn = z.module.dim();
    for (std::size_t i = 0; i < nd; ++i) {
        Vec unit_image = zero_vec(f, total);
        unit_image[i] = Scalar::one(f);
        out.unit_images.push_back(unit_image);
        Vec coords = zero_vec(f, zn);
        for (const auto& [deg, comp] : out.module.decompose(unit_image)) {
            auto c = coordinates_in_rows(z.kernel_in_m.basis(deg), comp);
            if (!c)
                throw std::logic_error("induce_functor: unit image is not a cycle");
            std::size_t base = 0;
            for (std::size_t k = 0; k < zn; ++k)
                if (z.module.degree_of(k) == deg)
                    coords[k] = (*c)[base++];
        }
        forward.push_back(coords);
    }
    if (!is_module_isomorphism(n, z.module, forward))
        throw TheoremViolation("induce_functor: z(induce(N)) is not isomorphic to N");
    // inverse images, verified as a module isomorphism the other way
    Matrix fm(f, nd, zn);
    for (std::size_t i = 0; i < nd; ++i)
        for (std::size_t c = 0; c < zn; ++c)
            fm.at(i, c) = forward[i][c];
    std::vector<Vec> backward;
    for (std::size_t k = 0; k < zn; ++k) {
        Vec unitk = zero_vec(f, zn);
        unitk[k] = Scalar::one(f);
        auto c = coordinates_in_rows(fm, unitk);
        if (!c)
            throw std::logic_error("induce_functor: forward map is not invertible");
        backward.push_back(*c);
    }
    if (!is_module_isomorphism(z.module, n, backward))
        throw TheoremViolation("induce_functor: inverse map fails verification");
    out.round_trip.verdict = "isomorphic";
    out.round_trip.note("mutually inverse graded module maps verified on bases");
    return out;
}

} // namespace dgk
