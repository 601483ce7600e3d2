#include "dgkernel/dga.hpp"

#include <sstream>

namespace dgk {

std::string side_name(Side s)
{
    switch (s) {
    case Side::left:
        return "left";
    case Side::right:
        return "right";
    default:
        return "twosided";
    }
}

DGAlgebra::DGAlgebra(Field field, std::vector<BasisVector> basis, Vec unit,
                     std::vector<std::vector<Vec>> mul, std::vector<Vec> diff, std::string label)
    : field_(field), basis_(std::move(basis)), unit_(std::move(unit)), mul_(std::move(mul)),
      diff_(std::move(diff)), label_(std::move(label))
{
    const std::size_t n = basis_.size();
    if (unit_.size() != n || mul_.size() != n || diff_.size() != n)
        throw std::invalid_argument("DGAlgebra: table sizes disagree with the basis");
    for (const auto& row : mul_) {
        if (row.size() != n)
            throw std::invalid_argument("DGAlgebra: multiplication table is not square");
        for (const auto& v : row)
            if (v.size() != n)
                throw std::invalid_argument("DGAlgebra: structure constant vector length mismatch");
    }
    for (const auto& v : diff_)
        if (v.size() != n)
            throw std::invalid_argument("DGAlgebra: differential vector length mismatch");
    build_index();
}

void DGAlgebra::build_index()
{
    std::map<int, int> dims;
    pos_in_degree_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        pos_in_degree_[i] = static_cast<std::size_t>(dims[basis_[i].degree]);
        by_degree_[basis_[i].degree].push_back(i);
        ++dims[basis_[i].degree];
    }
    space_ = GradedSpace(dims);
}

const std::vector<std::size_t>& DGAlgebra::indices_of_degree(int degree) const
{
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? empty : it->second;
}

std::size_t DGAlgebra::global_index(int degree, std::size_t pos) const
{
    return indices_of_degree(degree).at(pos);
}

std::optional<std::size_t> DGAlgebra::index_of_name(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return i;
    return std::nullopt;
}

Vec DGAlgebra::basis_element(std::size_t i) const
{
    Vec v = zero();
    v[i] = Scalar::one(field_);
    return v;
}

Vec DGAlgebra::scalar_multiple_of_unit(const Scalar& c) const
{
    return scale_vec(c, unit_);
}

Vec DGAlgebra::multiply(const Vec& a, const Vec& b) const
{
    if (a.size() != dim() || b.size() != dim())
        throw std::invalid_argument("DGAlgebra::multiply: coordinate length mismatch");
    Vec r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero())
                continue;
            const Scalar c = a[i] * b[j];
            const Vec& sc = mul_[i][j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (!sc[k].is_zero())
                    r[k] += c * sc[k];
        }
    }
    return r;
}

Vec DGAlgebra::differentiate(const Vec& a) const
{
    if (a.size() != dim())
        throw std::invalid_argument("DGAlgebra::differentiate: coordinate length mismatch");
    Vec r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t k = 0; k < dim(); ++k)
            if (!diff_[i][k].is_zero())
                r[k] += a[i] * diff_[i][k];
    }
    return r;
}

Vec DGAlgebra::component(const Vec& global, int degree) const
{
    const auto& idx = indices_of_degree(degree);
    Vec r;
    r.reserve(idx.size());
    for (std::size_t g : idx)
        r.push_back(global[g]);
    return r;
}

Vec DGAlgebra::embed_component(int degree, const Vec& comp) const
{
    const auto& idx = indices_of_degree(degree);
    if (comp.size() != idx.size())
        throw std::invalid_argument("DGAlgebra::embed_component: length mismatch");
    Vec r = zero();
    for (std::size_t p = 0; p < idx.size(); ++p)
        r[idx[p]] = comp[p];
    return r;
}

GradedVec DGAlgebra::decompose(const Vec& global) const
{
    GradedVec out;
    for (int d : space_.support()) {
        Vec c = component(global, d);
        if (!is_zero_vec(c))
            out[d] = std::move(c);
    }
    return out;
}

Vec DGAlgebra::assemble(const GradedVec& parts) const
{
    Vec r = zero();
    for (const auto& [d, c] : parts) {
        Vec e = embed_component(d, c);
        r = add_vec(r, e);
    }
    return r;
}

std::optional<int> DGAlgebra::homogeneous_degree(const Vec& v) const
{
    GradedVec parts = decompose(v);
    if (parts.size() != 1)
        return std::nullopt;
    return parts.begin()->first;
}

GradedMap DGAlgebra::differential_map() const
{
    GradedMap d(field_, space_, space_, 1);
    for (int deg : space_.support()) {
        Matrix& b = d.block(deg);
        const auto& cols = indices_of_degree(deg);
        const auto& rows = indices_of_degree(deg + 1);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                b.at(r, c) = diff_[cols[c]][rows[r]];
    }
    return d;
}

GradedMap DGAlgebra::mult_map(const Vec& element, int element_degree, Side side) const
{
    if (side == Side::twosided)
        throw std::invalid_argument("mult_map: pick a side");
    GradedMap m(field_, space_, space_, element_degree);
    for (int deg : space_.support()) {
        Matrix& b = m.block(deg);
        const auto& cols = indices_of_degree(deg);
        const auto& rows = indices_of_degree(deg + element_degree);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Vec prod = side == Side::left ? multiply(element, basis_element(cols[c]))
                                          : multiply(basis_element(cols[c]), element);
            for (std::size_t r = 0; r < rows.size(); ++r)
                b.at(r, c) = prod[rows[r]];
        }
    }
    return m;
}

std::string DGAlgebra::element_to_string(const Vec& v) const
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

bool DGAlgebra::operator==(const DGAlgebra& o) const
{
    return field_ == o.field_ && basis_ == o.basis_ && unit_ == o.unit_ && mul_ == o.mul_ &&
           diff_ == o.diff_;
}

namespace {

Scalar koszul(const Field& f, int deg1, int deg2)
{
    const bool neg = (deg1 % 2 != 0) && (deg2 % 2 != 0);
    return neg ? -Scalar::one(f) : Scalar::one(f);
}

} // namespace

Report validate_dga(const DGAlgebra& a)
{
    Report rep("validate_dga");
    rep.inputs["algebra"] = a.label();
    Json failures = Json::array();
    const std::size_t n = a.dim();
    const Field& f = a.field();

    auto record = [&](const std::string& axiom, const Json& witness) {
        Json e;
        e["axiom"] = axiom;
        e["witness"] = witness;
        failures.push_back(e);
    };

    // degree additivity of the structure constants
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int want = a.degree_of(i) + a.degree_of(j);
            const Vec& c = a.mul_entry(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!c[k].is_zero() && a.degree_of(k) != want) {
                    record("degree_additivity", Json{{"i", i}, {"j", j}, {"k", k}});
                    goto next_pair;
                }
        next_pair:;
        }

    // the unit is concentrated in degree 0
    {
        auto hd = a.homogeneous_degree(a.unit());
        if (!hd || *hd != 0 || is_zero_vec(a.unit()))
            record("unit_degree_zero", Json::object());
    }

    // unit axioms
    for (std::size_t i = 0; i < n; ++i) {
        if (a.multiply(a.unit(), a.basis_element(i)) != a.basis_element(i))
            record("left_unit", Json{{"i", i}});
        if (a.multiply(a.basis_element(i), a.unit()) != a.basis_element(i))
            record("right_unit", Json{{"i", i}});
    }

    // associativity on all basis triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.multiply(a.mul_entry(i, j), a.basis_element(k));
                Vec rhs = a.multiply(a.basis_element(i), a.mul_entry(j, k));
                if (lhs != rhs)
                    record("associativity", Json{{"i", i}, {"j", j}, {"k", k}});
            }

    // differential raises degree by exactly 1
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& di = a.diff_entry(i);
        if (is_zero_vec(di))
            continue;
        for (std::size_t k = 0; k < n; ++k)
            if (!di[k].is_zero() && a.degree_of(k) != a.degree_of(i) + 1) {
                record("diff_shift_plus_one", Json{{"i", i}, {"k", k}});
                break;
            }
    }

    // d(1) = 0 (derivable, but checked explicitly for better diagnostics)
    if (!is_zero_vec(a.differentiate(a.unit())))
        record("diff_of_unit", Json::object());

    // d^2 = 0
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero_vec(a.differentiate(a.diff_entry(i))))
            record("diff_squared_zero", Json{{"i", i}});

    // Leibniz on all basis pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = a.differentiate(a.mul_entry(i, j));
            Vec rhs = a.multiply(a.diff_entry(i), a.basis_element(j));
            Vec second = a.multiply(a.basis_element(i), a.diff_entry(j));
            if (a.degree_of(i) % 2 != 0)
                second = scale_vec(-Scalar::one(f), second);
            rhs = add_vec(rhs, second);
            if (lhs != rhs)
                record("leibniz", Json{{"i", i}, {"j", j}});
        }

    // graded-commutative algebras in odd characteristic: odd squares vanish
    bool graded_comm = true;
    for (std::size_t i = 0; i < n && graded_comm; ++i)
        for (std::size_t j = 0; j < n && graded_comm; ++j) {
            Vec rhs = scale_vec(koszul(f, a.degree_of(i), a.degree_of(j)), a.mul_entry(j, i));
            if (a.mul_entry(i, j) != rhs)
                graded_comm = false;
        }
    if (graded_comm && f.characteristic() != 2) {
        for (std::size_t i = 0; i < n; ++i)
            if (a.degree_of(i) % 2 != 0 && !is_zero_vec(a.mul_entry(i, i))) {
                record("odd_square_zero", Json{{"i", i}});
                rep.alarm = true; // impossible for a genuinely graded-commutative algebra
            }
        rep.note("graded-commutative: odd-degree squares checked");
    }

    rep.certificates["failures"] = failures;
    rep.verdict = failures.empty() ? "valid" : "invalid";
    return rep;
}

DGAlgebra opposite_algebra(const DGAlgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = scale_vec(koszul(a.field(), a.degree_of(i), a.degree_of(j)),
                                  a.mul_entry(j, i));
    std::vector<Vec> diff;
    for (std::size_t i = 0; i < n; ++i)
        diff.push_back(a.diff_entry(i));
    return DGAlgebra(a.field(), a.basis(), a.unit(), std::move(mul), std::move(diff),
                     a.label().empty() ? "" : a.label() + "_op");
}

Subalgebra subalgebra_from_subspace(const DGAlgebra& host, const GradedSubspace& s,
                                    const std::string& name_prefix)
{
    if (s.ambient() != host.space())
        throw std::invalid_argument("subalgebra_from_subspace: ambient mismatch");
    Subalgebra out;
    out.span = s;
    // basis (degree-ascending), as host vectors
    std::vector<BasisVector> basis;
    for (int d : s.support()) {
        const Matrix b = s.basis(d);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            basis.push_back({name_prefix + std::to_string(basis.size()), d});
            out.basis_global.push_back(host.embed_component(d, b.row(r)));
        }
    }
    const std::size_t m = basis.size();
    // express a homogeneous host vector in the subalgebra basis
    auto coords_in_sub = [&](const Vec& hv, const char* what) -> Vec {
        Vec coords = zero_vec(host.field(), m);
        for (const auto& [deg, comp] : host.decompose(hv)) {
            auto c = coordinates_in_rows(s.basis(deg), comp);
            if (!c)
                throw std::invalid_argument(std::string("subalgebra_from_subspace: not closed under ") +
                                            what);
            std::size_t base = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i].degree == deg)
                    coords[i] = (*c)[base++];
        }
        return coords;
    };

    Vec unit = coords_in_sub(host.unit(), "unit containment");
    std::vector<std::vector<Vec>> mul(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mul[i][j] = coords_in_sub(host.multiply(out.basis_global[i], out.basis_global[j]),
                                      "multiplication");
    std::vector<Vec> diff;
    for (std::size_t i = 0; i < m; ++i)
        diff.push_back(coords_in_sub(host.differentiate(out.basis_global[i]), "differential"));

    out.algebra = DGAlgebra(host.field(), std::move(basis), std::move(unit), std::move(mul),
                            std::move(diff));
    // inclusion as a graded map
    out.embedding = GradedMap(host.field(), out.algebra.space(), host.space(), 0);
    for (int d : out.algebra.space().support()) {
        Matrix& blk = out.embedding.block(d);
        const Matrix rows = s.basis(d);
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t c = 0; c < rows.cols(); ++c)
                blk.at(c, r) = rows.at(r, c);
    }
    return out;
}

Subalgebra cycles_algebra(const DGAlgebra& a)
{
    KernelImage ki = kernel_and_image(a.differential_map());
    Subalgebra sub = subalgebra_from_subspace(a, ki.kernel, "c");
    // the induced differential restricts to zero on cycles
    for (std::size_t i = 0; i < sub.algebra.dim(); ++i)
        if (!is_zero_vec(sub.algebra.diff_entry(i)))
            throw std::logic_error("cycles_algebra: induced differential is nonzero");
    sub.algebra.set_label(a.label().empty() ? "cycles" : "cycles(" + a.label() + ")");
    return sub;
}

HomologyAlgebra homology_algebra(const DGAlgebra& a)
{
    HomologyAlgebra out;
    KernelImage ki = kernel_and_image(a.differential_map());
    out.cycles = subalgebra_from_subspace(a, ki.kernel, "c");

    // well-definedness: boundaries are a twosided ideal of the cycles
    for (int db : ki.image.support()) {
        const Matrix bb = ki.image.basis(db);
        for (std::size_t rb = 0; rb < bb.rows(); ++rb) {
            const Vec bvec = a.embed_component(db, bb.row(rb));
            for (const Vec& k : out.cycles.basis_global) {
                for (const Vec& prod : {a.multiply(bvec, k), a.multiply(k, bvec)}) {
                    for (const auto& [pd, pc] : a.decompose(prod))
                        if (!ki.image.contains(pd, pc))
                            throw std::logic_error(
                                "homology_algebra: boundaries are not an ideal of the cycles");
                }
            }
        }
    }

    out.quotient_data = quotient(ki.kernel, ki.image);
    const Quotient& q = out.quotient_data;
    const Field& f = a.field();

    std::vector<BasisVector> basis;
    for (int d : q.space.support())
        for (int r = 0; r < q.space.dim(d); ++r) {
            basis.push_back({"h" + std::to_string(basis.size()), d});
            Vec qv = zero_vec(f, q.space.dim(d));
            qv[r] = Scalar::one(f);
            out.repr_global.push_back(a.embed_component(d, q.lift(d, qv)));
        }
    const std::size_t m = basis.size();

    auto project = [&](const Vec& hv) -> Vec {
        Vec coords = zero_vec(f, m);
        for (const auto& [deg, comp] : a.decompose(hv)) {
            Vec qc = q.projection.apply(deg, comp);
            std::size_t base = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i].degree == deg)
                    coords[i] = qc[base++];
        }
        return coords;
    };

    Vec unit = project(a.unit());
    std::vector<std::vector<Vec>> mul(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mul[i][j] = project(a.multiply(out.repr_global[i], out.repr_global[j]));
    std::vector<Vec> diff(m, zero_vec(f, m));
    out.algebra = DGAlgebra(f, std::move(basis), std::move(unit), std::move(mul), std::move(diff),
                            a.label().empty() ? "homology" : "H(" + a.label() + ")");
    return out;
}

Vec HomologyAlgebra::project(const DGAlgebra& host, const Vec& host_vec) const
{
    Vec coords = algebra.zero();
    for (const auto& [deg, comp] : host.decompose(host_vec)) {
        Vec qc = quotient_data.projection.apply(deg, comp);
        if (!is_zero_vec(qc))
            coords = add_vec(coords, algebra.embed_component(deg, qc));
    }
    return coords;
}

Vec CentralTensor::project(const Vec& base_tensor_vec) const
{
    Vec coords = algebra.zero();
    for (const auto& [deg, comp] : base_tensor.decompose(base_tensor_vec)) {
        Vec qc = quotient_data.projection.apply(deg, comp);
        if (!is_zero_vec(qc))
            coords = add_vec(coords, algebra.embed_component(deg, qc));
    }
    return coords;
}

CentralSubalgebra graded_center(const DGAlgebra& a)
{
    const Field& f = a.field();
    const std::size_t n = a.dim();
    std::map<int, std::vector<Vec>> center_vecs;
    for (int deg : a.space().support()) {
        const auto& idx = a.indices_of_degree(deg);
        // stack the commutation conditions against every basis element
        std::vector<Matrix> blocks;
        std::size_t total_rows = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const int dj = a.degree_of(j);
            GradedMap right = a.mult_map(a.basis_element(j), dj, Side::right); // x -> x e_j
            GradedMap left = a.mult_map(a.basis_element(j), dj, Side::left);   // x -> e_j x
            Matrix cond = right.block(deg);
            const Matrix lm = left.block(deg);
            const Scalar s = koszul(f, deg, dj);
            for (std::size_t r = 0; r < lm.rows(); ++r)
                for (std::size_t c = 0; c < lm.cols(); ++c)
                    cond.at(r, c) -= s * lm.at(r, c);
            blocks.push_back(cond);
            total_rows += cond.rows();
        }
        Matrix stacked(f, total_rows, idx.size());
        std::size_t row0 = 0;
        for (const Matrix& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    stacked.at(row0 + r, c) = b.at(r, c);
            row0 += b.rows();
        }
        for (auto& v : nullspace(stacked))
            center_vecs[deg].push_back(std::move(v));
    }
    GradedSubspace z = GradedSubspace::span(f, a.space(), center_vecs);

    CentralSubalgebra out;
    out.certification = Report("graded_center");
    out.certification.inputs["algebra"] = a.label();
    out.sub = subalgebra_from_subspace(a, z, "zc"); // throws when closure fails
    out.certification.verdict = "certified";
    out.certification.certificates["dims"] = z.dims().to_string();
    out.certification.note("closed under multiplication and d; contains the unit");

    // even-degree components agree with the ungraded center
    for (int deg : a.space().support()) {
        if (deg % 2 != 0)
            continue;
        const auto& idx = a.indices_of_degree(deg);
        std::vector<Matrix> blocks;
        std::size_t total_rows = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const int dj = a.degree_of(j);
            Matrix cond = a.mult_map(a.basis_element(j), dj, Side::right).block(deg) -
                          a.mult_map(a.basis_element(j), dj, Side::left).block(deg);
            blocks.push_back(cond);
            total_rows += cond.rows();
        }
        Matrix stacked(f, total_rows, idx.size());
        std::size_t row0 = 0;
        for (const Matrix& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    stacked.at(row0 + r, c) = b.at(r, c);
            row0 += b.rows();
        }
        std::map<int, std::vector<Vec>> uz;
        for (auto& v : nullspace(stacked))
            uz[deg].push_back(std::move(v));
        GradedSubspace ungraded = GradedSubspace::span(f, a.space(), uz);
        if (!(ungraded.basis(deg) == z.basis(deg))) {
            out.certification.alarm = true;
            out.certification.note("even-degree component disagrees with the ungraded center at degree " +
                                   std::to_string(deg));
        }
    }
    if (!out.certification.alarm)
        out.certification.note("even-degree components equal the ungraded center");
    return out;
}

Vec tensor_pure(const DGAlgebra& a, const DGAlgebra& b, const Vec& x, const Vec& y)
{
    const std::size_t nb = b.dim();
    Vec r = zero_vec(a.field(), a.dim() * nb);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < nb; ++j)
            if (!y[j].is_zero())
                r[i * nb + j] = x[i] * y[j];
    }
    return r;
}

DGAlgebra tensor_over_base(const DGAlgebra& a, const DGAlgebra& b)
{
    if (a.field() != b.field())
        throw std::invalid_argument("tensor_over_base: field mismatch");
    const Field& f = a.field();
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<BasisVector> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            basis.push_back({a.basis()[i].name + "\xE2\x8A\x97" + b.basis()[j].name,
                             a.degree_of(i) + b.degree_of(j)});
    Vec unit = tensor_pure(a, b, a.unit(), b.unit());
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    Vec prod = tensor_pure(a, b, a.mul_entry(i1, i2), b.mul_entry(j1, j2));
                    prod = scale_vec(koszul(f, b.degree_of(j1), a.degree_of(i2)), prod);
                    mul[i1 * nb + j1][i2 * nb + j2] = std::move(prod);
                }
    std::vector<Vec> diff(n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            Vec d1 = tensor_pure(a, b, a.diff_entry(i), b.basis_element(j));
            Vec d2 = tensor_pure(a, b, a.basis_element(i), b.diff_entry(j));
            if (a.degree_of(i) % 2 != 0)
                d2 = scale_vec(-Scalar::one(f), d2);
            diff[i * nb + j] = add_vec(d1, d2);
        }
    std::string label;
    if (!a.label().empty() && !b.label().empty())
        label = a.label() + "\xE2\x8A\x97" + b.label();
    return DGAlgebra(f, std::move(basis), std::move(unit), std::move(mul), std::move(diff), label);
}

CentralPair central_pair_trivial(const DGAlgebra& a, const DGAlgebra& b)
{
    CentralPair z;
    z.z_basis = {{"z0", 0}};
    z.into_a = {a.unit()};
    z.into_b = {b.unit()};
    z.unit_coords = {Scalar::one(a.field())};
    return z;
}

CentralPair central_pair_from_center(const DGAlgebra& a, const DGAlgebra& b)
{
    CentralSubalgebra za = graded_center(a);
    CentralPair z;
    z.z_basis = za.sub.algebra.basis();
    z.into_a = za.sub.basis_global;
    z.into_b.clear();
    // match the center of b by coordinates: require identical basis degrees and
    // compatible structure; verified later by verify_central_pair
    CentralSubalgebra zb = graded_center(b);
    if (zb.sub.basis_global.size() != za.sub.basis_global.size())
        throw std::invalid_argument("central_pair_from_center: centers have different dimensions");
    z.into_b = zb.sub.basis_global;
    z.unit_coords = za.sub.algebra.unit();
    return z;
}

namespace {

// coordinates of a host vector in the span of the given homogeneous images
std::optional<Vec> coords_in_span(const DGAlgebra& host, const std::vector<Vec>& images,
                                  const Vec& v)
{
    const std::size_t m = images.size();
    Matrix mat(host.field(), host.dim(), m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < host.dim(); ++r)
            mat.at(r, c) = images[c][r];
    auto s = solve(mat, v);
    if (!s)
        return std::nullopt;
    return s->particular;
}

} // namespace

Report verify_central_pair(const DGAlgebra& a, const DGAlgebra& b, const CentralPair& z)
{
    Report rep("verify_central_pair");
    rep.inputs["A"] = a.label();
    rep.inputs["B"] = b.label();
    const std::size_t m = z.z_basis.size();
    if (z.into_a.size() != m || z.into_b.size() != m || z.unit_coords.size() != m) {
        rep.fail("malformed_pair");
        return rep;
    }
    auto check_host = [&](const DGAlgebra& host, const std::vector<Vec>& images,
                          const std::string& which) -> bool {
        // homogeneous of the declared degree and jointly independent
        Matrix mat(host.field(), m, host.dim());
        for (std::size_t k = 0; k < m; ++k) {
            auto hd = host.homogeneous_degree(images[k]);
            if (!hd || *hd != z.z_basis[k].degree) {
                rep.fail("image_not_homogeneous_in_" + which);
                return false;
            }
            for (std::size_t c = 0; c < host.dim(); ++c)
                mat.at(k, c) = images[k][c];
        }
        if (rank(mat) != m) {
            rep.fail("images_not_independent_in_" + which);
            return false;
        }
        // centrality
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < host.dim(); ++j) {
                Vec lhs = host.multiply(images[k], host.basis_element(j));
                Vec rhs = scale_vec(koszul(host.field(), z.z_basis[k].degree, host.degree_of(j)),
                                    host.multiply(host.basis_element(j), images[k]));
                if (lhs != rhs) {
                    rep.fail("not_central_in_" + which);
                    rep.witnesses["z_index"] = k;
                    rep.witnesses["basis_index"] = j;
                    return false;
                }
            }
        return true;
    };
    if (!check_host(a, z.into_a, "A") || !check_host(b, z.into_b, "B"))
        return rep;

    // units correspond
    Vec unit_a = a.zero(), unit_b = b.zero();
    for (std::size_t k = 0; k < m; ++k) {
        unit_a = add_vec(unit_a, scale_vec(z.unit_coords[k], z.into_a[k]));
        unit_b = add_vec(unit_b, scale_vec(z.unit_coords[k], z.into_b[k]));
    }
    if (unit_a != a.unit() || unit_b != b.unit()) {
        rep.fail("unit_mismatch");
        return rep;
    }

    // multiplicative closure with matching structure constants
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
            auto ca = coords_in_span(a, z.into_a, a.multiply(z.into_a[k], z.into_a[l]));
            auto cb = coords_in_span(b, z.into_b, b.multiply(z.into_b[k], z.into_b[l]));
            if (!ca || !cb) {
                rep.fail("span_not_multiplicatively_closed");
                return rep;
            }
            if (*ca != *cb) {
                rep.fail("structure_constants_disagree");
                return rep;
            }
        }

    // the differential agrees through both embeddings
    for (std::size_t k = 0; k < m; ++k) {
        auto ca = coords_in_span(a, z.into_a, a.differentiate(z.into_a[k]));
        auto cb = coords_in_span(b, z.into_b, b.differentiate(z.into_b[k]));
        if (!ca || !cb) {
            rep.fail("span_not_d_closed");
            return rep;
        }
        if (*ca != *cb) {
            rep.fail("differential_disagrees");
            return rep;
        }
    }
    rep.verdict = "central_pair_certified";
    return rep;
}

CentralTensor tensor_over_central(const DGAlgebra& a, const DGAlgebra& b, const CentralPair& z)
{
    Report guard = verify_central_pair(a, b, z);
    if (!guard.ok)
        throw std::invalid_argument("tensor_over_central: " + guard.verdict);

    CentralTensor out;
    out.base_tensor = tensor_over_base(a, b);
    const DGAlgebra& t = out.base_tensor;
    const Field& f = t.field();

    // balancing span: a z (x) b - a (x) z b over all basis pairs and z-basis images
    std::map<int, std::vector<Vec>> span_vecs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < z.z_basis.size(); ++k) {
                Vec left = tensor_pure(a, b, a.multiply(a.basis_element(i), z.into_a[k]),
                                       b.basis_element(j));
                Vec right = tensor_pure(a, b, a.basis_element(i),
                                        b.multiply(z.into_b[k], b.basis_element(j)));
                Vec v = sub_vec(left, right);
                if (is_zero_vec(v))
                    continue;
                const int deg = a.degree_of(i) + b.degree_of(j) + z.z_basis[k].degree;
                span_vecs[deg].push_back(t.component(v, deg));
            }
    GradedSubspace s = GradedSubspace::span(f, t.space(), span_vecs);

    // descent checks: the span is stable under multiplication by basis elements
    // on both sides and under d
    out.descent = Report("tensor_over_central_descent");
    out.descent.verdict = "stable";
    auto in_span = [&](const Vec& v) {
        for (const auto& [deg, comp] : t.decompose(v))
            if (!s.contains(deg, comp))
                return false;
        return true;
    };
    for (int d : s.support()) {
        const Matrix rows = s.basis(d);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            const Vec sv = t.embed_component(d, rows.row(r));
            if (!in_span(t.differentiate(sv)))
                throw std::logic_error("tensor_over_central: span not d-stable");
            for (std::size_t j = 0; j < t.dim(); ++j) {
                if (!in_span(t.multiply(t.basis_element(j), sv)) ||
                    !in_span(t.multiply(sv, t.basis_element(j))))
                    throw std::logic_error("tensor_over_central: span not multiplication-stable");
            }
        }
    }
    out.descent.note("span stable under d and two-sided multiplication");

    out.quotient_data = quotient(GradedSubspace::full(f, t.space()), s);
    const Quotient& q = out.quotient_data;

    std::vector<BasisVector> basis;
    std::vector<Vec> reps;
    for (int d : q.space.support())
        for (int r = 0; r < q.space.dim(d); ++r) {
            basis.push_back({"q" + std::to_string(basis.size()), d});
            Vec qv = zero_vec(f, q.space.dim(d));
            qv[r] = Scalar::one(f);
            reps.push_back(t.embed_component(d, q.lift(d, qv)));
        }
    const std::size_t m = basis.size();
    auto project = [&](const Vec& hv) -> Vec {
        Vec coords = zero_vec(f, m);
        for (const auto& [deg, comp] : t.decompose(hv)) {
            Vec qc = q.projection.apply(deg, comp);
            std::size_t base = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i].degree == deg)
                    coords[i] = qc[base++];
        }
        return coords;
    };

    Vec unit = project(t.unit());
    std::vector<std::vector<Vec>> mul(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mul[i][j] = project(t.multiply(reps[i], reps[j]));
    std::vector<Vec> diff;
    for (std::size_t i = 0; i < m; ++i)
        diff.push_back(project(t.differentiate(reps[i])));
    std::string label;
    if (!a.label().empty() && !b.label().empty())
        label = a.label() + "\xE2\x8A\x97Z" + b.label();
    out.algebra = DGAlgebra(f, std::move(basis), std::move(unit), std::move(mul), std::move(diff),
                            label);
    return out;
}

bool is_dg_isomorphism(const DGAlgebra& a, const DGAlgebra& b, const std::vector<Vec>& images)
{
    if (images.size() != a.dim() || a.dim() != b.dim())
        return false;
    auto phi = [&](const Vec& v) {
        Vec r = b.zero();
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!v[i].is_zero())
                r = add_vec(r, scale_vec(v[i], images[i]));
        return r;
    };
    // degree-preserving
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto hd = b.homogeneous_degree(images[i]);
        if (!hd || *hd != a.degree_of(i))
            return false;
    }
    // bijective
    Matrix mat(a.field(), a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t c = 0; c < b.dim(); ++c)
            mat.at(i, c) = images[i][c];
    if (rank(mat) != a.dim())
        return false;
    // unital, multiplicative, d-compatible
    if (phi(a.unit()) != b.unit())
        return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (phi(a.diff_entry(i)) != b.differentiate(images[i]))
            return false;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (phi(a.mul_entry(i, j)) != b.multiply(images[i], images[j]))
                return false;
    }
    return true;
}

} // namespace dgk
