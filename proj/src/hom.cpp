#include "dgkernel/hom.hpp"

#include "dgkernel/catalog.hpp"

namespace dgk {

namespace {

// flattened coordinates of a graded map of fixed shift: concatenation over
// source degrees (ascending) of the blocks, row-major
Vec flatten_map(const GradedMap& g)
{
    Vec out;
    for (int d : g.source().support()) {
        const Matrix& b = g.block(d);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.push_back(b.at(r, c));
    }
    return out;
}

GradedMap unflatten_map(const Field& f, const GradedSpace& src, const GradedSpace& tgt, int shift,
                        const Vec& flat)
{
    GradedMap g(f, src, tgt, shift);
    std::size_t pos = 0;
    for (int d : src.support()) {
        Matrix& b = g.block(d);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                b.at(r, c) = flat[pos++];
    }
    return g;
}

std::size_t flat_size(const GradedSpace& src, const GradedSpace& tgt, int shift)
{
    std::size_t n = 0;
    for (int d : src.support())
        n += static_cast<std::size_t>(tgt.dim(d + shift)) * static_cast<std::size_t>(src.dim(d));
    return n;
}

} // namespace

Vec HomComplex::eval(const Vec& hom_coords, const Vec& m_coords) const
{
    Vec out = target.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (hom_coords[i].is_zero())
            continue;
        GradedVec img = basis_maps[i].apply(source.decompose(m_coords));
        for (const auto& [deg, comp] : img)
            out = add_vec(out, scale_vec(hom_coords[i], target.embed_component(deg, comp)));
    }
    return out;
}

GradedMap HomComplex::as_map(const Vec& hom_coords) const
{
    std::optional<int> deg;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!hom_coords[i].is_zero()) {
            if (deg && *deg != basis[i].degree)
                throw std::invalid_argument("HomComplex::as_map: inhomogeneous element");
            deg = basis[i].degree;
        }
    const int k = deg.value_or(0);
    GradedMap g(source.field(), source.space(), target.space(), k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (hom_coords[i].is_zero())
            continue;
        g = g + basis_maps[i].scaled(hom_coords[i]);
    }
    return g;
}

std::optional<Vec> HomComplex::coordinates_of(const GradedMap& g) const
{
    const Field& f = source.field();
    // restrict to basis maps of the same shift, solve in flattened coordinates
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].degree == g.shift())
            idx.push_back(i);
    const Vec target_flat = flatten_map(g);
    Matrix mat(f, target_flat.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        const Vec bf = flatten_map(basis_maps[idx[c]]);
        for (std::size_t r = 0; r < bf.size(); ++r)
            mat.at(r, c) = bf[r];
    }
    auto s = solve(mat, target_flat);
    if (!s)
        return std::nullopt;
    Vec out = zero_vec(f, basis.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
        out[idx[c]] = s->particular[c];
    return out;
}

Vec HomComplex::dhom_of(const Vec& hom_coords) const
{
    Vec out = zero_vec(source.field(), basis.size());
    GradedVec parts;
    for (int k : space.support()) {
        Vec comp(space.dim(k), Scalar::zero(source.field()));
        std::size_t pos = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].degree == k)
                comp[pos++] = hom_coords[i];
        if (!is_zero_vec(comp))
            parts[k] = comp;
    }
    GradedVec img = dhom.apply(parts);
    for (const auto& [k, comp] : img) {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].degree == k)
                out[i] = comp[pos++];
    }
    return out;
}

Vec HomComplex::compose(const Vec& fc, const Vec& gc) const
{
    // bilinear in the basis maps: express each pairwise composition
    Vec out = zero_vec(source.field(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (fc[i].is_zero())
            continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (gc[j].is_zero())
                continue;
            GradedMap comp = basis_maps[i].compose(basis_maps[j]);
            auto c = coordinates_of(comp);
            if (!c)
                throw std::logic_error("HomComplex::compose: composition left the complex");
            out = add_vec(out, scale_vec(fc[i] * gc[j], *c));
        }
    }
    return out;
}

Vec HomComplex::identity_coords() const
{
    auto c = coordinates_of(GradedMap::identity(source.field(), source.space()));
    if (!c)
        throw std::logic_error("HomComplex: identity is not in the complex");
    return *c;
}

HomComplex hom_complex(const DGModule& m, const DGModule& n)
{
    if (!(m.algebra() == n.algebra()))
        throw std::invalid_argument("hom_complex: modules over different algebras");
    const Field& f = m.field();
    const DGAlgebra& alg = m.algebra();
    HomComplex h;
    h.source = m;
    h.target = n;

    if (m.space().is_zero() || n.space().is_zero()) {
        h.space = GradedSpace();
        h.dhom = GradedMap(f, h.space, h.space, 1);
        return h;
    }
    const auto msup = m.space().support();
    const auto nsup = n.space().support();
    const int kmin = nsup.front() - msup.back();
    const int kmax = nsup.back() - msup.front();

    std::map<int, int> hom_dims;
    std::map<int, std::vector<GradedMap>> per_degree;
    for (int k = kmin; k <= kmax; ++k) {
        const std::size_t unknowns = flat_size(m.space(), n.space(), k);
        if (unknowns == 0)
            continue;
        // semilinearity: f(a x) = (-1)^{|a| k} a f(x) for algebra basis a, module basis x
        std::vector<Vec> eq_rows;
        for (std::size_t ai = 0; ai < alg.dim(); ++ai) {
            const int adeg = alg.degree_of(ai);
            const bool sign = (adeg % 2 != 0) && (k % 2 != 0);
            for (std::size_t mi = 0; mi < m.dim(); ++mi) {
                const int mdeg = m.degree_of(mi);
                // LHS: f applied to (a x), a vector in degree mdeg+adeg
                // RHS: (+-) a . f(x)
                // both sides live in N_{mdeg+adeg+k}
                const int out_deg = mdeg + adeg + k;
                const int out_dim = n.space().dim(out_deg);
                for (int r = 0; r < out_dim; ++r) {
                    Vec row = zero_vec(f, unknowns);
                    // LHS coefficients: entries of block at source degree mdeg+adeg
                    const Vec ax = m.act(alg.basis_element(ai), m.basis_element(mi));
                    const Vec ax_comp = m.component(ax, mdeg + adeg);
                    std::size_t offset = 0;
                    for (int d : msup) {
                        const std::size_t rows_d =
                            static_cast<std::size_t>(n.space().dim(d + k));
                        const std::size_t cols_d = static_cast<std::size_t>(m.space().dim(d));
                        if (d == mdeg + adeg)
                            for (std::size_t c = 0; c < cols_d; ++c)
                                row[offset + static_cast<std::size_t>(r) * cols_d + c] +=
                                    ax_comp[c];
                        offset += rows_d * cols_d;
                    }
                    // RHS coefficients: a . f(x): f(x) = column of block at mdeg
                    offset = 0;
                    for (int d : msup) {
                        const std::size_t rows_d =
                            static_cast<std::size_t>(n.space().dim(d + k));
                        const std::size_t cols_d = static_cast<std::size_t>(m.space().dim(d));
                        if (d == mdeg) {
                            const auto& mi_pos_list = m.indices_of_degree(mdeg);
                            std::size_t mi_pos = 0;
                            for (std::size_t p = 0; p < mi_pos_list.size(); ++p)
                                if (mi_pos_list[p] == mi)
                                    mi_pos = p;
                            // for each candidate value f(x) = n-basis vector e_t (t within
                            // degree mdeg+k), coefficient of a . e_t at out-component r
                            const auto& t_list = n.indices_of_degree(mdeg + k);
                            for (std::size_t t = 0; t < t_list.size(); ++t) {
                                const Vec aet =
                                    n.act(alg.basis_element(ai), n.basis_element(t_list[t]));
                                const Vec aet_comp = n.component(aet, out_deg);
                                Scalar coeff = aet_comp[static_cast<std::size_t>(r)];
                                if (sign)
                                    coeff = -coeff;
                                row[offset + t * cols_d + mi_pos] -= coeff;
                            }
                        }
                        offset += rows_d * cols_d;
                    }
                    eq_rows.push_back(std::move(row));
                }
            }
        }
        Matrix eq = eq_rows.empty() ? Matrix(f, 0, unknowns)
                                    : Matrix::from_rows(f, eq_rows, unknowns);
        for (const Vec& sol : nullspace(eq)) {
            GradedMap g = unflatten_map(f, m.space(), n.space(), k, sol);
            per_degree[k].push_back(g);
        }
        if (!per_degree[k].empty())
            hom_dims[k] = static_cast<int>(per_degree[k].size());
    }

    h.space = GradedSpace(hom_dims);
    for (const auto& [k, maps] : per_degree)
        for (const auto& g : maps) {
            h.basis.push_back({"f" + std::to_string(h.basis.size()), k});
            h.basis_maps.push_back(g);
        }

    // d_Hom on the hom coordinates
    h.dhom = GradedMap(f, h.space, h.space, 1);
    const GradedMap dm = m.delta_map(), dn = n.delta_map();
    for (std::size_t i = 0; i < h.basis.size(); ++i) {
        const int k = h.basis[i].degree;
        GradedMap left = dn.compose(h.basis_maps[i]);
        GradedMap right = h.basis_maps[i].compose(dm);
        if (k % 2 != 0)
            right = right.scaled(-Scalar::one(f));
        // d_Hom(f) = delta_N o f - (-1)^k f o delta_M
        GradedMap df = left + right.scaled(-Scalar::one(f));
        // express in the degree k+1 basis
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < h.basis.size(); ++j)
            if (h.basis[j].degree == k + 1)
                idx.push_back(j);
        Vec flat = flatten_map(df);
        if (idx.empty()) {
            if (!is_zero_vec(flat))
                throw std::logic_error("hom_complex: d_Hom left the complex");
            continue;
        }
        Matrix mat(f, flat.size(), idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            const Vec bf = flatten_map(h.basis_maps[idx[c]]);
            for (std::size_t r = 0; r < bf.size(); ++r)
                mat.at(r, c) = bf[r];
        }
        auto s = solve(mat, flat);
        if (!s)
            throw std::logic_error("hom_complex: d_Hom image is not semilinear");
        Matrix& blk = h.dhom.block(k);
        std::size_t col = 0;
        {
            std::size_t pos = 0;
            for (std::size_t j = 0; j < h.basis.size(); ++j)
                if (h.basis[j].degree == k) {
                    if (j == i)
                        col = pos;
                    ++pos;
                }
        }
        for (std::size_t r = 0; r < idx.size(); ++r)
            blk.at(r, col) = s->particular[r];
    }

    // d_Hom squares to zero
    for (int k : h.space.support()) {
        if (h.space.dim(k + 1) == 0)
            continue;
        const Matrix b1 = h.dhom.block(k);
        if (h.space.dim(k + 2) == 0) {
            // nothing to compose into
            continue;
        }
        const Matrix b2 = h.dhom.block(k + 1);
        if (!(b2 * b1).is_zero())
            throw std::logic_error("hom_complex: d_Hom^2 != 0");
    }
    return h;
}

EndAlgebra end_algebra(const DGModule& m)
{
    EndAlgebra out;
    out.hom = hom_complex(m, m);
    const HomComplex& h = out.hom;
    const Field& f = m.field();
    const std::size_t n = h.dim();
    Vec unit = h.identity_coords();
    std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec fi = zero_vec(f, n), gj = zero_vec(f, n);
            fi[i] = Scalar::one(f);
            gj[j] = Scalar::one(f);
            mul[i][j] = h.compose(fi, gj);
        }
    std::vector<Vec> diff;
    for (std::size_t i = 0; i < n; ++i) {
        Vec fi = zero_vec(f, n);
        fi[i] = Scalar::one(f);
        diff.push_back(h.dhom_of(fi));
    }
    out.algebra = DGAlgebra(f, h.basis, unit, std::move(mul), std::move(diff),
                            m.label().empty() ? "End" : "End(" + m.label() + ")");
    return out;
}

DGModule underlying_complex(const DGModule& m)
{
    DGAlgebra q0 = catalog::q0(m.field());
    std::vector<std::vector<Vec>> action(1, std::vector<Vec>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        action[0][i] = m.basis_element(i);
    std::vector<Vec> delta;
    for (std::size_t i = 0; i < m.dim(); ++i)
        delta.push_back(m.delta_entry(i));
    return DGModule(q0, m.basis(), std::move(action), std::move(delta),
                    m.label().empty() ? "" : m.label() + "_K");
}

EndAlgebra end_algebra_over_base(const DGModule& m)
{
    return end_algebra(underlying_complex(m));
}

FaithfulEmbedding faithful_embedding(const DGModule& m)
{
    FaithfulEmbedding out;
    out.target = end_algebra_over_base(m);
    const HomComplex& h = out.target.hom;
    const DGAlgebra& a = m.algebra();
    out.report = Report("faithful_embedding");
    out.report.inputs["module"] = m.label();
    out.report.inputs["algebra"] = a.label();

    for (std::size_t i = 0; i < a.dim(); ++i) {
        GradedMap mu_i = m.action_map(a.basis_element(i), a.degree_of(i));
        auto c = h.coordinates_of(mu_i);
        if (!c)
            throw std::logic_error("faithful_embedding: action operator is not a graded map");
        out.mu.push_back(*c);
    }
    auto mu_of = [&](const Vec& av) {
        Vec r = zero_vec(m.field(), h.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!av[i].is_zero())
                r = add_vec(r, scale_vec(av[i], out.mu[i]));
        return r;
    };

    // unital algebra map
    if (mu_of(a.unit()) != h.identity_coords())
        throw std::logic_error("faithful_embedding: mu is not unital");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (h.compose(out.mu[i], out.mu[j]) != mu_of(a.mul_entry(i, j)))
                throw std::logic_error("faithful_embedding: mu is not multiplicative");
    // mu o d = d_Hom o mu on the basis
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (mu_of(a.diff_entry(i)) != h.dhom_of(out.mu[i]))
            throw std::logic_error("faithful_embedding: mu does not intertwine the differentials");
    out.report.note("mu verified unital, multiplicative, and d-compatible on the basis");

    AnnihilatorResult ann = annihilator(m);
    out.annihilator_ideal = ann.ideal;
    if (ann.ideal.total_dim() == 0) {
        out.report.verdict = "faithful";
    } else {
        out.report.verdict = "not_faithful";
        // lexicographically first annihilator basis vector as the witness
        const int d0 = ann.ideal.support().front();
        Json w;
        w["degree"] = d0;
        Json coords = Json::array();
        for (const auto& s : ann.ideal.basis(d0).row(0))
            coords.push_back(s.to_string());
        w["vector"] = coords;
        out.report.witnesses["kernel_element"] = w;
    }
    return out;
}

} // namespace dgk
