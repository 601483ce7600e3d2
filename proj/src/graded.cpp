#include "dgkernel/graded.hpp"

#include <sstream>

namespace dgk {

GradedSpace::GradedSpace(std::map<int, int> dims) : dims_(std::move(dims))
{
    for (auto it = dims_.begin(); it != dims_.end();) {
        if (it->second < 0)
            throw std::invalid_argument("GradedSpace: negative dimension");
        if (it->second == 0)
            it = dims_.erase(it);
        else
            ++it;
    }
}

int GradedSpace::dim(int degree) const
{
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

int GradedSpace::total_dim() const
{
    int t = 0;
    for (const auto& [d, n] : dims_)
        t += n;
    return t;
}

std::vector<int> GradedSpace::support() const
{
    std::vector<int> s;
    for (const auto& [d, n] : dims_)
        s.push_back(d);
    return s;
}

std::string GradedSpace::to_string() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, n] : dims_) {
        os << (first ? "" : ", ") << d << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

GradedMap::GradedMap(const Field& f, GradedSpace source, GradedSpace target, int shift)
    : field_(f), source_(std::move(source)), target_(std::move(target)), shift_(shift)
{
    for (int d : source_.support())
        blocks_.emplace(d, Matrix(f, target_.dim(d + shift_), source_.dim(d)));
}

GradedMap GradedMap::identity(const Field& f, const GradedSpace& s)
{
    GradedMap m(f, s, s, 0);
    for (int d : s.support())
        m.block(d) = Matrix::identity(f, s.dim(d));
    return m;
}

Matrix& GradedMap::block(int source_degree)
{
    auto it = blocks_.find(source_degree);
    if (it == blocks_.end())
        throw std::out_of_range("GradedMap::block: degree outside source support");
    return it->second;
}

const Matrix& GradedMap::block(int source_degree) const
{
    auto it = blocks_.find(source_degree);
    if (it == blocks_.end())
        throw std::out_of_range("GradedMap::block: degree outside source support");
    return it->second;
}

bool GradedMap::has_block(int source_degree) const
{
    return blocks_.count(source_degree) > 0;
}

void GradedMap::validate() const
{
    for (int d : source_.support()) {
        auto it = blocks_.find(d);
        if (it == blocks_.end())
            throw std::invalid_argument("GradedMap: missing block at degree " + std::to_string(d));
        const Matrix& b = it->second;
        if (b.rows() != static_cast<std::size_t>(target_.dim(d + shift_)) ||
            b.cols() != static_cast<std::size_t>(source_.dim(d)))
            throw std::invalid_argument("GradedMap: malformed block at degree " + std::to_string(d));
    }
}

Vec GradedMap::apply(int source_degree, const Vec& v) const
{
    if (source_.dim(source_degree) == 0) {
        if (!v.empty() && !is_zero_vec(v))
            throw std::invalid_argument("GradedMap::apply: vector outside source support");
        return zero_vec(field_, target_.dim(source_degree + shift_));
    }
    return block(source_degree).apply(v);
}

GradedVec GradedMap::apply(const GradedVec& v) const
{
    GradedVec out;
    for (const auto& [d, x] : v) {
        Vec y = apply(d, x);
        if (!is_zero_vec(y))
            out[d + shift_] = std::move(y);
    }
    return out;
}

GradedMap GradedMap::compose(const GradedMap& inner) const
{
    if (inner.target_ != source_)
        throw std::invalid_argument("GradedMap::compose: middle space mismatch");
    GradedMap r(field_, inner.source_, target_, shift_ + inner.shift_);
    for (int d : inner.source_.support()) {
        const int mid = d + inner.shift_;
        if (source_.dim(mid) == 0)
            continue; // block stays zero
        r.block(d) = block(mid) * inner.block(d);
    }
    return r;
}

GradedMap GradedMap::operator+(const GradedMap& o) const
{
    if (source_ != o.source_ || target_ != o.target_ || shift_ != o.shift_)
        throw std::invalid_argument("GradedMap::operator+: signature mismatch");
    GradedMap r = *this;
    for (int d : source_.support())
        r.block(d) = block(d) + o.block(d);
    return r;
}

GradedMap GradedMap::scaled(const Scalar& c) const
{
    GradedMap r = *this;
    for (auto& [d, b] : r.blocks_)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                b.at(i, j) *= c;
    return r;
}

bool GradedMap::operator==(const GradedMap& o) const
{
    return source_ == o.source_ && target_ == o.target_ && shift_ == o.shift_ &&
           blocks_ == o.blocks_;
}

bool GradedMap::is_zero() const
{
    for (const auto& [d, b] : blocks_)
        if (!b.is_zero())
            return false;
    return true;
}

GradedSubspace::GradedSubspace(const Field& f, GradedSpace ambient)
    : field_(f), ambient_(std::move(ambient))
{
}

GradedSubspace GradedSubspace::span(const Field& f, const GradedSpace& ambient,
                                    const std::map<int, std::vector<Vec>>& vectors)
{
    GradedSubspace s(f, ambient);
    for (const auto& [d, vecs] : vectors) {
        if (vecs.empty())
            continue;
        for (const auto& v : vecs)
            if (v.size() != static_cast<std::size_t>(ambient.dim(d)))
                throw std::invalid_argument("GradedSubspace::span: vector length mismatch at degree " +
                                            std::to_string(d));
        Matrix m = row_space(Matrix::from_rows(f, vecs, ambient.dim(d)));
        if (m.rows() > 0)
            s.rows_[d] = std::move(m);
    }
    return s;
}

GradedSubspace GradedSubspace::full(const Field& f, const GradedSpace& ambient)
{
    GradedSubspace s(f, ambient);
    for (int d : ambient.support())
        s.rows_[d] = Matrix::identity(f, ambient.dim(d));
    return s;
}

int GradedSubspace::dim(int degree) const
{
    auto it = rows_.find(degree);
    return it == rows_.end() ? 0 : static_cast<int>(it->second.rows());
}

int GradedSubspace::total_dim() const
{
    int t = 0;
    for (const auto& [d, m] : rows_)
        t += static_cast<int>(m.rows());
    return t;
}

GradedSpace GradedSubspace::dims() const
{
    std::map<int, int> d;
    for (const auto& [deg, m] : rows_)
        d[deg] = static_cast<int>(m.rows());
    return GradedSpace(d);
}

Matrix GradedSubspace::basis(int degree) const
{
    auto it = rows_.find(degree);
    if (it != rows_.end())
        return it->second;
    return Matrix(field_, 0, ambient_.dim(degree));
}

std::vector<int> GradedSubspace::support() const
{
    std::vector<int> s;
    for (const auto& [d, m] : rows_)
        s.push_back(d);
    return s;
}

bool GradedSubspace::contains(int degree, const Vec& v) const
{
    if (v.size() != static_cast<std::size_t>(ambient_.dim(degree)))
        throw std::invalid_argument("GradedSubspace::contains: vector length mismatch");
    return in_row_space(basis(degree), v);
}

bool GradedSubspace::contains(const GradedVec& v) const
{
    for (const auto& [d, x] : v)
        if (!contains(d, x))
            return false;
    return true;
}

bool GradedSubspace::contains(const GradedSubspace& other) const
{
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("GradedSubspace::contains: ambient mismatch");
    for (const auto& [d, m] : other.rows_)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!contains(d, m.row(r)))
                return false;
    return true;
}

bool GradedSubspace::operator==(const GradedSubspace& o) const
{
    return ambient_ == o.ambient_ && rows_ == o.rows_;
}

GradedSubspace GradedSubspace::with_vector(int degree, const Vec& v) const
{
    GradedSubspace s = *this;
    Matrix stacked = basis(degree).vstack(Matrix::from_rows(field_, {v}, ambient_.dim(degree)));
    Matrix canon = row_space(stacked);
    if (canon.rows() > 0)
        s.rows_[degree] = std::move(canon);
    return s;
}

std::string GradedSubspace::to_string() const
{
    return dims().to_string();
}

KernelImage kernel_and_image(const GradedMap& f)
{
    f.validate();
    KernelImage ki;
    ki.kernel = GradedSubspace(f.field(), f.source());
    ki.image = GradedSubspace(f.field(), f.target());
    std::map<int, std::vector<Vec>> ker_vecs, im_vecs;
    for (int d : f.source().support()) {
        const Matrix& b = f.block(d);
        for (auto& v : nullspace(b))
            ker_vecs[d].push_back(std::move(v));
        Matrix imrows = row_space(b.transpose());
        for (std::size_t r = 0; r < imrows.rows(); ++r)
            im_vecs[d + f.shift()].push_back(imrows.row(r));
    }
    ki.kernel = GradedSubspace::span(f.field(), f.source(), ker_vecs);
    ki.image = GradedSubspace::span(f.field(), f.target(), im_vecs);
    return ki;
}

GradedSubspace subspace_sum(const GradedSubspace& u, const GradedSubspace& v)
{
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    GradedSubspace s(u.field(), u.ambient());
    std::set<int> degs;
    for (int d : u.support())
        degs.insert(d);
    for (int d : v.support())
        degs.insert(d);
    for (int d : degs) {
        Matrix stacked = u.basis(d).vstack(v.basis(d));
        Matrix canon = row_space(stacked);
        if (canon.rows() > 0)
            s.rows_[d] = std::move(canon);
    }
    return s;
}

GradedSubspace subspace_intersect(const GradedSubspace& u, const GradedSubspace& v)
{
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    GradedSubspace s(u.field(), u.ambient());
    for (int d : u.support()) {
        if (v.dim(d) == 0)
            continue;
        // Zassenhaus: row reduce [U | U; V | 0]; rows with zero left half carry
        // the intersection in the right half.
        const Matrix ub = u.basis(d), vb = v.basis(d);
        const std::size_t n = ub.cols();
        Matrix top = ub.hstack(ub);
        Matrix bot = vb.hstack(Matrix(u.field(), vb.rows(), n));
        RrefResult rr = rref(top.vstack(bot));
        std::vector<Vec> inter;
        for (std::size_t r = 0; r < rr.rank; ++r) {
            bool left_zero = true;
            for (std::size_t c = 0; c < n; ++c)
                if (!rr.rref.at(r, c).is_zero()) {
                    left_zero = false;
                    break;
                }
            if (left_zero) {
                Vec w;
                for (std::size_t c = 0; c < n; ++c)
                    w.push_back(rr.rref.at(r, n + c));
                inter.push_back(std::move(w));
            }
        }
        if (!inter.empty()) {
            Matrix canon = row_space(Matrix::from_rows(u.field(), inter, n));
            if (canon.rows() > 0)
                s.rows_[d] = std::move(canon);
        }
    }
    return s;
}

Quotient quotient(const GradedSubspace& u, const GradedSubspace& v)
{
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("quotient: ambient mismatch");
    if (!u.contains(v))
        throw std::invalid_argument("quotient: V is not contained in U");
    const Field& f = u.field();
    Quotient q;
    std::map<int, int> qdims;
    std::map<int, Matrix> proj_blocks;
    std::set<int> degs;
    for (int d : u.support())
        degs.insert(d);
    for (int d : degs) {
        const Matrix ub = u.basis(d);
        const Matrix vb = v.basis(d);
        const std::size_t k = ub.rows();
        // express V inside U coordinates, then reduce inside K^k
        std::vector<Vec> v_in_u;
        for (std::size_t r = 0; r < vb.rows(); ++r) {
            auto c = coordinates_in_rows(ub, vb.row(r));
            if (!c)
                throw std::logic_error("quotient: containment check failed unexpectedly");
            v_in_u.push_back(*c);
        }
        RrefResult rr = rref(Matrix::from_rows(f, v_in_u, k));
        std::vector<bool> is_pivot(k, false);
        for (std::size_t c : rr.pivots)
            is_pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (!is_pivot[c])
                free_cols.push_back(c);
        const std::size_t qd = free_cols.size();
        if (qd > 0)
            qdims[d] = static_cast<int>(qd);
        // projection U-coords -> quotient coords: reduce by V rows, read free coords
        Matrix pu(f, qd, k); // acts on U-coordinates
        for (std::size_t j = 0; j < qd; ++j)
            pu.at(j, free_cols[j]) = Scalar::one(f);
        // subtract pivot contributions: a U-coordinate vector x maps to coords of
        // x - (combination of V rows matching pivots); in RREF terms the free
        // coordinates of the reduced vector are x_free - R_{piv,free}^T * x_piv.
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            for (std::size_t j = 0; j < qd; ++j)
                pu.at(j, rr.pivots[i]) = -rr.rref.at(i, free_cols[j]);
        // ambient -> U-coords via solving against the RREF basis of U: for RREF
        // rows, coordinates are just the entries at pivot columns.
        RrefResult uu = rref(ub);
        Matrix amb_to_u(f, k, ub.cols());
        for (std::size_t i = 0; i < k && i < uu.pivots.size(); ++i)
            amb_to_u.at(i, uu.pivots[i]) = Scalar::one(f);
        proj_blocks[d] = pu * amb_to_u;
        // section: quotient basis j -> ambient vector = U row at free col j
        Matrix sec(f, qd, ub.cols());
        for (std::size_t j = 0; j < qd; ++j) {
            Vec row = ub.row(free_cols[j]);
            for (std::size_t c = 0; c < row.size(); ++c)
                sec.at(j, c) = row[c];
        }
        q.section[d] = std::move(sec);
    }
    q.space = GradedSpace(qdims);
    q.projection = GradedMap(f, u.ambient(), q.space, 0);
    for (int d : u.ambient().support()) {
        auto it = proj_blocks.find(d);
        if (it != proj_blocks.end() && q.space.dim(d) > 0)
            q.projection.block(d) = it->second;
    }
    return q;
}

Vec Quotient::lift(int degree, const Vec& qv) const
{
    auto it = section.find(degree);
    if (it == section.end()) {
        if (!is_zero_vec(qv))
            throw std::invalid_argument("Quotient::lift: degree outside quotient support");
        return Vec();
    }
    return it->second.transpose().apply(qv);
}

std::optional<AffineSolution> solve_affine(const GradedMap& f, int target_degree, const Vec& target)
{
    if (target.size() != static_cast<std::size_t>(f.target().dim(target_degree)))
        throw std::invalid_argument("solve_affine: target length mismatch");
    const int src_deg = target_degree - f.shift();
    AffineSolution sol;
    sol.source_degree = src_deg;
    if (f.source().dim(src_deg) == 0) {
        if (is_zero_vec(target)) {
            sol.particular = Vec();
            return sol;
        }
        return std::nullopt;
    }
    auto s = solve(f.block(src_deg), target);
    if (!s)
        return std::nullopt;
    // verify by re-application
    if (f.apply(src_deg, s->particular) != target)
        throw std::logic_error("solve_affine: verification failed");
    sol.particular = std::move(s->particular);
    sol.kernel = std::move(s->kernel);
    return sol;
}

} // namespace dgk
