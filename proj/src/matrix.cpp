#include "dgkernel/matrix.hpp"

#include <sstream>

namespace dgk {

Vec zero_vec(const Field& f, std::size_t n)
{
    return Vec(n, Scalar::zero(f));
}

bool is_zero_vec(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add_vec(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("add_vec: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("sub_vec: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale_vec(const Scalar& c, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("Matrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const
{
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::operator+: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i])
            return false;
    return true;
}

Vec Matrix::apply(const Vec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("Matrix::apply: length mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero())
                r[i] += at(i, j) * x[j];
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& o) const
{
    if (cols_ != o.cols_)
        throw std::invalid_argument("Matrix::vstack: column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const
{
    if (rows_ != o.rows_)
        throw std::invalid_argument("Matrix::hstack: row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const Matrix& m)
{
    RrefResult res;
    res.rref = m;
    Matrix& a = res.rref;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        const Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            const Scalar f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<Vec> nullspace(const Matrix& m)
{
    const RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c])
            continue;
        Vec v = zero_vec(m.field(), cols);
        v[c] = Scalar::one(m.field());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.rref.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix row_space(const Matrix& m)
{
    const RrefResult rr = rref(m);
    return rr.rref.submatrix(0, 0, rr.rank, m.cols());
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank;
}

std::optional<LinearSolution> solve(const Matrix& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug = m.hstack(Matrix::from_rows(m.field(), {b}, b.size()).transpose());
    const RrefResult rr = rref(aug);
    // inconsistent iff a pivot lands in the augmented column
    for (std::size_t c : rr.pivots)
        if (c == m.cols())
            return std::nullopt;
    LinearSolution sol;
    sol.particular = zero_vec(m.field(), m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        sol.particular[rr.pivots[i]] = rr.rref.at(i, m.cols());
    sol.kernel = nullspace(m);
    return sol;
}

bool in_row_space(const Matrix& rows, const Vec& v)
{
    if (rows.rows() == 0)
        return is_zero_vec(v);
    return coordinates_in_rows(rows, v).has_value();
}

std::optional<Vec> coordinates_in_rows(const Matrix& rows, const Vec& v)
{
    // solve rows^T x = v
    auto s = solve(rows.transpose(), v);
    if (!s)
        return std::nullopt;
    return s->particular;
}

} // namespace dgk
