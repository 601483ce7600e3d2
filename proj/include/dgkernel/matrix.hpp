#pragma once

#include <optional>
#include <vector>

#include "dgkernel/field.hpp"

namespace dgk {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);

/// Dense exact matrix over a fixed field. Row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f))
    {
    }

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& x) const; // this * column(x)
    Matrix transpose() const;
    bool is_zero() const;

    /// Vertical stack: rows of `this` then rows of `o` (same cols).
    Matrix vstack(const Matrix& o) const;
    /// Horizontal concatenation (same rows).
    Matrix hstack(const Matrix& o) const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

/// Basis of the nullspace {x : m x = 0}, canonical (one vector per free column).
std::vector<Vec> nullspace(const Matrix& m);

/// Canonical (RREF) basis of the row space; no zero rows.
Matrix row_space(const Matrix& m);

std::size_t rank(const Matrix& m);

struct LinearSolution {
    Vec particular;
    std::vector<Vec> kernel;
};

/// Solve m x = b exactly; nullopt when inconsistent.
std::optional<LinearSolution> solve(const Matrix& m, const Vec& b);

/// Is v in the row space of the canonical-basis matrix `rows`?
bool in_row_space(const Matrix& rows, const Vec& v);

/// Coordinates of v in terms of the rows of `rows` (must be independent);
/// nullopt when v is outside the span.
std::optional<Vec> coordinates_in_rows(const Matrix& rows, const Vec& v);

} // namespace dgk
