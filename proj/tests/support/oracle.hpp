#pragma once

// Test-only oracles, kept independent of the library's row-reduction path:
// a from-scratch Gaussian elimination used to cross-check ranks and spans.

#include "dgkernel/matrix.hpp"

namespace oracle {

/// Rank by plain forward elimination (no RREF normalization, separate code path).
inline std::size_t rank_oracle(const dgk::Matrix& input)
{
    dgk::Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    std::vector<bool> used(rows, false);
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!used[r] && !m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        used[pivot] = true;
        ++rank;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot || m.at(r, c).is_zero())
                continue;
            const dgk::Scalar factor = m.at(r, c) / m.at(pivot, c);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(r, j) -= factor * m.at(pivot, j);
        }
    }
    return rank;
}

/// Membership of v in the span of `gens` by elimination over the stacked matrix.
inline bool in_span_oracle(const dgk::Field& f, const std::vector<dgk::Vec>& gens, const dgk::Vec& v)
{
    if (gens.empty())
        return dgk::is_zero_vec(v);
    dgk::Matrix g = dgk::Matrix::from_rows(f, gens, v.size());
    dgk::Matrix gv = g.vstack(dgk::Matrix::from_rows(f, {v}, v.size()));
    return rank_oracle(g) == rank_oracle(gv);
}

} // namespace oracle
