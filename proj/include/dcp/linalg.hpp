#ifndef DCP_LINALG_HPP
#define DCP_LINALG_HPP

#include <vector>

#include "dcp/rational.hpp"

namespace dcp {

using Matrix = std::vector<std::vector<Rat>>;

/// Reduced row echelon form with zero rows dropped and pivots scaled to 1.
/// The result is a canonical basis of the row span.
inline Matrix rref(Matrix m) {
    size_t rows = m.size();
    if (rows == 0) return m;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

inline long rank(Matrix m) { return static_cast<long>(rref(std::move(m)).size()); }

/// True iff every row of b lies in the row span of a.
inline bool row_span_contains(const Matrix& a, const Matrix& b) {
    if (b.empty()) return true;
    Matrix joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    return rank(std::move(joint)) == rank(a);
}

}  // namespace dcp

#endif
