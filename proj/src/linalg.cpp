#include "coulomb/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace coulomb {

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("solve_linear: shape mismatch");
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: ragged matrix");

    std::vector<std::size_t> pivot_row_of_col(n, m);  // m = no pivot
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = m;
        for (std::size_t r = rank; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Scalar inv = Scalar(1) / a[rank][col];
        for (std::size_t c = col; c < n; ++c) a[rank][c] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Scalar f = a[r][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (b[r] != 0) return std::nullopt;

    std::vector<Scalar> x(n, Scalar(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] != m) x[col] = b[pivot_row_of_col[col]];
    return x;
}

}  // namespace coulomb
