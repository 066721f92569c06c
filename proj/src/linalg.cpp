#include "dp5/linalg.hpp"

#include <stdexcept>

namespace dp5 {

std::optional<RVector> solve(RMatrix a, RVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    RVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

RMatrix inverse(const RMatrix& a) {
    const std::size_t n = a.size();
    RMatrix inv(n, RVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        RVector e(n);
        e[j] = 1;
        auto col = solve(a, e);
        if (!col) throw std::domain_error("inverse of singular matrix");
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
    }
    return inv;
}

Rational determinant(RMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    return det;
}

}  // namespace dp5
