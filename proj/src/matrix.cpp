#include "bns/matrix.hpp"

#include <utility>

namespace bns {

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (n_ != other.n_) throw DomainError("RationalMatrix: size mismatch");
    RationalMatrix m(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t k = 0; k < n_; ++k) {
            const ExactRat& a = (*this)(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < n_; ++j) m(i, j) += a * other(k, j);
        }
    return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    if (n_ != other.n_) throw DomainError("RationalMatrix: size mismatch");
    RationalMatrix m(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j) - other(i, j);
    return m;
}

ExactRat det_exact(const RationalMatrix& m) {
    const size_t n = m.size();
    if (n == 0) return 1;

    // Clear denominators: row i is scaled by the lcm d_i of its denominators,
    // so det(m) = det(intmat) / prod_i d_i.
    std::vector<std::vector<ExactInt>> a(n, std::vector<ExactInt>(n));
    ExactInt denom_product = 1;
    for (size_t i = 0; i < n; ++i) {
        ExactInt d = 1;
        for (size_t j = 0; j < n; ++j) d = lcm(d, denominator(m(i, j)));
        for (size_t j = 0; j < n; ++j) {
            ExactRat scaled = m(i, j) * d;
            a[i][j] = numerator(scaled);
        }
        denom_product *= d;
    }

    // Bareiss fraction-free elimination; all divisions are exact.
    int sign = 1;
    ExactInt prev_pivot = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
        prev_pivot = a[k][k];
    }
    ExactInt det_int = a[n - 1][n - 1];
    if (sign < 0) det_int = -det_int;
    return ExactRat(det_int) / denom_product;
}

}  // namespace bns
