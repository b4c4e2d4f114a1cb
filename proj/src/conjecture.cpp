#include "bns/conjecture.hpp"

#include "bns/asm_enum.hpp"

#include <omp.h>

#include <algorithm>

namespace bns {

LaurentPoly f_kernel(int i, bool plus, int n, int s) {
    if (i < 1) throw DomainError("f_kernel: i must be positive");
    if (n - s + i < 1) throw DomainError("f_kernel: n-s+i must be positive");
    const int sign_i = (i % 2 == 0) ? 1 : -1;
    const int z_coeff = plus ? sign_i : -sign_i;  // 1 +- (-1)^i z
    LaurentPoly front = LaurentPoly::constant(1) + LaurentPoly::monomial(z_coeff, 1);
    LaurentPoly one_minus_z = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
    LaurentPoly p = front;
    for (int k = 0; k < i - 1; ++k) p = p * one_minus_z;
    p = p * g_poly(n - s + i);
    return p.shifted_scaled(1, -i);
}

ExactRat matrix_entry_contour(int n, int s, int i, int j) {
    if (i < 1 || j < 1 || i > s || j > s || s > n || s < 1)
        throw DomainError("matrix_entry_contour: bad parameters");
    const LaurentPoly fi = f_kernel(i, true, n, s);
    const LaurentPoly fj = f_kernel(j, false, n, s);
    ExactRat sum = 0;
    for (int m = 0; m <= i + j - 2; ++m)
        for (int t = 0; t <= m; ++t) {
            ExactRat a = fi.coeff(-1 - (m - t));
            if (a == 0) continue;
            ExactRat b = fj.coeff(-1 - t);
            if (b == 0) continue;
            sum += ExactRat(binomial(m, t)) * a * b;
        }
    return ExactRat(asm_count(n - s + j)) / asm_count(n - s + j - 1) * sum;
}

ExactRat matrix_entry_sum(int n, int s, int i, int j) {
    if (i < 1 || j < 1 || i > s || j > s || s > n || s < 1)
        throw DomainError("matrix_entry_sum: bad parameters");
    const int ni = n - s + i;
    const int nj = n - s + j;
    ExactRat sum = 0;
    for (int k = 0; k <= i + j; ++k)
        for (int l = 0; l <= k; ++l) {
            const ExactInt ckl = binomial(k, l);
            // First bracket vanishes unless i+l-k-p lands in [-1, i-1].
            const int p_lo = std::max(1, l - k + 1);
            const int p_hi = std::min(ni, i + l - k + 1);
            // Second bracket vanishes unless j-l-q lands in [-1, j-1].
            const int q_lo = 1;
            const int q_hi = std::min(nj, j - l + 1);
            for (int p = p_lo; p <= p_hi; ++p) {
                ExactInt b1 = binomial(i - 1, i + l - k - p);
                ExactInt b1b = binomial(i - 1, i + l - k - p - 1);
                b1 += (i % 2 == 0) ? -b1b : b1b;  // - (-1)^i C(i-1, ...)
                if (b1 == 0) continue;
                const ExactInt left = ckl * b1 * refined_count(ni, p);
                for (int q = q_lo; q <= q_hi; ++q) {
                    ExactInt b2 = binomial(j - 1, j - l - q);
                    ExactInt b2b = binomial(j - 1, j - l - q - 1);
                    b2 += (j % 2 == 0) ? b2b : -b2b;  // + (-1)^j C(j-1, ...)
                    if (b2 == 0) continue;
                    ExactInt term = left * b2 * refined_count(nj, q);
                    if ((i + j + k + p + q) % 2 != 0) term = -term;
                    sum += term;
                }
            }
        }
    return sum / (ExactRat(asm_count(ni)) * asm_count(nj - 1));
}

RationalMatrix frozen_matrix(int n, int s, EntryRoute route) {
    if (s < 1 || s > n) throw DomainError("frozen_matrix: s out of [1,n]");
    // Warm the memo tables serially before the parallel fill.
    for (int m = std::max(1, n - s); m <= n; ++m) {
        asm_count(m);
        refined_vector(m);
    }
    RationalMatrix m(static_cast<size_t>(s));
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            m(i - 1, j - 1) = (route == EntryRoute::kContour)
                                  ? matrix_entry_contour(n, s, i, j)
                                  : matrix_entry_sum(n, s, i, j);
    return m;
}

ExactInt conjecture_count(int n, int s, EntryRoute route) {
    if (s < 1 || s > n) throw DomainError("conjecture_count: s out of [1,n]");
    const RationalMatrix m = frozen_matrix(n, s, route);
    const RationalMatrix one_minus =
        RationalMatrix::identity(static_cast<size_t>(s)) - m;
    const ExactRat value = ExactRat(asm_count(n)) * det_exact(one_minus);
    if (denominator(value) != 1 || value < 0)
        throw IntegrityError("conjecture_count: A_n det(1-M) is not a nonnegative integer");
    return numerator(value);
}

}  // namespace bns
