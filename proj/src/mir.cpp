#include "bns/mir.hpp"

#include "bns/asm_enum.hpp"
#include "bns/laurent.hpp"
#include "bns/series.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace bns {
namespace {

// (1 - z)^m truncated at degree cap.
LaurentPoly one_minus_z_pow(int m, int cap) {
    LaurentPoly p("z");
    for (int t = 0; t <= std::min(m, cap); ++t)
        p.set_coeff(t, ExactRat(binomial(m, t)) * ((t % 2 == 0) ? 1 : -1));
    return p;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

ExactInt mir_count(int n, int s, const MirOptions& opts) {
    if (n < 1 || s < 1 || s > n) throw DomainError("mir_count: bad (n,s)");
    if (!opts.override_guard && (s > opts.s_max || n > opts.n_max))
        throw DomainError(
            "mir_count: guard refused n=" + std::to_string(n) + " s=" +
            std::to_string(s) + "; cost grows as (n-s)^s * s! (use override)");
    if (n - s - 1 < 0) return 0;  // no z^(n-s-1) monomial exists

    const int cap = n - s - 1 + opts.delta;
    std::vector<std::string> vars;
    std::vector<int> caps(s, cap);
    for (int j = 1; j <= s; ++j) vars.push_back("z" + std::to_string(j));

    // Pole factors: prod_j (z_j - 1)^-(s-j+1)
    //   = (-1)^(s(s+1)/2) prod_j sum_m C(m+s-j, s-j) z_j^m.
    TruncatedSeries common = TruncatedSeries::constant(1, vars, caps);
    for (int j = 1; j <= s; ++j) {
        LaurentPoly factor("z");
        for (int m = 0; m <= cap; ++m)
            factor.set_coeff(m, ExactRat(binomial(m + s - j, s - j)));
        common = common * TruncatedSeries::from_univariate(factor, j - 1, vars, caps);
    }

    // Coupling factors: 1/(z_j z_k - z_j + 1) = sum_m z_j^m (1-z_k)^m.
    for (int j = 1; j <= s; ++j)
        for (int k = j + 1; k <= s; ++k) {
            TruncatedSeries factor(vars, caps);
            for (int m = 0; m <= cap; ++m) {
                LaurentPoly w = one_minus_z_pow(m, cap);
                for (const auto& [e, c] : w.terms()) {
                    std::vector<int> exps(s, 0);
                    exps[j - 1] = m;
                    exps[k - 1] = static_cast<int>(e);
                    factor.add_term(exps, c);
                }
            }
            common = common * factor;
        }

    // Determinant det[(z_j-1)^(s-k) z_j^(k-1) g_{n-k+1}(z_j)] by permutation
    // expansion; each permutation term folds in one variable at a time.
    std::vector<std::vector<LaurentPoly>> cell(s);  // cell[j-1][k-1]
    for (int j = 1; j <= s; ++j)
        for (int k = 1; k <= s; ++k) {
            LaurentPoly u = g_poly(n - k + 1);
            LaurentPoly z_minus_1 = LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1);
            for (int t = 0; t < s - k; ++t) u = u * z_minus_1;
            cell[j - 1].push_back(u.shifted_scaled(1, k - 1));
        }

    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> target(s, n - s - 1);
    ExactRat total = 0;
    do {
        TruncatedSeries term = common;
        for (int j = 1; j <= s; ++j)
            term = term *
                   TruncatedSeries::from_univariate(cell[j - 1][perm[j - 1] - 1],
                                                    j - 1, vars, caps);
        total += ExactRat(permutation_sign(perm)) * term.coeff(target);
    } while (std::next_permutation(perm.begin(), perm.end()));

    ExactRat value = ExactRat(asm_count(n)) * total;
    if (s % 2 != 0) value = -value;                  // (-1)^s prefactor
    if ((s * (s + 1) / 2) % 2 != 0) value = -value;  // signs from (z_j-1)^-(s-j+1)
    if (denominator(value) != 1)
        throw IntegrityError("mir_count: non-integer constant term");
    return numerator(value);
}

}  // namespace bns
