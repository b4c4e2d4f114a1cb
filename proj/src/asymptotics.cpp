#include "bns/asymptotics.hpp"

#include "bns/asm_enum.hpp"
#include "bns/conjecture.hpp"
#include "bns/matrix.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace bns {

using MpFloat = boost::multiprecision::mpfr_float;
// Fixed 120-digit type for the Airy series; independent of the global
// mpfr default precision used by boundary_cdf.
using AiryFloat = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<120>>;

ArcticPoint arctic_point(double omega) {
    if (omega < 1.0) throw DomainError("arctic_point: omega must be >= 1");
    const double root = 2.0 * std::sqrt(omega * omega - omega + 1.0);
    return {omega, 1.0 - (2.0 * omega - 1.0) / root, 1.0 - (omega + 1.0) / root};
}

double ellipse_residual(double x, double y) {
    return 4 * x * x + 4 * y * y - 4 * x * y - 4 * x - 4 * y + 1;
}

double arctic_diagonal_intersection() { return 1.0 - std::sqrt(3.0) / 2.0; }

double TwProbe::gap() const { return std::abs(p_boundary - f2); }

namespace {

// Decimal length of A_n, via double-precision lgamma.
unsigned asm_count_digits(int n) {
    double lg = 0;
    for (int j = 0; j < n; ++j)
        lg += std::lgamma(3.0 * j + 2.0) - std::lgamma(double(n) + j + 1.0);
    return static_cast<unsigned>(lg / std::log(10.0)) + 1;
}

// det(1 - M) at the current mpfr default precision. Entry route is the
// refined-enumeration sum, factorized as
//   M_ij = sum_k (-1)^(i+j-k) sum_l C(k,l) T1(i, k-l) T2(j, l)
// with T1, T2 absorbing the windowed p and q sums. Refined ratios are built
// by telescoping products seeded from lgamma, never materializing A_n.
MpFloat det_one_minus_m(int n, int s) {
    // ln(A_m / A_{m-1}) = lnG(3m-1) + lnG(m) - lnG(2m) - lnG(2m-1)
    auto log_plain_ratio = [](int m) -> MpFloat {
        return lgamma(MpFloat(3 * m - 1)) + lgamma(MpFloat(m)) -
               lgamma(MpFloat(2 * m)) - lgamma(MpFloat(2 * m - 1));
    };

    // ratio1[i-1][r-1] = A_{m,r}/A_m, ratio2[i-1][q-1] = A_{m,q}/A_{m-1},
    // where m = n-s+i.
    std::vector<std::vector<MpFloat>> ratio1(s), ratio2(s);
    for (int i = 1; i <= s; ++i) {
        const int m = n - s + i;
        const MpFloat growth = exp(log_plain_ratio(m));
        std::vector<MpFloat> r1(m);
        r1[0] = 1 / growth;  // A_{m,1} = A_{m-1}
        for (int r = 1; r < m; ++r)
            r1[r] = r1[r - 1] * (MpFloat(m + r - 1) * (m - r)) /
                    (MpFloat(r) * (2 * m - r - 1));
        std::vector<MpFloat> r2(m);
        for (int q = 0; q < m; ++q) r2[q] = r1[q] * growth;
        ratio1[i - 1] = std::move(r1);
        ratio2[i - 1] = std::move(r2);
    }

    const int umax = 2 * s;
    std::vector<std::vector<MpFloat>> t1(s + 1), t2(s + 1);
    for (int i = 1; i <= s; ++i) {
        const int m = n - s + i;
        t1[i].assign(umax + 1, MpFloat(0));
        t2[i].assign(umax + 1, MpFloat(0));
        for (int u = 0; u <= umax; ++u) {
            MpFloat sum1 = 0;
            for (int p = 1; p <= std::min(m, i - u + 1); ++p) {
                ExactInt b = binomial(i - 1, i - u - p);
                ExactInt bb = binomial(i - 1, i - u - p - 1);
                b += (i % 2 == 0) ? -bb : bb;
                if (b == 0) continue;
                MpFloat term = MpFloat(b.str()) * ratio1[i - 1][p - 1];
                sum1 += (p % 2 == 0) ? term : -term;
            }
            t1[i][u] = sum1;

            const int l = u;
            MpFloat sum2 = 0;
            for (int q = 1; q <= std::min(m, i - l + 1); ++q) {
                ExactInt b = binomial(i - 1, i - l - q);
                ExactInt bb = binomial(i - 1, i - l - q - 1);
                b += (i % 2 == 0) ? bb : -bb;
                if (b == 0) continue;
                MpFloat term = MpFloat(b.str()) * ratio2[i - 1][q - 1];
                sum2 += (q % 2 == 0) ? term : -term;
            }
            t2[i][l] = sum2;
        }
    }

    std::vector<std::vector<MpFloat>> binom(umax + 1,
                                            std::vector<MpFloat>(umax + 1, 0));
    for (int k = 0; k <= umax; ++k)
        for (int l = 0; l <= k; ++l) binom[k][l] = MpFloat(binomial(k, l).str());

    // a = 1 - M
    std::vector<std::vector<MpFloat>> a(s, std::vector<MpFloat>(s, 0));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
            MpFloat entry = 0;
            for (int k = 0; k <= i + j; ++k) {
                MpFloat inner = 0;
                for (int l = 0; l <= k; ++l) {
                    if (k - l > umax) continue;
                    inner += binom[k][l] * t1[i][k - l] * t2[j][l];
                }
                entry += ((i + j - k) % 2 == 0) ? inner : -inner;
            }
            a[i - 1][j - 1] = (i == j ? MpFloat(1) : MpFloat(0)) - entry;
        }

    // Pivoted elimination.
    MpFloat det = 1;
    for (int k = 0; k < s; ++k) {
        int pivot = k;
        for (int r = k + 1; r < s; ++r)
            if (abs(a[r][k]) > abs(a[pivot][k])) pivot = r;
        if (a[pivot][k] == 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int r = k + 1; r < s; ++r) {
            MpFloat factor = a[r][k] / a[k][k];
            for (int c = k; c < s; ++c) a[r][c] -= factor * a[k][c];
        }
    }
    return det;
}

}  // namespace

namespace {

struct PrecisionScope {
    unsigned saved = MpFloat::default_precision();
    explicit PrecisionScope(unsigned digits) { MpFloat::default_precision(digits); }
    void set(unsigned digits) { MpFloat::default_precision(digits); }
    ~PrecisionScope() { MpFloat::default_precision(saved); }
};

}  // namespace

BoundaryCdf boundary_cdf(int n, int s, const PrecisionConfig& cfg) {
    if (n < 1 || s < 1 || s > n) throw DomainError("boundary_cdf: bad (n,s)");
    unsigned digits = cfg.digits10 ? cfg.digits10 : asm_count_digits(n) + 60;
    PrecisionScope scope(digits);
    double prev = static_cast<double>(det_one_minus_m(n, s));
    for (int round = 0; round < cfg.max_doublings; ++round) {
        digits *= 2;
        scope.set(digits);
        const double cur = static_cast<double>(det_one_minus_m(n, s));
        const double err = std::abs(cur - prev);
        if (err <= cfg.cdf_tolerance) return {std::clamp(cur, 0.0, 1.0), err};
        prev = cur;
    }
    throw ConvergenceError("boundary_cdf: precision doubling did not converge");
}

double boundary_cdf_exact(int n, int s) {
    if (n < 1 || s < 1 || s > n) throw DomainError("boundary_cdf_exact: bad (n,s)");
    const RationalMatrix m = frozen_matrix(n, s, EntryRoute::kSum);
    const ExactRat det =
        det_exact(RationalMatrix::identity(static_cast<size_t>(s)) - m);
    AiryFloat v = AiryFloat(numerator(det).str()) / AiryFloat(denominator(det).str());
    return static_cast<double>(v);
}

namespace {

constexpr double kAirySeriesSwitch = 12.0;

struct AiryPair {
    double ai;
    double aip;
};

// Maclaurin series of Ai and Ai' in 120-digit arithmetic; the headroom
// absorbs the cancellation between the f and g branches (about 2*zeta/ln 10
// digits at the switch point).
AiryPair airy_series(double xd) {
    static const AiryFloat c1 = pow(AiryFloat(3), AiryFloat(-2) / 3) /
                                tgamma(AiryFloat(2) / 3);
    static const AiryFloat c2 = pow(AiryFloat(3), AiryFloat(-1) / 3) /
                                tgamma(AiryFloat(1) / 3);
    const AiryFloat x = xd;
    const AiryFloat x3 = x * x * x;

    AiryFloat tf = 1, tg = x, tfp = x * x / 2, tgp = 1;
    AiryFloat f = tf, g = tg, fp = tfp, gp = tgp;
    for (int k = 0; k < 400; ++k) {
        tf *= x3 / ((3 * k + 2) * (3 * k + 3));
        tg *= x3 / ((3 * k + 3) * (3 * k + 4));
        tfp *= x3 / ((3 * k + 3) * (3 * k + 5));
        tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
        f += tf;
        g += tg;
        fp += tfp;
        gp += tgp;
        if (abs(tf) < 1e-50 && abs(tg) < 1e-50 && abs(tfp) < 1e-50 &&
            abs(tgp) < 1e-50)
            break;
    }
    return {static_cast<double>(c1 * f - c2 * g),
            static_cast<double>(c1 * fp - c2 * gp)};
}

// DLMF 9.7 asymptotic expansion for large positive x.
AiryPair airy_asymptotic(double x) {
    const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
    const double pref = 1.0 / (2.0 * std::sqrt(M_PI) * std::pow(x, 0.25));
    const double prefp = -std::pow(x, 0.25) / (2.0 * std::sqrt(M_PI));
    double u = 1.0, sum_u = 1.0, sum_v = 1.0;
    double sign = 1.0;
    for (int k = 0; k < 40; ++k) {
        const double next = u * (6.0 * k + 1.0) * (6.0 * k + 5.0) /
                            (72.0 * (k + 1.0)) / zeta;
        if (std::abs(next) >= std::abs(u)) break;  // divergent tail
        u = next;
        sign = -sign;
        sum_u += sign * u;
        const double v = u * (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1));
        sum_v += sign * v;
    }
    const double e = std::exp(-zeta);
    return {pref * e * sum_u, prefp * e * sum_v};
}

AiryPair airy_both(double x) {
    return (x > kAirySeriesSwitch) ? airy_asymptotic(x) : airy_series(x);
}

}  // namespace

double airy_ai(double x) { return airy_both(x).ai; }
double airy_ai_prime(double x) { return airy_both(x).aip; }

namespace {

// det(I - W^T K W) for the Airy kernel on (sigma, inf), with m Gauss-Legendre
// nodes mapped by a = sigma - 2 ln(1 - t), t in (0,1).
double tw_f2_at(double sigma, int m) {
    gsl_integration_glfixed_table* table =
        gsl_integration_glfixed_table_alloc(static_cast<size_t>(m));
    std::vector<double> a(m), w(m), ai(m), aip(m);
    for (int p = 0; p < m; ++p) {
        double t, weight;
        gsl_integration_glfixed_point(0.0, 1.0, static_cast<size_t>(p), &t,
                                      &weight, table);
        a[p] = sigma - 2.0 * std::log1p(-t);
        w[p] = weight * 2.0 / (1.0 - t);
        const AiryPair pair = airy_both(a[p]);
        ai[p] = pair.ai;
        aip[p] = pair.aip;
    }
    gsl_integration_glfixed_table_free(table);

    std::vector<std::vector<double>> mat(m, std::vector<double>(m));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const double kernel =
                (p == q) ? aip[p] * aip[p] - a[p] * ai[p] * ai[p]
                         : (ai[p] * aip[q] - aip[p] * ai[q]) / (a[p] - a[q]);
            mat[p][q] = (p == q ? 1.0 : 0.0) -
                        std::sqrt(w[p]) * kernel * std::sqrt(w[q]);
        }

    double det = 1.0;
    for (int k = 0; k < m; ++k) {
        int pivot = k;
        for (int r = k + 1; r < m; ++r)
            if (std::abs(mat[r][k]) > std::abs(mat[pivot][k])) pivot = r;
        if (mat[pivot][k] == 0.0) return 0.0;
        if (pivot != k) {
            std::swap(mat[pivot], mat[k]);
            det = -det;
        }
        det *= mat[k][k];
        for (int r = k + 1; r < m; ++r) {
            const double factor = mat[r][k] / mat[k][k];
            for (int c = k; c < m; ++c) mat[r][c] -= factor * mat[k][c];
        }
    }
    return det;
}

}  // namespace

double tw_f2_at_nodes(double sigma, int nodes) {
    if (nodes < 2) throw DomainError("tw_f2_at_nodes: too few nodes");
    return tw_f2_at(sigma, nodes);
}

double tw_f2(double sigma, const PrecisionConfig& cfg) {
    const double d1 = tw_f2_at(sigma, cfg.nodes);
    const double d2 = tw_f2_at(sigma, 2 * cfg.nodes);
    if (std::abs(d1 - d2) > cfg.tw_tolerance)
        throw ConvergenceError("tw_f2: node doubling disagreement " +
                               std::to_string(std::abs(d1 - d2)));
    return d2;
}

int tw_scaled_s(int n, double sigma) {
    const double yc = arctic_diagonal_intersection();
    const double scale = std::pow(2.0, 4.0 / 3.0) * std::pow(3.0, 1.0 / 6.0);
    return static_cast<int>(
        std::floor(n * yc - std::cbrt(double(n)) * sigma / scale));
}

std::vector<TwProbe> tw_convergence_probe(const std::vector<int>& n_list,
                                          double sigma,
                                          const PrecisionConfig& cfg) {
    const double f2 = tw_f2(sigma, cfg);
    std::vector<TwProbe> probes;
    for (int n : n_list) {
        const int s = tw_scaled_s(n, sigma);
        if (s < 1)
            throw DomainError("tw_convergence_probe: n too small, scaled s < 1");
        const BoundaryCdf cdf = boundary_cdf(n, s, cfg);
        probes.push_back({sigma, n, s, cdf.value, f2});
    }
    return probes;
}

}  // namespace bns
