#include "bns/asymptotics.hpp"

#include "bns/asm_enum.hpp"
#include "bns/frozen_oracle.hpp"

#include <doctest.h>
#include <gsl/gsl_sf_airy.h>

#include <cmath>
#include <vector>

using namespace bns;

TEST_CASE("arctic curve parametrization") {
    ArcticPoint p = arctic_point(1.0);
    CHECK(p.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.y == doctest::Approx(0.0).epsilon(1e-14));

    // omega -> infinity tends to (0, 1/2).
    ArcticPoint far = arctic_point(1e9);
    CHECK(std::abs(far.x) < 1e-8);
    CHECK(std::abs(far.y - 0.5) < 1e-8);

    CHECK_THROWS_AS(arctic_point(0.5), DomainError);
}

TEST_CASE("ellipse residual") {
    CHECK(ellipse_residual(0.5, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ellipse_residual(0.0, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    for (int i = 0; i < 100; ++i) {
        const double omega = std::pow(10.0, 6.0 * i / 99.0);
        const ArcticPoint p = arctic_point(omega);
        CHECK(std::abs(ellipse_residual(p.x, p.y)) < 1e-12);
    }
}

TEST_CASE("diagonal intersection") {
    // x = y forces omega = 2; the root of 4x^2 - 8x + 1 in [0, 1/2].
    const ArcticPoint p = arctic_point(2.0);
    CHECK(std::abs(p.x - p.y) < 1e-14);
    CHECK(std::abs(p.x - arctic_diagonal_intersection()) < 1e-12);
    CHECK(std::abs(arctic_diagonal_intersection() - (1.0 - std::sqrt(3.0) / 2.0)) <
          1e-15);
}

namespace {

struct AiryRef {
    double x, ai, aip;
};

// High-precision reference values, frozen from an independent
// arbitrary-precision evaluation.
const AiryRef kAiryRefs[] = {
    {-10, 0.0402412384864431907, 0.996265044132790056},
    {-7.95, -0.00555720908558956684, 0.947206149854089934},
    {-5, 0.35076100902411432, 0.327192818554443137},
    {-2, 0.227407428201685576, 0.618259020741691041},
    {-0.5, 0.475728091610539589, -0.204081670339547386},
    {0, 0.355028053887817239, -0.258819403792806798},
    {0.5, 0.23169360648083349, -0.224910532664683893},
    {2.3, 0.0218319931806226386, -0.0351731227208180721},
    {5, 0.000108344428136074417, -0.000247413890868462476},
    {8, 4.69220761609923163e-8, -1.34143929790678657e-7},
    {10, 1.10475325528986859e-10, -3.52063367673892364e-10},
    {12.5, 2.39682782607804994e-14, -8.52134656467385645e-14},
    {20, 1.69167286867054031e-27, -7.58639162574835496e-27},
};

}  // namespace

TEST_CASE("airy against frozen references") {
    for (const AiryRef& ref : kAiryRefs) {
        CHECK(std::abs(airy_ai(ref.x) - ref.ai) <= 1e-13 * std::abs(ref.ai));
        CHECK(std::abs(airy_ai_prime(ref.x) - ref.aip) <= 1e-13 * std::abs(ref.aip));
    }
    CHECK(airy_ai(10) > 0);
    CHECK(airy_ai(10) < 1e-9);
}

TEST_CASE("airy against the GSL oracle on a grid") {
    // GSL itself carries ~1e-13 relative error on the oscillatory side.
    for (double x = -10; x <= 10.0; x += 0.13) {
        const double g = gsl_sf_airy_Ai(x, GSL_PREC_DOUBLE);
        CHECK(std::abs(airy_ai(x) - g) <= 1e-12 * std::abs(g) + 1e-17);
        const double gp = gsl_sf_airy_Ai_deriv(x, GSL_PREC_DOUBLE);
        CHECK(std::abs(airy_ai_prime(x) - gp) <= 1e-12 * std::abs(gp) + 1e-17);
    }
    for (double x = 10.5; x <= 40.0; x += 1.0)
        CHECK(std::abs(airy_ai(x) - gsl_sf_airy_Ai(x, GSL_PREC_DOUBLE)) < 1e-15);
}

namespace {

// Richardson-extrapolated central second difference.
double second_derivative(double x) {
    std::vector<double> t(4);
    for (int i = 0; i < 4; ++i) {
        const double h = 0.5 / std::pow(2.0, i);
        t[i] = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    }
    for (int k = 1; k < 4; ++k)
        for (int i = 3; i >= k; --i)
            t[i] += (t[i] - t[i - 1]) / (std::pow(4.0, k) - 1);
    return t[3];
}

}  // namespace

TEST_CASE("airy satisfies its differential equation") {
    for (double x : {-2.0, 0.0, 2.0})
        CHECK(std::abs(second_derivative(x) - x * airy_ai(x)) < 1e-10);
}

TEST_CASE("tracy-widom limits and tail") {
    CHECK(std::abs(tw_f2(8.0) - 1.0) < 1e-10);
    CHECK(tw_f2(-8.0) < 1e-6);
    CHECK(tw_f2(-8.0) >= 0.0);

    // Reference value frozen from a 40-digit Nystrom evaluation.
    const double computed = 1.0 - tw_f2(5.0);
    CHECK(std::abs(computed - 5.317793263e-10) < 1e-13 * 5.3e-10 + 1e-15);

    // The leading-order right tail overshoots the true value by ~11% at
    // sigma = 5; the first subleading correction is 35/(24 * 5^1.5) ~ 13%.
    const double tail = std::exp(-(4.0 / 3.0) * std::pow(5.0, 1.5)) /
                        (16.0 * M_PI * std::pow(5.0, 1.5));
    const double deviation = (tail - computed) / tail;
    CHECK(deviation > 0.09);
    CHECK(deviation < 0.13);
}

TEST_CASE("tracy-widom node convergence") {
    const double a = tw_f2_at_nodes(0.0, 64);
    const double b = tw_f2_at_nodes(0.0, 128);
    CHECK(std::abs(a - b) < 1e-8);
    // Known value of F2(0) to full precision.
    CHECK(std::abs(b - 0.9693728283552627) < 1e-10);
}

TEST_CASE("tracy-widom is monotone on a coarse grid") {
    double prev = -1;
    for (int i = 0; i <= 24; ++i) {
        const double sigma = -6.0 + 12.0 * i / 24.0;
        const double f2 = tw_f2(sigma);
        CHECK(f2 >= prev - 1e-12);
        prev = f2;
    }
}

TEST_CASE("boundary cdf matches exact ratios") {
    const BoundaryCdf c = boundary_cdf(10, 3);
    CHECK(std::abs(c.value - 32490142348.0 / 129534272700.0) < 1e-10);
    CHECK(std::abs(boundary_cdf_exact(10, 3) - c.value) < 1e-12);

    for (int n : {6, 9, 12})
        for (int s = 1; s <= n; ++s) {
            const double exact =
                static_cast<double>(ExactRat(count_frozen(n, s)) /
                                    ExactRat(asm_count(n)));
            CHECK(std::abs(boundary_cdf(n, s).value - exact) < 1e-10);
        }
}

TEST_CASE("boundary cdf vanishes past the threshold") {
    CHECK(boundary_cdf(11, 6).value < 1e-10);
    CHECK(boundary_cdf(14, 9).value < 1e-10);
}

TEST_CASE("boundary cdf is within [0,1] and non-increasing in s") {
    for (int n : {8, 17, 26}) {
        double prev = 1.0;
        for (int s = 1; s <= n / 2 + 1; ++s) {
            const double v = boundary_cdf(n, s).value;
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("scaled s and probe") {
    CHECK(tw_scaled_s(100, 0.0) == 13);
    // Gap vs the limit law shrinks between well-separated sizes. (Adjacent
    // sizes can reorder: s is floored, and the rounding error oscillates.)
    const std::vector<TwProbe> probes = tw_convergence_probe({50, 200}, 0.0);
    REQUIRE(probes.size() == 2);
    CHECK(probes[0].n == 50);
    CHECK(probes[0].s_scaled == 6);
    CHECK(probes[1].gap() < probes[0].gap());
    CHECK(probes[0].f2 == probes[1].f2);
}
