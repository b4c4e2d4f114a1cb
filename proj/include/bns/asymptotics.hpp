#pragma once

#include "bns/exact.hpp"

#include <stdexcept>
#include <vector>

namespace bns {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArcticPoint {
    double omega;
    double x;
    double y;
};

struct PrecisionConfig {
    // Working precision for boundary_cdf, in decimal digits. 0 means
    // auto: about the decimal length of A_n, doubled on disagreement.
    unsigned digits10 = 0;
    int max_doublings = 3;
    double cdf_tolerance = 1e-12;

    // Tracy-Widom quadrature.
    int nodes = 64;
    double tw_tolerance = 1e-8;
};

struct BoundaryCdf {
    double value;
    double error_estimate;  // disagreement between the last two precisions
};

struct TwProbe {
    double sigma;
    int n;
    int s_scaled;
    double p_boundary;
    double f2;
    double gap() const;
};

// Parametric point of the arctic curve (top-left quadrant), omega >= 1.
ArcticPoint arctic_point(double omega);

// 4x^2 + 4y^2 - 4xy - 4x - 4y + 1; zero on the arctic ellipse.
double ellipse_residual(double x, double y);

// Diagonal intersection of the arctic curve: y_c = 1 - sqrt(3)/2.
double arctic_diagonal_intersection();

// P_n(xi > s) = det(1 - M) in multiprecision floating point. Matrix entries
// come from the refined-enumeration sum with ratios built by telescoping
// products; the determinant uses pivoted elimination. Precision is doubled
// until two runs agree within cdf_tolerance.
BoundaryCdf boundary_cdf(int n, int s, const PrecisionConfig& cfg = {});

// Validation path: exact rational det(1 - M), rounded once at the end.
double boundary_cdf_exact(int n, int s);

// Airy function and derivative: multiprecision Maclaurin series up to the
// switch point, standard asymptotic expansion beyond.
double airy_ai(double x);
double airy_ai_prime(double x);

// GUE Tracy-Widom F2(sigma): Fredholm determinant of the Airy kernel on
// (sigma, inf), Nystrom-discretized with Gauss-Legendre nodes mapped to the
// half-line. Computed at cfg.nodes and 2*cfg.nodes; disagreement beyond
// tw_tolerance raises ConvergenceError.
double tw_f2(double sigma, const PrecisionConfig& cfg = {});

// Single Nystrom evaluation at a fixed node count, without the doubling
// check; exposed for convergence studies.
double tw_f2_at_nodes(double sigma, int nodes);

// Eq.-style scaled s for the edge probe: floor(n y_c - n^(1/3) sigma / (2^(4/3) 3^(1/6))).
int tw_scaled_s(int n, double sigma);

// Pairs boundary_cdf(n, s_scaled) with F2(sigma) across sizes.
std::vector<TwProbe> tw_convergence_probe(const std::vector<int>& n_list,
                                          double sigma,
                                          const PrecisionConfig& cfg = {});

}  // namespace bns
