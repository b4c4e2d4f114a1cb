#pragma once

#include "bns/exact.hpp"

namespace bns {

struct MirOptions {
    int s_max = 4;     // cost grows as (n-s)^s * s!
    int n_max = 12;
    int delta = 0;     // extra truncation margin, for sufficiency checks
    bool override_guard = false;
};

// B(n,s) by exact constant-term extraction from the multiple-integral
// representation: (-1)^s A_n times the coefficient of prod_j z_j^(n-s-1)
// in the product of the pole factors, the coupling factors
// 1/(z_j z_k - z_j + 1), and the permutation-expanded determinant.
// A validation route; guarded against expensive parameters.
ExactInt mir_count(int n, int s, const MirOptions& opts = {});

}  // namespace bns
