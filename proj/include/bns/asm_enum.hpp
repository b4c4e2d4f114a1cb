#pragma once

#include "bns/exact.hpp"
#include "bns/laurent.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bns {

// Number of n x n alternating sign matrices, A_n. n = 0 returns 1 by the
// empty-product convention. Memoized per process; safe for concurrent callers.
ExactInt asm_count(int n);

// Refined enumeration A_{n,r}: ASMs whose first-row 1 sits at column r.
ExactInt refined_count(int n, int r);

// All of A_{n,1..n} at once.
std::vector<ExactInt> refined_vector(int n);

// Generating polynomial of the refined enumeration: the terminating
// hypergeometric series 2F1(-n+1, n; 2n; 1-z), expanded exactly in z.
// Coefficient of z^(r-1) equals A_{n,r}/A_n.
LaurentPoly g_poly(int n);

struct PropertyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct PropertyReport {
    int n = 0;
    std::vector<PropertyCheck> checks;
    bool all_passed() const;
};

// Checks the frozen-corner identities for one n against a supplied source of
// B(n,s) values: B_{n,1} as a refined-count sum, vanishing past floor(n/2),
// the even-size square identity, and the odd-size double sum.
using FrozenSource = std::function<ExactInt(int n, int s)>;
PropertyReport verify_properties(int n, const FrozenSource& frozen);

}  // namespace bns
