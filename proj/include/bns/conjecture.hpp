#pragma once

#include "bns/exact.hpp"
#include "bns/laurent.hpp"
#include "bns/matrix.hpp"

namespace bns {

enum class EntryRoute {
    kContour,  // double contour integral, evaluated as Laurent coefficients
    kSum,      // quadruple sum over plain and refined enumerations
};

// f_i^{+-}(z) = [1 +- (-1)^i z] (1-z)^(i-1) z^(-i) g_{n-s+i}(z).
// Lowest exponent is exactly -i, highest n-s+i-1.
LaurentPoly f_kernel(int i, bool plus, int n, int s);

// Entry M_ij by formal residue extraction: 1/(1-z-w) is expanded
// geometrically, and only powers m <= i+j-2 survive the pole order of
// f_i^+ and f_j^- at the origin.
ExactRat matrix_entry_contour(int n, int s, int i, int j);

// Entry M_ij as the quadruple sum over refined enumerations. The k sum is
// bounded by i+j: the first binomial bracket forces p >= i+l-k+... to hit a
// window of width i+1, which is empty once k exceeds i+j.
ExactRat matrix_entry_sum(int n, int s, int i, int j);

// The full s x s matrix M.
RationalMatrix frozen_matrix(int n, int s, EntryRoute route = EntryRoute::kSum);

// B(n,s) = A_n det(1 - M), asserted to be a nonnegative integer.
ExactInt conjecture_count(int n, int s, EntryRoute route = EntryRoute::kSum);

}  // namespace bns
