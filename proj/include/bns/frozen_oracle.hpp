#pragma once

#include "bns/exact.hpp"

#include <cstdint>
#include <vector>

namespace bns {

// Strictly increasing row of a monotone triangle.
using Row = std::vector<int>;

// n x n matrix over {-1,0,1} with the alternating-sign constraints.
struct AsmMatrix {
    int n = 0;
    std::vector<int8_t> entries;  // row-major

    int8_t at(int i, int j) const { return entries[i * n + j]; }
    int8_t& at(int i, int j) { return entries[i * n + j]; }
    bool valid() const;
    bool operator==(const AsmMatrix&) const = default;
};

// All strictly increasing rows b of length |r|+1 with entries in [1, cap]
// weakly interlacing r: b_j <= r_j <= b_{j+1}.
std::vector<Row> successors(const Row& r, int cap);

// B(n,s): monotone triangles of size n whose rows i <= s have all entries
// <= n-s. Serial memoized recursion; the reference implementation.
ExactInt count_frozen_serial(int n, int s, bool use_memo = true);

// Same count, parallelized over the top-row entry with task-local memo
// tables. Used as the default route.
ExactInt count_frozen(int n, int s);

// Bijection: monotone triangle (rows of lengths 1..n, bottom row 1..n)
// to the corresponding ASM via vertical differences of the 0/1 partial-sum
// matrix. Throws DomainError on an invalid triangle.
AsmMatrix monotone_to_asm(const std::vector<Row>& triangle);

// Inverse direction: partial column sums of a valid ASM.
std::vector<Row> asm_to_monotone(const AsmMatrix& m);

// Direct scan of {-1,0,1} matrices against the ASM definition with a
// top-left s x s zero block. Row-wise generation with column-sum pruning.
// Refused for n > 4.
ExactInt brute_force_frozen(int n, int s);

// The full list of n x n ASMs with an s x s frozen top-left square (n <= 4).
std::vector<AsmMatrix> enumerate_asms(int n, int s = 0);

}  // namespace bns
