#pragma once

#include "bns/exact.hpp"

#include <cstddef>
#include <vector>

namespace bns {

// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    explicit RationalMatrix(size_t n) : n_(n), entries_(n * n, ExactRat(0)) {}

    static RationalMatrix identity(size_t n);

    size_t size() const { return n_; }
    ExactRat& operator()(size_t i, size_t j) { return entries_[i * n_ + j]; }
    const ExactRat& operator()(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    size_t n_;
    std::vector<ExactRat> entries_;
};

// Exact determinant. Denominators are cleared row-wise, then fraction-free
// (Bareiss) elimination runs over integers. 0x0 matrix gives 1.
ExactRat det_exact(const RationalMatrix& m);

}  // namespace bns
