#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace bns {

// Exact scalars. GMP-backed: arithmetic never overflows, rationals are
// kept in lowest terms with positive denominator, equality is structural.
using ExactInt = boost::multiprecision::mpz_int;
using ExactRat = boost::multiprecision::mpq_rational;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals a result that violates an internal integrality guarantee
// (e.g. a determinant that should be a nonnegative integer is not).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// C(a,b) with the combinatorial convention: 0 when b < 0 or b > a.
// Negative a is rejected rather than generalized.
ExactInt binomial(long a, long b);

// a! for a >= 0.
ExactInt factorial(long a);

}  // namespace bns
