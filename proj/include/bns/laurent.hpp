#pragma once

#include "bns/exact.hpp"

#include <map>
#include <string>

namespace bns {

// Univariate Laurent polynomial with exact rational coefficients and
// sparse exponent storage. Zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(std::string variable = "z") : var_(std::move(variable)) {}

    static LaurentPoly monomial(const ExactRat& c, long exponent,
                                std::string variable = "z");
    static LaurentPoly constant(const ExactRat& c, std::string variable = "z");

    const std::string& variable() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    long lowest_exponent() const;   // throws on zero polynomial
    long highest_exponent() const;  // throws on zero polynomial

    ExactRat coeff(long exponent) const;
    void set_coeff(long exponent, const ExactRat& c);

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    // Multiply by c * var^e.
    LaurentPoly shifted_scaled(const ExactRat& c, long e) const;

    ExactRat eval(const ExactRat& x) const;  // x != 0 when negative exponents present

    bool operator==(const LaurentPoly& other) const = default;

    const std::map<long, ExactRat>& terms() const { return coeffs_; }

private:
    void check_same_variable(const LaurentPoly& other) const;

    std::string var_;
    std::map<long, ExactRat> coeffs_;
};

}  // namespace bns
