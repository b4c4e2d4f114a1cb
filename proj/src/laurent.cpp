#include "bns/laurent.hpp"

namespace bns {

LaurentPoly LaurentPoly::monomial(const ExactRat& c, long exponent,
                                  std::string variable) {
    LaurentPoly p(std::move(variable));
    p.set_coeff(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::constant(const ExactRat& c, std::string variable) {
    return monomial(c, 0, std::move(variable));
}

long LaurentPoly::lowest_exponent() const {
    if (coeffs_.empty()) throw DomainError("lowest_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::highest_exponent() const {
    if (coeffs_.empty()) throw DomainError("highest_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

ExactRat LaurentPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? ExactRat(0) : it->second;
}

void LaurentPoly::set_coeff(long exponent, const ExactRat& c) {
    if (c == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = c;
}

void LaurentPoly::check_same_variable(const LaurentPoly& other) const {
    if (var_ != other.var_)
        throw DomainError("LaurentPoly: mismatched variables '" + var_ + "' vs '" +
                          other.var_ + "'");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    check_same_variable(other);
    LaurentPoly r(*this);
    for (const auto& [e, c] : other.coeffs_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    check_same_variable(other);
    LaurentPoly r(*this);
    for (const auto& [e, c] : other.coeffs_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    check_same_variable(other);
    LaurentPoly r(var_);
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_)
            r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted_scaled(const ExactRat& c, long e) const {
    LaurentPoly r(var_);
    if (c == 0) return r;
    for (const auto& [e1, c1] : coeffs_) r.coeffs_[e1 + e] = c1 * c;
    return r;
}

ExactRat LaurentPoly::eval(const ExactRat& x) const {
    ExactRat sum = 0;
    for (const auto& [e, c] : coeffs_) {
        if (e >= 0) {
            ExactRat p = 1;
            for (long i = 0; i < e; ++i) p *= x;
            sum += c * p;
        } else {
            if (x == 0) throw DomainError("eval at 0 with negative exponent");
            ExactRat p = 1;
            for (long i = 0; i < -e; ++i) p *= x;
            sum += c / p;
        }
    }
    return sum;
}

}  // namespace bns
