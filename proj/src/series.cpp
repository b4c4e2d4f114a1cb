#include "bns/series.hpp"

namespace bns {

TruncatedSeries::TruncatedSeries(std::vector<std::string> variables,
                                 std::vector<int> caps)
    : vars_(std::move(variables)), caps_(std::move(caps)) {
    if (vars_.size() != caps_.size())
        throw DomainError("TruncatedSeries: variables/caps size mismatch");
    for (int c : caps_)
        if (c < 0) throw DomainError("TruncatedSeries: negative cap");
}

TruncatedSeries TruncatedSeries::constant(const ExactRat& c,
                                          std::vector<std::string> variables,
                                          std::vector<int> caps) {
    TruncatedSeries s(std::move(variables), std::move(caps));
    s.add_term(std::vector<int>(s.vars_.size(), 0), c);
    return s;
}

bool TruncatedSeries::within_caps(const std::vector<int>& e) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > caps_[i]) return false;
    return true;
}

ExactRat TruncatedSeries::coeff(const std::vector<int>& exponents) const {
    auto it = coeffs_.find(exponents);
    return it == coeffs_.end() ? ExactRat(0) : it->second;
}

void TruncatedSeries::add_term(const std::vector<int>& exponents, const ExactRat& c) {
    if (exponents.size() != vars_.size())
        throw DomainError("TruncatedSeries: exponent arity mismatch");
    if (c == 0 || !within_caps(exponents)) return;
    auto [it, inserted] = coeffs_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
    if (vars_ != other.vars_ || caps_ != other.caps_)
        throw DomainError("TruncatedSeries: incompatible variables or caps");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    TruncatedSeries r(*this);
    r += other;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    check_compatible(other);
    TruncatedSeries r(vars_, caps_);
    std::vector<int> e(vars_.size());
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_) {
            bool ok = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = e1[i] + e2[i];
                if (e[i] > caps_[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.add_term(e, c1 * c2);
        }
    return r;
}

TruncatedSeries TruncatedSeries::from_univariate(const LaurentPoly& p,
                                                 size_t var_index,
                                                 std::vector<std::string> variables,
                                                 std::vector<int> caps) {
    TruncatedSeries s(std::move(variables), std::move(caps));
    if (var_index >= s.vars_.size())
        throw DomainError("from_univariate: variable index out of range");
    for (const auto& [e, c] : p.terms()) {
        if (e < 0) throw DomainError("from_univariate: negative exponent");
        std::vector<int> exps(s.vars_.size(), 0);
        exps[var_index] = static_cast<int>(e);
        s.add_term(exps, c);
    }
    return s;
}

}  // namespace bns
