#pragma once

#include "bns/exact.hpp"
#include "bns/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace bns {

// Multivariate polynomial truncated per variable: monomials whose exponent
// in any variable exceeds that variable's cap are discarded on the fly.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<std::string> variables, std::vector<int> caps);

    static TruncatedSeries constant(const ExactRat& c,
                                    std::vector<std::string> variables,
                                    std::vector<int> caps);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& caps() const { return caps_; }
    bool is_zero() const { return coeffs_.empty(); }

    ExactRat coeff(const std::vector<int>& exponents) const;
    void add_term(const std::vector<int>& exponents, const ExactRat& c);

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);

    // Embed a univariate polynomial (nonnegative exponents only) into the
    // series, in the variable at position var_index.
    static TruncatedSeries from_univariate(const LaurentPoly& p, size_t var_index,
                                           std::vector<std::string> variables,
                                           std::vector<int> caps);

    const std::map<std::vector<int>, ExactRat>& terms() const { return coeffs_; }

private:
    void check_compatible(const TruncatedSeries& other) const;
    bool within_caps(const std::vector<int>& e) const;

    std::vector<std::string> vars_;
    std::vector<int> caps_;
    std::map<std::vector<int>, ExactRat> coeffs_;
};

}  // namespace bns
