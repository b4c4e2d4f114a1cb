#include "bns/exact.hpp"

namespace bns {

ExactInt binomial(long a, long b) {
    if (a < 0) throw DomainError("binomial: negative upper index");
    if (b < 0 || b > a) return 0;
    ExactInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

ExactInt factorial(long a) {
    if (a < 0) throw DomainError("factorial: negative argument");
    ExactInt r;
    mpz_fac_ui(r.backend().data(), static_cast<unsigned long>(a));
    return r;
}

}  // namespace bns
