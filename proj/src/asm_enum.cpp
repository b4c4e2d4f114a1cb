#include "bns/asm_enum.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace bns {
namespace {

std::mutex memo_mutex;
std::map<int, ExactInt> asm_memo;
std::map<std::pair<int, int>, ExactInt> refined_memo;

// Running product Pi_{j=0}^{n-2} (3j+1)!/(n+j)!, the factor shared by all
// A_{n,r}. Kept as a rational; factorials are cancelled incrementally.
ExactRat refined_prefactor(int n) {
    ExactRat p = 1;
    for (int j = 0; j <= n - 2; ++j)
        p *= ExactRat(factorial(3 * j + 1)) / factorial(n + j);
    return p;
}

}  // namespace

ExactInt asm_count(int n) {
    if (n < 0) throw DomainError("asm_count: negative n");
    if (n <= 1) return 1;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = asm_memo.find(n); it != asm_memo.end()) return it->second;
    }
    ExactRat p = 1;
    for (int j = 0; j <= n - 1; ++j)
        p *= ExactRat(factorial(3 * j + 1)) / factorial(n + j);
    if (denominator(p) != 1) throw IntegrityError("asm_count: non-integer product");
    ExactInt v = numerator(p);
    std::lock_guard lock(memo_mutex);
    asm_memo.emplace(n, v);
    return v;
}

ExactInt refined_count(int n, int r) {
    if (n < 1) throw DomainError("refined_count: n must be positive");
    if (r < 1 || r > n) throw DomainError("refined_count: r out of [1,n]");
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = refined_memo.find({n, r}); it != refined_memo.end())
            return it->second;
    }
    ExactRat v = ExactRat(binomial(n + r - 2, r - 1)) *
                 (ExactRat(factorial(2 * n - r - 1)) / factorial(n - r)) *
                 refined_prefactor(n);
    if (denominator(v) != 1) throw IntegrityError("refined_count: non-integer value");
    ExactInt result = numerator(v);
    std::lock_guard lock(memo_mutex);
    refined_memo.emplace(std::make_pair(n, r), result);
    return result;
}

std::vector<ExactInt> refined_vector(int n) {
    std::vector<ExactInt> v;
    v.reserve(n);
    for (int r = 1; r <= n; ++r) v.push_back(refined_count(n, r));
    return v;
}

LaurentPoly g_poly(int n) {
    if (n < 1) throw DomainError("g_poly: n must be positive");
    // Sum_{m=0}^{n-1} [(-n+1)_m (n)_m / ((2n)_m m!)] (1-z)^m
    LaurentPoly one_minus_z = LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
    LaurentPoly power = LaurentPoly::constant(1);
    LaurentPoly sum("z");
    ExactRat coeff = 1;  // Pochhammer ratio at m
    for (int m = 0; m <= n - 1; ++m) {
        sum = sum + power.shifted_scaled(coeff, 0);
        coeff *= ExactRat((-n + 1 + m)) * (n + m) / (ExactRat(2 * n + m) * (m + 1));
        power = power * one_minus_z;
    }
    return sum;
}

bool PropertyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

PropertyCheck make_check(const std::string& name, const ExactInt& lhs,
                         const ExactInt& rhs) {
    std::ostringstream os;
    os << lhs << (lhs == rhs ? " == " : " != ") << rhs;
    return {name, lhs == rhs, os.str()};
}

}  // namespace

PropertyReport verify_properties(int n, const FrozenSource& frozen) {
    if (n < 1) throw DomainError("verify_properties: n must be positive");
    PropertyReport report;
    report.n = n;

    if (n >= 2) {
        ExactInt sum = 0;
        for (int r = 1; r <= n - 1; ++r) sum += refined_count(n, r);
        report.checks.push_back(
            make_check("B(n,1) = sum_{r<n} A_{n,r}", frozen(n, 1), sum));
    }

    for (int s = n / 2 + 1; s <= n; ++s)
        report.checks.push_back(
            make_check("B(n," + std::to_string(s) + ") = 0", frozen(n, s), 0));

    if (n % 2 == 0) {
        int s = n / 2;
        ExactInt a = asm_count(s);
        report.checks.push_back(make_check("B(2s,s) = A_s^2", frozen(n, s), a * a));
    } else if (n >= 3) {
        int s = (n - 1) / 2;
        ExactInt sum = 0;
        for (int j = 1; j <= s + 1; ++j)
            for (int k = 1; k <= s + 1; ++k)
                sum += binomial(j + k - 2, j - 1) * refined_count(s + 1, j) *
                       refined_count(s + 1, k);
        report.checks.push_back(
            make_check("B(2s+1,s) = binomial double sum", frozen(n, s), sum));
    }
    return report;
}

}  // namespace bns
