#include "bns/frozen_oracle.hpp"

#include "bns/asm_enum.hpp"
#include "bns/golden.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bns;

TEST_CASE("successors") {
    CHECK(successors({1}, 2) == std::vector<Row>{{1, 2}});
    CHECK(successors({2}, 3) == std::vector<Row>{{1, 2}, {1, 3}, {2, 3}});

    // Growing all size-3 triangles from every top entry counts A_3 = 7.
    int total = 0;
    for (int t = 1; t <= 3; ++t)
        for (const Row& r2 : successors({t}, 3))
            total += static_cast<int>(successors(r2, 3).size());
    CHECK(total == 7);
}

TEST_CASE("count_frozen small cases") {
    CHECK(count_frozen(2, 1) == 1);
    CHECK(count_frozen(4, 2) == 4);
    CHECK(count_frozen(9, 5) == 0);
    CHECK(count_frozen(12, 6) == ExactInt("55294096"));
    CHECK_THROWS_AS(count_frozen(4, 5), DomainError);
}

TEST_CASE("count_frozen at s=0 reduces to the plain count") {
    for (int n = 1; n <= 10; ++n) CHECK(count_frozen(n, 0) == asm_count(n));
}

TEST_CASE("serial reference, memo-free run, and parallel kernel agree") {
    for (int n = 1; n <= 8; ++n)
        for (int s = 0; s <= n; ++s) {
            const ExactInt reference = count_frozen_serial(n, s, /*use_memo=*/false);
            CHECK(count_frozen_serial(n, s) == reference);
            CHECK(count_frozen(n, s) == reference);
        }
}

TEST_CASE("count_frozen is non-increasing in s") {
    for (int n = 1; n <= 10; ++n) {
        ExactInt prev = count_frozen(n, 0);
        for (int s = 1; s <= n; ++s) {
            const ExactInt cur = count_frozen(n, s);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("monotone_to_asm hand cases") {
    CHECK(monotone_to_asm({{1}}) == AsmMatrix{1, {1}});

    // Rows (2),(1,3),(1,2,3): the size-3 ASM with the -1 at the center.
    AsmMatrix m = monotone_to_asm({{2}, {1, 3}, {1, 2, 3}});
    CHECK(m == AsmMatrix{3, {0, 1, 0, 1, -1, 1, 0, 1, 0}});

    CHECK_THROWS_AS(monotone_to_asm({{1}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(monotone_to_asm({{2}, {1, 3}, {1, 2, 4}}), DomainError);
    // Not interlacing: t_{21} = 2 > t_{11} = 1.
    CHECK_THROWS_AS(monotone_to_asm({{1}, {2, 3}, {1, 2, 3}}), DomainError);
}

TEST_CASE("bijection round-trips over all size-4 ASMs") {
    const std::vector<AsmMatrix> all = enumerate_asms(4);
    CHECK(all.size() == 42);
    for (const AsmMatrix& m : all) CHECK(monotone_to_asm(asm_to_monotone(m)) == m);
}

TEST_CASE("brute force frozen counts") {
    CHECK(brute_force_frozen(2, 1) == 1);
    CHECK(brute_force_frozen(4, 2) == 4);
    CHECK(brute_force_frozen(3, 0) == 7);
    CHECK_THROWS_AS(brute_force_frozen(5, 0), DomainError);
}

TEST_CASE("brute force agrees with the triangle oracle") {
    for (int n = 1; n <= 4; ++n)
        for (int s = 0; s <= n; ++s)
            CHECK(brute_force_frozen(n, s) == count_frozen(n, s));
}

TEST_CASE("count_frozen matches the reference table at n=13") {
    for (int s = 1; s <= 6; ++s)
        CHECK(count_frozen(13, s) == *golden_value(13, s));
}
