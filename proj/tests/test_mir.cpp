#include "bns/mir.hpp"

#include "bns/asm_enum.hpp"
#include "bns/frozen_oracle.hpp"

#include <doctest.h>

using namespace bns;

TEST_CASE("mir_count table values") {
    CHECK(mir_count(3, 1) == 5);
    CHECK(mir_count(6, 2) == 2889);
    CHECK(mir_count(8, 4) == 1764);
}

TEST_CASE("cost guard") {
    CHECK_THROWS_AS(mir_count(10, 5), DomainError);
    CHECK_THROWS_AS(mir_count(13, 1), DomainError);
    MirOptions lifted;
    lifted.override_guard = true;
    CHECK(mir_count(10, 5, lifted) == 184041);
}

TEST_CASE("mir agrees with the oracle for small parameters") {
    for (int n = 2; n <= 8; ++n)
        for (int s = 1; s <= std::min(4, n); ++s)
            CHECK(mir_count(n, s) == count_frozen(n, s));
}

TEST_CASE("mir at s=1 matches the refined-sum difference") {
    for (int n = 2; n <= 10; ++n)
        CHECK(mir_count(n, 1) == asm_count(n) - asm_count(n - 1));
}

TEST_CASE("truncation margin does not change the constant term") {
    for (int delta : {0, 1, 2}) {
        MirOptions opts;
        opts.delta = delta;
        CHECK(mir_count(7, 3, opts) == 7007);
        CHECK(mir_count(5, 2, opts) == 102);
    }
}
