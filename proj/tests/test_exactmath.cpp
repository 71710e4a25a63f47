#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "spinseq/exact.hpp"

using namespace spinseq::exact;

TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(4) == 24);
}

TEST_CASE("factorial(20) matches a second accumulation order") {
    // independent re-derivation: multiply downward instead of upward
    Natural down{1};
    for (int k = 20; k >= 2; --k) down *= k;
    CHECK(factorial(20) == down);
    CHECK(factorial(20) == Natural("2432902008176640000"));
}

TEST_CASE("factorial range violations") {
    CHECK_THROWS_AS(factorial(-1), std::out_of_range);
    CHECK_THROWS_AS(factorial(static_cast<int>(factorial_limit()) + 1), std::out_of_range);
}

TEST_CASE("factorial(100) is exact and large") {
    const Natural f = factorial(100);
    CHECK(f.get_str().size() == 158);
    CHECK(f % factorial(99) == 0);
    CHECK(f / factorial(99) == 100);
}

TEST_CASE("multinomial examples") {
    const int a[] = {1, 1, 1, 1};
    const int b[] = {2, 0, 0, 0};
    const int c[] = {1, 1, 1, 1, 0, 0, 0, 0};
    CHECK(multinomial(a) == 24);
    CHECK(multinomial(b) == 1);
    CHECK(multinomial(c) == 24);
}

TEST_CASE("multinomial is permutation invariant and inverts the factorial product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> parts(std::uniform_int_distribution<int>(1, 6)(rng));
        int total = 0;
        for (int& p : parts) {
            p = std::uniform_int_distribution<int>(0, 8)(rng);
            total += p;
        }
        if (total > 30) continue;
        const Natural m = multinomial(parts);

        std::vector<int> shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(multinomial(shuffled) == m);

        Natural prod{1};
        for (int p : parts) prod *= factorial(p);
        CHECK(m * prod == factorial(total));
    }
}

TEST_CASE("perm_ratio worked values") {
    const int n1[] = {2, 2};
    const int d1[] = {1, 1, 1, 1};
    CHECK(perm_ratio(n1, d1) == 4);

    const int n2[] = {7};
    const int d2[] = {7};
    CHECK(perm_ratio(n2, d2) == 1);

    const int n3[] = {2, 1, 1, 0};
    const int d3[] = {1, 1, 1, 0, 1, 0, 0, 0};
    CHECK(perm_ratio(n3, d3) == 2);
}

TEST_CASE("perm_ratio rejects non-integral ratios and unbalanced sums") {
    const int n1[] = {3, 1};
    const int d1[] = {2, 2};
    CHECK_THROWS_AS(perm_ratio(n1, d1), NonIntegralRatio);

    const int n2[] = {3};
    const int d2[] = {2};
    CHECK_THROWS_AS(perm_ratio(n2, d2), std::invalid_argument);
}

TEST_CASE("binomial edges and agreement with the factorial quotient") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(10, 3) == 120);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 60)(rng);
        const int k = std::uniform_int_distribution<int>(0, n)(rng);
        CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
    }
}

TEST_CASE("make_ratio canonicalizes on construction") {
    ExactRatio half = make_ratio(2, 4);
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);

    ExactRatio neg = make_ratio(3, -6);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);

    CHECK_THROWS_AS(make_ratio(1, 0), std::domain_error);
}
