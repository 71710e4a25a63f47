#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "spinseq/enumeration.hpp"
#include "spinseq/model.hpp"

using namespace spinseq;
using exact::ExactWeight;
using exact::Natural;

namespace {

const Base8Counts kWorkedCounts{1, 1, 1, 0, 1, 0, 0, 0};

// Direct evaluation of the counting sums from the public cardinality and
// feasibility operations, with the interference pairing written as the
// explicit double sum. Independent of the incremental path inside upsilon.
ExactWeight upsilon_direct(int n, int two_j, int two_m_a1, int two_m_b2, int two_l_a1,
                           int two_l_b2, int b_map, Mode mode) {
    PartialConfig p{n, two_j, two_m_a1, two_m_b2, b_map, two_l_a1, two_l_b2, {}};
    std::vector<std::pair<int, Natural>> eps_a;
    std::vector<std::pair<int, Natural>> eps_b;
    for_each_feasible(p, [&](const QuantumConfig& q, const Base8Counts& c) {
        eps_a.emplace_back(q.two_mu, epsilon_cardinality(c, Side::a1));
        eps_b.emplace_back(q.two_mu, epsilon_cardinality(c, Side::b2));
    });
    ExactWeight acc{0};
    if (mode == Mode::plain) {
        for (std::size_t i = 0; i < eps_a.size(); ++i) acc += eps_a[i].second * eps_b[i].second;
        return acc;
    }
    for (const auto& [mu_a, va] : eps_a)
        for (const auto& [mu_b, vb] : eps_b) {
            const int quarter = std::abs(mu_a - mu_b) / 4;  // |delta mu|/2 in mu units
            REQUIRE(std::abs(mu_a - mu_b) % 4 == 0);
            if (quarter % 2)
                acc -= va * vb;
            else
                acc += va * vb;
        }
    return acc;
}

}  // namespace

TEST_CASE("epsilon_cardinality of the worked configuration is 2 on both sides") {
    CHECK(epsilon_cardinality(kWorkedCounts, Side::a1) == 2);
    CHECK(epsilon_cardinality(kWorkedCounts, Side::b2) == 2);
}

TEST_CASE("epsilon_cardinality of a single-sequence experiment is 1") {
    const Base8Counts c{0, 0, 0, 0, 7, 0, 0, 0};
    CHECK(epsilon_cardinality(c, Side::a1) == 1);
    CHECK(epsilon_cardinality(c, Side::b2) == 1);
}

TEST_CASE("epsilon_cardinality equals brute-force enumeration for n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (Side side : {Side::a1, Side::b2})
            for (int two_j = 0; two_j <= n; ++two_j)
                for (int two_m = -two_j; two_m <= two_j; two_m += 2)
                    for (int two_l = -(n - two_j); two_l <= n - two_j; two_l += 2) {
                        const auto events =
                            enumerate_event_sequences(n, two_j, two_m, two_l, side);
                        if (events.empty()) continue;
                        for (int b = 0; b <= n; ++b)
                            for (const auto& [config, count] :
                                 brute_force_cells(n, side, events.front(), b)) {
                                const Base8Result r = base8_from_quantum(config);
                                REQUIRE(std::holds_alternative<Base8Counts>(r));
                                CHECK(epsilon_cardinality(std::get<Base8Counts>(r), side) ==
                                      count);
                            }
                    }
}

TEST_CASE("upsilon worked values") {
    // single compatible pairing at n=2
    CHECK(upsilon(2, 1, 1, 1, 1, -1, 1, Mode::plain) == 1);
    // no feasible completion at all
    CHECK(upsilon(6, 2, 2, -2, 0, 0, 1, Mode::plain) == 0);
    CHECK(upsilon(6, 2, 2, -2, 0, 0, 1, Mode::interference) == 0);
}

TEST_CASE("interference cell with two mu values carries one cross sign") {
    // two feasible two_mu values (1 and 5); cross pairs flip sign
    const ExactWeight plain = upsilon(6, 2, 0, 0, 0, 2, 3, Mode::plain);
    const ExactWeight inter = upsilon(6, 2, 0, 0, 0, 2, 3, Mode::interference);
    PartialConfig p{6, 2, 0, 0, 3, 0, 2, {}};
    std::vector<std::pair<int, Natural>> cells;
    for_each_feasible(p, [&](const QuantumConfig& q, const Base8Counts& c) {
        cells.emplace_back(q.two_mu, epsilon_cardinality(c, Side::a1) *
                                         epsilon_cardinality(c, Side::b2));
    });
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].first == 1);
    CHECK(cells[1].first == 5);
    CHECK(plain == upsilon_direct(6, 2, 0, 0, 0, 2, 3, Mode::plain));
    CHECK(inter == upsilon_direct(6, 2, 0, 0, 0, 2, 3, Mode::interference));
    CHECK(inter < plain);  // the cross terms subtract
}

TEST_CASE("upsilon agrees with the direct double sum on every cell, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int two_j = 0; two_j <= n; ++two_j)
            for (int ma = -two_j; ma <= two_j; ma += 2)
                for (int mb = -two_j; mb <= two_j; mb += 2)
                    for (int b = 0; b <= n; ++b) {
                        const int span = n - two_j;
                        for (int la = -span; la <= span; la += 2)
                            for (int lb = -span; lb <= span; lb += 2)
                                for (Mode mode : {Mode::plain, Mode::interference})
                                    CHECK(upsilon(n, two_j, ma, mb, la, lb, b, mode) ==
                                          upsilon_direct(n, two_j, ma, mb, la, lb, b, mode));
                    }
}

TEST_CASE("plain and interference counting coincide for spin 1/2") {
    for (int n = 1; n <= 10; ++n)
        for (int ma : {-1, 1})
            for (int b = 0; b <= n; ++b)
                for (int mb : {-1, 1})
                    CHECK(big_upsilon({n, 1, ma, b, Mode::plain, {}}, mb) ==
                          big_upsilon({n, 1, ma, b, Mode::interference, {}}, mb));
    // spot check at production scale
    CHECK(big_upsilon({100, 1, 1, 37, Mode::plain, {}}, 1) ==
          big_upsilon({100, 1, 1, 37, Mode::interference, {}}, 1));
}

TEST_CASE("identity map forces m_b2 = m_a1") {
    for (int n : {1, 3, 8})
        for (int two_j = 0; two_j <= n; ++two_j)
            for (int ma = -two_j; ma <= two_j; ma += 2) {
                ModelQuery q{n, two_j, ma, 0, {}, {}};
                ExactWeight total{0};
                for (int mb = -two_j; mb <= two_j; mb += 2) {
                    const ExactWeight w = big_upsilon(q, mb);
                    if (mb != ma) CHECK(w == 0);
                    total += w;
                }
                CHECK(big_upsilon(q, ma) == total);
                CHECK(total > 0);
            }
}

TEST_CASE("both outcomes weigh equally for the rotated n=2 spin-1/2 case") {
    ModelQuery q{2, 1, 1, 1, {}, {}};
    CHECK(big_upsilon(q, 1) == big_upsilon(q, -1));
    const ProbabilityTable t = probability(q);
    CHECK(t.find(1)->p == exact::make_ratio(1, 2));
    CHECK(t.find(-1)->p == exact::make_ratio(1, 2));
}

TEST_CASE("big_upsilon matches the enumeration-backed sum at n = 4") {
    for (int ma : {-1, 1})
        for (int mb : {-1, 1})
            for (int b = 0; b <= 4; ++b) {
                ExactWeight expect{0};
                for (int la = -3; la <= 3; la += 2)
                    for (int lb = -3; lb <= 3; lb += 2)
                        expect += upsilon_direct(4, 1, ma, mb, la, lb, b, Mode::plain);
                CHECK(big_upsilon({4, 1, ma, b, {}, {}}, mb) == expect);
            }
}

TEST_CASE("deterministic limits at the grid endpoints") {
    for (int n : {1, 2, 7, 100})
        for (int two_j : {1, 2})
            for (int ma = -two_j; ma <= two_j; ma += 2) {
                if (two_j > n) continue;
                const ProbabilityTable aligned = probability({n, two_j, ma, 0, {}, {}});
                CHECK(aligned.find(ma)->p == 1);
                const ProbabilityTable flipped = probability({n, two_j, ma, n, {}, {}});
                CHECK(flipped.find(-ma)->p == 1);
            }
}

TEST_CASE("single-flip map cannot reach the opposite spin-1 projection") {
    const ProbabilityTable t = probability({6, 2, 2, 1, {}, {}});
    CHECK(t.find(-2)->weight == 0);
    CHECK(t.find(-2)->p == 0);
    CHECK(t.find(2)->p + t.find(0)->p == 1);
}

TEST_CASE("probabilities are exact rationals summing to one") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        const int two_j = std::uniform_int_distribution<int>(0, n)(rng);
        const int steps = std::uniform_int_distribution<int>(0, two_j)(rng);
        const int b = std::uniform_int_distribution<int>(0, n)(rng);
        ModelQuery q{n, two_j, -two_j + 2 * steps, b, {}, {}};
        const ProbabilityTable t = probability(q);
        exact::ExactRatio sum{0};
        for (const Outcome& o : t.outcomes) {
            sum += o.p;
            CHECK(o.p >= 0);
        }
        CHECK(sum == 1);
        CHECK_FALSE(t.has_negative_weight());
    }
}

TEST_CASE("sign symmetry: negating m_a1 mirrors the outcome table") {
    for (int n = 1; n <= 6; ++n)
        for (int two_j = 0; two_j <= n; ++two_j)
            for (int ma = -two_j; ma <= two_j; ma += 2)
                for (int b = 0; b <= n; ++b)
                    for (Mode mode : {Mode::plain, Mode::interference}) {
                        const ProbabilityTable lhs = probability({n, two_j, ma, b, mode, {}});
                        const ProbabilityTable rhs = probability({n, two_j, -ma, b, mode, {}});
                        for (const Outcome& o : lhs.outcomes)
                            CHECK(o.p == rhs.find(-o.two_m_b2)->p);
                    }
}

TEST_CASE("reflection symmetry: b_map -> n - b_map negates the outcomes") {
    for (int n = 1; n <= 6; ++n)
        for (int two_j = 0; two_j <= n; ++two_j)
            for (int ma = -two_j; ma <= two_j; ma += 2)
                for (int b = 0; b <= n; ++b)
                    for (Mode mode : {Mode::plain, Mode::interference}) {
                        const ProbabilityTable lhs = probability({n, two_j, ma, b, mode, {}});
                        const ProbabilityTable rhs =
                            probability({n, two_j, ma, n - b, mode, {}});
                        for (const Outcome& o : lhs.outcomes)
                            CHECK(o.p == rhs.find(-o.two_m_b2)->p);
                    }
}

TEST_CASE("fixing l_a1 to either sign gives the same table") {
    for (int la : {4, -4}) {
        const ProbabilityTable t = probability({9, 1, 1, 4, {}, la});
        const ProbabilityTable ref = probability({9, 1, 1, 4, {}, 4});
        for (const Outcome& o : ref.outcomes) CHECK(t.find(o.two_m_b2)->p == o.p);
    }
}

TEST_CASE("paper_tuned_two_l snaps to the nearest feasible doubled value") {
    CHECK(paper_tuned_two_l(100, 1) == 49);  // target 49.5, odd parity
    CHECK(paper_tuned_two_l(100, 2) == 48);  // target 49, even parity, tie toward zero
    CHECK(paper_tuned_two_l(4, 4) == 0);
    CHECK(paper_tuned_two_l(9, 1) == 4);     // target 4, even parity
    for (int n = 1; n <= 20; ++n)
        for (int two_j = 0; two_j <= n; ++two_j) {
            const int v = paper_tuned_two_l(n, two_j);
            const int span = n - two_j;
            CHECK(v >= 0);
            CHECK(v <= span);
            if (span > 0) CHECK((v & 1) == (span & 1));
        }
}

TEST_CASE("invalid queries are rejected") {
    CHECK_THROWS_AS(probability({0, 0, 0, 0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(probability({4, 5, 1, 0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(probability({4, 2, 4, 0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(probability({4, 2, 1, 0, {}, {}}), std::invalid_argument);  // parity
    CHECK_THROWS_AS(probability({4, 2, 2, 5, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(probability({4, 2, 2, 0, {}, 5}), std::invalid_argument);
    CHECK_THROWS_AS(probability({4, 2, 2, 0, {}, 1}), std::invalid_argument);  // l parity
    CHECK_THROWS_AS(big_upsilon({4, 2, 2, 0, {}, {}}, 3), std::invalid_argument);
}

TEST_CASE("no degenerate normalization for any valid query up to n = 8") {
    for (int n = 1; n <= 8; ++n)
        for (int two_j = 0; two_j <= n; ++two_j)
            for (int ma = -two_j; ma <= two_j; ma += 2)
                for (int b = 0; b <= n; ++b)
                    for (Mode mode : {Mode::plain, Mode::interference}) {
                        const ProbabilityTable t = probability({n, two_j, ma, b, mode, {}});
                        CHECK(t.total_weight > 0);
                    }
}
