// model.hpp
// Outcome probabilities for two rotated Stern-Gerlach detectors from exact
// counting over ontic state spaces: elementary cardinalities, plain and
// interference-weighted counting sums, and their exact normalization.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinseq/exact.hpp"
#include "spinseq/statespace.hpp"

namespace spinseq {

enum class Mode { plain, interference };

/// The equation the model pairs with each spin: plain counting for j = 1/2,
/// interference-weighted counting otherwise.
constexpr Mode default_mode(int two_j) { return two_j == 1 ? Mode::plain : Mode::interference; }

/// The l_a1 tuning value that best matches the reference curves, snapped to
/// the nearest feasible doubled value: two_l ~ (n - two_j)/2, parity of
/// n - two_j, ties toward zero.
int paper_tuned_two_l(int n, int two_j);

struct ModelQuery {
    int n = 0;
    int two_j = 0;
    int two_m_a1 = 0;
    int b_map = 0;
    std::optional<Mode> mode;            // default: default_mode(two_j)
    std::optional<int> fixed_two_l_a1;   // nullopt: sum over all l_a1

    Mode resolved_mode() const { return mode ? *mode : default_mode(two_j); }
};

/// Thrown when the normalization sum over all outcomes is exactly zero.
class DegenerateNormalization : public std::runtime_error {
public:
    explicit DegenerateNormalization(const std::string& what) : std::runtime_error(what) {}
};

/// Throws std::invalid_argument when the query violates its range or parity
/// constraints.
void validate_query(const ModelQuery& query);

/// |epsilon| for one side: the marginal factorial product of that side
/// divided by the eight base-8 count factorials, via perm_ratio.
exact::Natural epsilon_cardinality(const Base8Counts& counts, Side side);

/// Elementary counting sum over the non-local quantum number mu.
/// plain:        sum_mu |eps_a(mu)| |eps_b(mu)|
/// interference: sum over feasible pairs (mu_a, mu_b) of
///               (-1)^(|mu_a - mu_b|/2) |eps_a(mu_a)| |eps_b(mu_b)|
exact::ExactWeight upsilon(int n, int two_j, int two_m_a1, int two_m_b2, int two_l_a1,
                           int two_l_b2, int b_map, Mode mode);

/// upsilon summed over all feasible (l_a1, l_b2), or over l_b2 only when the
/// query fixes l_a1.
exact::ExactWeight big_upsilon(const ModelQuery& query, int two_m_b2);

struct Outcome {
    int two_m_b2 = 0;
    exact::ExactWeight weight;  // big_upsilon for this outcome
    exact::ExactRatio p;        // exact probability
    double p_float = 0.0;
};

struct ProbabilityTable {
    std::vector<Outcome> outcomes;       // ascending two_m_b2, one entry per
                                         // parity-valid value in [-2j, 2j]
    exact::ExactWeight total_weight;
    std::vector<int> negative_outcomes;  // two_m_b2 values with weight < 0

    bool has_negative_weight() const { return !negative_outcomes.empty(); }
    const Outcome* find(int two_m_b2) const;
};

/// P(m_b2) = big_upsilon(m_b2) / sum over m_b2', as exact rationals that sum
/// to exactly 1. Negative weights are surfaced in the table, never clamped.
ProbabilityTable probability(const ModelQuery& query);

}  // namespace spinseq
