// statespace.hpp
// The eight quantum numbers of a paired two-detector experiment and their
// bidirectional conversion to base-8 / base-4 symbol counts.
//
// Every half-integer quantum number is stored doubled (two_j = 2j, ...) so
// all arithmetic is exact and integral. The relative detector angle is the
// rational theta_ab = pi * b_map / n and is only ever represented by the
// pair (b_map, n).

#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace spinseq {

struct QuantumConfig {
    int n = 0;         // sequence length
    int two_j = 0;     // 2j
    int two_m_a1 = 0;  // 2 m_a1
    int two_m_b2 = 0;  // 2 m_b2
    int two_l_a1 = 0;  // 2 l_a1
    int two_l_b2 = 0;  // 2 l_b2
    int b_map = 0;     // number of B symbols in the map; theta_ab = pi*b_map/n
    int two_mu = 0;    // 2 mu_{a1,b2}

    // g is determined by n and j: n = 2j + 2g.
    int two_g() const { return n - two_j; }

    auto operator<=>(const QuantumConfig&) const = default;
};

/// Occupation counts of the eight experiment symbols {AA,AB,BA,BB,CC,CD,DC,DD}.
struct Base8Counts {
    int aa = 0, ab = 0, ba = 0, bb = 0;
    int cc = 0, cd = 0, dc = 0, dd = 0;

    int sum() const { return aa + ab + ba + bb + cc + cd + dc + dd; }
    auto operator<=>(const Base8Counts&) const = default;
};

/// Which component of the experiment a sequence or marginal belongs to.
enum class Side { a1, b2, map };

/// Per-observer (or per-map) counts of the four symbols {A,B,C,D}.
struct Base4Counts {
    int a = 0, b = 0, c = 0, d = 0;
    Side role = Side::a1;

    int sum() const { return a + b + c + d; }
    bool operator==(const Base4Counts&) const = default;
};

/// Infeasibility is data, not an exception: carries the name of the first
/// count whose Table-2 expression is negative or non-integral.
struct Infeasible {
    const char* count;
};

using Base8Result = std::variant<Base8Counts, Infeasible>;

/// Evaluate the eight count expressions for a full set of quantum numbers.
/// Feasible iff all eight are simultaneously non-negative integers.
Base8Result base8_from_quantum(const QuantumConfig& config);

bool is_feasible(const QuantumConfig& config);

/// The unique quantum numbers of a count vector; exact inverse of
/// base8_from_quantum on its feasible domain.
QuantumConfig quantum_from_base8(const Base8Counts& counts);

struct Marginals {
    Base4Counts a1;
    Base4Counts b2;
    Base4Counts map;
};

/// Collapse base-8 counts to the a1-side, b2-side and map base-4 counts.
Marginals marginals(const Base8Counts& counts);

/// A config with (n, two_j, two_m_a1, two_m_b2, b_map) fixed and any of the
/// remaining three quantum numbers either fixed or left free.
struct PartialConfig {
    int n = 0;
    int two_j = 0;
    int two_m_a1 = 0;
    int two_m_b2 = 0;
    int b_map = 0;
    std::optional<int> two_l_a1;
    std::optional<int> two_l_b2;
    std::optional<int> two_mu;
};

/// Visit every feasible completion of a partial config. Free two_l values
/// scan [-(n-two_j), n-two_j] step 2; free two_mu scans [-2n, 2n] step 1
/// with integrality filtering.
void for_each_feasible(const PartialConfig& partial,
                       const std::function<void(const QuantumConfig&, const Base8Counts&)>& fn);

/// All feasible completions, in scan order.
std::vector<QuantumConfig> feasible_values(const PartialConfig& partial);

}  // namespace spinseq
